import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("SPRINGPENDULUM_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "springpendulum.orbits._dop853",
                    ["src/springpendulum/orbits/_dop853.pyx"],
                    # keep results bit-identical to the Python kernel: no FMA
                    # contraction, and no sin/cos fusion into sincos()
                    extra_compile_args=["-O2", "-ffp-contract=off", "-fno-builtin-sin", "-fno-builtin-cos"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
