"""Selects the integration kernel at import.

The compiled kernel is used when it was built; setting
``SPRINGPENDULUM_PURE_PYTHON=1`` forces the pure-Python one.
"""

import os

if os.environ.get("SPRINGPENDULUM_PURE_PYTHON", "") not in ("", "0"):
    from ._dop853_py import *  # noqa: F403
    from ._dop853_py import NAME
else:
    try:
        from ._dop853 import *  # noqa: F403
        from ._dop853 import NAME
    except ImportError:
        from ._dop853_py import *  # noqa: F403
        from ._dop853_py import NAME

__all__ = ["NAME"]
