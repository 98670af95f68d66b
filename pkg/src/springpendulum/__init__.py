"""Exact variational-equation analysis and numerics for the generalised
spring pendulum."""

__version__ = "0.1.0"
