"""Numerical toolkit for deformed products and twisted convolutions."""

try:
    from ._rieffel import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _rieffel import *  # noqa: F401,F403  (in-build layout)

__version__ = "0.1.0"
