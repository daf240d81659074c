"""Exact Taylor expansions and numeric oracles for pizza quantities of Coxeter arrangements."""

from ._core import *  # noqa: F401,F403
from ._core import PizzaError, Poly, Spec  # noqa: F401

__version__ = "0.1.0"
