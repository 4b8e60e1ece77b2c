"""Python bindings for the twinsieve library."""

from fractions import Fraction

from ._twinsieve import *  # noqa: F401,F403
from ._twinsieve import TwinWheel, _density_eq1_parts

__all__ = [name for name in dir() if not name.startswith("_")]


def density_eq1(p_n):
    """Exact density of L_{p_n} as a Fraction."""
    num, den = _density_eq1_parts(p_n)
    return Fraction(int(num), int(den))


def _wheel_density(self):
    num, den = self._density_parts()
    return Fraction(int(num), int(den))


TwinWheel.density = property(_wheel_density)
