"""Exact tau-functions of the BKP hierarchy.

Thin wrapper over the compiled extension; all rationals cross the boundary as
"p/q" strings so arithmetic stays exact.
"""

try:
    from ._bkp import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:  # in-tree build: extension sits directly on PYTHONPATH
    from _bkp import *  # noqa: F401,F403

from fractions import Fraction


def rat(text):
    """Parse a 'p/q' coefficient string into a Fraction."""
    return Fraction(text)
