"""Weighted-shift commutator traces, reproducing kernels and disk quadrature
on rotation-invariant spaces over the unit disk."""

from disktrace._core import *  # noqa: F401,F403
from disktrace._core import __version__  # noqa: F401
