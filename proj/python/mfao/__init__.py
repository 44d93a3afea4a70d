"""Two-mode fermionic anharmonic oscillator: exact Fock-space dynamics,
BCS mean-field flow and its classical reading."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
