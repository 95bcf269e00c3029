"""IS-LM equilibrium engine with a zero-lower-bound kink and three scenario slots."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
