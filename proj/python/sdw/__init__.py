"""Serial-correlation tests for least-squares residuals on spatial samples.

The extension module carries the implementation; this package re-exports it.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
