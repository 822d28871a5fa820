import sys
from pathlib import Path

# allow running pytest straight from the source tree after a cmake build
_staged = Path(__file__).resolve().parents[2] / "build" / "python"
if _staged.is_dir() and str(_staged) not in sys.path:
    sys.path.insert(0, str(_staged))
