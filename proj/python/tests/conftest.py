import pathlib
import sys

# Development layout: make the in-tree package importable. An installed
# ellipselaw wheel takes precedence if present.
_python_dir = pathlib.Path(__file__).resolve().parents[1]
if str(_python_dir) not in sys.path:
    sys.path.insert(0, str(_python_dir))
