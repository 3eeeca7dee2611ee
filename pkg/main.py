"""
Sextic Radical Solver - Entry Point
"""
import sys
from pathlib import Path

# Determine project root
if getattr(sys, "frozen", False):
    _project_root = Path(sys.executable).parent
else:
    _project_root = Path(__file__).parent

# Add src/ to PYTHONPATH
src_path = _project_root / "src"
sys.path.insert(0, str(src_path))

from src.cli import main


if __name__ == "__main__":
    sys.exit(main())
