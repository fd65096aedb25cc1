import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"
