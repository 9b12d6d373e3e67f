import sys
from pathlib import Path

# helper modules (oracles, rules) live next to the tests
sys.path.insert(0, str(Path(__file__).parent))
