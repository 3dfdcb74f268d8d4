"""Stream graphs through the sink hunter and write a JSONL report.

    python scripts/run_hunt.py --n-range 4..7 --source exhaustive --out hunt.jsonl
"""

import sys

from updomatic.cli import main

if __name__ == "__main__":
    sys.exit(main(["hunt", *sys.argv[1:]]))
