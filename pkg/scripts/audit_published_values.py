#!/usr/bin/env python3
"""Print the full regression report against the published reference values.

Equivalent to `divconv verify-paper`, flushing each item as it completes.
"""

import sys

from divconv.convolution import FormulaProvider
from divconv.verify import FAIL, run_all


def main() -> int:
    provider = FormulaProvider()
    failed = 0
    for item in run_all(provider):
        print(item.line(), flush=True)
        failed += item.status == FAIL
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
