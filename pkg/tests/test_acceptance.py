"""The twelve acceptance criteria, each an exact property suite.

One PASS/FAIL line per criterion is printed in the pytest summary; the file
can also be run directly with ``python3 tests/test_acceptance.py``.
"""

import sys

import pytest

from elecvar.verify import ACCEPTANCE, run_suite

LINES = []
CRITERIA = [(k + 1, name) for k, (name, _, _) in enumerate(ACCEPTANCE)]


def report(number, res):
    line = f"criterion {number:2d} {res.line()}"
    LINES.append(line)
    return line


@pytest.mark.parametrize("number,name", CRITERIA, ids=[f"{k:02d}-{n}" for k, n in CRITERIA])
def test_criterion(number, name):
    res = run_suite(name, seed=0)
    print(report(number, res))
    assert res.passed, res.line()


if __name__ == "__main__":
    ok = True
    for number, name in CRITERIA:
        res = run_suite(name, seed=0)
        print(report(number, res), flush=True)
        ok &= res.passed
    sys.exit(0 if ok else 1)
