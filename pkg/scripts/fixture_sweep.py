#!/usr/bin/env python3
"""Run every bundled fixture from its shipped pair file and compare outcomes
against the recorded expectations.  A quick end-to-end health check:

    python scripts/fixture_sweep.py [--seed N] [--samples N]
"""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from liepair.catalog import fixture_names, load_fixture_file  # noqa: E402
from liepair.report import report_for_pair  # noqa: E402


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=64)
    args = ap.parse_args()

    failures = 0
    for name in fixture_names():
        pair = load_fixture_file(name)
        questions = [e.question for e in pair.expectations]
        t0 = time.monotonic()
        rep = report_for_pair(pair, questions, samples=args.samples,
                              seed=args.seed)
        dt = time.monotonic() - t0
        outcomes = {v["question"]: v["outcome"] for v in rep["verdicts"]}
        marks = []
        for e in pair.expectations:
            ok = outcomes[e.question] == e.outcome
            failures += 0 if ok else 1
            marks.append(f"{e.question}={outcomes[e.question]}"
                         + ("" if ok else f" (expected {e.outcome})"))
        print(f"{name:28s} {dt:6.2f}s  " + "; ".join(marks))
    print("all expectations matched" if failures == 0
          else f"{failures} expectation failures")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
