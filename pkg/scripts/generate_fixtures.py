#!/usr/bin/env python3
"""Regenerate the bundled fixture pair files from the catalog definitions.

Run from the repository root after changing catalog fixtures:
    python scripts/generate_fixtures.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from liepair.catalog import FIXTURES  # noqa: E402
from liepair.pairfile import parse_pair_text, serialize_pair  # noqa: E402


def main():
    outdir = pathlib.Path(__file__).resolve().parents[1] / "src" / "liepair" / "fixtures"
    outdir.mkdir(parents=True, exist_ok=True)
    for fx in FIXTURES:
        pair = fx.build()
        text = serialize_pair(pair)
        # fail loudly if the file would not round-trip
        reparsed = parse_pair_text(text, origin=pair.provenance)
        if reparsed != pair:
            raise SystemExit(f"fixture {fx.name} does not round-trip")
        path = outdir / f"{fx.name}.pair"
        path.write_text(text, encoding="utf-8")
        print(f"wrote {path} ({len(text.splitlines())} lines)")


if __name__ == "__main__":
    main()
