#!/usr/bin/env python3
"""Prepends a license header to C++ sources that do not already carry it."""

import argparse
import pathlib
import sys

SOURCE_DIRS = ("core", "tools", "tests", "benchmarks")
SUFFIXES = (".h", ".cc")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("header", type=pathlib.Path, help="file holding the header comment")
    parser.add_argument("--root", type=pathlib.Path, default=pathlib.Path(__file__).resolve().parent.parent)
    parser.add_argument("--check", action="store_true", help="report missing headers without writing")
    args = parser.parse_args()

    header = args.header.read_text().rstrip("\n") + "\n\n"
    missing = []
    for d in SOURCE_DIRS:
        for path in sorted((args.root / d).rglob("*")):
            if path.suffix not in SUFFIXES or not path.is_file():
                continue
            text = path.read_text()
            if text.startswith(header):
                continue
            missing.append(path)
            if not args.check:
                path.write_text(header + text)
    for path in missing:
        print(("missing: " if args.check else "updated: ") + str(path.relative_to(args.root)))
    return 1 if args.check and missing else 0


if __name__ == "__main__":
    sys.exit(main())
