#!/usr/bin/env python3
"""Build the crystal graph on restricted p-strict partitions and export it.

Usage:
    python scripts/export_crystal.py --p 3 --max 8 --format dot --out crystal.dot
"""
import argparse
import sys

from spinbranch.crystal import crystal_graph


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--p", type=int, default=3)
    parser.add_argument("--max", type=int, default=8)
    parser.add_argument("--format", choices=("dot", "json"), default="dot")
    parser.add_argument("--out")
    args = parser.parse_args()
    graph = crystal_graph(args.p, args.max)
    text = graph.to_dot() if args.format == "dot" else graph.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        print(
            f"wrote {args.out}: {len(graph.vertices)} vertices,"
            f" {len(graph.edges)} edges"
        )
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
