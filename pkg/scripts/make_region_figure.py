#!/usr/bin/env python3
"""Emit the (degree, genus) classification region as CSV and SVG files."""

import argparse
from pathlib import Path

from halphen.classifier import region_csv, region_svg


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dmax", type=int, default=12)
    parser.add_argument("--out-dir", type=Path, default=Path("out"))
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = args.out_dir / f"region_d{args.dmax}.csv"
    svg_path = args.out_dir / f"region_d{args.dmax}.svg"
    csv_path.write_text(region_csv(args.dmax))
    svg_path.write_text(region_svg(args.dmax))
    print(f"wrote {csv_path}")
    print(f"wrote {svg_path}")


if __name__ == "__main__":
    main()
