#!/usr/bin/env python3
"""Render SVG figures for the rank-2 worked examples into out/figures/."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from trinodiv import compute_ppdivisor, validate
from trinodiv.exactla import IntMatrix
from trinodiv.figures import render_figure

from worked_examples import EXAMPLES


def run(outdir: Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    for title, blocks, f_cols, s_rows in EXAMPLES:
        t = validate(*blocks)
        if t.rank != 2:
            print(f"skip (rank {t.rank}): {title}")
            continue
        dv = compute_ppdivisor(t, IntMatrix.from_columns(f_cols), IntMatrix.from_rows(s_rows))
        slug = title.split(":")[0].strip().replace(" ", "_").replace("-", "_")
        path = outdir / f"{slug}.svg"
        render_figure(dv, path)
        print(f"wrote {path}")


if __name__ == "__main__":
    run(Path(sys.argv[1]) if len(sys.argv) > 1 else Path("out/figures"))
