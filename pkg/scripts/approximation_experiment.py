"""Convergence experiment: root-of-unity averages of the signature function
against its certified circle integral, along the factorial schedule.

Writes one CSV per fixture knot into --outdir (default ./approx_out) and
prints a short summary table. Exact arithmetic throughout; the gap column
is an interval because the integral is only known to width eps.
"""

import argparse
import pathlib
import sys
from fractions import Fraction

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from knotsig import (approximation_table, factorial_schedule, read_knot,
                     signature_function)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fixtures", default=None,
                    help="directory of knot JSON files (default: bundled fixtures)")
    ap.add_argument("--outdir", default="approx_out")
    ap.add_argument("--top", type=int, default=8, help="schedule 2!..top!")
    ap.add_argument("--eps", default="1e-9")
    args = ap.parse_args()

    fdir = pathlib.Path(args.fixtures) if args.fixtures else \
        pathlib.Path(__file__).resolve().parent.parent / "fixtures"
    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    eps = Fraction(args.eps)

    for path in sorted(fdir.glob("*.json")):
        knot = read_knot(path)
        rows = approximation_table(knot, factorial_schedule(args.top), eps)
        nbp = len(signature_function(knot).breakpoints)
        out = outdir / f"{path.stem}.csv"
        with open(out, "w", encoding="utf-8") as fh:
            fh.write("k,average,gap_lo,gap_hi\n")
            for r in rows:
                fh.write(f"{r.k},{r.average},{r.gap_lo},{r.gap_hi}\n")
        last = rows[-1]
        print(f"{knot}: {nbp} breakpoints, average(k={last.k}) = {last.average}, "
              f"gap <= {float(last.gap_hi):.3e}  -> {out}")


if __name__ == "__main__":
    main()
