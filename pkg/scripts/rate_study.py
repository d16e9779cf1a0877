"""Empirical convergence rates of the reconstruction on the drift family.

Runs the raw and plateau-averaged error studies over a doubling ladder of
truncation orders against M(x) = 2x/(1+4x) and prints the fitted log-log
slopes.  The raw jump error decays like n^(-1/2), the averaged one like
n^(-1).

    python3 scripts/rate_study.py --orders 63,127,255,511,1023
"""

import argparse
import math
import sys

from kreinstring.families import bessel_drift_coefficients, reference_mass
from kreinstring.metrics import convergence_study
from kreinstring.serialization import render_study_csv


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--orders", default="63,127,255,511,1023",
                        help="comma-separated truncation orders")
    parser.add_argument("--window", type=float, default=5.0)
    parser.add_argument("--out-prefix", default=None,
                        help="write <prefix>_raw.csv and <prefix>_averaged.csv")
    args = parser.parse_args(argv)

    orders = [int(t) for t in args.orders.split(",")]
    c_const = 1.0 / math.sqrt(2.0 * math.pi)
    family = lambda n: bessel_drift_coefficients(0.5, 2.0, c_const, n)
    reference = lambda x: reference_mass("bm-drift", x)

    for averaged in (False, True):
        study = convergence_study(family, orders, reference, args.window, averaged=averaged)
        print("%8s metric: slope %.4f" % (study.metric, study.slope))
        for n, err in study.entries:
            print("    n=%5d  error %.6f" % (n, err))
        if args.out_prefix:
            path = "%s_%s.csv" % (args.out_prefix, study.metric)
            with open(path, "w", encoding="utf-8") as f:
                f.write(render_study_csv(study))
            print("    written to %s" % path, file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
