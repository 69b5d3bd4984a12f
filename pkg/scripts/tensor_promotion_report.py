"""Compare RC promotion with factor-wise path promotion on tensor products.

On a single rectangle the two agree (asserted in the test suite).  On tensor
products agreement is open, so this only reports how many elements agree.
"""

import argparse
from dataclasses import dataclass

from xm.bijection import phi
from xm.crystal import enumerate_crystal, promote_path
from xm.rigged import RiggedError, rc_promotion
from xm.shapes import shapes_up_to


@dataclass
class ReportConfig:
    max_n: int = 4
    max_boxes: int = 4
    min_factors: int = 2


def report(cfg: ReportConfig):
    rows = []
    for n in range(2, cfg.max_n + 1):
        for shape in shapes_up_to(n, cfg.max_boxes, 1):
            if len(shape.factors) < cfg.min_factors:
                continue
            agree = disagree = errors = 0
            for b in enumerate_crystal(shape):
                try:
                    same = rc_promotion(phi(b)) == phi(promote_path(b))
                except RiggedError:
                    errors += 1
                    continue
                agree += same
                disagree += not same
            rows.append((n, str(shape), agree, disagree, errors))
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-boxes", type=int, default=4)
    a = ap.parse_args()
    rows = report(ReportConfig(a.max_n, a.max_boxes))
    print(f"{'n':>2}  {'tensor':<20} {'agree':>7} {'differ':>7} {'errors':>7}")
    for n, shape, ok, bad, err in rows:
        print(f"{n:>2}  {shape:<20} {ok:>7} {bad:>7} {err:>7}")
    print(f"total: {sum(r[2] for r in rows)} agree, {sum(r[3] for r in rows)} differ, {sum(r[4] for r in rows)} errors")


if __name__ == "__main__":
    main()
