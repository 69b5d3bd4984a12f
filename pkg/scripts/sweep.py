"""Run the verification suites over a grid and print one line per suite.

    python3 scripts/sweep.py --max-n 4 --max-boxes 6 --suite x-equals-m --suite oracles
"""

import argparse
import sys
from dataclasses import dataclass

from xm.verify import SUITES, VerifyConfig, run_suite


@dataclass
class SweepConfig:
    max_n: int = 4
    max_boxes: int = 6
    suites: tuple = SUITES
    jobs: int = 1


def sweep(cfg: SweepConfig) -> bool:
    vc = VerifyConfig(max_n=cfg.max_n, max_boxes=cfg.max_boxes, suites=cfg.suites, jobs=cfg.jobs)
    ok = True
    for name in cfg.suites:
        r = run_suite(name, vc)
        print(f"{r.line()}  [{r.seconds:.1f}s]", flush=True)
        ok &= r.ok
    return ok


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-boxes", type=int, default=6)
    ap.add_argument("--suite", action="append", choices=SUITES)
    ap.add_argument("--jobs", type=int, default=1)
    a = ap.parse_args()
    cfg = SweepConfig(a.max_n, a.max_boxes, tuple(a.suite) if a.suite else SUITES, a.jobs)
    sys.exit(0 if sweep(cfg) else 1)


if __name__ == "__main__":
    main()
