"""Which suites notice a wrong reordering twist?

The correct twist is yx = q^-2 xy, i.e. s-exponent -4 per unit of b1*a2
(s = q^(1/2)).  Each row runs every suite at a small size under one twist.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from qtorus.suites import SUITES, run_suite


@dataclass
class MutationConfig:
    twists: tuple = (-4, 4, -2, 2)
    size: int = 2
    r_range: tuple = (-2, 2)


def main(cfg: MutationConfig) -> None:
    names = list(SUITES)
    print("twist(s^k)  " + "  ".join(f"{n:>12}" for n in names))
    for tw in cfg.twists:
        cells = []
        for n in names:
            rep = run_suite(n, max_value=cfg.size, r_range=cfg.r_range, twist=tw)
            cells.append(f"{rep.status:>12}")
        label = f"{tw:+d}" + (" (correct)" if tw == -4 else "")
        print(f"{label:<11} " + "  ".join(cells), flush=True)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=2)
    main(MutationConfig(size=ap.parse_args().size))
