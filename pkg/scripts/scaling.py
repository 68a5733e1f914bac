"""Runtime of each suite as its size parameter grows."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from qtorus.suites import run_suite


@dataclass
class ScalingConfig:
    suites: tuple = ("closed-forms", "series", "prop68", "section15", "commutation")
    sizes: tuple = (4, 8, 12, 16)


def main(cfg: ScalingConfig) -> None:
    print(f"{'suite':<14}" + "".join(f"{s:>10}" for s in cfg.sizes))
    for name in cfg.suites:
        row = []
        for size in cfg.sizes:
            rep = run_suite(name, max_value=size)
            mark = "" if rep.passed else "!"
            row.append(f"{rep.elapsed_ms:>8}ms{mark or ' '}")
        print(f"{name:<14}" + "".join(row))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[4, 8, 12, 16])
    main(ScalingConfig(sizes=tuple(ap.parse_args().sizes)))
