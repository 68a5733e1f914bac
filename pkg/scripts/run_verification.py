"""Run every identity suite and write the reports as JSON.

    python3 scripts/run_verification.py --out results/verify.json
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional, Tuple

from qtorus.suites import DEFAULTS, SUITES, run_suite


@dataclass
class VerifyConfig:
    suites: Tuple[str, ...] = tuple(SUITES)
    max_value: Optional[int] = None
    r_range: Tuple[int, int] = DEFAULTS["r_range"]
    out: Optional[str] = None
    notes: dict = field(default_factory=dict)


def main(cfg: VerifyConfig) -> int:
    t0 = time.perf_counter()
    reports = [run_suite(name, cfg.max_value, cfg.r_range) for name in cfg.suites]
    total = time.perf_counter() - t0
    for r in reports:
        print(r.line())
    print(f"total {total:.2f} s")
    if cfg.out:
        path = Path(cfg.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = {"config": asdict(cfg), "total_s": round(total, 3), "reports": [r.to_json() for r in reports]}
        path.write_text(json.dumps(payload, indent=2, sort_keys=True))
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=None)
    ap.add_argument("--out", default=None)
    a = ap.parse_args()
    raise SystemExit(main(VerifyConfig(max_value=a.max, out=a.out)))
