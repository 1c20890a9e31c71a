"""Run every atlas claim suite and print a timing table."""

import argparse
import sys
import time
from dataclasses import dataclass

from pow2free import atlas


@dataclass
class Config:
    names: tuple[str, ...] = tuple(sorted(atlas.REGISTRY))
    include_slow: bool = True


def run(cfg: Config) -> int:
    failures = 0
    for name in cfg.names:
        t0 = time.perf_counter()
        results = atlas.get(name).verify(include_slow=cfg.include_slow)
        bad = [r for r in results if not r.passed]
        failures += len(bad)
        print(f"{name:14s} {len(results):3d} claims  {len(bad)} failed  {time.perf_counter() - t0:8.2f}s")
        for r in bad:
            print(f"    FAIL {r.name}: {r.detail}")
    return 1 if failures else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("names", nargs="*", default=list(Config.names))
    p.add_argument("--quick", action="store_true", help="skip slow claims")
    a = p.parse_args()
    sys.exit(run(Config(tuple(a.names), not a.quick)))
