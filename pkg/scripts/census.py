"""Connected cubic graph census and the f(k) scan for k = 2, 3."""

import argparse
import time
from dataclasses import dataclass, field

from pow2free.search import MAX_ORDER, find_min_pow2_free, generate_cubic_graphs


@dataclass
class Config:
    nmax: int = 12
    ks: list[int] = field(default_factory=lambda: [2, 3])


def run(cfg: Config) -> None:
    for n in range(4, cfg.nmax + 1, 2):
        t0 = time.perf_counter()
        count = sum(1 for _ in generate_cubic_graphs(n))
        print(f"n={n:2d}: {count:4d} connected cubic graphs  {time.perf_counter() - t0:.1f}s")
    for k in cfg.ks:
        report = find_min_pow2_free(k, cfg.nmax)
        print(report.to_text(), end="")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--nmax", type=int, default=Config.nmax, choices=range(4, MAX_ORDER + 1, 2))
    p.add_argument("--k", type=int, nargs="+", default=[2, 3])
    a = p.parse_args()
    run(Config(a.nmax, a.k))
