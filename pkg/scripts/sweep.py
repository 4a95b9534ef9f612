"""Exhaustive grid sweep for small p, randomized sweep above the ceiling."""

import argparse
from dataclasses import dataclass, field

from redei_directions.field import is_prime
from redei_directions.search import EXHAUSTIVE_CEILING, exhaustive_theorem1_sweep, randomized_theorem1_sweep


@dataclass
class Config:
    primes: list[int] = field(default_factory=lambda: [p for p in range(5, 60) if is_prime(p)])
    trials: int = 2000
    seed: int = 0
    workers: int = 1


def run(cfg: Config):
    print(f"{'p':>4} {'method':<11} {'checked':>8} {'tight':>7} {'violations':>10}")
    for p in cfg.primes:
        if p <= EXHAUSTIVE_CEILING:
            s = exhaustive_theorem1_sweep(p, workers=cfg.workers)
        else:
            s = randomized_theorem1_sweep(p, cfg.trials, cfg.seed)
        print(f"{p:>4} {s.mode:<11} {s.checked:>8} {s.tight:>7} {s.violations:>10}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("primes", nargs="*", type=int)
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    a = ap.parse_args()
    cfg = Config(trials=a.trials, seed=a.seed, workers=a.workers)
    if a.primes:
        cfg.primes = a.primes
    run(cfg)
