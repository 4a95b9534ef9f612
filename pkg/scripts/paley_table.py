"""Clique numbers of Paley graphs next to the Hanson-Petridis bound."""

import argparse
from dataclasses import dataclass, field
from math import isqrt

from redei_directions.field import is_prime
from redei_directions.search import SearchBudget, paley_clique_number


@dataclass
class Config:
    primes: list[int] = field(default_factory=lambda: [p for p in range(5, 110) if p % 4 == 1 and is_prime(p)])
    time_limit: float | None = 60.0


def run(cfg: Config):
    print(f"{'p':>5} {'omega':>6} {'bound':>6}  status        witness")
    for p in cfg.primes:
        res = paley_clique_number(p, SearchBudget(time_limit=cfg.time_limit))
        bound = (1 + isqrt(2 * p - 1)) // 2
        print(f"{p:>5} {res.size:>6} {bound:>6}  {res.status.value:<13} {list(res.witness)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("primes", nargs="*", type=int)
    ap.add_argument("--time-limit", type=float, default=60.0)
    a = ap.parse_args()
    cfg = Config(time_limit=a.time_limit)
    if a.primes:
        cfg.primes = a.primes
    run(cfg)
