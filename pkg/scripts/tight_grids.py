"""Enumerate normalized grids meeting the direction bound with equality."""

import argparse
from dataclasses import dataclass

from redei_directions.directions import directions_of_grid
from redei_directions.search import SearchBudget, search_tight_grids


@dataclass
class Config:
    p: int = 41
    a_sizes: tuple[int, int] = (5, 5)
    b_sizes: tuple[int, int] = (5, 5)
    time_limit: float | None = 300.0
    show: int = 30


def run(cfg: Config):
    res = search_tight_grids(cfg.p, cfg.a_sizes, cfg.b_sizes, SearchBudget(time_limit=cfg.time_limit))
    print(f"p = {cfg.p}: {len(res.grids)} tight grids, status {res.status.value}, {res.nodes} nodes")
    for g in res.grids[: cfg.show]:
        print(f"  A = {list(g.A)}  B = {list(g.B)}  |D| = {len(directions_of_grid(g))}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("p", type=int, nargs="?", default=41)
    ap.add_argument("--a", type=int, nargs=2, default=(5, 5), metavar=("MIN", "MAX"))
    ap.add_argument("--b", type=int, nargs=2, default=(5, 5), metavar=("MIN", "MAX"))
    ap.add_argument("--time-limit", type=float, default=300.0)
    a = ap.parse_args()
    run(Config(a.p, tuple(a.a), tuple(a.b), a.time_limit))
