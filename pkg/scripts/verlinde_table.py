"""Tabulate Verlinde numbers (no insertions) for a group over a range of levels and genera."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from loopfix import FusionRing, build_root_system, verlinde_number


@dataclass
class Config:
    group: str = "A1"
    max_level: int = 5
    max_genus: int = 4


def main(cfg: Config) -> None:
    rs = build_root_system(cfg.group)
    print(f"{cfg.group}: rows are levels, columns genus 0..{cfg.max_genus}")
    for k in range(1, cfg.max_level + 1):
        ring = FusionRing(rs, k)
        vals = [verlinde_number(ring, g) for g in range(cfg.max_genus + 1)]
        print(f"k={k:<3}" + "".join(f"{v:>14}" for v in vals))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--group", default=Config.group)
    p.add_argument("--max-level", type=int, default=Config.max_level)
    p.add_argument("--max-genus", type=int, default=Config.max_genus)
    a = p.parse_args()
    main(Config(a.group, a.max_level, a.max_genus))
