"""Build coadjoint-orbit fixed-point models and recover their multiplicity tables.

Writes each model to JSON (so it can be fed to ``loopfix extract``) and checks
that extraction returns the indicator of the orbit's weight.
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from loopfix import CharacterTable, build_root_system, coadjoint_orbit_model, extract_multiplicities
from loopfix.engine import coadjoint_isolated_model, dump_model


@dataclass
class Config:
    group: str = "A2"
    level: int = 2
    out_dir: str | None = None
    isolated: bool = False


def main(cfg: Config) -> int:
    rs = build_root_system(cfg.group)
    tab = CharacterTable(rs, cfg.level)
    bad = 0
    for nu in tab.weights:
        t0 = time.perf_counter()
        model = coadjoint_isolated_model(rs, cfg.level, nu) if cfg.isolated else coadjoint_orbit_model(rs, cfg.level, nu, tab)
        out = extract_multiplicities(model, tab)
        ok = out.values == {mu: int(mu == nu) for mu in tab.weights}
        bad += not ok
        nz = {mu: v for mu, v in out.values.items() if v}
        print(f"nu={list(nu)}  entries={len(model.entries)}  nonzero={nz}  {'ok' if ok else 'MISMATCH'}"
              f"  ({time.perf_counter() - t0:.2f}s)")
        if cfg.out_dir:
            Path(cfg.out_dir).mkdir(parents=True, exist_ok=True)
            dump_model(model, str(Path(cfg.out_dir) / f"orbit_{'_'.join(map(str, nu))}.json"))
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--group", default=Config.group)
    p.add_argument("--level", type=int, default=Config.level)
    p.add_argument("--out-dir")
    p.add_argument("--isolated", action="store_true", help="use isolated-point entries instead of closed values")
    a = p.parse_args()
    raise SystemExit(main(Config(a.group, a.level, a.out_dir, a.isolated)))
