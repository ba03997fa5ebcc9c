"""Print the SU(2) level-k data: weights, t_lambda, |J|^2 and the character table."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from loopfix import CharacterTable, build_root_system


@dataclass
class Config:
    levels: tuple = (1, 2, 3, 4)


def main(cfg: Config) -> None:
    rs = build_root_system("A1")
    for k in cfg.levels:
        tab = CharacterTable(rs, k)
        print(f"level {k}: #T_(k+c) = {tab.t_order}")
        for i, lam in enumerate(tab.weights):
            t = tab.points[i]
            row = "  ".join(f"{tab.chi(mu, i).to_complex().real:+.6f}" for mu in tab.weights)
            print(f"  lambda={lam[0]}  <rho,v>={t.exponent(rs.rho)}  |J|^2={tab.norm_sq[i].to_complex().real:.6f}"
                  f"  chi: {row}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--levels", type=int, nargs="+", default=list(Config.levels))
    a = p.parse_args()
    main(Config(tuple(a.levels)))
