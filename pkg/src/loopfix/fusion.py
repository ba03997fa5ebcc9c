"""The level-k fusion ring and Verlinde numbers, by finite character sums over t_lambda."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .characters import CharacterTable
from .exact import Cyclotomic, NotRationalError
from .rootsys import RootSystem


class IntegralityError(ArithmeticError):
    """A quantity that must be a rational integer came out otherwise."""


def _as_int(value: Cyclotomic, what: str) -> int:
    try:
        q = value.to_rational()
    except NotRationalError as err:
        raise IntegralityError(f"{what} is not rational (approx {err.approx:.12g})") from None
    if q.denominator != 1:
        raise IntegralityError(f"{what} = {q} is not an integer")
    return q.numerator


class FusionRing:
    """R_k(G) with basis the level-k weights; structure constants are filled lazily."""

    def __init__(self, rs: RootSystem, k, table: CharacterTable | None = None):
        self.chars = table if table is not None else CharacterTable(rs, k)
        self.rs = rs
        self.k = self.chars.k
        self.basis = self.chars.weights
        self._coeff: dict = {}

    def coefficient(self, mu, nu, rho) -> int:
        c = self.chars
        mu, nu, rho = c.check_weight(mu), c.check_weight(nu), c.check_weight(rho)
        key = (min(mu, nu), max(mu, nu), rho)
        if key not in self._coeff:
            total = Cyclotomic.zero()
            for i in range(len(c)):
                total = total + c.norm_sq[i] * c.chi(mu, i) * c.chi(nu, i) * c.chi(rho, i).conj()
            self._coeff[key] = _as_int(total / c.t_order, f"N_{{{mu},{nu}}}^{rho}")
        return self._coeff[key]

    def product(self, mu, nu) -> list[int]:
        return [self.coefficient(mu, nu, r) for r in self.basis]

    def table(self) -> dict:
        """{(mu, nu): coefficient vector over the basis} for mu <= nu."""
        out = {}
        for a, mu in enumerate(self.basis):
            for nu in self.basis[a:]:
                out[(mu, nu)] = self.product(mu, nu)
        return out

    def to_json(self) -> dict:
        return {"basis": [list(b) for b in self.basis],
                "table": {f"{list(mu)}*{list(nu)}": vec for (mu, nu), vec in self.table().items()}}

    def format_table(self) -> str:
        lines = []
        for (mu, nu), vec in self.table().items():
            terms = [f"{c}*chi{list(r)}" if c != 1 else f"chi{list(r)}"
                     for c, r in zip(vec, self.basis) if c]
            lines.append(f"chi{list(mu)} * chi{list(nu)} = {' + '.join(terms) or '0'}")
        return "\n".join(lines)


def fusion_coefficient(ring: FusionRing, mu, nu, rho) -> int:
    return ring.coefficient(mu, nu, rho)


def fusion_product(ring: FusionRing, mu, nu) -> list[int]:
    return ring.product(mu, nu)


def verlinde_number(ring: FusionRing, genus: int, insertions: Sequence[Sequence[int]] = ()) -> int:
    """sum_lambda (#T_{k+c} / |J(t_lambda)|^2)^(g-1) prod_i chi_{mu_i}(t_lambda)."""
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    c = ring.chars
    ins = [c.check_weight(m) for m in insertions]
    total = Cyclotomic.zero()
    for i in range(len(c)):
        term = (c.norm_sq[i].inv() * c.t_order) ** (genus - 1)
        for m in ins:
            term = term * c.chi(m, i)
        total = total + term
    return _as_int(total, f"Verlinde number (g={genus}, insertions={ins})")
