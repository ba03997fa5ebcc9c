"""Fixed-point data, its evaluation at t_lambda, and extraction of quotient indices.

A model is a list of fixed-point contributions.  Isolated points carry their
Atiyah-Bott data; positive-dimensional components are supplied as closed
per-lambda values.  Extraction is the finite Fourier transform over the
level-k weights:

    chi(M_mu) = (1/#T_{k+c}) sum_lambda conj(chi_mu(t_lambda)) |J(t_lambda)|^2 sum_F chi(nu_F, t_lambda)
"""
from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .alcove import FaceData, face_data, face_of, from_finite
from .characters import (CharacterTable, dc_complex, dr_real_direct, half_weight_monomial,
                         root_sign_data, sqrt_det, weight_monomial)
from .exact import Cyclotomic, NotRationalError
from .levelk import IrregularElementError, LevelError, TorusElement, as_level, b_flat, b_sharp, shifted_level
from .rootsys import RootSystem, build_root_system


class ModelError(ValueError):
    pass


class ExtractionError(ArithmeticError):
    def __init__(self, mu, value: Cyclotomic):
        self.mu = mu
        self.value = value
        approx = value.to_complex()
        super().__init__(f"multiplicity of {list(mu)} is not an integer: approx {approx.real:.12g}"
                         f"{approx.imag:+.12g}i")


@dataclass(frozen=True)
class IsolatedFixedPoint:
    """An isolated fixed point: t acts on L by t^line_weight and on the normal space by normal_weights.

    ``sign`` and ``canonical_shift`` carry the square-root correction attached to
    the cross-section the point was computed in; the contribution is multiplied
    by sign * t^canonical_shift (the shift may be half-integral).
    """

    line_weight: tuple
    normal_weights: tuple = ()
    sign: int = 1
    canonical_shift: tuple = ()

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ModelError(f"sign must be +1 or -1, got {self.sign}")
        object.__setattr__(self, "line_weight", tuple(int(x) for x in self.line_weight))
        object.__setattr__(self, "normal_weights", tuple(tuple(int(x) for x in b) for b in self.normal_weights))
        shift = self.canonical_shift or (0,) * len(self.line_weight)
        object.__setattr__(self, "canonical_shift", tuple(Fraction(x) for x in shift))


@dataclass(frozen=True)
class ClosedContribution:
    """Precomputed values chi(nu_F, t_lambda), keyed by lambda."""

    values: Mapping[tuple, Cyclotomic]


Entry = Union[IsolatedFixedPoint, ClosedContribution]


@dataclass
class FixedPointModel:
    rs: RootSystem
    k: tuple
    entries: list = field(default_factory=list)

    def __post_init__(self):
        self.k = as_level(self.rs, self.k)

    def __add__(self, other: "FixedPointModel") -> "FixedPointModel":
        if self.rs != other.rs or self.k != other.k:
            raise ModelError("models live on different groups or levels")
        return FixedPointModel(self.rs, self.k, list(self.entries) + list(other.entries))


@dataclass
class MultiplicityTable:
    rs: RootSystem
    k: tuple
    values: dict

    def to_json(self) -> dict:
        return {"group": self.rs.name, "level": list(self.k),
                "multiplicities": [{"mu": list(mu), "value": v} for mu, v in self.values.items()]}

    @classmethod
    def from_json(cls, obj: dict) -> "MultiplicityTable":
        rs = build_root_system(obj["group"])
        vals = {tuple(int(x) for x in r["mu"]): int(r["value"]) for r in obj["multiplicities"]}
        return cls(rs, tuple(obj["level"]), vals)

    def __eq__(self, other):
        return (isinstance(other, MultiplicityTable) and self.rs == other.rs
                and tuple(self.k) == tuple(other.k) and self.values == other.values)


# ---------------------------------------------------------------------------
# contributions

def isolated_fp2(rs: RootSystem, entry: IsolatedFixedPoint, t: TorusElement) -> Cyclotomic:
    """sign * t^shift * t^line / D_C(normal, t)."""
    den = dc_complex(entry.normal_weights, t)
    if den.is_zero():
        raise IrregularElementError(f"normal weight with t^beta = 1 at v={t.v}")
    pre = half_weight_monomial(rs, t, entry.canonical_shift) * weight_monomial(t, entry.line_weight)
    return pre * entry.sign / den


def isolated_lco(rs: RootSystem, entry: IsolatedFixedPoint, t: TorusElement) -> Cyclotomic:
    """sign * t^shift * zeta^(1/2) / D_R(normal, t) with zeta^(1/2) = t^line * det(A(t)^(1/2))."""
    den = dr_real_direct(entry.normal_weights, t)
    if den.is_zero():
        raise IrregularElementError(f"normal weight with t^beta = 1 at v={t.v}")
    root = weight_monomial(t, entry.line_weight) * sqrt_det(entry.normal_weights, t)
    return half_weight_monomial(rs, t, entry.canonical_shift) * root * entry.sign / den


def contribution_at(rs: RootSystem, entry: Entry, t: TorusElement, lam: tuple | None = None) -> Cyclotomic:
    if isinstance(entry, ClosedContribution):
        if lam is None or lam not in entry.values:
            raise ModelError(f"closed contribution has no value at lambda={lam}")
        return entry.values[lam]
    a = isolated_fp2(rs, entry, t)
    b = isolated_lco(rs, entry, t)
    if a != b:
        raise AssertionError(f"fixed-point forms disagree at v={t.v}: {a.to_complex()} vs {b.to_complex()}")
    return a


def _lambda_of(model: FixedPointModel, t: TorusElement) -> tuple | None:
    rs = model.rs
    shifted = b_flat(rs, shifted_level(rs, model.k), t.v)
    lam = tuple(x - r for x, r in zip(shifted, rs.rho))
    if all(Fraction(x).denominator == 1 for x in lam):
        return tuple(int(x) for x in lam)
    return None


def evaluate_model(model: FixedPointModel, t: TorusElement, lam: tuple | None = None) -> Cyclotomic:
    """sum over entries of the fixed-point contributions at t."""
    if lam is None:
        lam = _lambda_of(model, t)
    total = Cyclotomic.zero(t.order)
    for entry in model.entries:
        total = total + contribution_at(model.rs, entry, t, lam)
    return total


def thread_count() -> int:
    raw = os.environ.get("LOOPFIX_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        raise ModelError(f"LOOPFIX_THREADS must be an integer, got {raw!r}") from None
    return n if n > 0 else (os.cpu_count() or 1)


def extract_multiplicities(model: FixedPointModel, table: CharacterTable | None = None,
                           threads: int | None = None) -> MultiplicityTable:
    """chi(M_mu) for every level-k weight mu, asserted integral."""
    chars = table if table is not None else CharacterTable(model.rs, model.k)
    n = len(chars)

    def column(i: int) -> list[Cyclotomic]:
        lam = chars.weights[i]
        val = evaluate_model(model, chars.points[i], lam) * chars.norm_sq[i]
        return [chars.chi(mu, i).conj() * val for mu in chars.weights]

    threads = threads or thread_count()
    if threads > 1 and n > 1:
        with ThreadPoolExecutor(max_workers=min(threads, n)) as ex:
            cols = list(ex.map(column, range(n)))
    else:
        cols = [column(i) for i in range(n)]

    out = {}
    for a, mu in enumerate(chars.weights):
        total = Cyclotomic.zero()
        for col in cols:  # fixed lambda order
            total = total + col[a]
        total = total / chars.t_order
        try:
            q = total.to_rational()
        except NotRationalError:
            raise ExtractionError(mu, total) from None
        if q.denominator != 1:
            raise ExtractionError(mu, total)
        out[mu] = q.numerator
    return MultiplicityTable(model.rs, chars.k, out)


# ---------------------------------------------------------------------------
# coadjoint orbits

def cross_section_convert(rs: RootSystem, value: Cyclotomic, w, sigma: FaceData, t: TorusElement) -> Cyclotomic:
    """chi(nu_F, t) from the contribution computed on the cross-section Y_{w sigma}."""
    t1 = t.weyl_act(w.inverse())
    return value * dc_complex(sigma.R_plus_sigma, t1) / dc_complex(rs.positive_roots, t1)


def _orbit_face(rs: RootSystem, k, nu) -> FaceData:
    k = as_level(rs, k)
    return face_data(rs, face_of(rs, b_sharp(rs, k, nu)))


def coadjoint_orbit_model(rs: RootSystem, k, nu: Sequence[int], chars: CharacterTable | None = None) -> FixedPointModel:
    """One closed entry per coset w in W/W_sigma, valued t^{w nu} converted from Y_{w sigma}."""
    chars = chars if chars is not None else CharacterTable(rs, k)
    nu = chars.check_weight(nu)
    fd = _orbit_face(rs, chars.k, nu)
    entries = []
    for w in fd.cosets:
        wnu = w.act_weight(nu)
        vals = {lam: cross_section_convert(rs, weight_monomial(t, wnu), w, fd, t)
                for lam, t in zip(chars.weights, chars.points)}
        entries.append(ClosedContribution(vals))
    return FixedPointModel(rs, chars.k, entries)


def coadjoint_isolated_model(rs: RootSystem, k, nu: Sequence[int]) -> FixedPointModel:
    """The same orbit with each coset written as an isolated point of the orbit itself.

    Normal weights are w(R_+ minus R_sigma); the positive systems R_+ and R_{+,sigma}
    of g_sigma differ by the set S = R_{+,sigma} \\ R_+, which contributes the sign
    (-1)^|S| and the shift -sum_{beta in S} w beta.
    """
    k = as_level(rs, k)
    nu = tuple(int(x) for x in nu)
    fd = _orbit_face(rs, k, nu)
    R_sigma = set(fd.R_sigma)
    flipped = [a for a in fd.R_plus_sigma if not rs.is_positive_root(a)]
    entries = []
    for w in fd.cosets:
        normal = tuple(w.act_weight(b) for b in rs.positive_roots if b not in R_sigma)
        shift = [0] * rs.rank
        for a in flipped:
            shift = [s - x for s, x in zip(shift, w.act_weight(a))]
        entries.append(IsolatedFixedPoint(w.act_weight(nu), normal, -1 if len(flipped) % 2 else 1, tuple(shift)))
    return FixedPointModel(rs, k, entries)


def root_data(rs: RootSystem, w, sigma: FaceData, t: TorusElement) -> tuple[int, tuple]:
    """(sign, shift) of the square-root correction for the cross-section Y_{w sigma}."""
    if not hasattr(w, "translation"):
        w = from_finite(rs, w)
    return root_sign_data(rs, w, sigma, t)


def formal_character_model(rs: RootSystem, k, mults: Mapping[tuple, int],
                           chars: CharacterTable | None = None) -> FixedPointModel:
    """A closed model whose value at t_lambda is sum_mu m_mu chi_mu(t_lambda)."""
    chars = chars if chars is not None else CharacterTable(rs, k)
    vals = {}
    for i, lam in enumerate(chars.weights):
        total = Cyclotomic.zero()
        for mu, m in mults.items():
            if m:
                total = total + chars.chi(chars.check_weight(mu), i) * m
        vals[lam] = total
    return FixedPointModel(rs, chars.k, [ClosedContribution(vals)])


# ---------------------------------------------------------------------------
# JSON model files

def _lam_key(lam) -> str:
    return ",".join(str(int(x)) for x in lam)


def _parse_lam(key: str) -> tuple:
    key = key.strip().strip("[]()")
    return tuple(int(x) for x in key.split(",")) if key else ()


def model_to_json(model: FixedPointModel) -> dict:
    entries = []
    for e in model.entries:
        if isinstance(e, ClosedContribution):
            entries.append({"kind": "closed", "values": {_lam_key(l): v.to_json() for l, v in e.values.items()}})
        else:
            den = math.lcm(1, *(x.denominator for x in e.canonical_shift))
            entries.append({"kind": "isolated", "line_weight": list(e.line_weight),
                            "normal_weights": [list(b) for b in e.normal_weights], "sign": e.sign,
                            "canonical_shift": [int(x * den) for x in e.canonical_shift],
                            "shift_denominator": den})
    return {"group": model.rs.name, "level": list(model.k), "entries": entries}


def model_from_json(obj: dict, rs: RootSystem | None = None, k=None) -> FixedPointModel:
    """Parse a model document; ``rs``/``k`` override the file's group and level when given."""
    try:
        if rs is None:
            rs = build_root_system(obj["group"])
        if k is None:
            k = tuple(obj["level"]) if isinstance(obj["level"], list) else obj["level"]
        entries = []
        for e in obj.get("entries", []):
            kind = e.get("kind")
            if kind == "closed":
                vals = {_parse_lam(key): Cyclotomic.from_json(v) for key, v in e["values"].items()}
                entries.append(ClosedContribution(vals))
            elif kind == "isolated":
                den = int(e.get("shift_denominator", 1))
                shift = tuple(Fraction(int(x), den) for x in e.get("canonical_shift", [0] * rs.rank))
                entries.append(IsolatedFixedPoint(tuple(e["line_weight"]), tuple(map(tuple, e.get("normal_weights", []))),
                                                  int(e.get("sign", 1)), shift))
            else:
                raise ModelError(f"unknown entry kind {kind!r}")
    except (KeyError, TypeError) as err:
        raise ModelError(f"malformed model file: {err}") from None
    model = FixedPointModel(rs, k, entries)
    for e in model.entries:
        if isinstance(e, IsolatedFixedPoint) and (len(e.line_weight) != rs.rank
                                                  or any(len(b) != rs.rank for b in e.normal_weights)):
            raise ModelError("isolated entry has weights of the wrong rank")
    return model


def load_model(path: str, rs: RootSystem | None = None, k=None) -> FixedPointModel:
    with open(path, encoding="utf-8") as fh:
        return model_from_json(json.load(fh), rs, k)


def dump_model(model: FixedPointModel, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(model_to_json(model), fh, indent=1)
