"""Command-line front end.

    loopfix roots    --group G2
    loopfix levelk   --group A1 --level 3
    loopfix char     --group A2 --level 2 --mu 1,0 [--lambda 0,1]
    loopfix fusion   --group A1 --level 2 [--mu 1 --nu 1 [--rho 0]]
    loopfix verlinde --group A1 --level 1 --genus 2 [--insertions 1 1]
    loopfix extract  --group A2 --level 2 --model model.json
    loopfix selftest [--format json]

Exit status: 0 success, 1 domain error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import alcove, characters, engine, fusion, levelk, rootsys
from .exact import Cyclotomic, NotRationalError

SUBCOMMANDS = ("roots", "faces", "levelk", "char", "fusion", "verlinde", "extract", "selftest")


class UsageError(Exception):
    pass


@dataclass
class Invocation:
    command: str
    group: str | None = None
    level: tuple | None = None
    mu: tuple | None = None
    nu: tuple | None = None
    rho: tuple | None = None
    lam: tuple | None = None
    genus: int | None = None
    insertions: list = field(default_factory=list)
    model: str | None = None
    format: str = "text"
    weyl_cap: int = rootsys.DEFAULT_WEYL_CAP


def _int_vector(text) -> tuple:
    if isinstance(text, (list, tuple)):
        return tuple(int(x) for x in text)
    if isinstance(text, int):
        return (text,)
    parts = [p for p in str(text).replace("(", "").replace(")", "").replace("[", "").replace("]", "")
             .replace(" ", ",").split(",") if p]
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="loopfix", description="Exact level-k character, fusion and fixed-point computations.")
    p.add_argument("command", choices=SUBCOMMANDS)
    p.add_argument("--config", help="JSON file with default values for any of the flags below")
    p.add_argument("--group", help="e.g. A2, G2, A1xA1")
    p.add_argument("--level", help="one integer, or one per simple factor (comma-separated)")
    p.add_argument("--mu")
    p.add_argument("--nu")
    p.add_argument("--rho")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--genus", type=int)
    p.add_argument("--insertions", nargs="*", help="weights, each comma-separated")
    p.add_argument("--model", help="fixed-point model file (JSON)")
    p.add_argument("--format", choices=("text", "json"))
    p.add_argument("--weyl-cap", dest="weyl_cap", type=int)
    return p


def parse_invocation(argv) -> Invocation:
    """Parse and validate; flags override values from --config."""
    args = build_parser().parse_args(argv)
    conf = {}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                conf = json.load(fh)
        except (OSError, json.JSONDecodeError) as err:
            raise UsageError(f"cannot read config {args.config}: {err}") from None
        if not isinstance(conf, dict):
            raise UsageError("config file must hold a JSON object")

    def pick(name):
        val = getattr(args, name)
        if val is None:
            val = conf.get(name if name != "lam" else "lambda")
        return val

    inv = Invocation(args.command)
    inv.group = pick("group")
    for name in ("level", "mu", "nu", "rho", "lam"):
        val = pick(name)
        setattr(inv, name, _int_vector(val) if val is not None else None)
    inv.genus = pick("genus")
    inv.insertions = [_int_vector(x) for x in (pick("insertions") or [])]
    inv.model = pick("model")
    inv.format = pick("format") or "text"
    if inv.format not in ("text", "json"):
        raise UsageError(f"unknown format {inv.format!r}")
    cap = pick("weyl_cap")
    inv.weyl_cap = int(cap) if cap is not None else rootsys.DEFAULT_WEYL_CAP

    needs_group = inv.command not in ("selftest",)
    if needs_group and not inv.group:
        if not (inv.command == "extract" and inv.model):
            raise UsageError(f"{inv.command} needs --group")
    needs_level = inv.command in ("levelk", "char", "fusion", "verlinde")
    if needs_level and inv.level is None:
        raise UsageError(f"{inv.command} needs --level")
    if inv.command == "char" and inv.mu is None:
        raise UsageError("char needs --mu")
    if inv.command == "verlinde" and inv.genus is None:
        raise UsageError("verlinde needs --genus")
    if inv.command == "extract" and not inv.model:
        raise UsageError("extract needs --model")
    if inv.command == "fusion" and inv.rho is not None and (inv.mu is None or inv.nu is None):
        raise UsageError("--rho needs --mu and --nu")
    if inv.command == "fusion" and (inv.mu is None) != (inv.nu is None):
        raise UsageError("fusion needs both --mu and --nu, or neither")
    return inv


# ---------------------------------------------------------------------------
# formatting helpers

def shadow(z: Cyclotomic) -> str:
    c = z.to_complex()
    if abs(c.imag) < 1e-12 * max(1.0, abs(c.real)):
        return f"{c.real:.12g}"
    return f"{c.real:.12g}{c.imag:+.12g}i"


def frac_str(q) -> str:
    return str(Fraction(q))


def vec_str(v) -> str:
    return "[" + ", ".join(frac_str(x) for x in v) + "]"


def _level(rs, inv: Invocation) -> tuple:
    if len(inv.level) == 1:
        return levelk.as_level(rs, inv.level[0])
    return levelk.as_level(rs, inv.level)


def _rs(inv: Invocation):
    return rootsys.build_root_system(inv.group, weyl_cap=inv.weyl_cap)


# ---------------------------------------------------------------------------
# subcommands; each returns (json document, text lines)

def cmd_roots(inv):
    rs = _rs(inv)
    doc = {"group": rs.name, "rank": rs.rank, "cartan": rs.cartan.tolist(),
           "positive_roots": [list(a) for a in rs.positive_roots], "rho": list(rs.rho),
           "dual_coxeter": list(rs.dual_coxeter), "weyl_order": rs.weyl_order,
           "basic_gram": rs.basic_gram.tolist()}
    lines = [f"group {rs.name}  rank {rs.rank}  |W| = {rs.weyl_order}  c = {list(rs.dual_coxeter)}",
             "cartan " + str(rs.cartan.tolist()), "basic inner product (coroot basis) " + str(rs.basic_gram.tolist()),
             f"{len(rs.positive_roots)} positive roots (fundamental-weight coordinates):"]
    lines += ["  " + vec_str(a) for a in rs.positive_roots]
    return doc, lines


def cmd_faces(inv):
    rs = _rs(inv)
    recs, lines = [], []
    for f in alcove.faces(rs):
        fd = alcove.face_data(rs, f)
        recs.append({"face": f.name(rs), "walls": [sorted(w) for w in f.walls],
                     "interior_point": [frac_str(x) for x in f.interior_point],
                     "R_plus_sigma": [list(a) for a in fd.R_plus_sigma],
                     "gamma_sigma": [frac_str(x) for x in fd.gamma_sigma],
                     "W_sigma_order": len(fd.W_sigma), "gamma_in_face": alcove.gamma_in_face(rs, fd)})
        lines.append(f"{f.name(rs):<20} |R+_sigma| = {len(fd.R_plus_sigma):<3} |W_sigma| = {len(fd.W_sigma):<5}"
                     f" gamma = {vec_str(fd.gamma_sigma)}")
    return {"group": rs.name, "faces": recs}, lines


def cmd_levelk(inv):
    rs = _rs(inv)
    k = _level(rs, inv)
    kc = levelk.shifted_level(rs, k)
    recs, lines = [], [f"group {rs.name} level {list(k)}: #T_k = {levelk.torus_group_order(rs, k)},"
                       f" #T_(k+c) = {levelk.torus_group_order(rs, kc)}"]
    for lam in levelk.level_weights(rs, k):
        t = levelk.t_lambda(rs, k, lam)
        phase = t.exponent(rs.rho)
        recs.append({"lambda": list(lam), "v": [frac_str(x) for x in t.v], "rho_phase": frac_str(phase)})
        lines.append(f"lambda = {list(lam)}  v = {vec_str(t.v)}  <rho, v> = {phase}")
    return {"group": rs.name, "level": list(k), "T_k": levelk.torus_group_order(rs, k),
            "T_k_plus_c": levelk.torus_group_order(rs, kc), "weights": recs}, lines


def cmd_char(inv):
    rs = _rs(inv)
    table = characters.CharacterTable(rs, _level(rs, inv))
    mu = table.check_weight(inv.mu)
    which = range(len(table)) if inv.lam is None else [table.index[table.check_weight(inv.lam)]]
    recs, lines = [], []
    for i in which:
        val = table.chi(mu, i)
        recs.append({"lambda": list(table.weights[i]), "value": val.to_json(), "float": shadow(val)})
        lines.append(f"chi_{list(mu)}(t_{list(table.weights[i])}) = {val!r}  ~ {shadow(val)}")
    return {"group": rs.name, "level": list(table.k), "mu": list(mu), "values": recs}, lines


def cmd_fusion(inv):
    rs = _rs(inv)
    ring = fusion.FusionRing(rs, _level(rs, inv))
    if inv.rho is not None:
        n = ring.coefficient(inv.mu, inv.nu, inv.rho)
        return ({"mu": list(inv.mu), "nu": list(inv.nu), "rho": list(inv.rho), "coefficient": n},
                [f"N_{list(inv.mu)},{list(inv.nu)}^{list(inv.rho)} = {n}"])
    if inv.mu is not None:
        vec = ring.product(inv.mu, inv.nu)
        terms = [f"{c}*chi{list(r)}" if c != 1 else f"chi{list(r)}" for c, r in zip(vec, ring.basis) if c]
        return ({"basis": [list(b) for b in ring.basis], "mu": list(inv.mu), "nu": list(inv.nu), "product": vec},
                [f"chi{list(inv.mu)} * chi{list(inv.nu)} = {' + '.join(terms) or '0'}"])
    return ring.to_json(), ring.format_table().splitlines()


def cmd_verlinde(inv):
    rs = _rs(inv)
    ring = fusion.FusionRing(rs, _level(rs, inv))
    n = fusion.verlinde_number(ring, inv.genus, inv.insertions)
    return {"group": rs.name, "level": list(ring.k), "genus": inv.genus,
            "insertions": [list(m) for m in inv.insertions], "value": n}, [str(n)]


def cmd_extract(inv):
    try:
        with open(inv.model, encoding="utf-8") as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as err:
        raise engine.ModelError(f"{inv.model}: invalid JSON ({err})") from None
    rs = _rs(inv) if inv.group else None
    if rs is None:
        rs = rootsys.build_root_system(obj.get("group", ""), weyl_cap=inv.weyl_cap)
    k = _level(rs, inv) if inv.level is not None else None
    if k is None and "level" not in obj:
        raise UsageError("no level given on the command line or in the model file")
    model = engine.model_from_json(obj, rs, k)
    tab = engine.extract_multiplicities(model)
    lines = [f"chi(M_{list(mu)}) = {v}" for mu, v in tab.values.items()]
    return tab.to_json(), lines


def selftest_suites(weyl_cap: int) -> list[tuple[str, Callable[[], None]]]:
    cases = [("A1", 3), ("A2", 2), ("G2", 1), ("A1xA1", 2)]

    def orthogonality():
        for g, k in cases:
            rs = rootsys.build_root_system(g, weyl_cap=weyl_cap)
            tab = characters.CharacterTable(rs, k)
            for mu in tab.weights:
                for nu in tab.weights:
                    s = Cyclotomic.zero()
                    for i in range(len(tab)):
                        s = s + tab.norm_sq[i] * tab.chi(mu, i) * tab.chi(nu, i).conj()
                    assert s == (tab.t_order if mu == nu else 0), (g, k, mu, nu)

    def restriction():
        for g, k in cases[:3]:
            rs = rootsys.build_root_system(g, weyl_cap=weyl_cap)
            tab = characters.CharacterTable(rs, k)
            for f in alcove.faces(rs):
                fd = alcove.face_data(rs, f)
                for mu in tab.weights:
                    for i, t in enumerate(tab.points):
                        assert characters.character_by_restriction(rs, fd, mu, t) == tab.chi(mu, i), (g, f.name(rs), mu)

    def gamma():
        for g in ("A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A2xG2"):
            rs = rootsys.build_root_system(g, weyl_cap=weyl_cap)
            for f in alcove.faces(rs):
                assert alcove.gamma_in_face(rs, alcove.face_data(rs, f)), (g, f.name(rs))

    def coadjoint():
        for g, k in cases[:3]:
            rs = rootsys.build_root_system(g, weyl_cap=weyl_cap)
            tab = characters.CharacterTable(rs, k)
            for nu in tab.weights:
                out = engine.extract_multiplicities(engine.coadjoint_orbit_model(rs, k, nu, tab), tab)
                assert out.values == {mu: int(mu == nu) for mu in tab.weights}, (g, nu)

    return [("orthogonality", orthogonality), ("restriction-lemma", restriction),
            ("gamma-in-face", gamma), ("coadjoint-extraction", coadjoint)]


def cmd_selftest(inv):
    recs, lines = [], []
    failed = False
    for name, fn in selftest_suites(inv.weyl_cap):
        try:
            fn()
            ok, msg = True, ""
        except rootsys.WeylCapExceeded:
            raise
        except (AssertionError, ValueError, ArithmeticError) as err:
            ok, msg = False, f"{type(err).__name__}: {err}"
        failed |= not ok
        recs.append({"suite": name, "passed": ok, "message": msg})
        lines.append(f"{'PASS' if ok else 'FAIL'} {name}" + (f"  ({msg})" if msg else ""))
    return {"suites": recs, "passed": not failed}, lines


COMMANDS = {"roots": cmd_roots, "faces": cmd_faces, "levelk": cmd_levelk, "char": cmd_char,
            "fusion": cmd_fusion, "verlinde": cmd_verlinde, "extract": cmd_extract, "selftest": cmd_selftest}


def run(inv: Invocation, out=None) -> int:
    out = out or sys.stdout
    doc, lines = COMMANDS[inv.command](inv)
    if inv.format == "json":
        out.write(json.dumps(doc) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    if inv.command == "selftest" and not doc["passed"]:
        return 1
    return 0


def _module_of(err: BaseException) -> str:
    return type(err).__module__.rsplit(".", 1)[-1]


def main(argv=None) -> int:
    try:
        inv = parse_invocation(argv)
    except UsageError as err:
        print(f"loopfix: usage error: {err}", file=sys.stderr)
        return 2
    except SystemExit as err:  # argparse
        return int(err.code or 0)
    try:
        return run(inv)
    except UsageError as err:
        print(f"loopfix: usage error: {err}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, OSError, NotRationalError) as err:
        print(f"loopfix: {_module_of(err)}: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
