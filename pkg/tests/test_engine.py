import json
import random
from fractions import Fraction

import pytest

from loopfix.alcove import face_data, face_of, faces, from_finite
from loopfix.characters import CharacterTable, dc_complex, weight_monomial
from loopfix.engine import (ClosedContribution, ExtractionError, FixedPointModel, IsolatedFixedPoint,
                            ModelError, MultiplicityTable, coadjoint_isolated_model, coadjoint_orbit_model,
                            contribution_at, cross_section_convert, evaluate_model, extract_multiplicities,
                            formal_character_model, isolated_fp2, isolated_lco, load_model, dump_model,
                            model_from_json, model_to_json)
from loopfix.exact import Cyclotomic
from loopfix.levelk import IrregularElementError, LevelError, TorusElement, t_lambda
from loopfix.rootsys import build_root_system

A1 = build_root_system("A1")
A2 = build_root_system("A2")


def test_point_model():
    t = t_lambda(A2, 2, (1, 0))
    e = IsolatedFixedPoint((1, 1))
    assert contribution_at(A2, e, t) == weight_monomial(t, (1, 1))


def test_su2_flag_point():
    t = t_lambda(A1, 3, (1,))
    e = IsolatedFixedPoint((2,), ((2,),))
    assert contribution_at(A1, e, t) == weight_monomial(t, (2,)) / (1 - weight_monomial(t, (-2,)))


def test_degenerate_normal_weight():
    t = TorusElement((Fraction(1, 2),))
    with pytest.raises(IrregularElementError):
        contribution_at(A1, IsolatedFixedPoint((0,), ((2,),)), t)


def test_forms_agree_on_random_data():
    rng = random.Random(5)
    pts = [t_lambda(A2, 3, lam) for lam in [(0, 0), (1, 0), (1, 1), (2, 1)]]
    checked = 0
    while checked < 40:
        t = rng.choice(pts)
        normal = [tuple(rng.randint(-3, 3) for _ in range(2)) for _ in range(rng.randint(0, 4))]
        if any(t.exponent(b).denominator == 1 for b in normal):
            continue
        shift = tuple(Fraction(rng.randint(-3, 3), 2) for _ in range(2))
        e = IsolatedFixedPoint(tuple(rng.randint(-3, 3) for _ in range(2)), tuple(normal), rng.choice([1, -1]), shift)
        assert isolated_fp2(A2, e, t) == isolated_lco(A2, e, t)
        checked += 1


def test_bad_sign():
    with pytest.raises(ModelError):
        IsolatedFixedPoint((0,), (), 2)


def test_empty_model():
    m = FixedPointModel(A2, 2, [])
    t = t_lambda(A2, 2, (0, 0))
    assert evaluate_model(m, t) == 0
    assert set(extract_multiplicities(m).values.values()) == {0}


def test_coadjoint_of_zero():
    m = coadjoint_orbit_model(A2, 2, (0, 0))
    assert len(m.entries) == 1
    assert all(v == 1 for v in m.entries[0].values.values())


def test_su2_coadjoint_entries():
    m = coadjoint_orbit_model(A1, 2, (1,))
    assert len(m.entries) == 2
    for lam in [(0,), (1,), (2,)]:
        t = t_lambda(A1, 2, lam)
        vals = sorted((e.values[lam].to_complex() for e in m.entries), key=lambda z: (z.real, z.imag))
        want = sorted(((weight_monomial(t, (s,)) / (1 - weight_monomial(t, (-2 * s,)))).to_complex() for s in (1, -1)),
                      key=lambda z: (z.real, z.imag))
        assert all(abs(a - b) < 1e-12 for a, b in zip(vals, want))


@pytest.mark.parametrize("name,k", [("A1", 3), ("A2", 2), ("G2", 1)])
def test_coadjoint_two_routes(name, k):
    rs = build_root_system(name)
    tab = CharacterTable(rs, k)
    for nu in tab.weights:
        closed = coadjoint_orbit_model(rs, k, nu, tab)
        iso = coadjoint_isolated_model(rs, k, nu)
        for i, (lam, t) in enumerate(zip(tab.weights, tab.points)):
            a = evaluate_model(closed, t, lam)
            assert a == evaluate_model(iso, t, lam) == tab.chi(nu, i)
        out = extract_multiplicities(closed, tab)
        assert out.values == {mu: int(mu == nu) for mu in tab.weights}


def test_coadjoint_rejects_non_level_weight():
    with pytest.raises(LevelError):
        coadjoint_orbit_model(A2, 1, (1, 1))


def test_cross_section_identity_at_vertex_zero():
    fd = face_data(A2, face_of(A2, (0, 0)))
    t = t_lambda(A2, 2, (1, 0))
    x = weight_monomial(t, (2, -1))
    for w in fd.cosets:
        assert cross_section_convert(A2, x, w, fd, t) == x


def test_cross_section_split():
    t = t_lambda(A2, 2, (0, 1))
    for f in faces(A2):
        fd = face_data(A2, f)
        for w in fd.cosets:
            t1 = t.weyl_act(w.inverse())
            rest = [b for b in A2.positive_roots if b not in fd.R_sigma]
            flipped = [a for a in fd.R_plus_sigma if not A2.is_positive_root(a)]
            lhs = cross_section_convert(A2, Cyclotomic.one(), w, fd, t)
            # D_C(g_sigma/t)/D_C(g/t) with the flipped roots turned around
            rhs = Cyclotomic.one()
            for a in flipped:
                rhs = rhs * (-1) * weight_monomial(t1, [-x for x in a])
            rhs = rhs / dc_complex(rest, t1)
            assert lhs == rhs


@pytest.mark.parametrize("name,k", [("A1", 4), ("A2", 2)])
def test_round_trip(name, k):
    rs = build_root_system(name)
    tab = CharacterTable(rs, k)
    rng = random.Random(11)
    for _ in range(10):
        mults = {mu: rng.randint(-5, 5) for mu in tab.weights}
        out = extract_multiplicities(formal_character_model(rs, k, mults, tab), tab)
        assert out.values == mults


def test_linearity_and_permutation():
    tab = CharacterTable(A2, 2)
    a = coadjoint_orbit_model(A2, 2, (1, 0), tab)
    b = coadjoint_orbit_model(A2, 2, (1, 1), tab)
    both = a + b
    out = extract_multiplicities(both, tab).values
    assert out[(1, 0)] == 1 and out[(1, 1)] == 1 and sum(out.values()) == 2
    doubled = extract_multiplicities(a + a, tab).values
    assert doubled == {mu: 2 * v for mu, v in extract_multiplicities(a, tab).values.items()}
    rev = FixedPointModel(A2, 2, list(reversed(both.entries)))
    assert extract_multiplicities(rev, tab).values == out


def test_threads_deterministic(monkeypatch):
    tab = CharacterTable(A2, 2)
    m = coadjoint_isolated_model(A2, 2, (1, 1))
    outs = []
    for n in ("1", "3", "0"):
        monkeypatch.setenv("LOOPFIX_THREADS", n)
        outs.append(extract_multiplicities(m, tab))
    assert outs[0] == outs[1] == outs[2]


def test_non_integral_extraction():
    tab = CharacterTable(A1, 2)
    # a delta function at one t_lambda is not a character sum
    vals = {lam: Cyclotomic.one() if lam == (0,) else Cyclotomic.zero() for lam in tab.weights}
    m = FixedPointModel(A1, 2, [ClosedContribution(vals)])
    with pytest.raises(ExtractionError) as info:
        extract_multiplicities(m, tab)
    assert info.value.mu is not None


def test_missing_closed_value():
    tab = CharacterTable(A1, 2)
    m = FixedPointModel(A1, 2, [ClosedContribution({(0,): Cyclotomic.one()})])
    with pytest.raises(ModelError):
        extract_multiplicities(m, tab)


def test_json_round_trip(tmp_path):
    iso = coadjoint_isolated_model(A2, 2, (1, 0))
    closed = coadjoint_orbit_model(A2, 2, (0, 1))
    both = iso + closed
    path = tmp_path / "m.json"
    dump_model(both, str(path))
    again = load_model(str(path))
    assert extract_multiplicities(again).values == extract_multiplicities(both).values
    half = IsolatedFixedPoint((0, 0), (), 1, (Fraction(1, 2), Fraction(-3, 2)))
    doc = model_to_json(FixedPointModel(A2, 2, [half]))
    assert doc["entries"][0]["shift_denominator"] == 2
    assert model_from_json(json.loads(json.dumps(doc))).entries[0] == half


def test_malformed_models():
    with pytest.raises(ModelError):
        model_from_json({"group": "A1", "level": [1], "entries": [{"kind": "bogus"}]})
    with pytest.raises(ModelError):
        model_from_json({"group": "A1", "level": [1], "entries": [{"kind": "isolated", "line_weight": [1, 2]}]})


def test_multiplicity_table_json():
    tab = extract_multiplicities(coadjoint_orbit_model(A2, 1, (1, 0)))
    assert MultiplicityTable.from_json(json.loads(json.dumps(tab.to_json()))) == tab
