from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from conftest import arc
from friezeforge.ktheory import SubgroupN, subgroup_N
from friezeforge.laurent import (
    EpsilonAssignment,
    EpsilonError,
    LaurentPoly,
    default_epsilon,
    epsilon_eval,
    epsilon_validate,
    format_monomial,
    parse_monomial,
)
from friezeforge.polygon import Dissection

from test_ktheory import B, S8, k0
from test_polygon import T8

u, v, z = LaurentPoly.gens("u", "v", "z")


def test_ring_examples():
    assert (v + z ** -1) * z == 1 + v * z
    p = (1 + v * z) / z
    assert p + 0 == p
    assert (1 + v * z) * 1 - (1 + v * z) == 0
    assert ((1 + v * z) - (1 + v * z)).is_zero


def test_rendering():
    assert str((1 + v * z) / z) == "(1+vz)/z"
    assert str((1 + u * v + v * z) / (u * v)) == "(1+uv+vz)/uv"
    assert str(1 / u) == "1/u"
    assert str((u + z) / (u * z)) == "(u+z)/uz"
    assert str(1 - u) == "1-u"
    assert str(2 * u ** 2 * v) == "2u^2v"
    assert str(LaurentPoly()) == "0"
    x1, x2 = LaurentPoly.gens("x1", "x2")
    assert str((1 + x1) / x2) == "(1+x1)/x2"


def test_division_only_by_unit_monomials():
    with pytest.raises(ValueError):
        u / (u + v)
    with pytest.raises(ValueError):
        u / (2 * v)
    assert (u * v) / (-v) == -u


def test_equality_ignores_variable_order():
    a = LaurentPoly(("u", "v"), {(1, 0): 1})
    b = LaurentPoly(("v", "u"), {(0, 1): 1})
    assert a == b and hash(a) == hash(b)
    assert LaurentPoly.constant(1) == 1 and u != 1


def test_monomial_strings():
    assert parse_monomial("u") == u
    assert parse_monomial("v*z^-1") == v / z
    assert parse_monomial("1") == 1
    assert format_monomial(v / z) == "v*z^-1"
    with pytest.raises(ValueError):
        parse_monomial("u+v")


def eps_a5(**over):
    m = {arc(1, 7): u, arc(2, 4): v, arc(5, 7): z, arc(2, 5): LaurentPoly.constant(1), arc(2, 7): LaurentPoly.constant(1)}
    m.update({arc(*k): val for k, val in over.get("extra", {}).items()})
    return EpsilonAssignment.from_monomials(B, m)


def test_epsilon_validate_examples():
    N = subgroup_N(T8, S8)
    epsilon_validate(eps_a5(), N)
    with pytest.raises(EpsilonError):
        epsilon_validate(eps_a5(extra={(2, 5): u}), N)
    epsilon_validate(eps_a5(extra={(2, 5): u}), SubgroupN(B, ()))


def test_epsilon_eval_examples():
    e = eps_a5()
    assert epsilon_eval(e, k0("[2,4]+[5,7]")) == v * z
    assert epsilon_eval(e, k0("-[5,7]")) == 1 / z
    assert epsilon_eval(e, (0,) * 5) == 1


def test_epsilon_needs_every_arc():
    with pytest.raises(ValueError, match="missing"):
        EpsilonAssignment.from_monomials(B, {arc(1, 7): u})
    with pytest.raises(ValueError):
        EpsilonAssignment.from_monomials(B, {a: 2 * u for a in B})


def test_default_epsilon_matches_worked_example():
    N = subgroup_N(T8, S8)
    e = default_epsilon(N)
    epsilon_validate(e, N)
    assert e.variables == ("x1", "x2", "x3")
    names = {str(a): format_monomial(e.monomial(a)) for a in B}
    assert names == {"{1,7}": "x1", "{2,4}": "x2", "{2,5}": "1", "{2,7}": "1", "{5,7}": "x3"}


def test_default_epsilon_is_injective_on_quotient():
    N = subgroup_N(T8, Dissection(8, (arc(2, 4),)))
    e = default_epsilon(N)
    seen = {}
    for x in [(a, b, c, 0, 0) for a in range(-1, 2) for b in range(-1, 2) for c in range(-1, 2)]:
        r = N.reduce(x)
        seen.setdefault(e.exps_of(x), set()).add(r)
    assert all(len(reps) == 1 for reps in seen.values())


def test_json_round_trip():
    p = (1 + u * v + v * z) / (u * v) - 3 * z ** 2
    rows = p.to_json()
    assert LaurentPoly.from_json(rows) == p
    assert rows == sorted(rows, key=lambda r: (sorted(r["exps"].items()), r["coeff"]))


monomials = st.builds(
    lambda c, a, b, d: LaurentPoly(("u", "v", "z"), {(a, b, d): c}),
    st.integers(-3, 3),
    st.integers(-2, 2),
    st.integers(-2, 2),
    st.integers(-2, 2),
)
polys = st.lists(monomials, max_size=4).map(lambda ms: sum(ms, LaurentPoly.constant(0, ("u", "v", "z"))))


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == 0
    assert p * 1 == p


@given(polys)
def test_json_round_trip_property(p):
    assert LaurentPoly.from_json(p.to_json()) == p


@given(st.lists(st.tuples(*[st.integers(-3, 3)] * 5), min_size=2, max_size=2))
def test_epsilon_is_exponential(pair):
    e = eps_a5()
    x, y = pair
    s = tuple(a + b for a, b in zip(x, y))
    assert epsilon_eval(e, s) == epsilon_eval(e, x) * epsilon_eval(e, y)
    N = subgroup_N(T8, S8)
    assert epsilon_eval(e, N.reduce(x)) == epsilon_eval(e, x)
