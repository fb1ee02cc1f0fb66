from __future__ import annotations

import pytest

from conftest import arc
from friezeforge.harness import (
    ALL_SUITES,
    Config,
    enumerate_configs,
    run_suites,
)
from friezeforge.laurent import EpsilonAssignment, LaurentPoly

from test_ktheory import R8
from test_polygon import T8


def test_enumeration_counts():
    e = enumerate_configs(2)
    assert e.triangulation_counts == {2: 5}
    assert len(e) == 5 * 4
    e = enumerate_configs(5, n_min=5)
    assert e.triangulation_counts[5] == 132
    assert len(e) == 132 * 32
    for cfg in e.configs[:200]:
        assert all(r in cfg.T for r in cfg.R)
    with pytest.raises(ValueError):
        enumerate_configs(1)


def test_sampling_is_deterministic():
    a = enumerate_configs(7, sample=100, seed=3, n_min=7)
    b = enumerate_configs(7, sample=100, seed=3, n_min=7)
    c = enumerate_configs(7, sample=100, seed=4, n_min=7)
    assert len(a) == 100
    assert [x.key for x in a] == [x.key for x in b]
    assert [x.key for x in a] != [x.key for x in c]


def test_worked_example_all_suites(a5):
    rep = run_suites([Config(a5.T, a5.R, a5.eps)], ALL_SUITES)
    assert rep.passed and rep.exit_status == 0
    assert set(rep.totals()) == set(ALL_SUITES)


def test_friezes_suite_small_sweep():
    rep = run_suites(enumerate_configs(4), {"friezes", "multiplication"})
    assert rep.passed and len(rep.results) == 20 + 112 + 672


def test_corrupted_epsilon_is_rejected():
    u = LaurentPoly.gens("u")[0]
    one = LaurentPoly.constant(1)
    bad = EpsilonAssignment.from_monomials(
        T8.arcs, {a: (u if a == arc(2, 5) else one) for a in T8.arcs}
    )
    rep = run_suites([Config(T8, R8, bad)], ALL_SUITES)
    assert not rep.passed and rep.exit_status == 1
    first = rep.first_failure
    assert first.rejected and not first.checks
    assert "[2,5]" in first.failure
    assert any("rejected" in line for line in rep.summary_lines())


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suites([], {"nonsense"})


def test_parallel_matches_serial():
    cfgs = list(enumerate_configs(3))
    a = run_suites(cfgs, {"friezes"}, workers=1)
    b = run_suites(cfgs, {"friezes"}, workers=2)
    assert [r.config.key for r in a.results] == [r.config.key for r in b.results]
    assert a.totals() == b.totals()
