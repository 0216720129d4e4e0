import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vaopt import functions as F
from vaopt._validation import DimensionError

ALL = F.registry()
ORACLE = [f for f in ALL if f.oracle]
OPTIMUM_CASES = [
    (f, d) for f in ORACLE for d in ((f.arity,) if f.arity else (2, 4, 6, 10)) if d >= f.min_dim and f.known_optima(d)
]


def test_registry_has_every_function_once():
    names = [f.name for f in ALL]
    assert len(names) == 24
    assert len(set(names)) == 24


@pytest.mark.parametrize("func, dim", OPTIMUM_CASES, ids=lambda v: getattr(v, "name", f"d{v}"))
def test_registered_optimum_value(func, dim):
    for opt in func.known_optima(dim):
        assert abs(func(np.array(opt.x)) - opt.f) <= opt.tolerance


@pytest.mark.parametrize(
    "name, x, expected",
    [
        ("booth", [0, 0], 74.0),
        ("matyas", [1, 1], 0.04),
        ("beale", [0, 0], 14.203125),
        ("goldstein", [0, 0], 600.0),
        ("rosenbrock", [0, 0], 1.0),
        ("rastrigin", [1, 1], 2.0),
        ("dejong", [1, 2, 3], 14.0),
        ("zakharov", [1, 1], 9.3125),
        ("dixon", [1, 1], 2.0),
        ("trid", [2, 2], -2.0),
        ("bohachevsky", [0, 0], 0.0),
        ("easom", [0, 0], -math.exp(-2 * math.pi**2)),
        ("griewank", [100, 100], 6.0214207),
    ],
)
def test_hand_evaluated_values(name, x, expected):
    assert F.evaluate(name, x) == pytest.approx(expected, abs=1e-7)


def test_ackley_origin_is_zero_and_positive_elsewhere():
    assert abs(F.ackley(np.zeros(15))) < 1e-12
    assert F.ackley(np.full(15, 0.5)) > 0


def test_trid_optimum_value_for_six_dimensions():
    x, f = F.known_optimum("trid", 6)
    assert f == -50.0
    assert F.evaluate("trid", x) == pytest.approx(-50.0)


def test_michalewicz_two_dimensional_minimum():
    x, f = F.known_optimum("michalewicz", 2)
    assert F.evaluate("michalewicz", x) == pytest.approx(-1.8013, abs=1e-4)


def test_branin_minima_agree():
    values = [F.evaluate("branin", o.x) for o in F.lookup("branin").known_optima()]
    assert np.ptp(values) < 1e-9
    assert values[0] == pytest.approx(0.397887, abs=1e-6)


def test_aliases_and_unknown_name():
    assert F.lookup("sphere") is F.lookup("dejong")
    assert F.lookup("Schwefel") is F.lookup("schwefel_sumprod")
    with pytest.raises(KeyError, match="valid names"):
        F.lookup("no_such_function")


def test_fixed_dimension_functions_reject_other_sizes():
    with pytest.raises(DimensionError):
        F.evaluate("booth", [1.0, 2.0, 3.0])
    with pytest.raises(DimensionError):
        F.evaluate("powell", [1.0, 2.0])


def test_powell_uses_complete_groups_of_four():
    x = np.arange(1.0, 9.0)
    assert F.powell(x) == pytest.approx(F.powell(x[:4]) + F.powell(x[4:]))


def test_default_spaces_match_bounds():
    space = F.lookup("bukin6").space()
    assert space.lower.tolist() == [-15.0, -3.0]
    assert space.upper.tolist() == [-5.0, 3.0]
    assert F.lookup("ackley").space(15, (-10, 10)).dimension == 15


@pytest.mark.parametrize("func", [f for f in ALL if f.symmetric], ids=lambda f: f.name)
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_symmetric_functions_are_even(func, data):
    d = func.arity or 3
    x = np.array(data.draw(st.lists(st.floats(-5, 5), min_size=d, max_size=d)))
    assert func(-x) == pytest.approx(func(x), rel=1e-12, abs=1e-12)


@pytest.mark.parametrize("func", ORACLE, ids=lambda f: f.name)
@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 2**16))
def test_no_point_beats_the_registered_minimum(func, seed):
    d = func.arity or max(func.min_dim, 4)
    if not func.known_optima(d):
        d = 2
    rng = np.random.default_rng(seed)
    space = func.space(d)
    x = space.sample(rng)
    best = min(o.f for o in func.known_optima(d))
    assert func(x) >= best - 1e-9
