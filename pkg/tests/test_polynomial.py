import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from schubfactor.polynomial import (
    Polynomial,
    VariableSpace,
    product_of_linear_forms,
)


SPACE3 = VariableSpace(3)
SPACE22 = VariableSpace(4, (2, 2))


def x(i, space=SPACE3):
    return Polynomial.variable(space, space.x(i))


def y(i, space=SPACE3):
    return Polynomial.variable(space, space.yfull(i))


def random_poly(rng, space, max_terms=6, max_exp=3, max_coeff=9):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exp = tuple(
            rng.randint(0, max_exp) if rng.random() < 0.5 else 0
            for _ in range(space.num_vars)
        )
        c = rng.randint(-max_coeff, max_coeff)
        if c:
            terms[exp] = terms.get(exp, 0) + c
    return Polynomial(space, {e: c for e, c in terms.items() if c})


# -- variable space ------------------------------------------------------------


def test_space_families_and_order():
    sp = VariableSpace(5, (2, 3))
    names = [sp.name(v) for v in range(sp.num_vars)]
    assert names == [
        "x1", "x2", "x3", "x4", "x5",
        "y1", "y2", "y3", "y4", "y5",
        "y1_1", "y2_1",
        "z1", "z2",
    ]
    assert sp.x(1) == 0 and sp.yfull(1) == 5 and sp.yblock(2, 1) == 11 and sp.z(2) == 13


def test_space_bad_block_indices():
    sp = VariableSpace(4, (2, 2))
    with pytest.raises(ValueError):
        sp.yblock(1, 2)  # block 1 has a single half slot
    with pytest.raises(ValueError):
        sp.z(3)


def test_space_equality():
    assert VariableSpace(3) == VariableSpace(3)
    assert VariableSpace(3) != VariableSpace(4)
    assert VariableSpace(4, (2, 2)) != VariableSpace(4, (4,))
    assert VariableSpace(4, (2, 2)) != VariableSpace(4)


# -- ring arithmetic -----------------------------------------------------------


def test_add_cancels():
    assert (x(1) + (-1) * x(1)).is_zero()


def test_product_expansion():
    lhs = (x(1) + x(2)) * (x(1) + x(3))
    rhs = x(1) * x(1) + x(1) * x(2) + x(1) * x(3) + x(2) * x(3)
    assert lhs == rhs


def test_scale():
    assert x(1) * 2 == x(1) + x(1)
    assert 2 * x(1) == x(1) * 2


def test_space_mismatch_raises():
    with pytest.raises(ValueError):
        x(1) + x(1, VariableSpace(4))
    with pytest.raises(ValueError):
        x(1) * x(1, VariableSpace(4))


def test_pow():
    f = x(1) + 1
    assert f ** 0 == Polynomial.one(SPACE3)
    assert f ** 3 == f * f * f


def test_no_zero_coefficients_stored():
    f = (x(1) + x(2)) * (x(1) - x(2)) - x(1) * x(1)
    assert all(c != 0 for c in f.terms.values())
    assert f == -(x(2) * x(2))


@settings(max_examples=150)
@given(st.integers(0, 10 ** 6))
def test_ring_axioms(seed):
    rng = random.Random(seed)
    f, g, h = (random_poly(rng, SPACE3) for _ in range(3))
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == Polynomial.zero(SPACE3)


def test_big_coefficients_exact():
    import math

    f = (x(1) + 1) ** 70
    assert f.degree_in(SPACE3.x(1)) == 70
    # middle binomial coefficient C(70, 35) exceeds 64-bit range
    exp = [0] * SPACE3.num_vars
    exp[SPACE3.x(1)] = 35
    assert f.terms[tuple(exp)] == math.comb(70, 35)
    assert math.comb(70, 35) > 2 ** 63


# -- divided differences -------------------------------------------------------


def test_divided_difference_examples():
    assert x(1).divided_difference(1) == Polynomial.one(SPACE3)
    assert x(1).divided_difference(2).is_zero()
    f = x(1) * x(1) * x(2)  # x1^2 x2
    assert f.divided_difference(2) == x(1) * x(1)


def test_divided_difference_out_of_range():
    with pytest.raises(ValueError):
        x(1).divided_difference(3)


@settings(max_examples=100)
@given(st.integers(0, 10 ** 6))
def test_divided_difference_properties(seed):
    rng = random.Random(seed)
    f = random_poly(rng, SPACE3)
    for i in (1, 2):
        d = f.divided_difference(i)
        # exactness: d * (x_i - x_{i+1}) reproduces the antisymmetrization
        xi = Polynomial.variable(SPACE3, SPACE3.x(i))
        xj = Polynomial.variable(SPACE3, SPACE3.x(i + 1))
        assert d * (xi - xj) == f - f.swap_x(i)
        assert d.swap_x(i) == d  # symmetric in the swapped pair
        assert d.divided_difference(i).is_zero()  # square is zero
    # braid relation
    b1 = f.divided_difference(1).divided_difference(2).divided_difference(1)
    b2 = f.divided_difference(2).divided_difference(1).divided_difference(2)
    assert b1 == b2


def test_divided_difference_commutes_far_apart():
    sp = VariableSpace(5)
    rng = random.Random(7)
    f = random_poly(rng, sp)
    a = f.divided_difference(1).divided_difference(3)
    b = f.divided_difference(3).divided_difference(1)
    assert a == b


def test_divided_difference_treats_other_families_as_constants():
    f = (x(1) - y(2)) * x(1)
    d = f.divided_difference(1)
    assert d == x(1) + x(2) - y(2)


# -- substitution ---------------------------------------------------------------


def test_substitute_rename():
    f = x(1) + x(2)
    g = f.substitute({SPACE3.x(i): y(i) for i in (1, 2)})
    assert g == y(1) + y(2)


def test_substitute_collapse():
    f = x(1) - y(2)
    assert f.substitute({SPACE3.x(1): y(2)}).is_zero()


def test_substitute_to_zero():
    sp = VariableSpace(2, (2,))
    xs = [Polynomial.variable(sp, sp.x(i)) for i in (1, 2)]
    z1 = Polynomial.variable(sp, sp.z(1))
    f = xs[0] + xs[1] - 2 * z1
    assert f.substitute({sp.z(1): 0}) == xs[0] + xs[1]


def test_substitute_powers():
    f = x(1) ** 3
    g = f.substitute({SPACE3.x(1): x(2) + 1})
    assert g == (x(2) + 1) ** 3


def test_substitute_rejects_other_space():
    other = VariableSpace(4)
    with pytest.raises(ValueError):
        x(1).substitute({SPACE3.x(1): Polynomial.one(other)})


@settings(max_examples=75)
@given(st.integers(0, 10 ** 6))
def test_substitute_is_ring_homomorphism(seed):
    rng = random.Random(seed)
    f = random_poly(rng, SPACE3, max_terms=4, max_exp=2)
    g = random_poly(rng, SPACE3, max_terms=4, max_exp=2)
    images = {
        SPACE3.x(1): random_poly(rng, SPACE3, max_terms=2, max_exp=1),
        SPACE3.yfull(2): random_poly(rng, SPACE3, max_terms=2, max_exp=1),
    }
    assert (f + g).substitute(images) == f.substitute(images) + g.substitute(images)
    assert (f * g).substitute(images) == f.substitute(images) * g.substitute(images)


# -- product of linear forms ------------------------------------------------------


def test_product_of_linear_forms():
    assert product_of_linear_forms(SPACE3, []) == Polynomial.one(SPACE3)
    assert product_of_linear_forms(SPACE3, [x(1)]) == x(1)
    p = product_of_linear_forms(SPACE3, [x(1) + x(2), x(1) + x(3)])
    assert p == (x(1) + x(2)) * (x(1) + x(3))


def test_product_of_linear_forms_rejects_quadratic():
    with pytest.raises(ValueError):
        product_of_linear_forms(SPACE3, [x(1) * x(1)])


# -- ordering, rendering, serialization -------------------------------------------


def test_leading_term_is_canonical_minimum():
    f = x(1) + x(2)  # leading is x2 under graded revlex-from-the-right
    exp, c = f.leading_term()
    assert c == 1
    assert exp[SPACE3.x(2)] == 1 and exp[SPACE3.x(1)] == 0


def test_text_rendering():
    assert Polynomial.zero(SPACE3).text() == "0"
    assert Polynomial.integer(SPACE3, -3).text() == "-3"
    f = x(1) * x(1) * x(2) * 2 - x(3) + 1
    assert f.text() == "2 x1^2 x2 - x3 + 1"


def test_json_round_trip_and_determinism():
    sp = SPACE22
    f = (
        Polynomial.variable(sp, sp.x(1))
        + Polynomial.variable(sp, sp.yblock(2, 1)) * 3
        - Polynomial.variable(sp, sp.z(2)) ** 2
    )
    blob = f.to_json()
    data = json.loads(blob)
    assert data["space"] == {"n": 4, "s": 2, "mu": [2, 2]}
    assert Polynomial.from_json_dict(data) == f
    assert f.to_json() == blob  # byte-stable
    coeffs = [t["coeff"] for t in data["terms"]]
    assert all(isinstance(c, str) for c in coeffs)
