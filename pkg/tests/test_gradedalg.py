import pytest
from hypothesis import given, strategies as st

from liecohom.gradedalg import (
    AlgebraError,
    FreeRing,
    GradedAlgebra,
    GradedDims,
    even,
    exterior_dims,
    odd,
    parse,
    render,
    tensor,
)


def test_unique_monomial_in_degree_11():
    alg = GradedAlgebra(2, [even("y", 6, 2), odd("t5", 5)])
    assert alg.basis_in_degree(11) == [(1, 1)]


def test_two_odd_generators_degree_6():
    alg = GradedAlgebra(2, [even("y1", 4, 2), even("y2", 4, 2), odd("t1", 3), odd("t2", 3)])
    assert alg.basis_in_degree(6) == [(0, 0, 1, 1)]


def test_degree_zero_is_unit():
    alg = GradedAlgebra(3, [even("y", 4, 3), odd("t", 3)])
    assert alg.basis_in_degree(0) == [(0, 0)]
    assert alg.basis_in_degree(alg.top_degree + 1) == []


def test_sign_rule_odd_characteristic():
    alg = GradedAlgebra(3, [odd("a", 1), odd("b", 3)])
    a, b = alg.generator("a"), alg.generator("b")
    assert a * b == alg.monomial({"a": 1, "b": 1})
    assert b * a == -(a * b)
    assert a * a == 0


def test_prescribed_square_substitution():
    alg = GradedAlgebra(2, [even("x6", 6, 2), odd("t", 3, "x6"), odd("u", 5)])
    t, u = alg.generator("t"), alg.generator("u")
    assert t * t == alg.generator("x6")
    assert t * (t * u) == alg.generator("x6") * u


def test_e8_model_zeta3_square():
    from liecohom import modp

    m = modp.build_model("E8", 2)
    assert m.z(4) * m.z(4) == m.x(6)


def test_nonzero_square_needs_char_2():
    with pytest.raises(AlgebraError):
        GradedAlgebra(3, [even("x6", 6, 2), odd("t", 3, "x6")])


def test_square_degree_checked():
    with pytest.raises(AlgebraError):
        GradedAlgebra(2, [even("x4", 4, 2), odd("t", 3, "x4")])


def test_parity_checked():
    with pytest.raises(AlgebraError):
        GradedAlgebra(2, [odd("t", 4)])
    with pytest.raises(AlgebraError):
        GradedAlgebra(2, [even("y", 3, 2)])


def test_poincare_examples():
    assert GradedAlgebra(5, [even("y", 8, 3)]).poincare() == GradedDims({0: 1, 8: 1, 16: 1})
    delta = GradedAlgebra(0, [odd("rho3", 3), odd("rho11", 11)])
    assert delta.poincare() == GradedDims({0: 1, 3: 1, 11: 1, 14: 1})
    f4 = GradedAlgebra(0, [odd(f"r{d}", d) for d in (3, 11, 15, 23)])
    pc = f4.poincare()
    assert pc.total == 16 and max(pc) == 52


def test_render_examples():
    alg = GradedAlgebra(2, [even("x6", 6, 8), even("x10", 10, 4), odd("z5", 5), odd("z9", 9)])
    poly = alg.parse("x6^2*z9 + x10*z5")
    assert render(parse(render(poly), alg)) == render(poly)
    ring = FreeRing(2, [("x6", 6), ("x10", 10), ("x18", 18)])
    assert render(ring.parse("x10^3 + x6^2*x18")) == "x6^2*x18 + x10^3"
    zring = FreeRing(0, [("x6", 6)])
    assert render(zring.parse("2*x6")) == "2*x6"
    assert render(zring.parse("3 - x6")) == "-x6 + 3"


def test_graded_dims_ops():
    a = GradedDims({0: 1, 3: 1})
    assert (a * a) == GradedDims({0: 1, 3: 2, 6: 1})
    assert a.evaluate(1) == a.total == 2


# -- properties ---------------------------------------------------------------


@st.composite
def algebras(draw):
    p = draw(st.sampled_from([2, 3, 5]))
    n_even = draw(st.integers(0, 2))
    n_odd = draw(st.integers(0, 3))
    gens = [even(f"y{i}", draw(st.sampled_from([2, 4])), draw(st.integers(1, 3))) for i in range(n_even)]
    for j in range(n_odd):
        deg = draw(st.sampled_from([1, 3]))
        sq = None
        if p == 2 and n_even and draw(st.booleans()):
            cands = [g for g in gens if g.degree == 2 * deg]
            if cands:
                sq = draw(st.sampled_from(cands)).name
        gens.append(odd(f"t{j}", deg, sq))
    return GradedAlgebra(p, gens)


@st.composite
def algebra_and_elements(draw, n=3):
    alg = draw(algebras())
    elems = []
    for _ in range(n):
        d = draw(st.integers(0, alg.top_degree))
        mons = alg.basis_in_degree(d)
        coeffs = draw(st.lists(st.integers(0, alg.characteristic - 1), min_size=len(mons), max_size=len(mons)))
        elems.append(alg.element(coeffs, mons))
    return alg, elems


@given(algebra_and_elements())
def test_associative(data):
    alg, (a, b, c) = data
    assert (a * b) * c == a * (b * c)


@given(algebra_and_elements())
def test_graded_commutative(data):
    alg, (a, b, _) = data
    if not a or not b:
        return
    sign = -1 if (a.degree * b.degree) % 2 else 1
    assert a * b == (b * a).scale(sign)


@given(algebras())
def test_dimension_formula(alg):
    assert alg.poincare().total == alg.dimension
    assert all(d <= alg.top_degree for d in alg.poincare())


@given(algebra_and_elements())
def test_normalize_idempotent(data):
    alg, (a, _, _) = data
    once = alg.normalize(a.terms)
    assert alg.normalize(once.terms) == once == a


def _renamed(alg: GradedAlgebra, suffix: str) -> GradedAlgebra:
    gens = [
        type(g)(g.name + suffix, g.degree, g.truncation, g.square and g.square + suffix)
        for g in alg.generators
    ]
    return GradedAlgebra(alg.characteristic, gens)


@given(algebras(), algebras())
def test_tensor_poincare_multiplicative(a, b):
    if a.characteristic != b.characteristic:
        return
    b = _renamed(b, "_b")
    assert tensor(a, b).poincare() == a.poincare() * b.poincare()


@given(st.lists(st.sampled_from([1, 3, 5, 7]), max_size=5))
def test_exterior_dims_total(degrees):
    dims = exterior_dims(degrees)
    assert dims.total == 2 ** len(degrees)
    assert max(dims) == sum(degrees)


@given(algebra_and_elements())
def test_render_roundtrip(data):
    alg, (a, _, _) = data
    assert parse(render(a), alg) == a
