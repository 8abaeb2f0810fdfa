import pytest
from hypothesis import given, settings, strategies as st

from cominlg import moves, poset as pm, potential, root_data as rd, shapes
from cominlg.potential import PluckerPolynomial, apply_derivation
from cominlg.root_data import CominusculeDatum

C3 = CominusculeDatum("C", 3, 3)
C4 = CominusculeDatum("C", 4, 4)


def from_shape(datum, rows):
    return shapes.rows_to_ideal(shapes.default_layout(datum), rows)


def coord(datum, rows):
    poset = pm.build_minuscule_poset(datum)
    return PluckerPolynomial.coordinate(poset, from_shape(datum, rows))


def test_derivation_on_coordinates():
    poset = pm.build_minuscule_poset(C3)
    box = apply_derivation(3, PluckerPolynomial.coordinate(poset, 0))
    assert box == coord(C3, [1])
    for j in (1, 2, 3):
        assert apply_derivation(j, PluckerPolynomial.coordinate(poset, poset.full)).is_zero()


def test_lg36_numerator_for_first_node():
    d1 = moves.denominator_polynomial(C3, 1)
    n1 = apply_derivation(2, d1)
    expected = coord(C3, [1, 1]) * coord(C3, [1, 1, 1]) - coord(C3, []) * coord(C3, [1, 2, 2])
    assert n1 == expected
    assert potential.numerator_polynomial(C3, 1) == expected


def test_mixed_degree_rejected():
    poset = pm.build_minuscule_poset(C3)
    p = PluckerPolynomial.coordinate(poset, 0)
    q = p * p
    with pytest.raises(ValueError):
        p + q


@settings(deadline=None, max_examples=50)
@given(st.data())
def test_derivation_product_rule(data):
    datum = data.draw(st.sampled_from([C3, C4, CominusculeDatum("D", 5, 5)]))
    poset = pm.build_minuscule_poset(datum)
    ideals = poset.ideals()
    f = PluckerPolynomial.zero(poset)
    g = PluckerPolynomial.zero(poset)
    for _ in range(data.draw(st.integers(1, 3))):
        f = f + PluckerPolynomial.coordinate(poset, data.draw(st.sampled_from(ideals))).scale(
            data.draw(st.sampled_from([-2, -1, 1, 2]))
        )
    for _ in range(data.draw(st.integers(1, 3))):
        g = g + PluckerPolynomial.coordinate(poset, data.draw(st.sampled_from(ideals))).scale(
            data.draw(st.sampled_from([-1, 1]))
        )
    j = data.draw(st.integers(1, datum.rank))
    lhs = apply_derivation(j, f * g)
    rhs = apply_derivation(j, f) * g + f * apply_derivation(j, g)
    assert lhs == rhs


def test_numerator_degree_and_growth():
    for datum in (C4, CominusculeDatum("D", 8, 8), CominusculeDatum("E6", 6, 6)):
        for istar in range(1, datum.rank + 1):
            if istar == datum.node:
                continue
            c = rd.comin_coefficients(datum)[istar - 1]
            den = moves.denominator_polynomial(datum, istar)
            num = potential.numerator_polynomial(datum, istar)
            assert den.degree() == c
            assert num.degree() == c
            den_boxes = {sum(m.bit_count() for m in f) for _, f in den.terms}
            num_boxes = {sum(m.bit_count() for m in f) for _, f in num.terms}
            assert len(den_boxes) == 1 and num_boxes == {next(iter(den_boxes)) + 1}


def test_superpotential_shape():
    for datum in (C3, CominusculeDatum("A", 1, 1), CominusculeDatum("D", 5, 1)):
        pot = potential.assemble_superpotential(datum)
        assert len(pot.terms) == datum.rank + 1
        assert [t.index for t in pot.terms] == list(range(datum.rank + 1))
        assert [t.quantum for t in pot.terms] == [
            i == datum.node for i in range(datum.rank + 1)
        ]
        quantum = pot.terms[datum.node]
        poset = pm.build_minuscule_poset(datum)
        assert quantum.denominator.terms == {(0, (poset.full,)): 1}
        _, iprime = pm.quantum_ideals(datum)
        assert quantum.numerator.terms == {(0, (iprime,)): 1}


def test_term_zero():
    pot = potential.assemble_superpotential(C3)
    assert pot.terms[0].numerator == coord(C3, [1])
    assert pot.terms[0].denominator == coord(C3, [])


# --------------------------------------------------- conjectural quantum rule


def test_quantum_chevalley_small():
    poset = pm.build_minuscule_poset(C3)
    empty = potential.quantum_chevalley(C3, 0)
    assert empty == coord(C3, [1])  # one addable box, no hook inside
    full = potential.quantum_chevalley(C3, poset.full)
    assert full.terms == {(1, (from_shape(C3, [1, 2]),)): 1}
    one = potential.quantum_chevalley(C3, from_shape(C3, [1]))
    assert one == coord(C3, [1, 1])


def test_quantum_derivation_matches_box_derivation_lg36():
    for istar in (0, 1, 2):
        den = moves.denominator_polynomial(C3, istar)
        delta = potential.quantum_derivation(C3, den)
        assert delta.q_part().is_zero()
        assert delta == potential.numerator_polynomial(C3, istar)
    dk = moves.denominator_polynomial(C3, 3)
    _, iprime = pm.quantum_ideals(C3)
    assert potential.quantum_derivation(C3, dk).terms == {(1, (iprime,)): 1}
