from cominlg import moves, poset as pm, potential, root_data as rd, shapes, toric
from cominlg.poset import _bits
from cominlg.potential import PluckerPolynomial
from cominlg.toric import LaurentPolynomial
from cominlg.root_data import CominusculeDatum

C4 = CominusculeDatum("C", 4, 4)
D4 = CominusculeDatum("D", 4, 1)
A3 = CominusculeDatum("A", 3, 2)
E7 = CominusculeDatum("E7", 7, 7)


def from_shape(datum, rows):
    return shapes.rows_to_ideal(shapes.default_layout(datum), rows)


def test_restrict_plucker_ends():
    poset = pm.build_minuscule_poset(C4)
    assert toric.restrict_plucker(poset, 0) == LaurentPolynomial.one(poset.size)
    top = toric.restrict_plucker(poset, poset.full)
    assert top == LaurentPolynomial.monomial((1,) * poset.size)


def test_restrict_degrees_match_ideal_size():
    poset = pm.build_minuscule_poset(D4)
    for mask in poset.ideals():
        lp = toric.restrict_plucker(poset, mask)
        assert lp.total_degrees() == ({mask.bit_count()} if mask else {0})


def test_restrict_polynomial_linearity_and_cancellation():
    poset = pm.build_minuscule_poset(C4)
    p_empty = PluckerPolynomial.coordinate(poset, 0)
    p_full = PluckerPolynomial.coordinate(poset, poset.full)
    prod = toric.restrict_polynomial(p_empty * p_full)
    assert prod == LaurentPolynomial.monomial((1,) * poset.size)
    f = moves.denominator_polynomial(C4, 2)
    assert toric.restrict_polynomial(f - f).is_zero()


def test_denominators_restrict_to_single_monomials():
    for datum in (C4, D4, A3, CominusculeDatum("D", 8, 8)):
        for istar in range(1, datum.rank + 1):
            if istar == datum.node:
                continue
            lp = toric.restrict_polynomial(moves.denominator_polynomial(datum, istar))
            assert lp == LaurentPolynomial.monomial(toric.expected_minor_monomial(datum, istar))


def test_expected_minor_exponent_patterns():
    # single factor for linear nodes
    q8 = CominusculeDatum("D", 5, 1)
    exps = toric.expected_minor_monomial(q8, 4)
    seq = pm.ideal_sequence(q8, 4)
    assert exps == toric.indicator_exponents(pm.build_minuscule_poset(q8), seq[0])
    # nesting depth two for the middle node of the staircase
    exps = toric.expected_minor_monomial(C4, 2)
    seq = pm.ideal_sequence(C4, 2)
    for e in range(pm.build_minuscule_poset(C4).size):
        inner = seq[0] >> e & 1
        outer = seq[1] >> e & 1
        assert exps[e] == inner + outer
    # quartic sheets on the Freudenthal poset
    assert set(toric.expected_minor_monomial(E7, 4)) == {0, 1, 2, 3, 4}


def test_quadric_embedding_cancellation():
    poset = pm.build_minuscule_poset(D4)
    lhs = toric.restrict_polynomial(
        PluckerPolynomial.coordinate(poset, from_shape(D4, [1]))
        * PluckerPolynomial.coordinate(poset, from_shape(D4, [3, 2]))
        - PluckerPolynomial.coordinate(poset, 0)
        * PluckerPolynomial.coordinate(poset, from_shape(D4, [3, 3]))
    )
    assert lhs.is_monomial()


def test_derivation_restriction_identity():
    for datum in (A3, D4, C4):
        poset = pm.build_minuscule_poset(datum)
        for istar in range(1, datum.rank + 1):
            if istar == datum.node:
                continue
            i1 = rd.index_sequence(datum, istar)[0]
            num = toric.restrict_polynomial(potential.numerator_polynomial(datum, istar))
            den = toric.restrict_polynomial(moves.denominator_polynomial(datum, istar))
            assert num == den * toric.label_linear_form(poset, i1)


def test_restrict_polynomial_graded_tracks_q():
    poset = pm.build_minuscule_poset(C4)
    _, iprime = pm.quantum_ideals(C4)
    poly = PluckerPolynomial.monomial(poset, (iprime,), q=1) + PluckerPolynomial.coordinate(
        poset, 0
    )
    graded = toric.restrict_polynomial_graded(poly)
    assert set(graded) == {0, 1}
    assert graded[0] == LaurentPolynomial.one(poset.size)
    try:
        toric.restrict_polynomial(poly)
    except ValueError:
        pass
    else:  # pragma: no cover
        raise AssertionError("q-graded polynomial must be rejected")


def test_verify_model_a3():
    report = toric.verify_model(A3, with_oracle=True)
    assert report.passed
    names = {c.name for c in report.checks}
    assert {"toric_minor", "toric_derivation", "degree_index", "ideal_count",
            "classical_sum", "quantum_term", "oracle_minor"} <= names


def test_verify_model_catches_breakage(monkeypatch):
    # sabotage the expected monomial and watch the minor check fail
    datum = A3
    original = toric.expected_minor_monomial

    def wrong(d, istar):
        exps = list(original(d, istar))
        exps[0] += 1
        return tuple(exps)

    monkeypatch.setattr(toric, "expected_minor_monomial", wrong)
    report = toric.verify_model(datum)
    assert not report.passed
    failing = report.first_failure()
    assert failing is not None and failing.name == "toric_minor"
    assert "residual" in failing.detail
