"""Plücker polynomials, box-adding derivations, and superpotential assembly."""
from __future__ import annotations

import functools
from dataclasses import dataclass

from . import moves, poset as poset_mod, root_data
from .poset import Ideal, MinusculePoset, _bits
from .root_data import CominusculeDatum

# A monomial key is (q-power, factors) with factors a canonically sorted tuple
# of ideal bitmasks; every monomial of a polynomial has the same factor count.
MonomialKey = tuple[int, tuple[Ideal, ...]]


class PluckerPolynomial:
    """Integer combination of monomials in the Plücker coordinates p_I."""

    __slots__ = ("poset", "terms")

    def __init__(self, poset: MinusculePoset, terms: dict[MonomialKey, int] | None = None):
        self.poset = poset
        self.terms: dict[MonomialKey, int] = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    self.terms[key] = coeff
        degrees = {len(f) for _, f in self.terms}
        if len(degrees) > 1:
            raise ValueError(f"mixed monomial degrees {sorted(degrees)}")

    # ------------------------------------------------------------ constructors

    @classmethod
    def zero(cls, poset: MinusculePoset) -> "PluckerPolynomial":
        return cls(poset)

    @classmethod
    def monomial(
        cls,
        poset: MinusculePoset,
        factors: tuple[Ideal, ...],
        coeff: int = 1,
        q: int = 0,
    ) -> "PluckerPolynomial":
        key = (q, tuple(sorted(factors, key=poset.sort_key)))
        return cls(poset, {key: coeff})

    @classmethod
    def coordinate(cls, poset: MinusculePoset, ideal: Ideal) -> "PluckerPolynomial":
        return cls.monomial(poset, (ideal,))

    # ------------------------------------------------------------- arithmetic

    def _binop(self, other: "PluckerPolynomial", sign: int) -> "PluckerPolynomial":
        if other.poset is not self.poset:
            raise ValueError("polynomials over different posets")
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, 0) + sign * coeff
        return PluckerPolynomial(self.poset, terms)

    def __add__(self, other: "PluckerPolynomial") -> "PluckerPolynomial":
        return self._binop(other, 1)

    def __sub__(self, other: "PluckerPolynomial") -> "PluckerPolynomial":
        return self._binop(other, -1)

    def __neg__(self) -> "PluckerPolynomial":
        return PluckerPolynomial(self.poset, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other: "PluckerPolynomial") -> "PluckerPolynomial":
        if other.poset is not self.poset:
            raise ValueError("polynomials over different posets")
        key_fn = self.poset.sort_key
        terms: dict[MonomialKey, int] = {}
        for (qa, fa), ca in self.terms.items():
            for (qb, fb), cb in other.terms.items():
                key = (qa + qb, tuple(sorted(fa + fb, key=key_fn)))
                terms[key] = terms.get(key, 0) + ca * cb
        return PluckerPolynomial(self.poset, terms)

    def scale(self, c: int) -> "PluckerPolynomial":
        return PluckerPolynomial(self.poset, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PluckerPolynomial)
            and self.poset is other.poset
            and self.terms == other.terms
        )

    def __hash__(self):  # pragma: no cover - polynomials are not hashable
        raise TypeError("PluckerPolynomial is unhashable")

    # ---------------------------------------------------------------- queries

    def is_zero(self) -> bool:
        return not self.terms

    def num_monomials(self) -> int:
        return len(self.terms)

    def degree(self) -> int | None:
        for _, factors in self.terms:
            return len(factors)
        return None

    def coefficients(self) -> tuple[int, ...]:
        return tuple(sorted(self.terms.values()))

    def classical_part(self) -> "PluckerPolynomial":
        return PluckerPolynomial(
            self.poset, {k: c for k, c in self.terms.items() if k[0] == 0}
        )

    def q_part(self) -> "PluckerPolynomial":
        return PluckerPolynomial(
            self.poset, {k: c for k, c in self.terms.items() if k[0] > 0}
        )

    def sorted_terms(self) -> list[tuple[int, int, tuple[Ideal, ...]]]:
        """(q, coeff, factors) triples in the canonical order."""
        key_fn = self.poset.sort_key
        out = [
            (q, self.terms[(q, f)], f)
            for (q, f) in sorted(
                self.terms, key=lambda k: (k[0], [key_fn(m) for m in k[1]])
            )
        ]
        return out

    def __repr__(self) -> str:
        if self.is_zero():
            return "PluckerPolynomial(0)"
        bits = []
        for q, coeff, factors in self.sorted_terms():
            mono = "*".join(f"p{list(self.poset.elements(m))}" for m in factors)
            qtag = f"q^{q}*" if q else ""
            bits.append(f"{'+' if coeff >= 0 else '-'}{abs(coeff)}*{qtag}{mono}")
        return "PluckerPolynomial(" + " ".join(bits) + ")"


def apply_derivation(j: int, poly: PluckerPolynomial) -> PluckerPolynomial:
    """Box-adding derivation at node j, extended by the product rule."""
    poset = poly.poset
    key_fn = poset.sort_key
    terms: dict[MonomialKey, int] = {}
    for (q, factors), coeff in poly.terms.items():
        for t, mask in enumerate(factors):
            grown = poset.add_box(mask, j)
            if grown is None:
                continue
            new_factors = tuple(sorted(factors[:t] + (grown,) + factors[t + 1 :], key=key_fn))
            key = (q, new_factors)
            terms[key] = terms.get(key, 0) + coeff
    return PluckerPolynomial(poset, terms)


def numerator_polynomial(datum: CominusculeDatum, istar: int) -> PluckerPolynomial:
    """The derivation at sigma_k(istar) applied to the denominator for istar."""
    if istar == datum.node:
        raise ValueError("the marked node's numerator is the quantum coordinate, not a derivative")
    denom = moves.denominator_polynomial(datum, istar)
    j = datum.node if istar == 0 else root_data.index_sequence(datum, istar)[0]
    return apply_derivation(j, denom)


@dataclass(frozen=True)
class SuperpotentialTerm:
    index: int
    numerator: PluckerPolynomial
    denominator: PluckerPolynomial
    quantum: bool


@dataclass(frozen=True)
class Superpotential:
    datum: CominusculeDatum
    terms: tuple[SuperpotentialTerm, ...]


def assemble_superpotential(datum: CominusculeDatum) -> Superpotential:
    """All n+1 terms, ordered by index; the marked node carries the quantum flag."""
    poset = poset_mod.build_minuscule_poset(datum)
    _, iprime = poset_mod.quantum_ideals(datum)
    out = []
    for idx in range(datum.rank + 1):
        if idx == datum.node:
            out.append(
                SuperpotentialTerm(
                    idx,
                    PluckerPolynomial.coordinate(poset, iprime),
                    PluckerPolynomial.coordinate(poset, poset.full),
                    quantum=True,
                )
            )
        else:
            out.append(
                SuperpotentialTerm(
                    idx,
                    numerator_polynomial(datum, idx),
                    moves.denominator_polynomial(datum, idx),
                    quantum=False,
                )
            )
    return Superpotential(datum, tuple(out))


# ----------------------------------------------------------------- conjecture
#
# The hyperplane quantum product below implements a Conjecture; it is kept out
# of the core verification suite and only exercised behind an explicit flag.


def _ideal_with_label_counts(
    poset: MinusculePoset, counts: dict[int, int]
) -> Ideal | None:
    datum = poset.datum
    lam = list(-x for x in root_data.fundamental_weight(datum, datum.node))
    cols = root_data.cartan_matrix(datum)
    for l, cnt in counts.items():
        for r in range(datum.rank):
            lam[r] += cnt * cols[r][l - 1]
    return poset.ideal_with_weight(tuple(lam))


def quantum_chevalley(datum: CominusculeDatum, ideal: Ideal) -> PluckerPolynomial:
    """Conjectural hyperplane quantum product on the coordinate p_I.

    Classical part: every valid single-box addition.  Quantum part: if the
    one-marked-box ideal sits inside I, remove a copy of it and reinterpret
    the leftover label multiset as an ideal (the generalized rim-hook rule).
    """
    poset = poset_mod.build_minuscule_poset(datum)
    result = PluckerPolynomial.zero(poset)
    for j in range(1, datum.rank + 1):
        grown = poset.add_box(ideal, j)
        if grown is not None:
            result = result + PluckerPolynomial.coordinate(poset, grown)
    hook, _ = poset_mod.quantum_ideals(datum)
    if hook & ~ideal == 0:
        counts: dict[int, int] = {}
        for e in _bits(ideal & ~hook):
            counts[poset.labels[e]] = counts.get(poset.labels[e], 0) + 1
        reduced = _ideal_with_label_counts(poset, counts)
        if reduced is not None:
            result = result + PluckerPolynomial.monomial(poset, (reduced,), q=1)
    return result


def quantum_derivation(datum: CominusculeDatum, poly: PluckerPolynomial) -> PluckerPolynomial:
    """The conjectural quantum derivation, extended by the product rule."""
    poset = poly.poset
    key_fn = poset.sort_key
    terms: dict[MonomialKey, int] = {}
    for (q, factors), coeff in poly.terms.items():
        for t, mask in enumerate(factors):
            for (dq, df), dc in quantum_chevalley(datum, mask).terms.items():
                new_factors = tuple(sorted(factors[:t] + df + factors[t + 1 :], key=key_fn))
                key = (q + dq, new_factors)
                terms[key] = terms.get(key, 0) + coeff * dc
    return PluckerPolynomial(poset, terms)


def quantum_derivation_matches(datum: CominusculeDatum, istar: int) -> str:
    """How the quantum derivation of a denominator compares with the box one.

    Returns "formal" for equality as Plücker polynomials, "torus" when the
    difference is a relation that restricts to zero on the torus, and "" when
    the two genuinely differ.
    """
    from . import toric

    if istar == datum.node:
        denom = moves.denominator_polynomial(datum, istar)
        _, iprime = poset_mod.quantum_ideals(datum)
        expected = PluckerPolynomial.monomial(denom.poset, (iprime,), q=1)
        residual = quantum_derivation(datum, denom) - expected
    else:
        denom = moves.denominator_polynomial(datum, istar)
        residual = quantum_derivation(datum, denom) - numerator_polynomial(datum, istar)
    if residual.is_zero():
        return "formal"
    if not toric.restrict_polynomial_graded(residual):
        return "torus"
    return ""
