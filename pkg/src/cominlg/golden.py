"""Loading and structural diffing of the golden corpus.

Each corpus file fixes a datum, a labeled row layout, and a list of checks.
Polynomials are stored as [coeff, [shape, ...]] terms with shapes given as
row-length lists in the file's own layout; comparison is by canonical
monomial multisets, never by strings.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from . import moves, poset as poset_mod, potential, shapes
from .poset import MinusculePoset
from .potential import PluckerPolynomial
from .root_data import CominusculeDatum

ENV_DIR = "COMINLG_GOLDEN_DIR"


def corpus_dir() -> Path:
    override = os.environ.get(ENV_DIR)
    if override:
        return Path(override)
    return Path(__file__).resolve().parents[2] / "data" / "golden"


@dataclass
class GoldenCase:
    name: str
    path: Path
    datum: CominusculeDatum
    layout: shapes.Layout
    checks: list[dict]


def load_case(path: Path) -> GoldenCase:
    doc = json.loads(path.read_text())
    datum = CominusculeDatum(**doc["datum"])
    layout = shapes.make_layout(datum, doc["layout"]["rows"], doc["layout"]["offsets"])
    return GoldenCase(doc["name"], path, datum, layout, doc["checks"])


def load_corpus(directory: Path | None = None) -> list[GoldenCase]:
    directory = directory or corpus_dir()
    cases = [load_case(p) for p in sorted(directory.glob("*.json"))]
    if not cases:
        raise FileNotFoundError(f"no golden cases found under {directory}")
    return cases


def polynomial_from_terms(
    poset: MinusculePoset, layout: shapes.Layout, terms: list
) -> PluckerPolynomial:
    out = PluckerPolynomial.zero(poset)
    for coeff, factor_shapes in terms:
        factors = tuple(shapes.rows_to_ideal(layout, s) for s in factor_shapes)
        out = out + PluckerPolynomial.monomial(poset, factors, coeff=coeff)
    return out


@dataclass
class GoldenResult:
    case: str
    kind: str
    istar: int | None
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "ok" if self.passed else "FAIL"
        where = f" i*={self.istar}" if self.istar is not None else ""
        tail = f" ({self.detail})" if self.detail and not self.passed else ""
        return f"{status:4} golden {self.case} {self.kind}{where}{tail}"


def _poly_diff(
    layout: shapes.Layout, computed: PluckerPolynomial, expected: PluckerPolynomial
) -> str:
    diff = computed - expected
    if diff.is_zero():
        return ""
    bits = []
    for q, coeff, factors in diff.sorted_terms()[:4]:
        mono = " ".join(shapes.shape_text(layout, m) for m in factors)
        bits.append(f"{coeff:+d} {mono}")
    more = "" if diff.num_monomials() <= 4 else f" (+{diff.num_monomials() - 4} more)"
    return "; ".join(bits) + more


def run_case(case: GoldenCase) -> list[GoldenResult]:
    datum, layout = case.datum, case.layout
    poset = poset_mod.build_minuscule_poset(datum)
    results: list[GoldenResult] = []

    def add(kind: str, istar: int | None, passed: bool, detail: str = "") -> None:
        results.append(GoldenResult(case.name, kind, istar, bool(passed), detail))

    for check in case.checks:
        kind = check["kind"]
        istar = check.get("istar")
        if kind == "denominator":
            expected = polynomial_from_terms(poset, layout, check["terms"])
            computed = moves.denominator_polynomial(datum, istar)
            add(kind, istar, computed == expected, _poly_diff(layout, computed, expected))
        elif kind == "numerator":
            expected = polynomial_from_terms(poset, layout, check["terms"])
            computed = potential.numerator_polynomial(datum, istar)
            add(kind, istar, computed == expected, _poly_diff(layout, computed, expected))
        elif kind == "quantum_numerator":
            _, iprime = poset_mod.quantum_ideals(datum)
            got = shapes.ideal_to_rows(layout, iprime)
            add(kind, None, got == check["shape"], f"I' = {got} != {check['shape']}")
        elif kind == "rim_hook":
            hook, _ = poset_mod.quantum_ideals(datum)
            got = shapes.ideal_to_rows(layout, hook)
            add(kind, None, got == check["shape"], f"I'' = {got} != {check['shape']}")
        elif kind == "state_count":
            mp = moves.generate_move_poset(datum, istar)
            add(kind, istar, len(mp.states) == check["count"],
                f"{len(mp.states)} states != {check['count']}")
        elif kind == "levels":
            mp = moves.generate_move_poset(datum, istar)
            sizes = [len(v) for _, v in sorted(mp.levels().items())]
            add(kind, istar, sizes == check["sizes"], f"{sizes} != {check['sizes']}")
        elif kind == "monomial_count":
            computed = moves.denominator_polynomial(datum, istar)
            add(kind, istar, computed.num_monomials() == check["count"],
                f"{computed.num_monomials()} monomials != {check['count']}")
        else:
            add(kind, istar, False, f"unknown golden check kind {kind!r}")
    return results


def run_corpus(directory: Path | None = None) -> list[GoldenResult]:
    out: list[GoldenResult] = []
    for case in load_corpus(directory):
        out.extend(run_case(case))
    return out
