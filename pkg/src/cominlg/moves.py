"""Box moves between order ideals and the move poset behind each denominator.

A state is an ordered c-tuple of ideals, seeded by the nested initial tuple.
A move detaches one box from a component and re-attaches a box of the same
label to a later component.  Three restrictions pin the move set down (they
are invisible for c <= 2 but essential for the quartic case):

* a box may only leave a component while it still lies in that component's
  *initial* ideal (boxes never move twice);
* when several components hold the same unmoved maximal box, the last one
  is the donor;
* the box lands in the first later component whose next free slot with that
  label lies outside that component's initial ideal (no refills).

The breadth-first closure under these moves is graded by BFS depth, which
gives the sign (-1)^depth of each state's monomial.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field

from . import poset as poset_mod
from . import root_data
from .poset import Ideal, MinusculePoset, _bits, _label_isomorphic
from .root_data import CominusculeDatum

State = tuple[Ideal, ...]


@dataclass(frozen=True)
class MoveEvent:
    """One box move: components are 0-based positions within the state tuple."""

    source: int
    target: int
    filter_mask: Ideal
    image_mask: Ideal

    @property
    def size(self) -> int:
        return self.filter_mask.bit_count()


def _subideals_within(poset: MinusculePoset, src: Ideal) -> tuple[Ideal, ...]:
    """All ideals of the induced subposet on `src` (as subsets of src)."""
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            rest = src & ~mask
            for e in _bits(rest):
                if poset.cover_down_mask[e] & src & ~mask == 0:
                    child = mask | (1 << e)
                    if child not in seen:
                        seen.add(child)
                        nxt.append(child)
        frontier = nxt
    return tuple(seen)


def _relocate(poset: MinusculePoset, filt: Ideal, dst: Ideal) -> Ideal | None:
    """Label-matched copy of `filt` directly above `dst`, or None."""
    counts: dict[int, int] = {}
    for e in _bits(filt):
        counts[poset.labels[e]] = counts.get(poset.labels[e], 0) + 1
    image = 0
    for l, cnt in counts.items():
        chain = poset.label_chain[l]
        prefix = sum(1 for e in chain if dst >> e & 1)
        if prefix + cnt > len(chain):
            return None
        for e in chain[prefix : prefix + cnt]:
            image |= 1 << e
    return image


def minimal_movable_filters(
    poset: MinusculePoset, src: Ideal, dst: Ideal
) -> tuple[tuple[Ideal, Ideal], ...]:
    """All minimal movable filters of `src` relative to `dst`, with their images.

    A filter of `src` is movable when a label-isomorphic copy fits on top of
    `dst` as an order ideal; the copy is unique because equal labels form
    chains.  Minimality is with respect to inclusion among movable filters.
    """
    movable: list[tuple[Ideal, Ideal]] = []
    for sub in _subideals_within(poset, src):
        filt = src & ~sub
        if filt == 0:
            continue
        image = _relocate(poset, filt, dst)
        if image is None or image & dst:
            continue
        if not poset.is_ideal(dst | image):
            continue
        if not _label_isomorphic(poset, filt, image):
            continue
        movable.append((filt, image))
    minimal = [
        (f, im)
        for f, im in movable
        if not any(g != f and g & ~f == 0 for g, _ in movable)
    ]
    minimal.sort(key=lambda pair: poset.sort_key(pair[0]))
    return tuple(minimal)


@dataclass
class MovePoset:
    datum: CominusculeDatum
    istar: int
    initial: State
    states: tuple[State, ...]  # BFS discovery order
    depth: dict[State, int]
    edges: tuple[tuple[State, MoveEvent, State], ...]
    graded_violations: tuple[tuple[State, State], ...] = field(default=())

    @property
    def is_graded(self) -> bool:
        return not self.graded_violations

    def levels(self) -> dict[int, tuple[State, ...]]:
        out: dict[int, list[State]] = {}
        for s in self.states:
            out.setdefault(self.depth[s], []).append(s)
        return {d: tuple(v) for d, v in out.items()}

    def max_state_filter_size(self) -> int:
        """Largest minimal movable filter applicable between any two components
        of any reachable state (component order respected)."""
        poset = poset_mod.build_minuscule_poset(self.datum)
        worst = 0
        for state in self.states:
            for l in range(len(state)):
                for m in range(l + 1, len(state)):
                    for filt, _ in minimal_movable_filters(poset, state[l], state[m]):
                        worst = max(worst, filt.bit_count())
        return worst


def _state_moves(
    poset: MinusculePoset, initial: State, state: State
) -> list[tuple[int, int, Ideal, Ideal]]:
    c = len(state)
    out = []
    for l in range(c):
        for b in _bits(state[l] & initial[l]):
            if poset.above[b] & state[l]:
                continue  # not maximal in the current component
            if any(
                (state[t] >> b & 1) and (initial[t] >> b & 1) and not (poset.above[b] & state[t])
                for t in range(l + 1, c)
            ):
                continue  # a later component still holds this box; it donates instead
            for m in range(l + 1, c):
                grown = poset.add_box(state[m], poset.labels[b])
                if grown is None:
                    continue
                slot = grown & ~state[m]
                if initial[m] & slot:
                    continue  # would refill the initial extent: not a landing site
                out.append((l, m, 1 << b, slot))
                break
    return out


@functools.lru_cache(maxsize=None)
def generate_move_poset(datum: CominusculeDatum, istar: int) -> MovePoset:
    """Breadth-first closure of the initial tuple under box moves."""
    if istar == datum.node:
        raise ValueError("the marked node has no move poset; its term is the quantum one")
    poset = poset_mod.build_minuscule_poset(datum)
    c = root_data.comin_coefficients(datum)[istar - 1]
    initial: State = poset_mod.ideal_sequence(datum, istar)[:c]
    depth: dict[State, int] = {initial: 0}
    order: list[State] = [initial]
    edges: list[tuple[State, MoveEvent, State]] = []
    violations: list[tuple[State, State]] = []
    frontier: list[State] = [initial]
    d = 0
    while frontier:
        nxt: list[State] = []
        for state in frontier:
            for l, m, filt, image in _state_moves(poset, initial, state):
                child = list(state)
                child[l] = state[l] & ~filt
                child[m] = state[m] | image
                child_t = tuple(child)
                if child_t not in depth:
                    depth[child_t] = d + 1
                    order.append(child_t)
                    nxt.append(child_t)
                elif depth[child_t] != d + 1:
                    violations.append((state, child_t))
                edges.append((state, MoveEvent(l, m, filt, image), child_t))
        frontier = nxt
        d += 1
    return MovePoset(datum, istar, initial, tuple(order), depth, tuple(edges), tuple(violations))


def denominator_polynomial(datum: CominusculeDatum, istar: int):
    """The signed sum of state monomials; index 0 and the marked node are the conventions."""
    from .potential import PluckerPolynomial

    poset = poset_mod.build_minuscule_poset(datum)
    if istar == 0:
        return PluckerPolynomial.coordinate(poset, 0)
    if istar == datum.node:
        return PluckerPolynomial.coordinate(poset, poset.full)
    mp = generate_move_poset(datum, istar)
    result = PluckerPolynomial.zero(poset)
    for state in mp.states:
        sign = -1 if mp.depth[state] % 2 else 1
        result = result + PluckerPolynomial.monomial(poset, state, coeff=sign)
    return result
