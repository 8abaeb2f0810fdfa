"""The minuscule poset of a cominuscule datum and its order-ideal combinatorics.

Elements are numbered 0..N-1 along the greedy reduced word, which is a linear
extension from the bottom of the poset; this numbering is the canonical one
used everywhere (serialization, monomial ordering, linear walks).  Order
ideals are plain ``int`` bitmasks over the element ids.
"""
from __future__ import annotations

import functools

from . import root_data
from .root_data import CominusculeDatum, Weight

Ideal = int  # bitmask over element ids


def dimension(datum: CominusculeDatum) -> int:
    """Number of poset elements (= dimension of the homogeneous space)."""
    fam, n, k = datum.family, datum.rank, datum.node
    if fam == "A":
        return k * (n + 1 - k)
    if fam == "B":
        return 2 * n - 1
    if fam == "C":
        return n * (n + 1) // 2
    if fam == "D":
        return 2 * n - 2 if k == 1 else n * (n - 1) // 2
    return 16 if fam == "E6" else 27


@functools.lru_cache(maxsize=None)
def reduced_word_wP(datum: CominusculeDatum) -> tuple[int, ...]:
    """Greedy reduced word raising -omega_k to the dominant chamber.

    While some coefficient of the current weight is negative, apply the
    reflection at the smallest such node and record it.  The recorded word
    reads bottom-to-top through the poset.
    """
    lam = tuple(-x for x in root_data.fundamental_weight(datum, datum.node))
    word: list[int] = []
    while True:
        i = next((j + 1 for j, c in enumerate(lam) if c < 0), None)
        if i is None:
            break
        word.append(i)
        lam = root_data.reflect(datum, i, lam)
        if len(word) > 4 * dimension(datum):
            raise AssertionError(f"runaway greedy word for {datum}")
    if len(word) != dimension(datum):
        raise AssertionError(
            f"greedy word for {datum} has length {len(word)}, expected {dimension(datum)}"
        )
    return tuple(word)


class MinusculePoset:
    """Heap of the minimal coset representative, with cached ideal machinery."""

    def __init__(self, datum: CominusculeDatum):
        self.datum = datum
        word = reduced_word_wP(datum)
        self.size = len(word)
        self.labels = word  # element id -> node label, ids are a linear extension
        self.full = (1 << self.size) - 1

        # Order relation: transitive closure of "earlier letter, labels equal
        # or adjacent in the diagram".  below[j] is the strict downset of j.
        cm = root_data.cartan_matrix(datum)
        below = [0] * self.size
        for j in range(self.size):
            m = 0
            lj = word[j] - 1
            for i in range(j):
                if cm[word[i] - 1][lj] != 0:
                    m |= (1 << i) | below[i]
            below[j] = m
        self.below = tuple(below)
        above = [0] * self.size
        for j in range(self.size):
            for i in _bits(below[j]):
                above[i] |= 1 << j
        self.above = tuple(above)

        covers_down = []
        for j in range(self.size):
            direct = below[j]
            for i in _bits(below[j]):
                direct &= ~below[i]
            covers_down.append(direct)
        self.cover_down_mask = tuple(covers_down)
        self.covers_down = tuple(tuple(_bits(m)) for m in covers_down)
        covers_up = [[] for _ in range(self.size)]
        for j, m in enumerate(covers_down):
            for i in _bits(m):
                covers_up[i].append(j)
        self.covers_up = tuple(tuple(v) for v in covers_up)

        chains: dict[int, list[int]] = {}
        for e, l in enumerate(word):
            chains.setdefault(l, []).append(e)
        self.label_chain = {l: tuple(v) for l, v in chains.items()}

        self._check_heap()
        self._weights: dict[Ideal, Weight] = {}
        self._ideals: tuple[Ideal, ...] | None = None
        self._by_weight: dict[Weight, Ideal] | None = None
        self._embeddings: dict[Ideal, tuple[int, ...]] = {}

    def _check_heap(self) -> None:
        minimal = [e for e in range(self.size) if self.below[e] == 0]
        if len(minimal) != 1:
            raise AssertionError(f"{self.datum}: heap has {len(minimal)} minimal elements")
        for e in range(self.size):
            if len(self.covers_down[e]) > 2 or len(self.covers_up[e]) > 2:
                raise AssertionError(f"{self.datum}: element {e} breaks planarity")
        for chain in self.label_chain.values():
            for a, b in zip(chain, chain[1:]):
                if not self.above[a] >> b & 1:
                    raise AssertionError(f"{self.datum}: equal labels {a},{b} incomparable")

    # ---------------------------------------------------------------- ideals

    def is_ideal(self, mask: Ideal) -> bool:
        for e in _bits(mask):
            if self.cover_down_mask[e] & ~mask:
                return False
        return True

    def elements(self, mask: Ideal) -> tuple[int, ...]:
        return tuple(_bits(mask))

    def addable(self, mask: Ideal) -> tuple[int, ...]:
        """Elements whose addition keeps the set an ideal."""
        out = []
        for e in range(self.size):
            if not mask >> e & 1 and self.cover_down_mask[e] & ~mask == 0:
                out.append(e)
        return tuple(out)

    def add_box(self, mask: Ideal, j: int) -> Ideal | None:
        """Add the unique valid box with label j, or None if there is none."""
        for e in self.label_chain.get(j, ()):
            if not mask >> e & 1:
                if self.cover_down_mask[e] & ~mask == 0:
                    return mask | (1 << e)
                return None
        return None

    def ideals(self) -> tuple[Ideal, ...]:
        """All order ideals, sorted by size then by element-id tuple."""
        if self._ideals is None:
            seen = {0}
            frontier = [0]
            while frontier:
                nxt = []
                for mask in frontier:
                    for e in self.addable(mask):
                        child = mask | (1 << e)
                        if child not in seen:
                            seen.add(child)
                            nxt.append(child)
                frontier = nxt
            self._ideals = tuple(sorted(seen, key=self.sort_key))
        return self._ideals

    def sort_key(self, mask: Ideal) -> tuple:
        return (mask.bit_count(), self.elements(mask))

    def weight(self, mask: Ideal) -> Weight:
        """The weight Pi(I)(-omega_k), folded bottom-to-top over the ideal."""
        w = self._weights.get(mask)
        if w is None:
            datum = self.datum
            lam = tuple(-x for x in root_data.fundamental_weight(datum, datum.node))
            for e in _bits(mask):
                if lam[self.labels[e] - 1] != -1:
                    raise AssertionError(f"{datum}: non-minuscule step at element {e}")
                lam = root_data.reflect(datum, self.labels[e], lam)
            self._weights[mask] = w = lam
        return w

    def ideal_with_weight(self, w: Weight) -> Ideal | None:
        if self._by_weight is None:
            self._by_weight = {self.weight(m): m for m in self.ideals()}
        return self._by_weight.get(w)

    # ------------------------------------------------------------ embeddings

    def embeddings(self, mask: Ideal) -> tuple[int, ...]:
        """Images of all label- and order-preserving injections of the ideal.

        The map is forced by its image (equal-label boxes form chains), so an
        embedding is returned as the bitmask of its image.  The identity
        embedding is always present.
        """
        cached = self._embeddings.get(mask)
        if cached is not None:
            return cached
        elems = self.elements(mask)
        results: list[int] = []
        image: dict[int, int] = {}

        def extend(idx: int, used: Ideal, last_at: dict[int, int]) -> None:
            if idx == len(elems):
                results.append(used)
                return
            e = elems[idx]
            l = self.labels[e]
            chain = self.label_chain[l]
            lower = [image[c] for c in self.covers_down[e] if c in image]
            start = last_at.get(l, -1) + 1
            for p in range(start, len(chain)):
                t = chain[p]
                tb = self.below[t]
                if all(tb >> c & 1 for c in lower):
                    image[e] = t
                    prev = last_at.get(l, -1)
                    last_at[l] = p
                    extend(idx + 1, used | (1 << t), last_at)
                    last_at[l] = prev
                    del image[e]

        extend(0, 0, {})
        out = tuple(sorted(results))
        self._embeddings[mask] = out
        return out

    # ----------------------------------------------------------- saturation

    def saturate(self, mask: Ideal, avoid: int) -> Ideal:
        """Close under adding boxes whose label differs from `avoid`."""
        changed = True
        while changed:
            changed = False
            for e in range(self.size):
                if (
                    not mask >> e & 1
                    and self.labels[e] != avoid
                    and self.cover_down_mask[e] & ~mask == 0
                ):
                    mask |= 1 << e
                    changed = True
        return mask


@functools.lru_cache(maxsize=None)
def build_minuscule_poset(datum: CominusculeDatum) -> MinusculePoset:
    return MinusculePoset(datum)


def enumerate_order_ideals(poset: MinusculePoset) -> tuple[Ideal, ...]:
    return poset.ideals()


@functools.lru_cache(maxsize=None)
def ideal_sequence(datum: CominusculeDatum, istar: int) -> tuple[Ideal, ...]:
    """The nested ideals (I_{i_1}, ..., I_{i_{c+1}}); the last one is the full poset."""
    poset = build_minuscule_poset(datum)
    seq = root_data.index_sequence(datum, istar)
    out = []
    mask: Ideal = 0
    for j in seq:
        mask = poset.saturate(mask, avoid=j)
        out.append(mask)
    if out[-1] != poset.full:
        raise AssertionError(f"{datum}, istar={istar}: saturation did not reach the full poset")
    return tuple(out)


def _induced_order(poset: MinusculePoset, mask: Ideal) -> dict[int, int]:
    """Strict downsets of the induced subposet, restricted to `mask`."""
    return {e: poset.below[e] & mask for e in _bits(mask)}


def _label_isomorphic(poset: MinusculePoset, sub_a: Ideal, sub_b: Ideal) -> bool:
    """Label-preserving order isomorphism test via forced chain pairing."""
    ea, eb = tuple(_bits(sub_a)), tuple(_bits(sub_b))
    if len(ea) != len(eb):
        return False
    per_label_a: dict[int, list[int]] = {}
    per_label_b: dict[int, list[int]] = {}
    for e in ea:
        per_label_a.setdefault(poset.labels[e], []).append(e)
    for e in eb:
        per_label_b.setdefault(poset.labels[e], []).append(e)
    if {l: len(v) for l, v in per_label_a.items()} != {l: len(v) for l, v in per_label_b.items()}:
        return False
    phi: dict[int, int] = {}
    for l, va in per_label_a.items():
        for x, y in zip(va, per_label_b[l]):
            phi[x] = y
    ba = _induced_order(poset, sub_a)
    bb = _induced_order(poset, sub_b)
    for x in ea:
        img_down = 0
        for c in _bits(ba[x]):
            img_down |= 1 << phi[c]
        if img_down != bb[phi[x]]:
            return False
    return True


@functools.lru_cache(maxsize=None)
def quantum_ideals(datum: CominusculeDatum) -> tuple[Ideal, Ideal]:
    """(I'', I'): the largest one-marked-box ideal and its relocated complement.

    I'' is the maximal ideal containing exactly one box labeled k.  I' is the
    ideal label-order-isomorphic to the filter complementing I''; it is found
    by its weight and then verified to be isomorphic.
    """
    poset = build_minuscule_poset(datum)
    start = poset.add_box(0, datum.node)
    if start is None:
        raise AssertionError(f"{datum}: minimal element does not carry the marked label")
    i2 = poset.saturate(start, avoid=datum.node)
    filt = poset.full & ~i2
    lam = tuple(-x for x in root_data.fundamental_weight(datum, datum.node))
    for e in _bits(filt):
        if lam[poset.labels[e] - 1] != -1:
            raise AssertionError(f"{datum}: complement word is not a minimal coset walk")
        lam = root_data.reflect(datum, poset.labels[e], lam)
    i1 = poset.ideal_with_weight(lam)
    if i1 is None:
        raise AssertionError(f"{datum}: no ideal matches the relocated complement weight")
    if not _label_isomorphic(poset, filt, i1):
        raise AssertionError(f"{datum}: relocated complement is not label-isomorphic")
    return i2, i1


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
