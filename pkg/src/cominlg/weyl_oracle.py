"""Independent weight-lattice recomputation of the minor exponents.

This module deliberately avoids the moves/toric code paths: it only touches
root-system data and the poset's element labels and cover structure, so its
answers cross-check the combinatorial pipeline rather than mirror it.
"""
from __future__ import annotations

import functools
import random

from . import root_data
from .poset import MinusculePoset, _bits, build_minuscule_poset
from .root_data import CominusculeDatum, Weight


def levi_longest_image(datum: CominusculeDatum, istar: int) -> Weight:
    """w_{0,P}(omega_istar): lower through the Levi until no coefficient is positive."""
    k = datum.node
    lam = root_data.fundamental_weight(datum, istar)
    steps = 0
    bound = 4 * build_minuscule_poset(datum).size + 4 * datum.rank
    while True:
        j = next(
            (i + 1 for i, c in enumerate(lam) if c > 0 and i + 1 != k),
            None,
        )
        if j is None:
            return lam
        lam = root_data.reflect(datum, j, lam)
        steps += 1
        if steps > bound:
            raise AssertionError(f"{datum}: Levi lowering did not terminate")


def minor_exponents_via_weights(
    datum: CominusculeDatum, istar: int, order: tuple[int, ...] | None = None
) -> tuple[tuple[int, ...], int]:
    """Walk a linear extension recording how far each box lowers the weight.

    Returns the exponent vector (indexed by element id) and the total height h.
    """
    poset = build_minuscule_poset(datum)
    if order is None:
        order = tuple(range(poset.size))
    mu = levi_longest_image(datum, istar)
    exps = [0] * poset.size
    h = 0
    for e in order:
        j = poset.labels[e]
        d = mu[j - 1]
        if d < 0:
            raise AssertionError(f"{datum}, istar={istar}: negative lowering at element {e}")
        exps[e] = d
        h += d
        mu = root_data.reflect(datum, j, mu)
    sigma = root_data.diagram_involution(datum)
    lowest = tuple(-x for x in root_data.fundamental_weight(datum, sigma[istar - 1]))
    if mu != lowest:
        raise AssertionError(f"{datum}, istar={istar}: walk did not reach the lowest weight")
    return tuple(exps), h


@functools.lru_cache(maxsize=None)
def weyl_orbit_size(datum: CominusculeDatum) -> int:
    """Size of the Weyl orbit of -omega_k, by breadth-first search on weights."""
    start = tuple(-x for x in root_data.fundamental_weight(datum, datum.node))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for lam in frontier:
            for i in range(1, datum.rank + 1):
                if lam[i - 1] != 0:
                    mu = root_data.reflect(datum, i, lam)
                    if mu not in seen:
                        seen.add(mu)
                        nxt.append(mu)
        frontier = nxt
    return len(seen)


def random_linear_extension(poset: MinusculePoset, rng: random.Random) -> tuple[int, ...]:
    """A uniformly-randomized (not uniform) linear extension of the poset."""
    remaining = poset.full
    placed = 0
    out = []
    while remaining:
        ready = [
            e for e in _bits(remaining) if poset.cover_down_mask[e] & ~placed == 0
        ]
        e = rng.choice(ready)
        out.append(e)
        placed |= 1 << e
        remaining &= ~(1 << e)
    return tuple(out)
