"""Two-dimensional row layouts for the minuscule posets.

Each poset draws as a (skew) diagram of boxes: the minimal element sits
top-left and every cover step goes one box right or down.  A layout is a
list of label rows with column offsets; an order ideal then reads as the
tuple of its row lengths, which is the notation used by the golden corpus
and the text/LaTeX renderers.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

from . import poset as poset_mod
from .poset import Ideal, MinusculePoset, _bits
from .root_data import CominusculeDatum


@dataclass(frozen=True)
class Layout:
    datum: CominusculeDatum
    rows: tuple[str, ...]  # digit strings, one per row
    offsets: tuple[int, ...]
    element_at: tuple[tuple[int, int], ...]  # (row, col) keyed by element id

    @property
    def box_of(self) -> dict[tuple[int, int], int]:
        return {rc: e for e, rc in enumerate(self.element_at)}


def make_layout(datum: CominusculeDatum, rows: list[str], offsets: list[int]) -> Layout:
    """Validate a labeled row layout against the poset and map boxes to ids.

    Boxes are consumed in the diagonal order (r+c, r), which is a linear
    extension; each box must then be the unique addable box of its label.
    """
    poset = poset_mod.build_minuscule_poset(datum)
    boxes = [
        (r, offsets[r] + c)
        for r in range(len(rows))
        for c in range(len(rows[r]))
    ]
    if len(boxes) != poset.size:
        raise ValueError(f"layout for {datum} has {len(boxes)} boxes, poset has {poset.size}")
    boxes.sort(key=lambda rc: (rc[0] + rc[1], rc[0]))
    mask: Ideal = 0
    element_at: list[tuple[int, int] | None] = [None] * poset.size
    for r, c in boxes:
        label = int(rows[r][c - offsets[r]])
        grown = poset.add_box(mask, label)
        if grown is None:
            raise ValueError(f"layout for {datum} invalid at box {(r, c)} (label {label})")
        e = (grown & ~mask).bit_length() - 1
        element_at[e] = (r, c)
        mask = grown
    return Layout(datum, tuple(rows), tuple(offsets), tuple(element_at))  # type: ignore[arg-type]


_E6_ROWS = ["65431", "243", "542", "65431"]
_E6_OFFS = [0, 2, 3, 3]
_E7_ROWS = ["765431", "243", "542", "65431", "76543", "24", "5", "6", "7"]
_E7_OFFS = [0, 3, 4, 4, 4, 7, 8, 8, 8]


@functools.lru_cache(maxsize=None)
def default_layout(datum: CominusculeDatum) -> Layout:
    """The standard drawing for each family (rectangles, staircases, hooks)."""
    fam, n, k = datum.family, datum.rank, datum.node
    rows: list[str]
    offs: list[int]
    if fam == "A":
        width = n + 1 - k
        rows = ["".join(str(k - r + c) for c in range(width)) for r in range(k)]
        offs = [0] * k
    elif fam == "B":
        rows = ["".join(str(i) for i in list(range(1, n + 1)) + list(range(n - 1, 0, -1)))]
        offs = [0]
    elif fam == "C":
        rows = ["".join(str(i) for i in range(n - r, n + 1)) for r in range(n)]
        offs = [0] * n
    elif fam == "D" and k == 1:
        rows = [
            "".join(str(i) for i in range(1, n)),
            str(n) + "".join(str(i) for i in range(n - 2, 0, -1)),
        ]
        offs = [0, n - 3]
    elif fam == "D":
        hi, lo = (n, n - 1) if k == n else (n - 1, n)
        rows = []
        for r in range(n - 1):
            body = [str(i) for i in range(n - 1 - r, n - 1)]
            body.append(str(hi if r % 2 == 0 else lo))
            rows.append("".join(body))
        offs = [0] * (n - 1)
    elif fam == "E6" and k == 6:
        rows, offs = list(_E6_ROWS), list(_E6_OFFS)
    elif fam == "E6":
        width = max(o + len(r) for r, o in zip(_E6_ROWS, _E6_OFFS))
        rows = [r[::-1] for r in reversed(_E6_ROWS)]
        offs = [width - o - len(r) for r, o in zip(reversed(_E6_ROWS), reversed(_E6_OFFS))]
    else:
        rows, offs = list(_E7_ROWS), list(_E7_OFFS)
    return make_layout(datum, rows, offs)


def rows_to_ideal(layout: Layout, lengths: list[int]) -> Ideal:
    """The ideal occupying the first `lengths[r]` boxes of each row."""
    box_of = layout.box_of
    mask = 0
    if len(lengths) > len(layout.rows):
        raise ValueError(f"shape {lengths} has more rows than the layout")
    for r, ln in enumerate(lengths):
        if ln > len(layout.rows[r]):
            raise ValueError(f"shape {lengths} overflows row {r}")
        for c in range(layout.offsets[r], layout.offsets[r] + ln):
            mask |= 1 << box_of[(r, c)]
    poset = poset_mod.build_minuscule_poset(layout.datum)
    if not poset.is_ideal(mask):
        raise ValueError(f"shape {lengths} is not downward closed in this layout")
    return mask


def ideal_to_rows(layout: Layout, mask: Ideal) -> list[int]:
    """Row lengths of an ideal; ideals always occupy row prefixes."""
    lengths = [0] * len(layout.rows)
    for e in _bits(mask):
        lengths[layout.element_at[e][0]] += 1
    for r, ln in enumerate(lengths):
        if ln:
            for c in range(layout.offsets[r], layout.offsets[r] + ln):
                if not mask >> layout.box_of[(r, c)] & 1:
                    raise AssertionError("ideal does not fill a row prefix")
    while lengths and lengths[-1] == 0:
        lengths.pop()
    return lengths


def shape_text(layout: Layout, mask: Ideal) -> str:
    """Compact row-length notation like p[1,2,2]; the empty ideal is p[]."""
    return "p[" + ",".join(str(x) for x in ideal_to_rows(layout, mask)) + "]"


def shape_latex(layout: Layout, mask: Ideal) -> str:
    lengths = ideal_to_rows(layout, mask)
    if not lengths:
        return r"p_{\varnothing}"
    return r"p_{\yng(" + ",".join(str(x) for x in lengths) + ")}"
