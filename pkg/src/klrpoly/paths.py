"""Monotone-labeled Bruhat paths, maximal paths, and V-paths.

The reflection ordering on transpositions is the lexicographic one,

    (1,2) < (1,3) < ... < (1,n) < (2,3) < ... < (n-1,n),

which is the natural ordering of the ``Transposition`` dataclass.  An
increasing (decreasing) path is a Bruhat-graph walk whose arc labels
strictly increase (decrease) in this ordering; "decreasing" is checked
against the same comparator since the reverse of a reflection ordering
is again a reflection ordering.

A V-path from u to v with bottom w is a pair of legs: a label-decreasing
path from u to w followed by a label-increasing path from w to v.  Its
sign is (-1)^len(leg1), which equals (-1)^(l(w)-l(u)) because any Bruhat
path from u to w has the parity of l(w) - l(u).

Enumeration is depth-first with the last-used label as a strict bound,
pruning nodes that leave the lower cone of the target.  Paths come out
in lexicographic order of their label sequences, so output is
deterministic.  Explicit path objects (not just counts) are produced
because the involutions downstream rearrange individual paths.

Text format for a path:  "2314 -(1,2)-> 3214 -(1,4)-> 4213 -(2,4)-> 4312";
a V-path renders the same way with its bottom node in square brackets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from klrpoly.bruhat import arcs_from, bruhat_leq, interval
from klrpoly.perm import Permutation, Transposition, length
from klrpoly.poly import IntPolynomial

__all__ = [
    "Direction", "BruhatPath", "VPath",
    "lex_compare", "monotone_paths", "unique_maximal_path",
    "vpaths", "vpath_signed_sum",
    "format_path", "format_vpath", "path_to_json",
]

Direction = Literal["increasing", "decreasing"]


def _check_direction(direction: str) -> None:
    if direction not in ("increasing", "decreasing"):
        raise ValueError(f"direction must be 'increasing' or 'decreasing', got {direction!r}")


def lex_compare(t1: Transposition, t2: Transposition) -> int:
    """-1, 0 or 1 as t1 precedes, equals or follows t2 in the reflection ordering.

    >>> lex_compare(Transposition(1, 4), Transposition(2, 3))
    -1
    """
    return (t1 > t2) - (t1 < t2)


@dataclass(frozen=True)
class BruhatPath:
    """A walk in the Bruhat graph, stored as a start node plus arc labels.

    Construction validates that every step is an arc (each swap moves a
    smaller value past a larger one), so a BruhatPath is always a genuine
    length-increasing walk.
    """

    start: Permutation
    labels: tuple[Transposition, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        word = list(self.start.word)
        n = len(word)
        nodes = [self.start]
        for t in labels:
            if t.j > n:
                raise ValueError(f"label {t} does not fit in S_{n}")
            a, b = word[t.i - 1], word[t.j - 1]
            if a >= b:
                raise ValueError(
                    f"step {''.join(map(str, word)) if n <= 9 else word} -{t}-> is not an arc"
                )
            word[t.i - 1], word[t.j - 1] = b, a
            nodes.append(Permutation(tuple(word)))
        object.__setattr__(self, "_nodes", tuple(nodes))

    @property
    def nodes(self) -> tuple[Permutation, ...]:
        """All visited nodes, start first; one more than there are labels."""
        return self._nodes  # type: ignore[attr-defined]

    @property
    def end(self) -> Permutation:
        return self.nodes[-1]

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class VPath:
    """A label-decreasing leg into a bottom node, then a label-increasing leg out."""

    leg1: BruhatPath
    leg2: BruhatPath

    def __post_init__(self):
        if self.leg1.end != self.leg2.start:
            raise ValueError("legs do not meet: leg1 must end where leg2 starts")
        for a, b in zip(self.leg1.labels, self.leg1.labels[1:]):
            if not a > b:
                raise ValueError(f"leg1 labels not strictly decreasing: {a} then {b}")
        for a, b in zip(self.leg2.labels, self.leg2.labels[1:]):
            if not a < b:
                raise ValueError(f"leg2 labels not strictly increasing: {a} then {b}")

    @property
    def start(self) -> Permutation:
        return self.leg1.start

    @property
    def bottom(self) -> Permutation:
        return self.leg1.end

    @property
    def end(self) -> Permutation:
        return self.leg2.end

    @property
    def sign(self) -> int:
        return -1 if len(self.leg1) % 2 else 1

    @property
    def total_length(self) -> int:
        return len(self.leg1) + len(self.leg2)


def monotone_paths(u: Permutation, v: Permutation, direction: Direction) -> list[BruhatPath]:
    """All Bruhat paths u -> v with strictly monotone label sequence.

    Returns the empty path alone when u == v, and [] when no path exists.
    """
    _check_direction(direction)
    if u.n != v.n:
        raise ValueError(f"cannot connect permutations of S_{u.n} and S_{v.n}")
    increasing = direction == "increasing"
    target_length = length(v)
    found: list[BruhatPath] = []
    labels: list[Transposition] = []

    def grow(node: Permutation, last: Transposition | None) -> None:
        if node == v:
            found.append(BruhatPath(u, tuple(labels)))
            return
        if length(node) >= target_length or not bruhat_leq(node, v):
            return
        for arc in arcs_from(node):
            t = arc.label
            if last is not None and not (last < t if increasing else t < last):
                continue
            labels.append(t)
            grow(arc.target, t)
            labels.pop()

    grow(u, None)
    return found


def unique_maximal_path(u: Permutation, v: Permutation, direction: Direction) -> BruhatPath:
    """The one monotone path from u to v of full length l(v) - l(u).

    Such a path exists and is unique whenever u <= v; this function
    searches cover arcs only and fails loudly if the count is not one.
    """
    _check_direction(direction)
    if not bruhat_leq(u, v):
        raise ValueError(f"{u} is not below {v} in the Bruhat order")
    increasing = direction == "increasing"
    found: list[BruhatPath] = []
    labels: list[Transposition] = []

    def grow(node: Permutation, last: Transposition | None) -> None:
        if node == v:
            found.append(BruhatPath(u, tuple(labels)))
            return
        node_length = length(node)
        if not bruhat_leq(node, v):
            return
        for arc in arcs_from(node):
            if length(arc.target) != node_length + 1:
                continue
            t = arc.label
            if last is not None and not (last < t if increasing else t < last):
                continue
            labels.append(t)
            grow(arc.target, t)
            labels.pop()

    grow(u, None)
    if len(found) != 1:
        raise AssertionError(
            f"expected exactly one maximal {direction} path {u} -> {v}, found {len(found)}"
        )
    return found[0]


def vpaths(u: Permutation, v: Permutation) -> list[VPath]:
    """Every V-path from u to v, over all bottoms w in [u, v]."""
    result: list[VPath] = []
    for w in interval(u, v):
        down_legs = monotone_paths(u, w, "decreasing")
        up_legs = monotone_paths(w, v, "increasing")
        for leg1 in down_legs:
            for leg2 in up_legs:
                result.append(VPath(leg1, leg2))
    return result


def vpath_signed_sum(u: Permutation, v: Permutation) -> IntPolynomial:
    """Sum of sign * q^(total length) over all V-paths from u to v.

    Equals 1 when u == v and 0 otherwise: the generating-function form of
    the alternating-product identity this package verifies.
    """
    coeffs: dict[int, int] = {}
    for p in vpaths(u, v):
        d = p.total_length
        coeffs[d] = coeffs.get(d, 0) + p.sign
    top = max(coeffs, default=-1)
    return IntPolynomial(tuple(coeffs.get(d, 0) for d in range(top + 1)))


def format_path(path: BruhatPath) -> str:
    """Render as "u -(i,j)-> ... -> v"; a 0-step path is just its node."""
    pieces = [str(path.start)]
    for t, node in zip(path.labels, path.nodes[1:]):
        pieces.append(f" -{t}-> {node}")
    return "".join(pieces)


def format_vpath(p: VPath) -> str:
    """Like format_path on the concatenated legs, with the bottom in brackets."""
    nodes = list(p.leg1.nodes) + list(p.leg2.nodes[1:])
    bottom_index = len(p.leg1)
    labels = list(p.leg1.labels) + list(p.leg2.labels)
    pieces = []
    for idx, node in enumerate(nodes):
        text = f"[{node}]" if idx == bottom_index else str(node)
        if idx:
            pieces.append(f" -{labels[idx - 1]}-> {text}")
        else:
            pieces.append(text)
    return "".join(pieces)


def path_to_json(path: BruhatPath) -> dict:
    return {
        "start": str(path.start),
        "labels": [str(t) for t in path.labels],
        "nodes": [str(node) for node in path.nodes],
    }


if __name__ == "__main__":
    import doctest

    doctest.testmod()
