"""Bruhat order on the symmetric group, interval enumeration, Bruhat graph.

Comparison uses the sorted-prefix dominance criterion: u <= v iff for
every prefix size i, sorting the first i entries of each word gives
entrywise domination of the u-prefix by the v-prefix.  This is the
standard O(n^2) test; the test suite cross-checks it against reachability
in the Bruhat graph on small n.

The Bruhat graph has an arc u -> u*(i,j) whenever u(i) < u(j); the arc is
labeled by the transposition (i, j).  Intervals are enumerated by a full
scan of S_n, which is the right tool at desk scale (single intervals up
to n = 9); enumeration order is lexicographic on one-line words so that
reports and tests are reproducible.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from functools import lru_cache

from klrpoly.perm import (
    Permutation,
    Transposition,
    multiply_right,
    symmetric_group,
    transpositions,
)

__all__ = [
    "BruhatArc", "bruhat_leq", "arcs_from", "interval", "interval_ending_with",
]


@dataclass(frozen=True)
class BruhatArc:
    """A labeled arc of the Bruhat graph: target = source * label, going up."""

    source: Permutation
    target: Permutation
    label: Transposition

    def __post_init__(self):
        if self.source(self.label.i) >= self.source(self.label.j):
            raise ValueError(f"{self.source} -{self.label}-> {self.target} is not an arc")
        if self.target != multiply_right(self.source, self.label):
            raise ValueError("arc target does not match source * label")


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """True iff u <= v in the Bruhat order.

    >>> from klrpoly.perm import parse_permutation
    >>> bruhat_leq(parse_permutation("123"), parse_permutation("321"))
    True
    >>> bruhat_leq(parse_permutation("132"), parse_permutation("213"))
    False
    """
    if u.n != v.n:
        raise ValueError(f"cannot compare permutations of S_{u.n} and S_{v.n}")
    return _leq_words(u.word, v.word)


@lru_cache(maxsize=None)
def _leq_words(u_word: tuple[int, ...], v_word: tuple[int, ...]) -> bool:
    if u_word == v_word:
        return True
    u_prefix: list[int] = []
    v_prefix: list[int] = []
    # The full-length prefix is always an equal multiset, so stop one short.
    for a, b in zip(u_word[:-1], v_word[:-1]):
        insort(u_prefix, a)
        insort(v_prefix, b)
        for x, y in zip(u_prefix, v_prefix):
            if x > y:
                return False
    return True


def arcs_from(u: Permutation) -> list[BruhatArc]:
    """All arcs leaving u, in lexicographic label order."""
    word = u.word
    return [
        BruhatArc(u, multiply_right(u, t), t)
        for t in transpositions(u.n)
        if word[t.i - 1] < word[t.j - 1]
    ]


def interval(u: Permutation, v: Permutation) -> list[Permutation]:
    """All w with u <= w <= v, in lexicographic one-line order."""
    if not bruhat_leq(u, v):
        raise ValueError(f"{u} is not below {v} in the Bruhat order")
    uw, vw = u.word, v.word
    return [
        w for w in symmetric_group(u.n)
        if _leq_words(uw, w.word) and _leq_words(w.word, vw)
    ]


def interval_ending_with(u: Permutation, v: Permutation, k: int) -> list[Permutation]:
    """The members of [u, v] whose last entry is k."""
    if not 1 <= k <= u.n:
        raise ValueError(f"value {k} out of range 1..{u.n}")
    return [w for w in interval(u, v) if w.word[-1] == k]


if __name__ == "__main__":
    import doctest

    doctest.testmod()
