"""Permutations of {1, ..., n} in one-line notation.

A permutation w is stored as the tuple of its values (w(1), ..., w(n)).
Positions and values are 1-based throughout, matching the usual
combinatorial conventions; ``w(i)`` returns the value in position i.

The one group operation this package needs is right multiplication by a
transposition t = (i, j), which swaps the entries in POSITIONS i and j
of the one-line word:

>>> str(multiply_right(parse_permutation("1234"), Transposition(2, 3)))
'1324'

Swapping positions (rather than the values i and j) is what makes
u -> u*(i,j) an upward step in the Bruhat graph exactly when u(i) < u(j);
everything downstream depends on this convention, so do not "fix" it.

Two text formats are supported: a compact digit string for n <= 9
("2354167") and a bracketed comma list for any n ("[10,1,2,...,9]").
The formatter emits the compact form whenever n <= 9.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator

__all__ = [
    "Permutation", "Transposition",
    "parse_permutation", "format_permutation",
    "length", "multiply_right", "right_descents",
    "identity", "symmetric_group", "transpositions",
]


@dataclass(frozen=True, order=True)
class Transposition:
    """A transposition (i, j) with 1 <= i < j.

    The dataclass ordering is lexicographic on (i, j), which is exactly
    the reflection ordering used for monotone Bruhat paths:

    >>> Transposition(1, 4) < Transposition(2, 3)
    True
    """

    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValueError(f"invalid transposition ({self.i},{self.j}): need 1 <= i < j")

    def is_boundary(self, n: int) -> bool:
        """True when the transposition moves the last position of S_n."""
        return self.j == n

    def __str__(self) -> str:
        return f"({self.i},{self.j})"

    def __repr__(self) -> str:
        return f"Transposition({self.i}, {self.j})"


@dataclass(frozen=True, repr=False)
class Permutation:
    """One-line notation word; ``word[k]`` is the value in position k+1."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        n = len(word)
        if n < 1:
            raise ValueError("permutation must have size >= 1")
        if sorted(word) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {word!r}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """Value in position i, 1-based: w(i)."""
        if not 1 <= i <= len(self.word):
            raise ValueError(f"position {i} out of range 1..{len(self.word)}")
        return self.word[i - 1]

    @cached_property
    def inversions(self) -> int:
        word = self.word
        n = len(word)
        return sum(1 for a in range(n) for b in range(a + 1, n) if word[a] > word[b])

    def __str__(self) -> str:
        return format_permutation(self)

    def __repr__(self) -> str:
        return f"Permutation({format_permutation(self)!r})"


def identity(n: int) -> Permutation:
    """The identity of S_n.

    >>> str(identity(4))
    '1234'
    """
    return Permutation(tuple(range(1, n + 1)))


def parse_permutation(text: str) -> Permutation:
    """Parse either text format into a permutation.

    >>> parse_permutation("2354167").word
    (2, 3, 5, 4, 1, 6, 7)
    >>> parse_permutation("[10,1,2,3,4,5,6,7,8,9]").n
    10
    """
    s = text.strip()
    if not s:
        raise ValueError("empty permutation text")
    if s.startswith("[") or s.endswith("]"):
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"malformed bracketed permutation: {text!r}")
        body = s[1:-1].strip()
        if not body:
            raise ValueError("empty permutation text")
        try:
            values = tuple(int(part) for part in body.split(","))
        except ValueError:
            raise ValueError(f"malformed bracketed permutation: {text!r}") from None
    elif s.isdigit():
        values = tuple(int(c) for c in s)
    else:
        raise ValueError(f"unrecognized permutation format: {text!r}")
    return Permutation(values)


def format_permutation(w: Permutation) -> str:
    """Compact digits for n <= 9, bracketed comma list otherwise.

    >>> format_permutation(Permutation((2, 1, 3)))
    '213'
    """
    if w.n <= 9:
        return "".join(str(v) for v in w.word)
    return "[" + ",".join(str(v) for v in w.word) + "]"


def length(w: Permutation) -> int:
    """Coxeter length of w, i.e. the number of inversions.

    >>> length(parse_permutation("321"))
    3
    """
    return w.inversions


def multiply_right(w: Permutation, t: Transposition) -> Permutation:
    """w * t: swap the entries of w in positions t.i and t.j."""
    if t.j > w.n:
        raise ValueError(f"transposition {t} does not fit in S_{w.n}")
    word = list(w.word)
    word[t.i - 1], word[t.j - 1] = word[t.j - 1], word[t.i - 1]
    return Permutation(tuple(word))


def right_descents(w: Permutation) -> set[int]:
    """Positions i with w(i) > w(i+1), i.e. the right descent set of w.

    Each position i stands for the adjacent transposition (i, i+1).

    >>> sorted(right_descents(parse_permutation("321")))
    [1, 2]
    """
    word = w.word
    return {i for i in range(1, len(word)) if word[i - 1] > word[i]}


def symmetric_group(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic one-line order."""
    from itertools import permutations as _permutations

    for word in _permutations(range(1, n + 1)):
        yield Permutation(word)


@lru_cache(maxsize=None)
def transpositions(n: int) -> tuple[Transposition, ...]:
    """All transpositions of S_n in lexicographic (reflection) order."""
    return tuple(
        Transposition(i, j) for i in range(1, n) for j in range(i + 1, n + 1)
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
