"""R-polynomials and their nonnegative variant, three independent ways.

``rtilde`` computes the path-counting variant by the descent recurrence

    Rt[u,v] = Rt[us,vs]           if s is a descent of both u and v,
    Rt[u,v] = Rt[us,vs] + q*Rt[u,vs]   if s is a descent of v only,

with Rt[u,u] = 1 and Rt[u,v] = 0 once v hits the identity with u != v.
No Bruhat pre-check is made: incomparable pairs fall out as 0 naturally,
and the independent dominance test in ``klrpoly.bruhat`` is cross-checked
against that in the test suite.  The descent s is chosen canonically
(smallest position) so memoization is deterministic; the recurrence gives
the same answer for any descent, which is promoted to a test via the
``descent`` keyword.

``rpoly_r`` runs the signed recurrence (q*R[us,vs] + (q-1)*R[u,vs]) and
``rpoly_from_rtilde`` instead applies the change of variable

    R[u,v](q) = q^((l(v)-l(u))/2) * Rt[u,v](q^(1/2) - q^(-1/2)).

``rtilde_by_paths`` evaluates the path generating function directly: the
sum of q^len over monotone-labeled Bruhat paths from u to v, in either
direction.  All three routes must agree; the acceptance suite says so.
"""

from __future__ import annotations

from typing import Literal

from klrpoly.bruhat import bruhat_leq, interval
from klrpoly.paths import Direction, monotone_paths
from klrpoly.perm import Permutation, Transposition, length, multiply_right, right_descents
from klrpoly.poly import ONE, Q, ZERO, IntPolynomial

__all__ = ["RTable", "rtilde", "rpoly_r", "rpoly_from_rtilde", "rtilde_by_paths", "inversion_sum"]

DescentChoice = Literal["smallest", "largest"]


class RTable:
    """Memo table for ``rtilde``, keyed by raw (u, v) pairs.

    Insertion is idempotent (every writer computes the same value), so a
    single table may be shared by a whole batch run.  Tracks hit/miss
    counters for batch reports.
    """

    def __init__(self) -> None:
        self.cache: dict[tuple[Permutation, Permutation], IntPolynomial] = {}
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self.cache)

    def get(self, u: Permutation, v: Permutation) -> IntPolynomial | None:
        value = self.cache.get((u, v))
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, u: Permutation, v: Permutation, value: IntPolynomial) -> None:
        self.cache[(u, v)] = value


def rtilde(
    u: Permutation,
    v: Permutation,
    table: RTable | None = None,
    *,
    descent: DescentChoice = "smallest",
) -> IntPolynomial:
    """The nonnegative R-polynomial variant of the pair (u, v).

    Zero exactly when u is not below v in the Bruhat order.
    """
    if u.n != v.n:
        raise ValueError(f"cannot mix permutations of S_{u.n} and S_{v.n}")
    if descent not in ("smallest", "largest"):
        raise ValueError(f"descent must be 'smallest' or 'largest', got {descent!r}")
    if table is None:
        table = RTable()
    return _rtilde(u, v, table, descent)


def _rtilde(u: Permutation, v: Permutation, table: RTable, descent: DescentChoice) -> IntPolynomial:
    if u == v:
        return ONE
    cached = table.get(u, v)
    if cached is not None:
        return cached
    descents_v = right_descents(v)
    if not descents_v:
        # v is the identity and u != v, so u is not below v.
        value = ZERO
    else:
        pos = min(descents_v) if descent == "smallest" else max(descents_v)
        s = Transposition(pos, pos + 1)
        vs = multiply_right(v, s)
        us = multiply_right(u, s)
        if pos in right_descents(u):
            value = _rtilde(us, vs, table, descent)
        else:
            value = _rtilde(us, vs, table, descent) + Q * _rtilde(u, vs, table, descent)
    table.put(u, v, value)
    return value


def rpoly_r(u: Permutation, v: Permutation) -> IntPolynomial:
    """The R-polynomial of (u, v) by its own recurrence; coefficients may be negative."""
    if u.n != v.n:
        raise ValueError(f"cannot mix permutations of S_{u.n} and S_{v.n}")
    memo: dict[tuple[Permutation, Permutation], IntPolynomial] = {}
    q_minus_1 = Q - ONE

    def rec(a: Permutation, b: Permutation) -> IntPolynomial:
        if a == b:
            return ONE
        key = (a, b)
        cached = memo.get(key)
        if cached is not None:
            return cached
        descents_b = right_descents(b)
        if not descents_b:
            value = ZERO
        else:
            pos = min(descents_b)
            s = Transposition(pos, pos + 1)
            bs = multiply_right(b, s)
            as_ = multiply_right(a, s)
            if pos in right_descents(a):
                value = rec(as_, bs)
            else:
                value = Q * rec(as_, bs) + q_minus_1 * rec(a, bs)
        memo[key] = value
        return value

    return rec(u, v)


def rpoly_from_rtilde(u: Permutation, v: Permutation, table: RTable | None = None) -> IntPolynomial:
    """The R-polynomial via change of variable from the nonnegative variant."""
    from klrpoly.poly import substitute_shift

    rt = rtilde(u, v, table)
    if rt.is_zero:
        return ZERO
    return substitute_shift(rt, length(v) - length(u))


def rtilde_by_paths(u: Permutation, v: Permutation, direction: Direction) -> IntPolynomial:
    """Sum of q^len over monotone-labeled Bruhat paths from u to v.

    Independent of ``rtilde``'s recurrence; either direction gives the
    same polynomial, which is the path-counting meaning of the variant.
    """
    coeffs: dict[int, int] = {}
    for path in monotone_paths(u, v, direction):
        d = len(path)
        coeffs[d] = coeffs.get(d, 0) + 1
    top = max(coeffs, default=-1)
    return IntPolynomial(tuple(coeffs.get(d, 0) for d in range(top + 1)))


def inversion_sum(u: Permutation, v: Permutation, table: RTable | None = None) -> IntPolynomial:
    """Alternating sum of Rt[u,w] * Rt[w,v] over the interval [u, v].

    Contract: 1 when u == v, else 0.
    """
    if not bruhat_leq(u, v):
        raise ValueError(f"{u} is not below {v} in the Bruhat order")
    if table is None:
        table = RTable()
    base = length(u)
    total = ZERO
    for w in interval(u, v):
        term = rtilde(u, w, table) * rtilde(w, v, table)
        total = total - term if (length(w) - base) % 2 else total + term
    return total
