"""Sign-reversing involutions on V-paths and the refined interval identities.

``reflect`` moves one arc across the bottom of a V-path: of the two labels
adjacent to the bottom (the last of leg1, the first of leg2) it picks the
smaller and hands it to the other leg.  When a leg is empty the other
leg's adjacent label is moved.  The result is again a V-path between the
same endpoints, the total length is unchanged, and the length of leg1
changes by one, so the sign flips.  Applying the move twice restores the
original: the smaller adjacent label is the same transposition on both
sides of the move.  The trivial V-path (u == v) has no image and is
rejected.

Restricted to V-paths of full length l(v) - l(u), whose legs are the
unique maximal monotone paths through each bottom, ``reflect`` induces
``interval_pairing``: a fixed-point-free involution on the interval
[u, v] that flips length parity, which is why every nontrivial interval
has as many even-length as odd-length elements (``parity_census``).

``refined_reflect`` is the variant that preserves the last entry of the
bottom, pairing V-paths whose bottoms end with a fixed value k.  Call a
transposition touching the last position a boundary transposition and any
other one internal.  Writing t for the smaller bottom-adjacent label:

* if t is internal, ``reflect`` already works: the bottom moves by an
  internal transposition, which keeps its last entry;
* if t is a boundary transposition but some label is internal, the
  smallest internal label overall is relocated to the other leg at its
  ordered position.  All labels between its old and new slots are
  boundary transpositions smaller than it, hence commute with it, so the
  bottom moves by that internal label and again keeps its last entry;
* if every label is a boundary transposition, the V-path is returned as
  ``FIXED``.

At most one fixed V-path exists for given (u, v, k), and exactly one iff
[u, v] is an S-interval and k is one of the two values u(m), v(m) at the
first differing position m.  ``classify_s_interval`` tests the three
S-interval conditions literally and ``canonical_fixed_point`` builds the
fixed V-path explicitly; ``refinement_sum`` ties it together, asserting
the alternating sum over [u,v]_k against the predicted signed power of q.
"""

from __future__ import annotations

from dataclasses import dataclass

from klrpoly.bruhat import bruhat_leq, interval, interval_ending_with
from klrpoly.paths import (
    BruhatPath,
    VPath,
    format_vpath,
    unique_maximal_path,
)
from klrpoly.perm import Permutation, Transposition, length
from klrpoly.poly import ZERO, IntPolynomial
from klrpoly.rpoly import RTable, rtilde

__all__ = [
    "FIXED", "SIntervalReport", "RefinementReport",
    "reflect", "interval_pairing", "parity_census",
    "classify_s_interval", "refined_reflect", "canonical_fixed_point",
    "refinement_sum",
]


class _FixedMarker:
    """Singleton result for the fixed point of ``refined_reflect``."""

    def __repr__(self) -> str:
        return "FIXED"


FIXED = _FixedMarker()


def _require_strict(u: Permutation, v: Permutation) -> None:
    if u == v or not bruhat_leq(u, v):
        raise ValueError(f"requires u < v strictly in the Bruhat order; got {u}, {v}")


def reflect(p: VPath) -> VPath:
    """Move the smaller bottom-adjacent arc of a V-path to the other leg."""
    if p.start == p.end:
        raise ValueError("the trivial V-path of a one-point interval has no image")
    labels1, labels2 = p.leg1.labels, p.leg2.labels
    if not labels1:
        take_from_leg1 = False
    elif not labels2:
        take_from_leg1 = True
    else:
        take_from_leg1 = labels1[-1] < labels2[0]
    if take_from_leg1:
        new_leg1 = BruhatPath(p.start, labels1[:-1])
        new_leg2 = BruhatPath(new_leg1.end, (labels1[-1],) + labels2)
    else:
        new_leg1 = BruhatPath(p.start, labels1 + (labels2[0],))
        new_leg2 = BruhatPath(new_leg1.end, labels2[1:])
    return VPath(new_leg1, new_leg2)


def interval_pairing(u: Permutation, v: Permutation) -> dict[Permutation, Permutation]:
    """The involution on [u, v] induced by reflecting maximal V-paths.

    Maps each w to the bottom of the reflected maximal V-path through w.
    Fixed-point free, and flips the parity of the length.
    """
    _require_strict(u, v)
    pairing: dict[Permutation, Permutation] = {}
    for w in interval(u, v):
        maximal = VPath(
            unique_maximal_path(u, w, "decreasing"),
            unique_maximal_path(w, v, "increasing"),
        )
        pairing[w] = reflect(maximal).bottom
    return pairing


def parity_census(u: Permutation, v: Permutation) -> tuple[int, int]:
    """(even, odd) counts of interval elements by length parity relative to u."""
    if not bruhat_leq(u, v):
        raise ValueError(f"{u} is not below {v} in the Bruhat order")
    base = length(u)
    even = odd = 0
    for w in interval(u, v):
        if (length(w) - base) % 2:
            odd += 1
        else:
            even += 1
    return even, odd


@dataclass(frozen=True)
class SIntervalReport:
    """Classification of [u, v] against the three S-interval conditions.

    differing_positions is D(u,v) = {i : u(i) != v(i)} sorted; b_values are
    the u-values on those positions sorted increasingly; m is the smallest
    differing position; j0 is the 1-based index of u(m) within b_values.
    failure_reason is the number of the first failing condition (1, 2 or
    3), or None when the interval is an S-interval.
    """

    is_s_interval: bool
    differing_positions: tuple[int, ...]
    b_values: tuple[int, ...]
    m: int
    j0: int
    failure_reason: int | None

    def to_json_dict(self) -> dict:
        return {
            "is_s_interval": self.is_s_interval,
            "differing_positions": list(self.differing_positions),
            "b_values": list(self.b_values),
            "m": self.m,
            "j0": self.j0,
            "failure_reason": self.failure_reason,
        }


def classify_s_interval(u: Permutation, v: Permutation) -> SIntervalReport:
    """Check the S-interval conditions for u < v, reporting the first failure.

    Condition 1: the largest differing position is n and carries the
    largest differing u-value.  Condition 2: among the other differing
    positions (in position order, first and last excluded), the u-values
    above u(m) increase while those below u(m) decrease.  Condition 3:
    v rotates the differing u-values: each one is replaced by the next
    larger, and the largest (at position n) wraps around to the smallest.
    """
    _require_strict(u, v)
    n = u.n
    differing = tuple(i for i in range(1, n + 1) if u(i) != v(i))
    b_values = tuple(sorted(u(i) for i in differing))
    m = differing[0]
    rank = {value: index for index, value in enumerate(b_values, start=1)}
    j0 = rank[u(m)]

    def report(reason: int | None) -> SIntervalReport:
        return SIntervalReport(
            is_s_interval=reason is None,
            differing_positions=differing,
            b_values=b_values,
            m=m,
            j0=j0,
            failure_reason=reason,
        )

    if differing[-1] != n or u(n) != b_values[-1]:
        return report(1)

    pivot = u(m)
    last_above: int | None = None
    last_below: int | None = None
    for pos in differing[1:-1]:
        value = u(pos)
        if value > pivot:
            if last_above is not None and value < last_above:
                return report(2)
            last_above = value
        else:
            if last_below is not None and value > last_below:
                return report(2)
            last_below = value

    for pos in differing:
        t = rank[u(pos)]
        expected = b_values[0] if pos == n else b_values[t]  # b_{t+1}, 1-based
        if v(pos) != expected:
            return report(3)

    return report(None)


def _insert_increasing(
    labels: tuple[Transposition, ...], t: Transposition
) -> tuple[Transposition, ...]:
    pos = 0
    while pos < len(labels) and labels[pos] < t:
        pos += 1
    if pos < len(labels) and labels[pos] == t:
        raise AssertionError(f"label {t} already present; V-path legs may not share it")
    return labels[:pos] + (t,) + labels[pos:]


def _insert_decreasing(
    labels: tuple[Transposition, ...], t: Transposition
) -> tuple[Transposition, ...]:
    pos = 0
    while pos < len(labels) and labels[pos] > t:
        pos += 1
    if pos < len(labels) and labels[pos] == t:
        raise AssertionError(f"label {t} already present; V-path legs may not share it")
    return labels[:pos] + (t,) + labels[pos:]


def _remove_label(
    labels: tuple[Transposition, ...], t: Transposition
) -> tuple[Transposition, ...]:
    index = labels.index(t)
    return labels[:index] + labels[index + 1:]


def refined_reflect(p: VPath, k: int):
    """The last-entry-preserving pairing on V-paths whose bottom ends with k.

    Returns the partner V-path, or ``FIXED`` when every label is a
    boundary transposition.  Self-inverse off the fixed point, preserves
    total length, flips the sign, and keeps the bottom inside [u,v]_k.
    """
    if p.start == p.end:
        raise ValueError("requires a V-path of a nontrivial interval")
    n = p.start.n
    if p.bottom(n) != k:
        raise ValueError(f"bottom {p.bottom} does not end with {k}")
    labels1, labels2 = p.leg1.labels, p.leg2.labels
    internal = [t for t in labels1 + labels2 if not t.is_boundary(n)]
    if not internal:
        return FIXED
    adjacent = []
    if labels1:
        adjacent.append(labels1[-1])
    if labels2:
        adjacent.append(labels2[0])
    if not min(adjacent).is_boundary(n):
        image = reflect(p)
    else:
        mover = min(internal)
        if mover in labels1:
            new1 = _remove_label(labels1, mover)
            new2 = _insert_increasing(labels2, mover)
        else:
            new1 = _insert_decreasing(labels1, mover)
            new2 = _remove_label(labels2, mover)
        leg1 = BruhatPath(p.start, new1)
        leg2 = BruhatPath(leg1.end, new2)
        image = VPath(leg1, leg2)
    if image.end != p.end or image.bottom(n) != k:
        raise AssertionError(f"pairing left P_k: {format_vpath(p)} -> {format_vpath(image)}")
    return image


def canonical_fixed_point(u: Permutation, v: Permutation, k: int) -> VPath | None:
    """The unique all-boundary V-path with bottom ending in k, if one exists.

    Present exactly when [u, v] is an S-interval and k is u(m) or v(m).
    Leg1 takes the differing positions (last excluded) whose u-value is at
    least k, leg2 those whose u-value is below k; both legs are boundary
    transpositions ordered by strictly decreasing u-value, which by the
    shuffle condition means decreasing positions in leg1 and increasing
    positions in leg2.  The construction is validated and None is
    returned on any mismatch.
    """
    report = classify_s_interval(u, v)
    if not report.is_s_interval:
        return None
    m = report.m
    if k != u(m) and k != v(m):
        return None
    n = u.n
    inner = [pos for pos in report.differing_positions if pos != n]
    high = sorted((pos for pos in inner if u(pos) >= k), key=lambda pos: -u(pos))
    low = sorted((pos for pos in inner if u(pos) < k), key=lambda pos: -u(pos))
    try:
        leg1 = BruhatPath(u, tuple(Transposition(pos, n) for pos in high))
        leg2 = BruhatPath(leg1.end, tuple(Transposition(pos, n) for pos in low))
        candidate = VPath(leg1, leg2)
    except ValueError:
        return None
    if candidate.end != v or candidate.bottom(n) != k:
        return None
    return candidate


@dataclass(frozen=True)
class RefinementReport:
    """Outcome of the refined alternating sum over [u,v]_k.

    s is |D(u,v)| and r counts differing positions whose u-value exceeds
    k; when the sum is nonzero it equals (-1)^r * q^(s-1) and fixed_point
    carries the all-boundary V-path with leg lengths r and s-1-r.
    """

    k: int
    sum: IntPolynomial
    predicted: IntPolynomial
    s: int
    r: int
    fixed_point: VPath | None

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "sum": str(self.sum),
            "predicted": str(self.predicted),
            "s": self.s,
            "r": self.r,
            "fixed_point": None if self.fixed_point is None else format_vpath(self.fixed_point),
        }


def refinement_sum(
    u: Permutation, v: Permutation, k: int, table: RTable | None = None
) -> RefinementReport:
    """Alternating sum of Rt[u,w] * Rt[w,v] over w in [u,v] ending with k.

    Computes the sum, computes the predicted value (a signed power of q
    for an S-interval with k in {u(m), v(m)}, otherwise zero), and raises
    if they disagree.
    """
    if not 1 <= k <= u.n:
        raise ValueError(f"value {k} out of range 1..{u.n}")
    _require_strict(u, v)
    if table is None:
        table = RTable()
    base = length(u)
    total = ZERO
    for w in interval_ending_with(u, v, k):
        term = rtilde(u, w, table) * rtilde(w, v, table)
        total = total - term if (length(w) - base) % 2 else total + term

    report = classify_s_interval(u, v)
    s = len(report.differing_positions)
    r = sum(1 for pos in report.differing_positions if u(pos) > k)
    if report.is_s_interval and k in (u(report.m), v(report.m)):
        predicted = IntPolynomial.monomial(s - 1, -1 if r % 2 else 1)
        fixed_point = canonical_fixed_point(u, v, k)
    else:
        predicted = ZERO
        fixed_point = None
    if total != predicted:
        raise AssertionError(
            f"refined sum over [{u},{v}]_{k} is {total}, predicted {predicted}"
        )
    return RefinementReport(k=k, sum=total, predicted=predicted, s=s, r=r, fixed_point=fixed_point)
