"""Exact integer-coefficient polynomials in q, plus Laurent polynomials in t.

Coefficients are Python ints, so all arithmetic is exact at any size;
there is no overflow to guard against.  Polynomials are immutable and
hashable.  The canonical zero is the empty coefficient sequence, and
equality is structural after trimming, so ``p == q`` means ring equality.

``substitute_shift(p, d)`` computes q^(d/2) * p(q^(1/2) - q^(-1/2)) by
working in Laurent polynomials in t = q^(1/2): it expands t^d * p(t - 1/t),
checks that only even nonnegative powers of t survive, and collapses
t^2 -> q.  An odd surviving exponent means the caller fed a polynomial
whose monomial degrees do not all share the parity of d, and is an error.

Text rendering is descending-degree with explicit signs ("q^3-2q^2+2q-1",
"-q^5", "0"); JSON rendering is a {degree: coefficient} map.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "IntPolynomial", "LaurentPolynomial", "substitute_shift",
    "ZERO", "ONE", "Q",
]


def _format_terms(terms: list[tuple[int, int]], var: str) -> str:
    """Render (degree, coeff) pairs, highest degree first."""
    if not terms:
        return "0"
    parts: list[str] = []
    for deg, coeff in terms:
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if deg == 0:
            body = str(mag)
        else:
            power = var if deg == 1 else f"{var}^{deg}"
            body = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"{sign}{body}")
    return "".join(parts)


@dataclass(frozen=True, repr=False)
class IntPolynomial:
    """Dense polynomial in q; coeffs[d] is the coefficient of q^d.

    >>> p = IntPolynomial((0, 1, 0, 1))   # q^3 + q
    >>> str(p * p)
    'q^6+2q^4+q^2'
    >>> str(IntPolynomial(()))
    '0'
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        if degree < 0:
            raise ValueError("IntPolynomial degrees are nonnegative")
        return cls((0,) * degree + (coeff,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, x: int) -> int:
        """Evaluate at an integer point, exactly.

        >>> IntPolynomial((0, 1, 0, 1)).evaluate(2)
        10
        """
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero (degree, coeff) pairs, highest degree first."""
        return [(d, c) for d, c in reversed(list(enumerate(self.coeffs))) if c]

    def to_json_dict(self) -> dict[str, int]:
        return {str(d): c for d, c in self.terms()}

    def __str__(self) -> str:
        return _format_terms(self.terms(), "q")

    def __repr__(self) -> str:
        return f"IntPolynomial({self})"


ZERO = IntPolynomial(())
ONE = IntPolynomial((1,))
Q = IntPolynomial((0, 1))


def _coerce(value):
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial((value,))
    return NotImplemented


@dataclass(frozen=True, repr=False)
class LaurentPolynomial:
    """Dense Laurent polynomial; coeffs[k] is the coefficient of t^(min_degree+k)."""

    min_degree: int = 0
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(self.coeffs)
        low = self.min_degree
        while c and c[-1] == 0:
            c = c[:-1]
        while c and c[0] == 0:
            c = c[1:]
            low += 1
        if not c:
            low = 0
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "min_degree", low)

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "LaurentPolynomial":
        nonzero = {d: c for d, c in terms.items() if c}
        if not nonzero:
            return cls()
        low, high = min(nonzero), max(nonzero)
        return cls(low, tuple(nonzero.get(d, 0) for d in range(low, high + 1)))

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls(0, (c,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> dict[int, int]:
        return {self.min_degree + k: c for k, c in enumerate(self.coeffs) if c}

    def shift(self, d: int) -> "LaurentPolynomial":
        """Multiply by t^d."""
        if self.is_zero:
            return self
        return LaurentPolynomial(self.min_degree + d, self.coeffs)

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        low = min(self.min_degree, other.min_degree)
        high = max(self.min_degree + len(self.coeffs), other.min_degree + len(other.coeffs))
        out = [0] * (high - low)
        for k, c in enumerate(self.coeffs):
            out[self.min_degree - low + k] += c
        for k, c in enumerate(other.coeffs):
            out[other.min_degree - low + k] += c
        return LaurentPolynomial(low, tuple(out))

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.min_degree, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if self.is_zero or other.is_zero:
            return LaurentPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ca in enumerate(self.coeffs):
            if ca:
                for j, cb in enumerate(other.coeffs):
                    out[i + j] += ca * cb
        return LaurentPolynomial(self.min_degree + other.min_degree, tuple(out))

    def __str__(self) -> str:
        pairs = sorted(self.terms().items(), reverse=True)
        return _format_terms(pairs, "t")

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"


def substitute_shift(p: IntPolynomial, d: int) -> IntPolynomial:
    """Return q^(d/2) * p(q^(1/2) - q^(-1/2)) as an exact polynomial in q.

    Defined whenever every monomial degree of p has the same parity as d;
    otherwise an odd power of t survives and a ValueError is raised.

    >>> str(substitute_shift(Q, 1))
    'q-1'
    >>> str(substitute_shift(IntPolynomial((0, 1, 0, 1)), 3))
    'q^3-2q^2+2q-1'
    """
    if p.is_zero:
        return ZERO
    if d < 0:
        raise ValueError("shift degree must be nonnegative for a nonzero polynomial")
    s = LaurentPolynomial.from_terms({1: 1, -1: -1})
    acc = LaurentPolynomial()
    for c in reversed(p.coeffs):
        acc = acc * s
        if c:
            acc = acc + LaurentPolynomial.constant(c)
    shifted = acc.shift(d)
    collapsed: dict[int, int] = {}
    for exponent, coeff in shifted.terms().items():
        if exponent % 2 or exponent < 0:
            raise ValueError(
                f"substitution left t^{exponent}: "
                f"degrees of {p!r} do not all have the parity of {d}"
            )
        collapsed[exponent // 2] = coeff
    top = max(collapsed)
    return IntPolynomial(tuple(collapsed.get(k, 0) for k in range(top + 1)))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
