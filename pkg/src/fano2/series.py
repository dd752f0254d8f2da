"""Exact arithmetic for integer polynomials, truncated power series, and
closed rational forms N(t) / prod_w (1 - t^w).

Three representations are used throughout the package:

* a polynomial is a dense tuple of integer coefficients, constant term
  first, with no trailing zeros;
* :class:`TruncatedSeries` holds exact rational coefficients for degrees
  ``0..cutoff``;
* :class:`RationalForm` is the closed form ``N(t) / prod_w (1 - t^w)``.

Each factor ``1 - t^w`` is a unit in the formal power-series ring, so a
form expands to any cutoff, and multiplying a series back by
``prod (1 - t^w)`` recovers the numerator whenever the cutoff leaves
enough headroom above the numerator degree.  Everything is exact
rational arithmetic; no floating point appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence

#: Default truncation degree for series work.  Deep numerators (degree up
#: to sum(weights) - 2) may need more; callers can always pass their own.
DEFAULT_CUTOFF = 60

IntPoly = tuple[int, ...]


class CutoffTooSmallError(ValueError):
    """Trailing coefficients near the cutoff are nonzero, so the extracted
    numerator may be incomplete."""


class WrongPoleOrderError(ValueError):
    """The form does not have the expected pole order at t = 1."""


class NonIntegerSeriesError(ValueError):
    """A series required to have integer coefficients does not."""


# ---------------------------------------------------------------------------
# dense integer polynomials


def poly(coeffs: Iterable[int]) -> IntPoly:
    """Normalise a coefficient sequence: trim trailing zeros."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_degree(p: Sequence[int]) -> int:
    """Degree of the polynomial; the zero polynomial has degree -1."""
    for k in range(len(p) - 1, -1, -1):
        if p[k] != 0:
            return k
    return -1


def poly_mul(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return poly(out)


def one_minus_t(w: int) -> IntPoly:
    """The polynomial 1 - t^w."""
    if w < 1:
        raise ValueError(f"weight must be positive, got {w}")
    return (1,) + (0,) * (w - 1) + (-1,)


def poly_eval_one(p: Sequence[int]) -> int:
    return sum(p)


def poly_div_one_minus_t(p: Sequence[int]) -> IntPoly:
    """Exact quotient p / (1 - t); requires p(1) = 0.

    If p = (1 - t) q then q's coefficients are the partial sums of p's.
    """
    if poly_eval_one(p) != 0:
        raise ValueError("polynomial is not divisible by 1 - t")
    out = []
    acc = 0
    for c in p[:-1]:
        acc += c
        out.append(acc)
    return poly(out)


def poly_str(p: Sequence[int], var: str = "t") -> str:
    """Human-readable form such as ``1 - 2t^3 - 3t^4 + 3t^5 + 2t^6 - t^9``."""
    terms = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            tpow = var if k == 1 else f"{var}^{k}"
            body = tpow if mag == 1 else f"{mag}{tpow}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"


def palindromy_sign(p: Sequence[int], top_degree: int) -> int | None:
    """Signed palindromy of p against the mirror degree ``top_degree``.

    Returns +1 if coeff(k) = coeff(top - k) for all k, -1 if
    coeff(k) = -coeff(top - k), and None otherwise.  Gorenstein numerators
    are always one or the other: -1 in odd codimension, +1 in even.
    """
    if poly_degree(p) > top_degree:
        raise ValueError("polynomial degree exceeds top_degree")
    padded = list(p) + [0] * (top_degree + 1 - len(p))
    if all(padded[k] == padded[top_degree - k] for k in range(top_degree + 1)):
        return 1
    if all(padded[k] == -padded[top_degree - k] for k in range(top_degree + 1)):
        return -1
    return None


# ---------------------------------------------------------------------------
# truncated power series


def _mul_one_minus_tw(c: list[Fraction], w: int) -> None:
    """In place: multiply the coefficient vector by (1 - t^w)."""
    for k in range(len(c) - 1, w - 1, -1):
        c[k] -= c[k - w]


def _div_one_minus_tw(c: list[Fraction], w: int) -> None:
    """In place: multiply by the unit 1 / (1 - t^w)."""
    for k in range(w, len(c)):
        c[k] += c[k - w]


@dataclass(frozen=True)
class TruncatedSeries:
    """Exact coefficients of a power series for degrees 0..cutoff.

    Coefficients are stored as Fractions even when the series is integral;
    :meth:`integer_coeffs` is the assertion layer that certifies (and
    returns) integer values.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", tuple(Fraction(c) for c in self.coeffs)
        )
        if not self.coeffs:
            raise ValueError("a truncated series needs at least degree 0")

    @property
    def cutoff(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.cutoff != other.cutoff:
            raise ValueError("cutoff mismatch in series addition")
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            if self.cutoff != other.cutoff:
                raise ValueError("cutoff mismatch in series product")
            n = self.cutoff
            out = [Fraction(0)] * (n + 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b != 0:
                        out[i + j] += a * b
            return TruncatedSeries(tuple(out))
        return TruncatedSeries(tuple(c * other for c in self.coeffs))

    __rmul__ = __mul__

    def mul_poly(self, p: Sequence[int]) -> "TruncatedSeries":
        """Truncated product with a polynomial (exact up to the cutoff)."""
        c = list(self.coeffs)
        n = self.cutoff
        out = [Fraction(0)] * (n + 1)
        for i, pi in enumerate(p):
            if pi == 0 or i > n:
                continue
            for k in range(i, n + 1):
                out[k] += pi * c[k - i]
        return TruncatedSeries(tuple(out))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coeffs(self) -> tuple[int, ...]:
        """Coefficients as ints; raises if any denominator survives."""
        bad = [k for k, c in enumerate(self.coeffs) if c.denominator != 1]
        if bad:
            raise NonIntegerSeriesError(
                f"non-integer coefficient at degree {bad[0]}: {self.coeffs[bad[0]]}"
            )
        return tuple(int(c) for c in self.coeffs)

    def prefix(self, n: int) -> tuple[int, ...]:
        """Integer coefficients for degrees 0..n (n must be <= cutoff)."""
        return self.integer_coeffs()[: n + 1]

    @classmethod
    def from_ints(cls, coeffs: Iterable[int]) -> "TruncatedSeries":
        return cls(tuple(Fraction(c) for c in coeffs))


# ---------------------------------------------------------------------------
# closed rational forms


@dataclass(frozen=True)
class RationalForm:
    """A closed form N(t) / prod_w (1 - t^w), weights sorted, N trimmed."""

    numerator: IntPoly
    denom_weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "numerator", poly(self.numerator))
        ws = tuple(sorted(int(w) for w in self.denom_weights))
        if any(w < 1 for w in ws):
            raise ValueError("denominator weights must be positive")
        object.__setattr__(self, "denom_weights", ws)

    def __mul__(self, other: "RationalForm") -> "RationalForm":
        return RationalForm(
            poly_mul(self.numerator, other.numerator),
            self.denom_weights + other.denom_weights,
        )

    def __str__(self) -> str:
        num = poly_str(self.numerator)
        if len(poly(self.numerator)) > 1:
            num = f"({num})"
        den = "".join(f"(1 - t^{w})" if w > 1 else "(1 - t)"
                      for w in self.denom_weights)
        return f"{num} / {den}" if den else num


def expand(form: RationalForm, cutoff: int) -> TruncatedSeries:
    """Taylor coefficients 0..cutoff of the form, computed exactly.

    Division by each (1 - t^w) is the linear recurrence c[k] += c[k-w],
    valid because 1 - t^w is a unit in the power-series ring.
    """
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    c = [Fraction(x) for x in form.numerator[: cutoff + 1]]
    c += [Fraction(0)] * (cutoff + 1 - len(c))
    for w in form.denom_weights:
        _div_one_minus_tw(c, w)
    return TruncatedSeries(tuple(c))


def series_times_weights(
    series: TruncatedSeries, weights: Sequence[int]
) -> list[Fraction]:
    """Coefficients of series * prod_w (1 - t^w), exact up to the cutoff.

    Multiplying a truncated series by a polynomial only reaches downward,
    so every returned coefficient is exact.
    """
    c = list(series.coeffs)
    for w in weights:
        if w < 1:
            raise ValueError("weights must be positive")
        _mul_one_minus_tw(c, w)
    return c


def numerator_wrt_weights(
    series: TruncatedSeries, weights: Sequence[int]
) -> IntPoly:
    """Rewrite a series over the denominator prod_w (1 - t^w).

    Returns the numerator polynomial, trimmed.  If any coefficient in the
    top max(weights) degrees is nonzero the true numerator may extend past
    the cutoff and :class:`CutoffTooSmallError` is raised.
    """
    c = series_times_weights(series, weights)
    window = max(weights, default=0)
    cut = series.cutoff
    for k in range(cut - window + 1, cut + 1):
        if c[k] != 0:
            raise CutoffTooSmallError(
                f"nonzero coefficient at degree {k} within {window} of the "
                f"cutoff {cut}; numerator may be incomplete"
            )
    if any(x.denominator != 1 for x in c):
        raise NonIntegerSeriesError("numerator has non-integer coefficients")
    return poly(int(x) for x in c)


def degree_from_form(form: RationalForm) -> Fraction:
    """The limit (1 - t)^4 * form at t = 1, computed exactly.

    Each denominator factor 1 - t^w contributes one power of (1 - t) and
    the value w at t = 1; the numerator may cancel some powers.  The form
    must be left with a pole of order exactly 4.
    """
    num = poly(form.numerator)
    vanishing = 0
    while num and poly_eval_one(num) == 0:
        num = poly_div_one_minus_t(num)
        vanishing += 1
    pole = len(form.denom_weights) - vanishing
    if pole != 4:
        raise WrongPoleOrderError(
            f"pole order at t=1 is {pole}, expected 4"
        )
    return Fraction(poly_eval_one(num), prod(form.denom_weights))
