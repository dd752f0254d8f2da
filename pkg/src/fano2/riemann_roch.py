"""Orbifold Riemann-Roch for polarised 3-folds with -K = 2A.

For a basket point 1/r(a, -a, 2) the periodic correction to chi(nA) is

    per(n) = -i_n (r^2 - 1) / (12 r)
             + sum_{j=1}^{i_n - 1} bar(bj) (r - bar(bj)) / (2 r)

with i_n the local index of nA, b the solution of a b = 2 (mod r), and
bar the residue in [0, r-1].  The sum over the basket enters both the
single-value formula :func:`plurigenus` and the full series
:func:`hilbert_series`; the two are computed along deliberately separate
code paths (direct evaluation versus power-series expansion) so that one
can oracle the other.

Global quantities, for a basket B and ample Weil divisor A:

    Ac2/12   = 1 - sum (r^2 - 1) / (24 r)          (positive by the bound)
    A^3      = base_degree(B) + N for an integer N >= 0, with genus N - 2
    degree cap: A^3 <= (48/5) (Ac2/12), tightening to 9 (Ac2/12) in the
    mu-semistable (Bogomolov-Kawamata) case.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .basket import Basket, SingularityType
from .series import (
    DEFAULT_CUTOFF,
    RationalForm,
    TruncatedSeries,
    _div_one_minus_tw,
    expand,
)

#: The Fano index this package instantiates; -K = FANO_INDEX * A.
FANO_INDEX = 2

STABLE = "stable"
UNSTABLE = "unstable"
REJECTED = "rejected"


class BasketBoundError(ValueError):
    """Basket load reaches 24, forcing -K c2 <= 0."""


class NonpositiveDegreeError(ValueError):
    """The requested (basket, genus) pair gives A^3 <= 0."""


def periodic_term_raw(r: int, a: int, n: int) -> Fraction:
    """Periodic Riemann-Roch correction for 1/r(a, -a, 2) at nA.

    Accepts any a coprime to (odd) r, canonical or not; the value only
    depends on the germ, so a and r - a give the same answer.
    """
    i = -n * pow(2, -1, r) % r
    b = 2 * pow(a, -1, r) % r
    term = -Fraction(i * (r * r - 1), 12 * r)
    if i > 1:
        term += Fraction(
            sum((b * j % r) * (r - b * j % r) for j in range(1, i)), 2 * r
        )
    return term


@cache
def periodic_term(s: SingularityType, n: int) -> Fraction:
    """Periodic correction of the basket point s at nA; r-periodic in n,
    vanishing when r divides n."""
    return periodic_term_raw(s.r, s.a, n)


def acz12_from_basket(basket: Basket) -> Fraction:
    """A c2(X) / 12 = (24 - sum (r^2-1)/r) / 24; raises when not positive."""
    value = 1 - sum((Fraction(s.r * s.r - 1, 24 * s.r) for s in basket),
                    Fraction(0))
    if value <= 0:
        raise BasketBoundError(
            f"basket load {basket.cost} reaches 24 (A c2 would be <= 0)"
        )
    return value


def polarisation_residual(basket: Basket) -> Fraction:
    """(1 + sum per(-1)) - Ac2/12.  Admissible baskets give exactly 0.

    Observed to vanish identically under the pinned local-index
    convention (per(s, -1) = -(r^2-1)/(24r) pointwise); kept as an
    enforced check rather than an assumption.
    """
    total = 1 + sum((periodic_term(s, -1) for s in basket), Fraction(0))
    return total - acz12_from_basket(basket)


def base_degree(basket: Basket) -> Fraction:
    """The N = 0 value of A^3 = -1 - Ac2/12 - sum per(1) + N.

    Candidate degrees for the basket are base_degree + N over integers
    N >= 0, and the genus of the candidate is N - 2.
    """
    return (
        -1
        - acz12_from_basket(basket)
        - sum((periodic_term(s, 1) for s in basket), Fraction(0))
    )


def kawamata_status(a3: Fraction, acz12: Fraction) -> str:
    """Classify a degree against the boundedness caps.

    ``stable`` when A^3 <= 9 (Ac2/12) (equivalently (-K)^3 <= 3 (-K c2)),
    ``unstable`` up to the unconditional cap (48/5)(Ac2/12), ``rejected``
    beyond it.
    """
    if a3 <= 9 * acz12:
        return STABLE
    if a3 <= Fraction(48, 5) * acz12:
        return UNSTABLE
    return REJECTED


@cache
def _unit_series(cutoff: int) -> tuple[TruncatedSeries, ...]:
    """Expansions of 1/(1-t), t/(1-t)^4 and t/(1-t)^2 up to cutoff."""
    return (
        expand(RationalForm((1,), (1,)), cutoff),
        expand(RationalForm((0, 1), (1, 1, 1, 1)), cutoff),
        expand(RationalForm((0, 1), (1, 1)), cutoff),
    )


@cache
def _periodic_series(s: SingularityType, cutoff: int) -> TruncatedSeries:
    """c_P(t): the finite sum per(s, k) t^k for k = 1..r-1, divided by
    (1 - t^r) using the series recurrence."""
    c = [Fraction(0)] * (cutoff + 1)
    for k in range(1, min(s.r - 1, cutoff) + 1):
        c[k] = periodic_term(s, k)
    _div_one_minus_tw(c, s.r)
    return TruncatedSeries(tuple(c))


def hilbert_series(
    basket: Basket, genus: int, cutoff: int = DEFAULT_CUTOFF
) -> TruncatedSeries:
    """The Hilbert series sum h^0(nA) t^n truncated at cutoff.

    Assembled as 1/(1-t) + A^3 t/(1-t)^4 + (Ac2/12) t/(1-t)^2 + sum c_P(t)
    with A^3 = base_degree + genus + 2.  The coefficients must come out as
    non-negative integers; integrality is asserted here, positivity is a
    consequence checked by the test suite.
    """
    acz12 = acz12_from_basket(basket)
    assert polarisation_residual(basket) == 0
    a3 = base_degree(basket) + genus + 2
    if a3 <= 0:
        raise NonpositiveDegreeError(
            f"A^3 = {a3} <= 0 for basket [{basket}] at genus {genus}"
        )
    ones, deg_part, ac_part = _unit_series(cutoff)
    total = ones + a3 * deg_part + acz12 * ac_part
    for s in basket:
        total = total + _periodic_series(s, cutoff)
    total.integer_coeffs()  # RR integrality must hold exactly
    return total


def plurigenus(basket: Basket, a3: Fraction, n: int) -> Fraction:
    """chi(nA) evaluated term by term; equals h^0(nA) for n >= -1.

    This is the single-value route: the polynomial part is evaluated
    directly (no series machinery), sharing only periodic_term with
    :func:`hilbert_series`, which makes the two mutual oracles.
    """
    f = FANO_INDEX
    return (
        1
        + Fraction(n * (n + f) * (2 * n + f), 12) * a3
        + n * acz12_from_basket(basket)
        + sum((periodic_term(s, n) for s in basket), Fraction(0))
    )
