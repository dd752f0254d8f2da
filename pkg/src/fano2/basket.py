"""Terminal quotient singularities 1/r(a, r-a, 2) and baskets of them.

A polarising divisor of index 2 forces the third local weight to be 2 and
the index r to be odd.  A type is stored canonically with
``1 <= a <= (r-1)/2`` (the germs for a and r-a are isomorphic).  A basket
is a multiset of types; the ones carried by a Fano 3-fold satisfy the
load bound ``sum (r^2 - 1)/r < 24``.

Baskets have a compact text syntax used by the command line and the data
fixtures: comma-separated ``r/a`` pairs with an optional multiplicity
prefix, e.g. ``2x3/1,5/2`` for two copies of 1/3(1,2,2) and one of
1/5(2,3,2).  The parser insists on canonical ``r/a`` pairs and suggests
the canonical form otherwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import gcd
from typing import Iterator

#: Upper bound for the basket load sum (r^2 - 1)/r; strict inequality.
BASKET_BOUND = Fraction(24)


class InvalidSingularityError(ValueError):
    """A (r, a) pair that does not describe a valid singularity type."""


class EvenIndexError(InvalidSingularityError):
    """Index r is even (impossible when the third local weight is 2)."""


class ZeroWeightError(InvalidSingularityError):
    """Local weight a is divisible by r."""


class NotCoprimeError(InvalidSingularityError):
    """gcd(a, r) > 1, so the action is not free in codimension 2."""


class BasketParseError(ValueError):
    """Malformed basket text."""


@dataclass(frozen=True, order=True)
class SingularityType:
    """The quotient singularity 1/r(a, r-a, 2), stored canonically."""

    r: int
    a: int

    def __post_init__(self):
        if self.r < 3 or self.r % 2 == 0:
            raise EvenIndexError(f"index must be odd and >= 3, got r={self.r}")
        if not 1 <= self.a <= (self.r - 1) // 2:
            raise InvalidSingularityError(
                f"weight a={self.a} not in canonical range 1..{(self.r - 1) // 2} "
                f"for r={self.r}"
            )
        if gcd(self.a, self.r) != 1:
            raise NotCoprimeError(f"gcd({self.a}, {self.r}) != 1")

    @property
    def cost(self) -> Fraction:
        """Load (r^2 - 1)/r contributed to the basket bound."""
        return Fraction(self.r * self.r - 1, self.r)

    @property
    def rank(self) -> int:
        """Exceptional curves in the resolution of the transverse surface
        singularity 1/r(a, -a): an A_{r-1} chain, so r - 1."""
        return self.r - 1

    @property
    def b(self) -> int:
        """The unique b in [0, r-1] with a*b = 2 (mod r)."""
        return 2 * pow(self.a, -1, self.r) % self.r

    def local_index(self, n: int) -> int:
        """Residue i in [0, r-1] with nA ~ i K locally; K ~ -2A pins
        i = -n * inverse(2) mod r."""
        return -n * pow(2, -1, self.r) % self.r

    def __str__(self) -> str:
        return f"{self.r}/{self.a}"


def normalize(r: int, a_raw: int) -> SingularityType:
    """Canonicalise (r, a_raw): reduce a mod r, then fold a -> min(a, r-a).

    Raises :class:`EvenIndexError`, :class:`ZeroWeightError` or
    :class:`NotCoprimeError` for inputs that denote no valid type.
    """
    if r < 3 or r % 2 == 0:
        raise EvenIndexError(f"index must be odd and >= 3, got r={r}")
    a = a_raw % r
    if a == 0:
        raise ZeroWeightError(f"weight {a_raw} is divisible by r={r}")
    if gcd(a, r) != 1:
        raise NotCoprimeError(f"gcd({a_raw}, {r}) != 1")
    return SingularityType(r, min(a, r - a))


@dataclass(frozen=True)
class Basket:
    """A multiset of singularity types, kept canonically sorted.

    The constructor does not police the load bound: consumers that need
    it (the Riemann-Roch layer) raise on overweight baskets, and the
    enumerator only ever produces admissible ones.
    """

    entries: tuple[SingularityType, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(sorted(self.entries)))

    def __iter__(self) -> Iterator[SingularityType]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def cost(self) -> Fraction:
        return sum((s.cost for s in self.entries), Fraction(0))

    @property
    def singular_rank(self) -> int:
        return sum(s.rank for s in self.entries)

    def __str__(self) -> str:
        out = []
        i = 0
        while i < len(self.entries):
            s = self.entries[i]
            j = i
            while j < len(self.entries) and self.entries[j] == s:
                j += 1
            mult = j - i
            out.append(f"{mult}x{s}" if mult > 1 else str(s))
            i = j
        return ",".join(out)


def singular_rank(basket: Basket) -> int:
    """Sum of r - 1 over the basket; at least 20 rules out a K3 elephant."""
    return basket.singular_rank


_ENTRY_RE = re.compile(r"^(?:(\d+)x)?(\d+)/(\d+)$")


def parse_basket(text: str) -> Basket:
    """Parse the ``[mult x] r/a`` comma syntax; whitespace is ignored.

    The empty string is the empty basket.  Non-canonical pairs are
    rejected with a hint giving the canonical form.
    """
    compact = re.sub(r"\s+", "", text)
    if not compact:
        return Basket()
    entries: list[SingularityType] = []
    for token in compact.split(","):
        m = _ENTRY_RE.match(token)
        if not m:
            raise BasketParseError(
                f"cannot parse basket entry {token!r}; expected r/a or NxR/A"
            )
        mult = int(m.group(1)) if m.group(1) else 1
        if mult < 1:
            raise BasketParseError(f"multiplicity must be >= 1 in {token!r}")
        r, a = int(m.group(2)), int(m.group(3))
        try:
            canonical = normalize(r, a)
        except InvalidSingularityError as exc:
            raise BasketParseError(f"invalid entry {token!r}: {exc}") from exc
        if (canonical.r, canonical.a) != (r, a):
            raise BasketParseError(
                f"entry {token!r} is not in canonical form; use "
                f"{canonical.r}/{canonical.a}"
            )
        entries.extend([canonical] * mult)
    return Basket(tuple(entries))


@cache
def singularity_universe() -> tuple[SingularityType, ...]:
    """All types whose load alone fits the bound: odd r with
    (r^2-1)/r < 24 (so r <= 23) and a in 1..(r-1)/2 coprime to r."""
    out = []
    for r in range(3, 25, 2):
        if Fraction(r * r - 1, r) >= BASKET_BOUND:
            continue
        for a in range(1, (r - 1) // 2 + 1):
            if gcd(a, r) == 1:
                out.append(SingularityType(r, a))
    return tuple(sorted(out))


def enumerate_baskets() -> list[Basket]:
    """Every basket with load strictly below 24, the empty one included.

    Output order is lexicographic on the sorted (r, a) sequences, which a
    depth-first walk over the sorted universe produces directly; the
    result is deterministic and diffable.
    """
    universe = singularity_universe()
    out: list[Basket] = []
    acc: list[SingularityType] = []

    def walk(start: int, remaining: Fraction) -> None:
        out.append(Basket(tuple(acc)))
        for i in range(start, len(universe)):
            cost = universe[i].cost
            if cost < remaining:  # strict: total load must stay < 24
                acc.append(universe[i])
                walk(i, remaining - cost)
                acc.pop()

    walk(0, BASKET_BOUND)
    return out
