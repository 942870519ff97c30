"""Three-term Farey neighborhoods built without enumerating the sequence.

For a fraction n/N in lowest terms, the three consecutive terms of F_N
centered on n/N are constructed in O(log N) exact integer steps:

  1. reduce the center by Euclidean quotient steps n/N -> n'/n until the
     numerator reaches 1 (``reduction_chain``),
  2. take the first three terms of F_T for the terminal order T reached,
     which are always 0/1, 1/T, 1/(T-1) (``base_triple``),
  3. replay the recorded quotients in reverse, each step sending a/b to
     b/(q*b + a) and reversing the triple's orientation (``lift_step``).

Each lift step maps a valid triple of F_b2 (b2 the center's denominator)
to a valid triple of F_(q*b2 + a2), so validity is preserved all the way
up and the final center is exactly the requested n/N.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DomainError
from .fraction import Fraction, cross_det, mediant


@dataclass(frozen=True)
class FareyTriple:
    """Three consecutive fractions of F_order whose middle term has
    denominator exactly ``order``.

    Construction checks the defining invariants: both adjacent pairs are
    unimodular, the center is n/order with n >= 1, and the outer
    denominators stay below ``order``.  Together these force the center to
    be the mediant of the outer terms and the outer numerators/denominators
    to sum to the center's.
    """

    left: Fraction
    center: Fraction
    right: Fraction
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise DomainError(f"order must be >= 1, got {self.order}")
        if self.center.den != self.order or self.center.num < 1:
            raise DomainError(
                f"center {self.center} is not of the form n/{self.order} with n >= 1"
            )
        if cross_det(self.left, self.center) != 1:
            raise DomainError(f"left pair {self.left}, {self.center} is not unimodular")
        if cross_det(self.center, self.right) != 1:
            raise DomainError(f"right pair {self.center}, {self.right} is not unimodular")
        if self.left.den >= self.order or self.right.den >= self.order:
            raise DomainError("outer denominators must be smaller than the order")


@dataclass(frozen=True)
class ReductionChain:
    """The Euclidean quotient steps that reduce ``start`` to 1/terminal.

    ``quotients`` is empty exactly when start already has numerator 1, in
    which case ``terminal`` equals start's denominator.
    """

    quotients: tuple[int, ...]
    terminal: int
    start: Fraction

    def __post_init__(self):
        if self.terminal < 2:
            raise DomainError(f"terminal order must be >= 2, got {self.terminal}")
        if any(q < 1 for q in self.quotients):
            raise DomainError("quotients must be positive")
        if (len(self.quotients) == 0) != (self.start.num == 1):
            raise DomainError("empty chain is allowed exactly for numerator-1 starts")
        if not self.quotients and self.terminal != self.start.den:
            raise DomainError("empty chain must terminate at the start's denominator")


def are_adjacent(x: Fraction, y: Fraction, order: int) -> bool:
    """True iff x and y appear as consecutive terms of F_order.

    Requires x < y.  The criterion is unimodularity together with
    max(x.den, y.den) <= order < x.den + y.den: both must belong to the
    sequence, and anything that could sit between them (denominator at
    least x.den + y.den) must not.
    """
    if not x < y:
        raise DomainError(f"expected x < y, got {x} >= {y}")
    if order < 1:
        raise DomainError(f"order must be >= 1, got {order}")
    if cross_det(x, y) != 1:
        return False
    return max(x.den, y.den) <= order < x.den + y.den


def lift_step(triple: FareyTriple, quotient: int) -> FareyTriple:
    """Map a triple of F_order to a triple of F_(quotient*order + center.num).

    Each element a/b goes to b/(quotient*b + a); the map reverses order, so
    the old right element becomes the new left.  Unimodularity of both
    pairs is preserved exactly, which is what makes the lifted triple a run
    of consecutive terms again.
    """
    if quotient < 1:
        raise DomainError(f"quotient must be >= 1, got {quotient}")

    def send(f: Fraction) -> Fraction:
        # gcd(b, q*b + a) = gcd(b, a) = 1, so the image is already reduced
        return Fraction._from_coprime(f.den, quotient * f.den + f.num)

    return FareyTriple(
        left=send(triple.right),
        center=send(triple.center),
        right=send(triple.left),
        order=quotient * triple.center.den + triple.center.num,
    )


def reduction_chain(center: Fraction) -> ReductionChain:
    """Record the quotient steps that take center = n/N down to 1/terminal.

    One step maps n/N to (N mod n)/n, recording the quotient N // n.  Since
    gcd stays 1 throughout, the numerator must eventually hit 1; the
    denominator at that moment is the terminal order.
    """
    if center.num == 0 or center.num == center.den:
        raise DomainError(f"center must satisfy 0 < {center} < 1")
    n, order = center.num, center.den
    quotients = []
    while n > 1:
        q = order // n
        quotients.append(q)
        n, order = order - q * n, n
    return ReductionChain(tuple(quotients), order, center)


def base_triple(order: int) -> FareyTriple:
    """The first three terms of F_order: 0/1, 1/order, 1/(order-1).

    This is the triple the lift starts from; it is the only shape a
    numerator-1 center can have.
    """
    if order < 2:
        raise DomainError(f"order must be >= 2, got {order}")
    return FareyTriple(
        left=Fraction._from_coprime(0, 1),
        center=Fraction._from_coprime(1, order),
        right=Fraction._from_coprime(1, order - 1),
        order=order,
    )


def lift_chain(chain: ReductionChain) -> FareyTriple:
    """Replay a reduction chain upward from its base triple.

    Quotients are applied last-recorded-first.  Because every lift step
    reverses orientation, the side on which the lifted 0/1-image lands is
    determined by the parity of the chain length; no separate parity branch
    is needed.
    """
    t = base_triple(chain.terminal)
    for q in reversed(chain.quotients):
        t = lift_step(t, q)
    return t


def triple(n: int, order: int) -> FareyTriple:
    """The three consecutive terms of F_order centered on n/order.

    Runs in O(log order) integer operations: reduce the center, start from
    the base triple, lift.  Agrees with reading the neighbors out of the
    enumerated sequence for every valid input.
    """
    if order < 2:
        raise DomainError(f"order must be >= 2, got {order}")
    if not 1 <= n < order:
        raise DomainError(f"numerator must satisfy 1 <= n < {order}, got {n}")
    if gcd(n, order) != 1:
        raise DomainError(f"{n}/{order} not irreducible")
    return lift_chain(reduction_chain(Fraction._from_coprime(n, order)))
