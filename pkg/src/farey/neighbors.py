"""Successor and predecessor queries in F_N without enumerating F_N.

The term immediately after a/b in F_N is found in two moves.  First locate
the term after a/b in the smallest sequence containing it, F_b; that base
neighbor a0/b0 falls out of the continued-fraction triple construction.
Then slide the base along the mediant ladder: with l = (N - b0) // b, the
answer is a0/b0 itself when l = 0 and (l*a + a0)/(l*b + b0) otherwise.
Each rung raises the denominator by b, so the result is the unique ladder
element whose denominator fits under N while the next rung would not.

Predecessors reuse the same machinery through the reflection x -> 1 - x,
which maps F_N onto itself in reverse order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cf import triple_via_cf
from .errors import DomainError
from .fraction import Fraction, cross_det


@dataclass(frozen=True)
class NeighborResult:
    """A resolved successor or predecessor query.

    ``neighbor`` sits immediately beside ``query`` in the Farey sequence of
    ``order``; ``steps`` counts the mediant rungs climbed above ``base``,
    the adjacent term in the smallest sequence containing the query.
    """

    query: Fraction
    order: int
    neighbor: Fraction
    steps: int
    base: Fraction

    def __post_init__(self):
        if self.steps < 0:
            raise DomainError(f"step count must be >= 0, got {self.steps}")
        if cross_det(self.query, self.neighbor) not in (1, -1):
            raise DomainError(
                f"{self.query} and {self.neighbor} are not unimodular"
            )
        if self.neighbor.den > self.order:
            raise DomainError(
                f"{self.neighbor} lies outside a sequence of order {self.order}"
            )
        if self.query.den + self.neighbor.den <= self.order:
            raise DomainError(
                f"{self.query} and {self.neighbor} are not adjacent at order "
                f"{self.order}: a mediant still fits between them"
            )


def base_right_neighbor(x: Fraction) -> Fraction:
    """The term immediately after x in F_(x.den), the first sequence holding x.

    For 0/1 that sequence is F_1 and the answer is 1/1; otherwise it is the
    right element of the triple around x.
    """
    if x.num == x.den:
        raise DomainError("1/1 is the last term of every sequence")
    if x.num == 0:
        return Fraction._from_coprime(1, 1)
    return triple_via_cf(x).right


def right_neighbor(x: Fraction, order: int) -> NeighborResult:
    """The term immediately after x in F_order, for any order >= x.den."""
    if x.num == x.den:
        raise DomainError("1/1 is the last term of every sequence")
    if order < x.den:
        raise DomainError(
            f"{x} is not a member of the sequence of order {order}"
        )
    base = base_right_neighbor(x)
    steps = (order - base.den) // x.den
    if steps == 0:
        neighbor = base
    else:
        # Coprime: any common divisor would divide the cross determinant
        # of x and base, which is 1.
        neighbor = Fraction._from_coprime(
            steps * x.num + base.num, steps * x.den + base.den
        )
    return NeighborResult(query=x, order=order, neighbor=neighbor, steps=steps, base=base)


def left_neighbor(x: Fraction, order: int) -> NeighborResult:
    """The term immediately before x in F_order, for any order >= x.den.

    Computed as the reflection of a successor query: 1 - x is followed by
    1 - answer, because t -> 1 - t reverses F_order onto itself.
    """
    if x.num == 0:
        raise DomainError("0/1 is the first term of every sequence")
    mirrored = right_neighbor(x.complement(), order)
    return NeighborResult(
        query=x,
        order=order,
        neighbor=mirrored.neighbor.complement(),
        steps=mirrored.steps,
        base=mirrored.base.complement(),
    )
