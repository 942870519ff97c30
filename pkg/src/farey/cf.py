"""Simple continued fractions for rationals in [0, 1], and the triple
construction expressed through them.

A terminating expansion [n0, n1, ..., nk] denotes n0 + 1/(n1 + 1/(... + 1/nk)).
The canonical form has nk >= 2 whenever the list is longer than one entry;
[..., m, 1] folds to [..., m + 1] with the same value.  The reduction chain
of a center n/N is literally its expansion's interior: n/N = [0, q1, ..., qk, T],
and the two neighbors of n/N in F_N are the evaluations of [0, q1, ..., qk]
and [0, q1, ..., qk, T - 1], assigned to the left/right slots by the parity
of k.  The last of those forms may legitimately end in 1, so evaluation
accepts non-canonical input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .fraction import Fraction
from .triples import FareyTriple, ReductionChain, reduction_chain


@dataclass(frozen=True)
class ContinuedFraction:
    """Coefficients [n0, n1, ..., nk] with n0 >= 0 and ni >= 1 for i >= 1.

    Canonical form is not required; see ``canonical`` and cf_canonicalize.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("a continued fraction needs at least one coefficient")
        if self.coeffs[0] < 0:
            raise DomainError(f"leading coefficient must be >= 0, got {self.coeffs[0]}")
        for i, c in enumerate(self.coeffs[1:], start=1):
            if c < 1:
                raise DomainError(f"coefficient {c} at position {i} must be >= 1")

    @property
    def canonical(self) -> bool:
        return len(self.coeffs) == 1 or self.coeffs[-1] >= 2

    @classmethod
    def parse(cls, text: str) -> ContinuedFraction:
        """Parse the bracketed text form, e.g. "[0,2,1,3,2]"."""
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise DomainError(f"cannot parse continued fraction from {text!r}")
        try:
            coeffs = tuple(int(p) for p in body[1:-1].split(","))
        except ValueError:
            raise DomainError(f"cannot parse continued fraction from {text!r}") from None
        return cls(coeffs)

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"


def cf_expand(x: Fraction) -> ContinuedFraction:
    """The canonical expansion of x, via the Euclidean algorithm.

    Successive quotients of (num, den) are exactly the coefficients; because
    the final nonzero remainder of coprime inputs is 1, the last coefficient
    comes out >= 2 on its own (no trailing 1 is ever produced), except for
    the whole-number values 0/1 -> [0] and 1/1 -> [1].
    """
    coeffs = []
    p, q = x.num, x.den
    while q:
        coeffs.append(p // q)
        p, q = q, p % q
    return ContinuedFraction(tuple(coeffs))


def cf_evaluate(cf: ContinuedFraction) -> Fraction:
    """The exact rational value of an expansion, canonical or not.

    Uses the convergent recurrence p_i = n_i*p_(i-1) + p_(i-2) (same for q);
    consecutive convergents are coprime, so the result needs no reduction.
    """
    p_prev, p = 1, cf.coeffs[0]
    q_prev, q = 0, 1
    for c in cf.coeffs[1:]:
        p_prev, p = p, c * p + p_prev
        q_prev, q = q, c * q + q_prev
    return Fraction(p, q)


def cf_canonicalize(cf: ContinuedFraction) -> ContinuedFraction:
    """Fold a trailing 1 into the previous coefficient; idempotent."""
    coeffs = cf.coeffs
    if len(coeffs) > 1 and coeffs[-1] == 1:
        coeffs = coeffs[:-2] + (coeffs[-2] + 1,)
    return ContinuedFraction(coeffs)


def cf_of_chain(chain: ReductionChain) -> ContinuedFraction:
    """[0, q1, ..., qk, terminal]: the chain read as an expansion.

    Evaluates back to the chain's start; equal to cf_expand(chain.start).
    """
    return ContinuedFraction((0,) + chain.quotients + (chain.terminal,))


def triple_via_cf(center: Fraction) -> FareyTriple:
    """The triple around ``center`` in F_(center.den), built from expansions.

    With center = [0, q1, ..., qk, T], the neighbors evaluate
    [0, q1, ..., qk] and [0, q1, ..., qk, T - 1]; an even k puts the first
    of these on the left, an odd k on the right.  The T - 1 form may end in
    a 1 (whenever T == 2) and is evaluated as-is.
    """
    chain = reduction_chain(center)
    prefix = (0,) + chain.quotients
    truncated = cf_evaluate(ContinuedFraction(prefix))
    lowered = cf_evaluate(ContinuedFraction(prefix + (chain.terminal - 1,)))
    if len(chain.quotients) % 2 == 0:
        left, right = truncated, lowered
    else:
        left, right = lowered, truncated
    return FareyTriple(left, center, right, center.den)
