"""Generalized hypergeometric series with exact rational parameters.

Covers term generation, termination detection, exact evaluation of
terminating instances, expansion as a series in the argument, and weighted
sums whose terms carry a polynomial-in-n coefficient on top of the usual
Pochhammer quotient.  Terms are produced iteratively from term ratios
(O(M) big-rational work); a recompute-from-scratch path is kept for
cross-checks.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DenominatorPoleBeforeTermination,
    NonTerminatingSeries,
)
from .exact import is_nonpositive_integer, pochhammer
from .series import TruncatedSeries


def _termination(parameters) -> int | None:
    """Index of the last possibly-nonzero term forced by nonpositive-integer
    parameters, or None when no parameter terminates the series."""
    stops = [-int(p) for p in parameters if is_nonpositive_integer(p)]
    return min(stops) if stops else None


@dataclass(frozen=True)
class HyperSpec:
    """One pFq instance: numerator parameters, denominator parameters, argument.

    Construction enforces the legality rule for lower parameters: a
    nonpositive-integer denominator parameter is only allowed when some
    numerator parameter truncates the series strictly before the
    denominator Pochhammer vanishes.
    """

    numerators: tuple
    denominators: tuple
    argument: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        object.__setattr__(
            self, "numerators", tuple(Fraction(p) for p in self.numerators)
        )
        object.__setattr__(
            self, "denominators", tuple(Fraction(p) for p in self.denominators)
        )
        object.__setattr__(self, "argument", Fraction(self.argument))
        stop = _termination(self.numerators)
        for beta in self.denominators:
            if not is_nonpositive_integer(beta):
                continue
            # (beta)_n first vanishes at n = 1 - beta; terms must stop sooner.
            if stop is None or stop > -beta:
                raise DenominatorPoleBeforeTermination(beta, int(1 - beta))


def termination_index(spec: HyperSpec) -> int | None:
    """Smallest M with every term beyond M vanishing, if the series terminates."""
    return _termination(spec.numerators)


def eval_terminating(spec: HyperSpec) -> Fraction:
    """Exact value of a terminating series, by iterated term ratios."""
    stop = termination_index(spec)
    if stop is None:
        raise NonTerminatingSeries(
            "no numerator parameter is a nonpositive integer"
        )
    total = Fraction(0)
    term = Fraction(1)
    for n in range(stop + 1):
        total += term
        if n == stop:
            break
        ratio = spec.argument / (n + 1)
        for p in spec.numerators:
            ratio *= p + n
        for q in spec.denominators:
            ratio /= q + n
        term *= ratio
    return total


def eval_terminating_direct(spec: HyperSpec, reverse: bool = False) -> Fraction:
    """Slow cross-check: every term rebuilt from scratch, any summation order."""
    stop = termination_index(spec)
    if stop is None:
        raise NonTerminatingSeries(
            "no numerator parameter is a nonpositive integer"
        )
    indices = range(stop, -1, -1) if reverse else range(stop + 1)
    total = Fraction(0)
    for n in indices:
        term = spec.argument ** n / math.factorial(n)
        for p in spec.numerators:
            term *= pochhammer(p, n)
        for q in spec.denominators:
            term /= pochhammer(q, n)
        total += term
    return total


def series_in_z(spec: HyperSpec, order: int) -> TruncatedSeries:
    """Series expansion in the argument: coefficient n is the Pochhammer
    quotient over n!.  The stored argument of the spec is ignored."""
    stop = termination_index(spec)
    limit = order if stop is None else min(order, stop)
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    current = Fraction(1)
    for n in range(limit):
        ratio = Fraction(1, n + 1)
        for p in spec.numerators:
            ratio *= p + n
        for q in spec.denominators:
            ratio /= q + n
        current *= ratio
        coeffs[n + 1] = current
    return TruncatedSeries(tuple(coeffs))


@dataclass(frozen=True)
class WeightedSumSpec:
    """A weighted hypergeometric-style term family.

    Term n is

        weight(n) * prod (num_i)_n / (prod (den_i)_n * n!) * z**(stride*n + offset)

    with weight a polynomial in n (ascending coefficients), evaluated per
    term rather than absorbed into extra Pochhammer parameters, so the
    absorbed closed forms computed elsewhere stay an independent path.
    The factorial divisor can be switched off.
    """

    weight: tuple
    numerators: tuple
    denominators: tuple
    argument: Fraction = field(default=Fraction(1))
    power_stride: int = 1
    power_offset: int = 0
    factorial: bool = True

    def __post_init__(self):
        object.__setattr__(self, "weight", tuple(Fraction(c) for c in self.weight))
        object.__setattr__(
            self, "numerators", tuple(Fraction(p) for p in self.numerators)
        )
        object.__setattr__(
            self, "denominators", tuple(Fraction(p) for p in self.denominators)
        )
        object.__setattr__(self, "argument", Fraction(self.argument))

    def weight_at(self, n: int) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.weight):
            value = value * n + c
        return value


def weighted_termination(spec: WeightedSumSpec) -> int | None:
    """Last index whose Pochhammer product can be nonzero, if any is forced."""
    return _termination(spec.numerators)


def _weighted_bases(spec: WeightedSumSpec, up_to: int):
    """Yield (n, base_n) with base the Pochhammer quotient over n!.

    Numerator vanishing is checked before denominator vanishing: once the
    upper product dies every later term is exactly zero, and a lower
    parameter is only a genuine pole when it vanishes while terms are
    still alive.
    """
    base = Fraction(1)
    for n in range(up_to + 1):
        yield n, base
        if n == up_to:
            break
        num = Fraction(1)
        for p in spec.numerators:
            num *= p + n
        if num == 0:
            break
        for q in spec.denominators:
            if q + n == 0:
                raise DenominatorPoleBeforeTermination(q, n + 1)
            num /= q + n
        if spec.factorial:
            num /= n + 1
        base *= num


def eval_weighted_sum(spec: WeightedSumSpec, up_to: int) -> Fraction:
    """Exact finite sum of the weighted terms for n = 0..up_to."""
    total = Fraction(0)
    z_offset = spec.argument ** spec.power_offset
    z_stride = spec.argument ** spec.power_stride
    power = z_offset
    for n, base in _weighted_bases(spec, up_to):
        total += spec.weight_at(n) * base * power
        power *= z_stride
    return total


def weighted_series(spec: WeightedSumSpec, order: int) -> TruncatedSeries:
    """The same term family rendered as a series in a formal variable.

    Term n lands on degree stride*n + offset; the stored argument plays no
    role here.
    """
    coeffs = [Fraction(0)] * (order + 1)
    if spec.power_offset > order:
        return TruncatedSeries(tuple(coeffs))
    up_to = (order - spec.power_offset) // spec.power_stride
    for n, base in _weighted_bases(spec, up_to):
        coeffs[spec.power_stride * n + spec.power_offset] = spec.weight_at(n) * base
    return TruncatedSeries(tuple(coeffs))
