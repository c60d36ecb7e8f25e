"""Dense truncated power series over exact rationals.

A :class:`TruncatedSeries` is the polynomial-of-degree-N view of a formal
power series in one variable: coefficients for x**0 .. x**order, stored
densely with explicit zeros.  Binary operations truncate to the smaller
operand order, which is the honest amount of shared information; nothing
is combined or compared beyond it.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonzeroConstantTerm


@dataclass(frozen=True)
class TruncatedSeries:
    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if not coeffs:
            raise ValueError("a series needs at least its constant coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def constant(cls, value, order: int) -> "TruncatedSeries":
        return cls((Fraction(value),) + (Fraction(0),) * order)

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self[k] + other[k] for k in range(n + 1)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self[k] - other[k] for k in range(n + 1)))

    def __neg__(self) -> "TruncatedSeries":
        return self.scale(-1)

    def scale(self, c) -> "TruncatedSeries":
        c = Fraction(c)
        return TruncatedSeries(tuple(c * x for x in self.coefficients))

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, ci in enumerate(self.coefficients[: n + 1]):
            if ci == 0:
                continue
            for k in range(n - i + 1):
                ck = other.coefficients[k]
                if ck:
                    out[i + k] += ci * ck
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def agrees_with(self, other: "TruncatedSeries") -> bool:
        """Coefficient equality up to the common order of the two series."""
        n = min(self.order, other.order)
        return self.coefficients[: n + 1] == other.coefficients[: n + 1]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order >= self.order:
            return self
        return TruncatedSeries(self.coefficients[: order + 1])


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(x)) truncated at the common order.

    Requires inner(0) = 0, otherwise every outer coefficient would feed
    every output coefficient and truncation would be meaningless.  Computed
    by Horner accumulation over the outer coefficients.
    """
    if inner[0] != 0:
        raise NonzeroConstantTerm(
            f"inner series has constant term {inner[0]}, expected 0"
        )
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = TruncatedSeries.constant(0, n)
    for c in reversed(outer.coefficients[: n + 1]):
        acc = acc * inner + TruncatedSeries.constant(c, n)
    return acc


def binomial_series(alpha, order: int) -> TruncatedSeries:
    """Expansion of (1 - x)**(-alpha): coefficient n is (alpha)_n / n!."""
    alpha = Fraction(alpha)
    coeffs = [Fraction(1)]
    for n in range(order):
        coeffs.append(coeffs[-1] * (alpha + n) / (n + 1))
    return TruncatedSeries(tuple(coeffs))


def mobius_arg(order: int) -> TruncatedSeries:
    """The substitution argument -2x/(1 - x) as a series: 0, then -2 forever."""
    return TruncatedSeries((Fraction(0),) + (Fraction(-2),) * order)
