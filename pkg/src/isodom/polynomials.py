"""Integer counting polynomials D(G, x) and D0(G, x)."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .families import Variant, binom
from .oracle import CountTable


@dataclass(frozen=True)
class Polynomial:
    """Coefficients in ascending powers, trailing zeros trimmed."""

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coefficients)
        if any(c < 0 for c in coeffs):
            raise ValueError("counting polynomials have non-negative coefficients")
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def order(self) -> int | None:
        """Smallest power with a nonzero coefficient."""
        return next((k for k, c in enumerate(self.coefficients) if c), None)

    def __getitem__(self, power: int) -> int:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return 0

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def __add__(self, other: Polynomial) -> Polynomial:
        size = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(tuple(self[k] + other[k] for k in range(size)))


def from_count_table(t: CountTable) -> Polynomial:
    return Polynomial(t.counts)


def d0_corona_k1_poly(n: int, variant: Variant | str = Variant.RECONCILED) -> Polynomial:
    """Isolate domination polynomial of G o K_1 for |V(G)| = n.

    The literal variant keeps the separate ``n x^(2n-1)`` term in front of
    the sum; the reconciled one drops it, since the ``j = 1`` summand already
    contributes ``n x^(2n-1)``.
    """
    variant = Variant(variant)
    if variant is Variant.CORRECTED:
        raise ValueError("the corona polynomial has literal and reconciled variants only")
    if n < 1:
        raise ValueError(f"base graph order must be >= 1, got {n}")
    coeffs = [0] * (2 * n)
    for j in range(1, n + 1):
        coeffs[2 * n - j] += binom(n, j) * (2**j - 1)
    if variant is Variant.LITERAL:
        coeffs[2 * n - 1] += n
    return Polynomial(tuple(coeffs))


def format_polynomial(p: Polynomial, style: str = "ascii") -> str:
    if style == "ascii":
        terms = []
        for k, c in enumerate(p.coefficients):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else str(c)
                terms.append(f"{head}x" if k == 1 else f"{head}x^{k}")
        return " + ".join(terms) if terms else "0"
    if style == "coeff-csv":
        return "\n".join(f"{k},{c}" for k, c in enumerate(p.coefficients))
    if style == "json":
        return json.dumps([str(c) for c in p.coefficients])
    raise ValueError(f"unknown polynomial format {style!r}")
