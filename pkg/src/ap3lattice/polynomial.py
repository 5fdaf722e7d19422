"""Dense integer polynomials in one variable ``q``."""

from __future__ import annotations

from typing import Iterable


class RankPolynomial:
    """Exact integer polynomial, coefficient of ``q**r`` at index ``r``.

    Trailing zeros are stripped, so equal polynomials compare equal and the
    zero polynomial has no coefficients. Arithmetic is on Python ints.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "RankPolynomial":
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [coeff])

    @classmethod
    def one(cls) -> "RankPolynomial":
        return cls([1])

    @classmethod
    def from_ranks(cls, ranks: Iterable[int]) -> "RankPolynomial":
        """Count occurrences: coefficient ``r`` is the number of ``r`` in ``ranks``."""
        counts: list[int] = []
        for r in ranks:
            if r < 0:
                raise ValueError(f"negative rank {r}")
            if r >= len(counts):
                counts.extend([0] * (r + 1 - len(counts)))
            counts[r] += 1
        return cls(counts)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __eq__(self, other):
        if isinstance(other, RankPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == RankPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RankPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return RankPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return RankPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return RankPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = RankPolynomial.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "RankPolynomial":
        """Multiply by ``q**k``."""
        return RankPolynomial([0] * k + list(self.coeffs))

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self):
        return f"RankPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for r, c in enumerate(self.coeffs):
            if c == 0:
                continue
            var = "" if r == 0 else ("q" if r == 1 else f"q^{r}")
            if not var:
                terms.append(str(c))
            elif c == 1:
                terms.append(var)
            elif c == -1:
                terms.append(f"-{var}")
            else:
                terms.append(f"{c}{var}")
        return " + ".join(terms).replace("+ -", "- ")


def _coerce(x) -> RankPolynomial:
    if isinstance(x, RankPolynomial):
        return x
    if isinstance(x, int):
        return RankPolynomial([x])
    raise TypeError(f"cannot combine RankPolynomial with {type(x).__name__}")


Q = RankPolynomial([0, 1])
