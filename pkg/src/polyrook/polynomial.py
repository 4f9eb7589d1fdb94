"""Univariate polynomials in ``t`` with exact integer coefficients."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InexactDivision


class IntPolynomial:
    """Immutable polynomial; ``coeffs[k]`` is the coefficient of ``t**k``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    Python integers are arbitrary precision, so no overflow is possible.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def one_minus_t_power(cls, k: int) -> IntPolynomial:
        """Expanded ``(1 - t)**k``."""
        p = cls([1])
        for _ in range(k):
            p = p * cls([1, -1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == IntPolynomial(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[k] - other[k] for k in range(n))

    def __neg__(self):
        return IntPolynomial(-a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(a * other for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``t**k``."""
        return IntPolynomial([0] * k + list(self.coeffs)) if self.coeffs else self

    def __call__(self, t: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * t + a
        return acc

    def divide_one_minus_t(self, k: int) -> IntPolynomial:
        """Exact quotient by ``(1 - t)**k`` via repeated synthetic division.

        Raises InexactDivision if any intermediate remainder is non-zero.
        """
        c = list(self.coeffs)
        for step in range(k):
            if not c:
                return IntPolynomial()
            # p = (1 - t) q  gives  q_j = p_0 + ... + p_j and requires p(1) = 0
            q = []
            acc = 0
            for a in c[:-1]:
                acc += a
                q.append(acc)
            if acc + c[-1] != 0:
                raise InexactDivision(
                    f"{IntPolynomial(c)} is not divisible by (1-t) (step {step + 1} of {k})"
                )
            c = q
        return IntPolynomial(c)

    def series(self, n_terms: int, denominator_power: int) -> list[int]:
        """First ``n_terms`` coefficients of ``self / (1 - t)**denominator_power``."""
        out = [self[k] for k in range(n_terms)]
        for _ in range(denominator_power):
            for k in range(1, n_terms):
                out[k] += out[k - 1]
        return out

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += sign + body
        return s


def poly(coeffs: Sequence[int]) -> IntPolynomial:
    return IntPolynomial(coeffs)
