"""Exact Laurent polynomials in one variable with integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPolynomial:
    """Immutable integer Laurent polynomial stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so two polynomials are equal iff their
    term dictionaries are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coef in items:
            if not isinstance(exp, int) or not isinstance(coef, int):
                raise TypeError("exponents and coefficients must be int")
            acc[exp] = acc.get(exp, 0) + coef
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def constant(cls, c: int) -> LaurentPolynomial:
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> LaurentPolynomial:
        return cls({exp: coef})

    @classmethod
    def from_coefficients(cls, coefs: Iterable[int], low: int = 0) -> LaurentPolynomial:
        """Build from a dense coefficient list whose first entry has exponent ``low``."""
        return cls({low + i: c for i, c in enumerate(coefs)})

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(iter(self._terms))

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(reversed(self._terms))

    @property
    def leading_coefficient(self) -> int:
        return self._terms[self.max_degree]

    def coefficients(self) -> list[int]:
        """Dense coefficients from ``min_degree`` to ``max_degree``."""
        if not self._terms:
            return []
        lo, hi = self.min_degree, self.max_degree
        return [self._terms.get(e, 0) for e in range(lo, hi + 1)]

    def __getitem__(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> LaurentPolynomial | None:
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPolynomial(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPolynomial({e * n: c ** (-n)})
        result = LaurentPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, divisor: LaurentPolynomial) -> tuple[LaurentPolynomial, LaurentPolynomial]:
        """Long division aligned at the top degree.

        The remainder has ``max_degree`` below ``divisor.max_degree`` relative to
        the lowest exponent of ``self``; division is exact iff the remainder is zero.
        Raises ``ArithmeticError`` when a leading coefficient does not divide.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        d_hi, d_lo = divisor.max_degree, divisor.min_degree
        d_lead = divisor.leading_coefficient
        floor = (self.min_degree if self._terms else 0) + (d_hi - d_lo)
        while rem:
            hi = max(rem)
            if hi < floor:
                break
            c = rem[hi]
            if c % d_lead:
                raise ArithmeticError("leading coefficient is not divisible")
            q = c // d_lead
            shift = hi - d_hi
            quot[shift] = q
            for e, dc in divisor._terms.items():
                k = e + shift
                v = rem.get(k, 0) - q * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPolynomial(quot), LaurentPolynomial(rem)

    def exact_div(self, divisor: LaurentPolynomial) -> LaurentPolynomial | None:
        """Quotient if ``divisor`` divides ``self`` exactly over Z[t, 1/t], else ``None``."""
        if self.is_zero():
            return LaurentPolynomial()
        try:
            q, r = self.divmod(divisor)
        except ArithmeticError:
            return None
        return q if r.is_zero() else None

    # -- transformations ----------------------------------------------------
    def invert_variable(self) -> LaurentPolynomial:
        """Substitute t -> 1/t."""
        return LaurentPolynomial({-e: c for e, c in self._terms.items()})

    def scale_exponents(self, k: int) -> LaurentPolynomial:
        """Substitute t -> t**k."""
        return LaurentPolynomial({e * k: c for e, c in self._terms.items()})

    def divide_exponents(self, k: int) -> LaurentPolynomial:
        """Substitute t**k -> t; every exponent must be divisible by ``k``."""
        if any(e % k for e in self._terms):
            raise ValueError(f"exponents not all divisible by {k}")
        return LaurentPolynomial({e // k: c for e, c in self._terms.items()})

    def shift(self, k: int) -> LaurentPolynomial:
        """Multiply by t**k."""
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()})

    def is_palindromic(self) -> bool:
        return self == self.invert_variable()

    def __call__(self, x):
        """Evaluate at ``x``; integer arguments are evaluated exactly."""
        if isinstance(x, int):
            x = Fraction(x)
        total = sum(c * x**e for e, c in self._terms.items())
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    # -- protocol -----------------------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPolynomial({self._terms!r})"

    def format(self, var: str = "t") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            if e == 0:
                mono = str(abs(c))
            else:
                power = var if e == 1 else f"{var}^{e}"
                mono = power if abs(c) == 1 else f"{abs(c)}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out

    def __str__(self):
        return self.format()

    @classmethod
    def parse(cls, text: str, var: str = "t") -> LaurentPolynomial:
        """Inverse of :meth:`format`."""
        text = text.replace(" ", "")
        if text == "0":
            return cls()
        if text[0] not in "+-":
            text = "+" + text
        terms: dict[int, int] = {}
        i = 0
        while i < len(text):
            sign = -1 if text[i] == "-" else 1
            j = i + 1
            while j < len(text) and not (text[j] in "+-" and text[j - 1] != "^"):
                j += 1
            mono = text[i + 1 : j]
            if var in mono:
                coef_part, _, power_part = mono.partition(var)
                coef = int(coef_part.rstrip("*")) if coef_part else 1
                exp = int(power_part[1:]) if power_part else 1
            else:
                coef, exp = int(mono), 0
            terms[exp] = terms.get(exp, 0) + sign * coef
            i = j
        return cls(terms)


def bareiss_determinant(matrix: list[list[LaurentPolynomial]]) -> LaurentPolynomial:
    """Fraction-free determinant over Z[t, 1/t] (Bareiss elimination).

    Every intermediate division is exact, which :meth:`LaurentPolynomial.exact_div`
    asserts.
    """
    n = len(matrix)
    if n == 0:
        return LaurentPolynomial.constant(1)
    m = [list(row) for row in matrix]
    sign = 1
    prev = LaurentPolynomial.constant(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPolynomial()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q = num.exact_div(prev)
                if q is None:
                    raise ArithmeticError("Bareiss step was not exact")
                m[i][j] = q
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det
