"""Exact integer Laurent polynomials in one variable ``t``."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = ["LaurentPoly"]

_TERM = re.compile(r"^(?:(\d+)\*?)?(t(?:\^(-?\d+))?)?$")


class LaurentPoly:
    """Immutable map ``exponent -> nonzero integer coefficient``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coefficients: Mapping[int, int] | None = None):
        c = {}
        for e, v in (coefficients or {}).items():
            v = int(v)
            if v:
                c[int(e)] = v
        self._c = dict(sorted(c.items()))
        self._hash = None

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int], low: int = 0) -> LaurentPoly:
        """Build from an ascending coefficient list whose first entry is ``t^low``."""
        return cls({low + i: v for i, v in enumerate(coeffs)})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        return cls({exponent: coefficient})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def min_exponent(self) -> int:
        return next(iter(self._c))

    @property
    def max_exponent(self) -> int:
        return next(reversed(self._c))

    @property
    def span(self) -> int:
        return self.max_exponent - self.min_exponent if self._c else 0

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: v * other for e, v in self._c.items()})
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t^k``."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def __call__(self, x):
        """Evaluate at an integer or ``Fraction``; negative exponents need ``x != 0``."""
        x = Fraction(x)
        val = sum(v * x**e for e, v in self._c.items())
        return int(val) if val.denominator == 1 else val

    def is_palindromic(self) -> bool:
        """Symmetric under ``t -> 1/t`` (centred at exponent 0)."""
        return all(self._c.get(-e) == v for e, v in self._c.items())

    def unit_normal(self) -> LaurentPoly:
        """Representative up to ``±t^k``: lowest exponent 0, lowest coefficient positive."""
        if not self._c:
            return self
        p = self.shift(-self.min_exponent)
        return -p if p[0] < 0 else p

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in self._c.items():
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if v > 0 else f"- {body}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``: accepts e.g. ``"t^-1 - 1 + t"`` or ``"2*t^3"``."""
        s = text.replace(" ", "")
        if s == "0":
            return cls()
        if not s:
            raise ValueError("empty polynomial")
        out: dict[int, int] = {}
        for sign, term in re.findall(r"([+-]?)([^+-]+)", _protect(s)):
            term = term.replace("~", "-")
            m = _TERM.match(term)
            if not m or (m.group(1) is None and m.group(2) is None):
                raise ValueError(f"bad term {term!r} in {text!r}")
            coef = int(m.group(1)) if m.group(1) else 1
            if m.group(2) is None:
                exp = 0
            else:
                exp = int(m.group(3)) if m.group(3) else 1
            if sign == "-":
                coef = -coef
            out[exp] = out.get(exp, 0) + coef
        return cls(out)


def _protect(s: str) -> str:
    # hide the minus sign of negative exponents from the term splitter
    return re.sub(r"\^-", "^~", s)
