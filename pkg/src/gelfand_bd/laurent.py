"""Integer Laurent polynomials in one variable ``x``."""
from __future__ import annotations

import re


class LaurentPoly:
    """An element of Z[x, x^-1], stored as ``{exponent: coefficient}``.

    >>> x = LaurentPoly.x()
    >>> str((x - x**-1) * (x + x**-1))
    '-x^-2 + x^2'
    >>> str(LaurentPoly.parse("x^-2 + 3 - x"))
    'x^-2 + 3 - x'
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self._c = {e: c for e, c in (coeffs or {}).items() if c}
        self._hash = None

    @classmethod
    def x(cls) -> "LaurentPoly":
        return cls({1: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly(other)
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._c.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if len(self._c) == 1:
            (e, c), = self._c.items()
            if k < 0 and c not in (1, -1):
                raise ValueError("only monomials with unit coefficient are invertible")
            return LaurentPoly({e * k: c ** abs(k)})
        if k < 0:
            raise ValueError("only monomials are invertible")
        out = LaurentPoly(1)
        for _ in range(k):
            out = out * self
        return out

    def bar(self) -> "LaurentPoly":
        """The ring involution ``x -> x^-1``."""
        return LaurentPoly({-e: c for e, c in self._c.items()})

    def negative_part(self) -> "LaurentPoly":
        return LaurentPoly({e: c for e, c in self._c.items() if e < 0})

    def degrees(self) -> tuple[int, int] | None:
        if not self._c:
            return None
        return min(self._c), max(self._c)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        out = []
        for e in sorted(self._c):
            c = self._c[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "x" if e == 1 else f"x^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    _TERM = re.compile(r"([+-]?)\s*(\d+)?\s*\*?\s*(x(?:\^(-?\d+))?)?")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        text = text.strip()
        if text == "0":
            return cls()
        out: dict[int, int] = {}
        pos = 0
        compact = text.replace(" ", "")
        while pos < len(compact):
            m = cls._TERM.match(compact, pos)
            if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                exp = int(m.group(4)) if m.group(4) is not None else 1
            else:
                exp = 0
            out[exp] = out.get(exp, 0) + sign * coeff
            pos = m.end()
        return cls(out)


X = LaurentPoly.x()
X_INV = LaurentPoly.monomial(-1)
ONE = LaurentPoly(1)
ZERO = LaurentPoly()
