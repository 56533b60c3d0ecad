"""The Gelfand Hecke modules M and N, their bar operators and canonical bases.

Basis vectors are indexed by Gelfand vertices (FPF involutions of rank 2n).
A module element is a mapping ``vertex -> LaurentPoly``; only nonzero
coefficients are stored.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Mapping

from .laurent import LaurentPoly, ONE, X, X_INV, ZERO
from .signed import (
    CoxType,
    GenClass,
    SignedPerm,
    ascent_set,
    classify_generator,
    conjugate,
    gelfand_set,
    generators,
    length,
)

MODELS = ("m", "n")


class ModuleElement:
    """A finite Z[x, x^-1]-combination of basis vectors of a Gelfand module."""

    __slots__ = ("module", "terms")

    def __init__(self, module: "GelfandModule", terms: Mapping[SignedPerm, LaurentPoly] | None = None):
        self.module = module
        self.terms = {z: c for z, c in (terms or {}).items() if c}
        for z in self.terms:
            if z not in module.index:
                raise KeyError(f"{z} is not a vertex of {module}")

    def coefficient(self, z: SignedPerm) -> LaurentPoly:
        return self.terms.get(z, ZERO)

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        out = dict(self.terms)
        for z, c in other.terms.items():
            out[z] = out.get(z, ZERO) + c
        return ModuleElement(self.module, out)

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self + other.scale(LaurentPoly(-1))

    def scale(self, f: LaurentPoly) -> "ModuleElement":
        return ModuleElement(self.module, {z: f * c for z, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, ModuleElement) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        inner = " + ".join(f"({c})*M[{z}]" for z, c in sorted(self.terms.items()))
        return f"ModuleElement({inner or '0'})"


class GelfandModule:
    """The module M (``model="m"``) or N (``model="n"``) for W^B_n or W^D_n.

    ``H_s`` acts on a basis vector according to the class of ``s`` at the
    vertex: strict ascents and descents move to ``s z s``, weak ascents and
    weak descents act by the scalars ``-x^-1, x`` (model m) or ``x, -x^-1``
    (model n).  The same rule is used for ``s_0`` and ``s_-1``.
    """

    def __init__(self, n: int, t: CoxType | str = CoxType.B, model: str = "m"):
        if model not in MODELS:
            raise ValueError(f"model must be one of {MODELS}")
        self.n = n
        self.t = CoxType.parse(t)
        self.model = model
        # ordered by length in the module's own type, then one-line notation
        self.vertices: tuple[SignedPerm, ...] = tuple(
            sorted(gelfand_set(n, self.t, model), key=lambda z: (length(z, self.t), z)))
        self.index = {z: k for k, z in enumerate(self.vertices)}
        self.gens = generators(n, self.t)
        self._bar_cache: dict[SignedPerm, ModuleElement] = {}

    def __repr__(self) -> str:
        return f"GelfandModule(n={self.n}, t={self.t.value}, model={self.model})"

    @cached_property
    def lengths(self) -> dict[SignedPerm, int]:
        return {z: length(z, self.t) for z in self.vertices}

    def order_key(self, z: SignedPerm) -> tuple:
        return (self.lengths[z], z)

    @cached_property
    def classes(self) -> dict[tuple[SignedPerm, int], GenClass]:
        return {(z, s): classify_generator(z, s, self.t) for z in self.vertices for s in self.gens}

    def cls(self, z: SignedPerm, s: int) -> GenClass:
        return self.classes[(z, s)]

    def tau(self, z: SignedPerm) -> frozenset[int]:
        return ascent_set(z, self.t, self.model)

    def strict_descents(self, z: SignedPerm) -> list[int]:
        return [s for s in self.gens if self.cls(z, s) is GenClass.STRICT_DES]

    def strict_ascents(self, z: SignedPerm) -> list[int]:
        return [s for s in self.gens if self.cls(z, s) is GenClass.STRICT_ASC]

    def basis(self, z: SignedPerm) -> ModuleElement:
        return ModuleElement(self, {z: ONE})

    def zero(self) -> ModuleElement:
        return ModuleElement(self)

    def _weak_scalars(self) -> tuple[LaurentPoly, LaurentPoly]:
        # (weak ascent scalar, weak descent scalar)
        if self.model == "m":
            return -X_INV, X
        return X, -X_INV

    def act_basis(self, s: int, z: SignedPerm) -> dict[SignedPerm, LaurentPoly]:
        if s not in self.gens:
            raise ValueError(f"s_{s} is not a generator of W^{self.t.value}_{self.n}")
        kind = self.cls(z, s)
        weak_asc, weak_des = self._weak_scalars()
        if kind is GenClass.STRICT_ASC:
            return {self._conj(s, z): ONE}
        if kind is GenClass.STRICT_DES:
            return {self._conj(s, z): ONE, z: X - X_INV}
        if kind is GenClass.WEAK_ASC:
            return {z: weak_asc}
        return {z: weak_des}

    def _conj(self, s: int, z: SignedPerm) -> SignedPerm:
        y = conjugate(s, z)
        if y not in self.index:
            raise RuntimeError(f"s_{s} z s_{s} left the vertex set at z={z}")
        return y

    def act(self, s: int, e: ModuleElement) -> ModuleElement:
        """``H_s * e``."""
        out: dict[SignedPerm, LaurentPoly] = {}
        for z, c in e.terms.items():
            for y, f in self.act_basis(s, z).items():
                out[y] = out.get(y, ZERO) + c * f
        return ModuleElement(self, out)

    def act_inverse(self, s: int, e: ModuleElement) -> ModuleElement:
        """``H_s^-1 * e = (H_s - (x - x^-1)) * e``."""
        return self.act(s, e) - e.scale(X - X_INV)

    def act_word(self, word: Iterable[int], e: ModuleElement) -> ModuleElement:
        """Apply ``H_{s_1} H_{s_2} ... H_{s_k}`` (rightmost factor first)."""
        for s in reversed(list(word)):
            e = self.act(s, e)
        return e

    # bar operator

    def bar_basis(self, z: SignedPerm, choose: Callable[[list[int]], int] = min) -> ModuleElement:
        if choose is min and z in self._bar_cache:
            return self._bar_cache[z]
        des = self.strict_descents(z)
        if not des:
            out = self.basis(z)
        else:
            s = choose(des)
            shorter = self._conj(s, z)
            if self.cls(shorter, s) is not GenClass.STRICT_ASC:
                raise RuntimeError(f"s_{s} is not a strict ascent of {shorter}")
            out = self.act_inverse(s, self.bar_basis(shorter, choose))
        if choose is min:
            self._bar_cache[z] = out
        return out

    def bar(self, e: ModuleElement) -> ModuleElement:
        out: dict[SignedPerm, LaurentPoly] = {}
        for z, c in e.terms.items():
            cb = c.bar()
            for y, f in self.bar_basis(z).terms.items():
                out[y] = out.get(y, ZERO) + cb * f
        return ModuleElement(self, out)

    def bar_matrix(self) -> dict[SignedPerm, ModuleElement]:
        return {z: self.bar_basis(z) for z in self.vertices}


@dataclass
class CanonicalBasis:
    """Columns ``z -> sum_y m_{yz} M_y`` of the canonical basis of a Gelfand module."""

    module: GelfandModule
    columns: dict[SignedPerm, ModuleElement] = field(default_factory=dict)

    def entry(self, y: SignedPerm, z: SignedPerm) -> LaurentPoly:
        return self.columns[z].coefficient(y)

    def mu(self, y: SignedPerm, z: SignedPerm) -> int:
        return self.entry(y, z)[-1]

    def omega(self, y: SignedPerm, z: SignedPerm) -> int:
        return self.mu(y, z) + self.mu(z, y)

    def to_json(self) -> dict:
        verts = self.module.vertices
        return {
            "type": self.module.t.value,
            "rank": self.module.n,
            "model": self.module.model,
            "vertices": [str(z) for z in verts],
            "columns": {
                str(z): {str(y): str(c) for y, c in sorted(self.columns[z].terms.items(),
                                                           key=lambda kv: self.module.order_key(kv[0]))}
                for z in verts
            },
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CanonicalBasis":
        module = GelfandModule(int(data["rank"]), data["type"], data["model"])
        cols = {}
        for zs, col in data["columns"].items():
            z = SignedPerm.parse(zs)
            cols[z] = ModuleElement(module, {SignedPerm.parse(ys): LaurentPoly.parse(c) for ys, c in col.items()})
        return cls(module, cols)


def mu(cb: CanonicalBasis, y: SignedPerm, z: SignedPerm) -> int:
    return cb.mu(y, z)


def omega(cb: CanonicalBasis, y: SignedPerm, z: SignedPerm) -> int:
    return cb.omega(y, z)


def canonical_basis(n: int, t: CoxType | str = CoxType.B, model: str = "m",
                    choose: Callable[[list[int]], int] = min,
                    module: GelfandModule | None = None) -> CanonicalBasis:
    """Canonical basis by the ascent recurrence.

    Vertices are processed by increasing length.  A vertex without strict
    descents contributes ``M_z``.  Otherwise ``choose`` picks a strict
    descent ``s`` of ``z``; with ``w = s z s`` one has

        C_z = (H_s + x^-1) C_w - sum_{l(y) < l(w), s not in tau(y)} mu(y, w) C_y.
    """
    module = module or GelfandModule(n, t, model)
    cb = CanonicalBasis(module)
    for z in module.vertices:
        des = module.strict_descents(z)
        if not des:
            cb.columns[z] = module.basis(z)
            continue
        s = choose(des)
        w = conjugate(s, z)
        col_w = cb.columns[w]
        col = module.act(s, col_w) + col_w.scale(X_INV)
        lw = module.lengths[w]
        for y in module.vertices:
            if module.lengths[y] >= lw:
                break
            if s in module.tau(y):
                continue
            m = cb.mu(y, w)
            if m:
                col = col - cb.columns[y].scale(LaurentPoly(m))
        _check_column(module, z, col)
        cb.columns[z] = col
    return cb


def _check_column(module: GelfandModule, z: SignedPerm, col: ModuleElement) -> None:
    if col.coefficient(z) != ONE:
        raise RuntimeError(f"canonical column {z} has diagonal {col.coefficient(z)}")
    lz = module.lengths[z]
    for y, c in col.terms.items():
        if y == z:
            continue
        if module.lengths[y] >= lz:
            raise RuntimeError(f"canonical column {z} is not triangular at {y}")
        lo, hi = c.degrees()
        if hi >= 0:
            raise RuntimeError(f"canonical column {z} has entry {c} at {y} outside x^-1 Z[x^-1]")


def solve_canonical_basis(module: GelfandModule) -> CanonicalBasis:
    """Independent oracle: solve the bar-fixed unitriangular system directly.

    With ``bar(M_w) = sum_y r_{yw} M_y`` the condition ``bar(C_z) = C_z``
    reads ``m_{yz} - bar(m_{yz}) = sum_{w != y} r_{yw} bar(m_{wz})``.  Solving
    for y in decreasing order and keeping the part in x^-1 Z[x^-1] determines
    every entry.
    """
    r = module.bar_matrix()
    order = sorted(module.vertices, key=module.order_key)
    cb = CanonicalBasis(module)
    for zi, z in enumerate(order):
        m: dict[SignedPerm, LaurentPoly] = {z: ONE}
        for y in reversed(order[:zi]):
            rhs = ZERO
            for w, mwz in m.items():
                ryw = r[w].coefficient(y)
                if ryw:
                    rhs = rhs + ryw * mwz.bar()
            # rhs = m_yz - bar(m_yz), so its negative part is m_yz
            val = rhs.negative_part()
            if val + (-(val.bar())) != rhs:
                raise RuntimeError(f"bar system inconsistent at ({y}, {z})")
            if val:
                m[y] = val
        cb.columns[z] = ModuleElement(module, m)
    return cb


def quadratic_failures(module: GelfandModule) -> list[str]:
    out = []
    for z in module.vertices:
        e = module.basis(z)
        for s in module.gens:
            hs = module.act(s, e)
            lhs = module.act(s, hs) - hs.scale(X - X_INV) - e
            if lhs:
                out.append(f"quadratic relation fails for s_{s} at {z}")
    return out


def braid_order(s: int, t: int, cox: CoxType) -> int:
    if s == t:
        return 1
    a, b = sorted((s, t))
    if cox is CoxType.B and a == 0:
        return 4 if b == 1 else 2
    if cox is CoxType.D and a == -1:
        return 3 if b == 2 else 2
    return 3 if b - a == 1 else 2


def braid_failures(module: GelfandModule) -> list[str]:
    out = []
    gens = module.gens
    for k, s in enumerate(gens):
        for t in gens[k + 1:]:
            m = braid_order(s, t, module.t)
            w1 = [s if j % 2 == 0 else t for j in range(m)]
            w2 = [t if j % 2 == 0 else s for j in range(m)]
            for z in module.vertices:
                e = module.basis(z)
                if module.act_word(w1, e) != module.act_word(w2, e):
                    out.append(f"braid relation of order {m} fails for (s_{s}, s_{t}) at {z}")
    return out


def inverse_failures(module: GelfandModule) -> list[str]:
    out = []
    for z in module.vertices:
        e = module.basis(z)
        for s in module.gens:
            if module.act_inverse(s, module.act(s, e)) != e:
                out.append(f"H_s^-1 H_s != 1 for s_{s} at {z}")
    return out


def verify_module_axioms(n: int, t: CoxType | str = CoxType.B, model: str = "m") -> list[str]:
    """Quadratic and braid relations on every basis vector; empty list means pass."""
    module = GelfandModule(n, t, model)
    return quadratic_failures(module) + braid_failures(module)


def bar_failures(cb: CanonicalBasis) -> list[str]:
    module = cb.module
    out = []
    for z, col in cb.columns.items():
        if module.bar(col) != col:
            out.append(f"canonical column {z} is not bar invariant")
        try:
            _check_column(module, z, col)
        except RuntimeError as exc:
            out.append(str(exc))
    return out
