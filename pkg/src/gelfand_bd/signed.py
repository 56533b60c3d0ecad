"""Signed permutations and the Coxeter combinatorics of types B and D.

A signed permutation of rank ``n`` is stored by its one-line notation
``(w(1), ..., w(n))``; the values on negative arguments are implied by
``w(-i) = -w(i)``.  Generators are indexed as in the hyperoctahedral
literature: ``s_0 = (-1,1)``, ``s_{-1} = (-2,1)(-1,2)`` and
``s_i = (-i-1,-i)(i,i+1)`` for ``i >= 1``.
"""
from __future__ import annotations

import enum
import itertools
import re
from collections import deque
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class CoxType(str, enum.Enum):
    B = "B"
    D = "D"

    @classmethod
    def parse(cls, value) -> "CoxType":
        if isinstance(value, CoxType):
            return value
        return cls(str(value).upper())


class GenClass(str, enum.Enum):
    STRICT_ASC = "StrictAsc"
    STRICT_DES = "StrictDes"
    WEAK_ASC = "WeakAsc"
    WEAK_DES = "WeakDes"


class SignedPerm(tuple):
    """A signed permutation in one-line notation.

    >>> w = SignedPerm((-3, 4, -1, 2))
    >>> w(-1), w(2)
    (3, 4)
    >>> str(w * w.inverse())
    '1,2,3,4'
    """

    __slots__ = ()

    def __new__(cls, oneline: Iterable[int]):
        values = tuple(int(v) for v in oneline)
        n = len(values)
        if sorted(abs(v) for v in values) != list(range(1, n + 1)):
            raise ValueError(f"not a signed permutation: {values}")
        return super().__new__(cls, values)

    @classmethod
    def _raw(cls, values: tuple) -> "SignedPerm":
        # skips validation; callers guarantee well-formedness
        return tuple.__new__(cls, values)

    @property
    def rank(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        if i > 0:
            return self[i - 1]
        if i < 0:
            return -self[-i - 1]
        raise ValueError("signed permutations are not defined at 0")

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        if not isinstance(other, SignedPerm):
            return NotImplemented
        if len(self) != len(other):
            raise ValueError(f"rank mismatch: {len(self)} != {len(other)}")
        return SignedPerm._raw(tuple(self(v) for v in other))

    def inverse(self) -> "SignedPerm":
        out = [0] * len(self)
        for i, v in enumerate(self, start=1):
            out[abs(v) - 1] = i if v > 0 else -i
        return SignedPerm._raw(tuple(out))

    def negatives(self) -> int:
        return sum(1 for v in self if v < 0)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self)

    def __repr__(self) -> str:
        return f"SignedPerm(({', '.join(str(v) for v in self)}))"

    @classmethod
    def parse(cls, text: str, rank: int | None = None) -> "SignedPerm":
        """Parse ``"-3,4,-1,2"`` or a cycle form such as ``"(1,3)(2,-5)"``."""
        text = text.strip()
        if text.startswith("("):
            return from_cycles(text, rank)
        if not text:
            return cls(())
        return cls(int(tok) for tok in re.split(r"[,\s]+", text) if tok)


def from_cycles(text: str, rank: int | None = None) -> SignedPerm:
    """Build a signed permutation from cycle notation.

    Each cycle ``(a,b,...)`` is read as the map ``a -> b -> ... -> a``
    together with its negative mirror ``-a -> -b -> ...``.  Unmentioned
    points are fixed.  ``rank`` defaults to the largest absolute value.
    """
    cycles = [
        [int(tok) for tok in re.split(r"[,\s]+", body.strip()) if tok]
        for body in re.findall(r"\(([^)]*)\)", text)
    ]
    largest = max((abs(v) for c in cycles for v in c), default=0)
    n = largest if rank is None else rank
    if n < largest:
        raise ValueError(f"rank {n} too small for {text!r}")
    image = {i: i for i in range(1, n + 1)}
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if a > 0:
                image[a] = b
            else:
                image[-a] = -b
    return SignedPerm(image[i] for i in range(1, n + 1))


def to_cycles(w: SignedPerm) -> str:
    """Cycle form listing each orbit once up to the sign mirror."""
    seen = set()
    parts = []
    for start in range(1, w.rank + 1):
        if start in seen or w(start) == start:
            continue
        cyc = [start]
        seen.add(start)
        seen.add(-start)
        x = w(start)
        while x != start:
            if x == -start:
                cyc.append(x)
                break
            cyc.append(x)
            seen.add(x)
            seen.add(-x)
            x = w(x)
        parts.append("(" + ",".join(str(v) for v in cyc) + ")")
    return "".join(parts) or "()"


def identity(n: int) -> SignedPerm:
    return SignedPerm._raw(tuple(range(1, n + 1)))


@lru_cache(maxsize=None)
def generator(i: int, n: int) -> SignedPerm:
    """The simple reflection ``s_i`` as an element of rank ``n``."""
    vals = list(range(1, n + 1))
    if i == 0:
        if n < 1:
            raise ValueError("s_0 needs rank >= 1")
        vals[0] = -1
    elif i == -1:
        if n < 2:
            raise ValueError("s_-1 needs rank >= 2")
        vals[0], vals[1] = -2, -1
    elif 1 <= i < n:
        vals[i - 1], vals[i] = i + 1, i
    else:
        raise ValueError(f"no generator s_{i} in rank {n}")
    return SignedPerm._raw(tuple(vals))


def generators(n: int, t: CoxType | str) -> list[int]:
    """Indices of the Coxeter generators of W^B_n or W^D_n."""
    t = CoxType.parse(t)
    if t is CoxType.B:
        return list(range(0, n))
    if n < 2:
        return []
    return [-1] + list(range(1, n))


def in_type(w: SignedPerm, t: CoxType | str) -> bool:
    return CoxType.parse(t) is CoxType.B or w.negatives() % 2 == 0


def left_mul(i: int, w: SignedPerm) -> SignedPerm:
    """``s_i * w`` without building the generator (acts on values)."""
    if i == 0:
        return SignedPerm._raw(tuple(-v if abs(v) == 1 else v for v in w))
    if i == -1:
        swap = {1: -2, 2: -1, -1: 2, -2: 1}
    else:
        swap = {i: i + 1, i + 1: i, -i: -i - 1, -i - 1: -i}
    return SignedPerm._raw(tuple(swap.get(v, v) for v in w))


def right_mul(w: SignedPerm, i: int) -> SignedPerm:
    """``w * s_i`` (acts on positions)."""
    vals = list(w)
    if i == 0:
        vals[0] = -vals[0]
    elif i == -1:
        vals[0], vals[1] = -vals[1], -vals[0]
    else:
        vals[i - 1], vals[i] = vals[i], vals[i - 1]
    return SignedPerm._raw(tuple(vals))


def conjugate(i: int, w: SignedPerm) -> SignedPerm:
    """``s_i * w * s_i``."""
    return right_mul(left_mul(i, w), i)


def inversions(w: Sequence[int]) -> int:
    return sum(1 for a, b in itertools.combinations(w, 2) if a > b)


def length(w: SignedPerm, t: CoxType | str = CoxType.B) -> int:
    t = CoxType.parse(t)
    if t is CoxType.B:
        return inversions(w) + sum(-v for v in w if v < 0)
    if w.negatives() % 2:
        raise ValueError(f"{w} is not in W^D_{w.rank}")
    return inversions(w) + sum(-v - 1 for v in w if v < 0)


def left_descents(w: SignedPerm, t: CoxType | str = CoxType.B) -> set[int]:
    lw = length(w, t)
    return {i for i in generators(w.rank, t) if length(left_mul(i, w), t) < lw}


def right_descents(w: SignedPerm, t: CoxType | str = CoxType.B) -> set[int]:
    lw = length(w, t)
    return {i for i in generators(w.rank, t) if length(right_mul(w, i), t) < lw}


def elements(n: int, t: CoxType | str = CoxType.B) -> Iterator[SignedPerm]:
    """All elements of W^B_n (or W^D_n), in lexicographic one-line order."""
    t = CoxType.parse(t)
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((-1, 1), repeat=n):
            w = SignedPerm._raw(tuple(s * p for s, p in zip(signs, perm)))
            if in_type(w, t):
                out.append(w)
    out.sort()
    return iter(out)


def bfs_lengths(n: int, t: CoxType | str = CoxType.B) -> dict[SignedPerm, int]:
    """Word lengths by breadth-first search on the Cayley graph."""
    start = identity(n)
    dist = {start: 0}
    queue = deque([start])
    gens = generators(n, t)
    while queue:
        w = queue.popleft()
        for i in gens:
            v = left_mul(i, w)
            if v not in dist:
                dist[v] = dist[w] + 1
                queue.append(v)
    return dist


def is_involution(w: SignedPerm) -> bool:
    return all(w(v) == i for i, v in enumerate(w, start=1))


def is_fpf_involution(w: SignedPerm) -> bool:
    return is_involution(w) and all(abs(v) != i for i, v in enumerate(w, start=1))


def involutions(n: int) -> list[SignedPerm]:
    """The signed involutions I_n, sorted."""
    out = []

    def build(vals: list[int], free: list[int]):
        if not free:
            out.append(SignedPerm._raw(tuple(vals)))
            return
        a, rest = free[0], free[1:]
        for v in (a, -a):
            vals[a - 1] = v
            build(vals, rest)
        for k, b in enumerate(rest):
            remaining = rest[:k] + rest[k + 1:]
            for sign in (1, -1):
                vals[a - 1], vals[b - 1] = sign * b, sign * a
                build(vals, remaining)
        vals[a - 1] = 0

    build([0] * n, list(range(1, n + 1)))
    return sorted(out)


def fpf_involutions(n: int) -> list[SignedPerm]:
    return [z for z in involutions(n) if is_fpf_involution(z)]


def _fpf_standard(i: int) -> int:
    return i - (-1) ** i


def _iota(w: SignedPerm, descending: bool) -> SignedPerm:
    if not is_involution(w):
        raise ValueError(f"{w} is not an involution")
    n = w.rank
    cs = sorted(c for c in range(-n, n + 1) if c != 0 and w(c) == abs(c))
    q = len(cs)
    image: dict[int, int] = {}
    for i in range(1, n + 1):
        if abs(w(i)) != i:
            image[i] = w(i)
    for k, c in enumerate(cs, start=1):
        partner = n + q + 1 - k if descending else n + k
        image[c] = partner
        image[-c] = -partner
        image[partner] = c
    for i in range(n + q + 1, 2 * n + 1):
        image[i] = _fpf_standard(i)
    return SignedPerm._raw(tuple(image[i] for i in range(1, 2 * n + 1)))


def iota_asc(w: SignedPerm) -> SignedPerm:
    """Embed a signed involution of rank n as an FPF involution of rank 2n.

    >>> str(iota_asc(from_cycles("(1,3)", 4)))
    '3,5,1,6,2,4,8,7'
    """
    return _iota(w, descending=False)


def iota_des(w: SignedPerm) -> SignedPerm:
    return _iota(w, descending=True)


def negative_pairs(z: SignedPerm) -> int:
    """Number of i with z(i) < -i; for an FPF involution this counts its negated 2-cycles."""
    return sum(1 for i, v in enumerate(z, start=1) if v < -i)


@lru_cache(maxsize=None)
def gelfand_set(n: int, t: CoxType | str = CoxType.B, model: str = "m") -> tuple[SignedPerm, ...]:
    """Vertex set of the Gelfand model M (``model="m"``) or N (``model="n"``).

    The vertices are FPF involutions of rank 2n, sorted by length in
    W^t_{2n} and then lexicographically.
    """
    t = CoxType.parse(t)
    if model not in ("m", "n"):
        raise ValueError(f"unknown model {model!r}")
    embed = iota_asc if model == "m" else iota_des
    verts = [embed(w) for w in involutions(n)]
    if t is CoxType.D:
        verts = [z for z in verts if negative_pairs(z) % 2 == 0]
    return tuple(sorted(verts, key=lambda z: (length(z, t), z)))


def satisfies_gelfand_inequalities(z: SignedPerm, n: int, model: str) -> bool:
    """Membership test for the Gelfand index sets without using the embeddings.

    Model m: no visible descent ``i > n``, where i is a visible descent when
    ``z(i+1) < min(i, z(i))`` or ``z(i) < -i``.

    Model n: for ``i > n`` the values ``z(i)`` in ``[-n, n]`` come first and
    strictly decrease, and every later position is matched by ``i -> i -
    (-1)^i``.  (The one-line inequality ``z(i+1) <= max(i+2, z(i))`` is not
    sufficient on its own: it admits ``(1,3)(2,4)`` for n = 2.)
    """
    if not is_fpf_involution(z) or z.rank != 2 * n:
        return False
    if model == "m":
        for i in range(n + 1, 2 * n + 1):
            if z(i) < -i:
                return False
            if i < 2 * n and z(i + 1) < min(i, z(i)):
                return False
        return True
    if model != "n":
        raise ValueError(f"unknown model {model!r}")
    tail = False
    prev = None
    for i in range(n + 1, 2 * n + 1):
        v = z(i)
        if abs(v) <= n and not tail:
            if prev is not None and v >= prev:
                return False
            prev = v
        else:
            tail = True
            if v != _fpf_standard(i):
                return False
    return True


def classify_generator(z: SignedPerm, s: int, t: CoxType | str = CoxType.B) -> GenClass:
    """Weak/strict ascent/descent class of ``s_s`` at a Gelfand vertex ``z``.

    Uses the group-theoretic definitions: a weak descent commutes with z, a
    weak ascent satisfies ``z s z = s_j`` for some ``j > n``; otherwise the
    class is decided by comparing ``l(s z)`` with ``l(z)`` in W_{2n}.
    """
    t = CoxType.parse(t)
    rank = z.rank
    n = rank // 2
    sz = left_mul(s, z)
    if sz == right_mul(z, s):
        return GenClass.WEAK_DES
    zsz = right_mul(z, s) * z
    if any(zsz == generator(j, rank) for j in range(n + 1, rank)):
        return GenClass.WEAK_ASC
    if length(sz, t) < length(z, t):
        return GenClass.STRICT_DES
    return GenClass.STRICT_ASC


def classify_generator_explicit(z: SignedPerm, s: int, t: CoxType | str = CoxType.B) -> GenClass:
    """The same classification by the explicit case list on the values of z.

    The weak-ascent case is written ``n < z(i) < z(i+1)`` for model m; model n
    has the same pairs in decreasing order, so only the sides of n are tested.
    """
    t = CoxType.parse(t)
    n = z.rank // 2
    if s >= 1:
        a, b = z(s), z(s + 1)
        if a == s + 1 or a == -s - 1:
            return GenClass.WEAK_DES
        if (a > n and b > n) or (a < -n and b < -n):
            return GenClass.WEAK_ASC
        if a > b:
            return GenClass.STRICT_DES
        return GenClass.STRICT_ASC
    if s == 0:
        if t is not CoxType.B:
            raise ValueError("s_0 is not a type D generator")
        return GenClass.STRICT_DES if z(1) < 0 else GenClass.STRICT_ASC
    if s == -1:
        if t is not CoxType.D:
            raise ValueError("s_-1 is not a type B generator")
        a, b = z(1), z(2)
        if a in (2, -2):
            return GenClass.WEAK_DES
        if a < -n < n < b or b < -n < n < a:
            return GenClass.WEAK_ASC
        return GenClass.STRICT_DES if -b > a else GenClass.STRICT_ASC
    raise ValueError(f"bad generator index {s}")


def ascent_set(z: SignedPerm, t: CoxType | str, model: str) -> frozenset[int]:
    """The tau-set of a Gelfand vertex: strict ascents plus the weak class that acts by -1/x."""
    weak = GenClass.WEAK_ASC if model == "m" else GenClass.WEAK_DES
    n = z.rank // 2
    return frozenset(
        s for s in generators(n, t)
        if classify_generator(z, s, t) in (GenClass.STRICT_ASC, weak)
    )
