"""Knuth and dual equivalence, Vogan maps, plactic and admissible relations."""
from __future__ import annotations

import logging
from collections import deque
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

from .insertion import P_B, P_Bprime, P_D, Q_D, domino_correspondence, involution_parts
from .signed import SignedPerm, left_descents, left_mul
from .tableaux import Bitableau, DominoTableau, StandardTableau, domino_descents, lies_below

log = logging.getLogger(__name__)


class MoveLabel(NamedTuple):
    family: str
    index: tuple = ()

    def __str__(self) -> str:
        return self.family + ("" if not self.index else "(" + ",".join(map(str, self.index)) + ")")


def _same_type(w, seq):
    if isinstance(w, SignedPerm):
        return SignedPerm(seq)
    return type(w)(seq) if isinstance(w, tuple) else list(seq)


def _between(x: int, p: int, q: int) -> bool:
    return min(p, q) < x < max(p, q)


# Knuth moves

def knuth_move(v: Sequence[int], i: int):
    """Exchange the outer letters of a non-monotone window ``v_{i-1} v_i v_{i+1}``.

    The window acb <-> cab (and bac <-> bca) swaps the a and c letters; a
    monotone window is left as it is.
    """
    n = len(v)
    if not 1 < i < n:
        raise ValueError(f"Knuth move index {i} out of range for length {n}")
    x, y, z = v[i - 2], v[i - 1], v[i]
    out = list(v)
    if _between(z, x, y):
        out[i - 2], out[i - 1] = y, x
    elif _between(x, y, z):
        out[i - 1], out[i] = z, y
    return _same_type(v, out)


def _inverse_word(v: Sequence[int]) -> list[int]:
    n = len(v)
    out = [0] * n
    for pos, val in enumerate(v, start=1):
        out[abs(val) - 1] = pos if val > 0 else -pos
    return out


def dual_knuth_move(v: Sequence[int], i: int):
    return _same_type(v, _inverse_word(knuth_move(_inverse_word(v), i)))


# dual equivalence

def dual_equiv(T: StandardTableau, i: int) -> StandardTableau:
    """Elementary dual equivalence ``D_i`` on a standard tableau.

    If one of i-1, i, i+1 is not a label of T, T is returned unchanged.
    """
    word = T.row_reading_word()
    if not {i - 1, i, i + 1} <= set(word):
        return T
    pos = {x: word.index(x) for x in (i - 1, i, i + 1)}
    if _between(pos[i + 1], pos[i], pos[i - 1]):
        return T.relabel({i - 1: i, i: i - 1})
    if _between(pos[i - 1], pos[i], pos[i + 1]):
        return T.relabel({i: i + 1, i + 1: i})
    return T


def dual_equiv_bi(T: Bitableau, i: int) -> Bitableau:
    plus, minus = T
    if {i, i + 1} <= plus.labels:
        return Bitableau(dual_equiv(plus, i), minus)
    if {i, i + 1} <= minus.labels:
        return Bitableau(plus, dual_equiv(minus, i))
    swap = {i: i + 1, i + 1: i}
    return Bitableau(plus.relabel(swap), minus.relabel(swap))


# relations on involutions, given as dicts label -> label

def _conj(y: Mapping[int, int], a: int, b: int) -> dict[int, int]:
    t = lambda x: b if x == a else a if x == b else x
    return {t(k): t(v) for k, v in y.items()}


def rbs_relation(y: Mapping[int, int], i: int) -> dict[int, int]:
    """The involution z with ``P_RSK(z) = D_i(P_RSK(y))``, by the four-case formula."""
    A = (i - 1, i, i + 1)
    if not set(A) <= set(y):
        return dict(y)
    ya, yb, yc = (y[j] for j in A)
    if {ya, yb, yc} == set(A):
        return _conj(y, i - 1, i + 1)
    if _between(yb, ya, yc):
        return dict(y)
    if _between(yc, ya, yb):
        return _conj(y, i - 1, i)
    return _conj(y, i, i + 1)


def cbs_e(y: Mapping[int, int], i: int) -> dict[int, int]:
    A = (i - 1, i, i + 1)
    out = {}
    for j in A:
        v = y[j]
        if v not in A:
            out[j] = v
        elif v == j:
            out[j] = -j
        else:
            out[j] = j
    return out


def cbs_relation(y: Mapping[int, int], i: int) -> dict[int, int]:
    """The involution z with ``P_cBS(z) = D_i(P_cBS(y))``, via the e-values of y."""
    A = (i - 1, i, i + 1)
    if not set(A) <= set(y):
        return dict(y)
    e = cbs_e(y, i)
    if _between(e[i], e[i - 1], e[i + 1]):
        return dict(y)
    if _between(e[i + 1], e[i - 1], e[i]):
        return _conj(y, i - 1, i)
    return _conj(y, i, i + 1)


def _assemble(plus: Mapping[int, int], minus: Mapping[int, int]) -> SignedPerm:
    n = len(plus) + len(minus)
    out = [0] * n
    for a, b in plus.items():
        out[a - 1] = b
    for a, b in minus.items():
        out[a - 1] = -b
    return SignedPerm(out)


def adm_prime_relation(y: SignedPerm, i: int) -> SignedPerm:
    """The signed involution z with y adm'_i z."""
    plus, minus = involution_parts(y)
    if {i, i + 1} <= set(plus):
        return _assemble(rbs_relation(plus, i), minus)
    if {i, i + 1} <= set(minus):
        return _assemble(plus, cbs_relation(minus, i))
    return _assemble(_conj(plus, i, i + 1), _conj(minus, i, i + 1))


# admissible relations

def admissible_moves(w: Sequence[int]) -> list[tuple[MoveLabel, SignedPerm]]:
    """Neighbours under A1-A3; each move swaps the letters in positions i, i+1."""
    n = len(w)
    out = []
    same = lambda *xs: all(x > 0 for x in xs) or all(x < 0 for x in xs)

    def swap(i):
        v = list(w)
        v[i - 1], v[i] = v[i], v[i - 1]
        return SignedPerm(v)

    for i in range(2, n):
        a, b, c = w[i - 2], w[i - 1], w[i]
        if same(a, b, c) and _between(a, b, c):
            out.append((MoveLabel("A1", (i,)), swap(i)))
    for i in range(1, n - 1):
        a, b, c = w[i - 1], w[i], w[i + 1]
        if same(a, b, c) and _between(c, a, b):
            out.append((MoveLabel("A2", (i,)), swap(i)))
    for i in range(1, n):
        if (w[i - 1] > 0) != (w[i] > 0):
            out.append((MoveLabel("A3", (i,)), swap(i)))
    return out


def closure(start, moves: Callable[[object], Iterable[tuple[MoveLabel, object]]]) -> set:
    seen = {start}
    todo = deque([start])
    while todo:
        w = todo.popleft()
        for _, v in moves(w):
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return seen


def admissible_closure(w: SignedPerm) -> set[SignedPerm]:
    return closure(SignedPerm(w), admissible_moves)


# Vogan maps

def des_class(i: int, j: int, descents) -> bool:
    return i in descents and j not in descents


def _check_adjacent(i: int, j: int, n: int) -> None:
    if abs(i - j) != 1 or not (1 <= i <= n - 1 and 1 <= j <= n - 1):
        raise ValueError(f"V_{{{i},{j}}} needs adjacent indices in [1, {n - 1}]")


def vogan_word(w: SignedPerm, i: int, j: int) -> SignedPerm:
    """``{s_i w, s_j w}`` intersected with ``D_{j,i}``."""
    w = SignedPerm(w)
    _check_adjacent(i, j, len(w))
    if not des_class(i, j, left_descents(w, "B")):
        raise ValueError(f"{w} is not in D_{{{i},{j}}}")
    hits = [v for v in (left_mul(i, w), left_mul(j, w)) if des_class(j, i, left_descents(v, "B"))]
    if len(hits) != 1:
        raise RuntimeError(f"V_{{{i},{j}}}({w}) is not unique: {hits}")
    return hits[0]


def _lies_below(T: DominoTableau, a: int, b: int) -> bool:
    return lies_below(T.cells(a), T.cells(b))


def _share_edge(T: DominoTableau, a: int, b: int) -> bool:
    return any(abs(p[0] - q[0]) + abs(p[1] - q[1]) == 1 for p in T.cells(a) for q in T.cells(b))


def _surgery(T: DominoTableau, i: int, layout_from: dict, layout_to: dict) -> DominoTableau | None:
    """Replace dominoes i, i+1, i+2 laid out as ``layout_from`` (offsets from the
    top-left cell of dom_i) by ``layout_to``; None if T does not match."""
    x, y = T.cells(i)[0]
    for k, cells in layout_from.items():
        want = tuple(sorted((x + dx, y + dy) for dx, dy in cells))
        if T.cells(i + k) != want:
            return None
    doms = dict(T.dominoes)
    for k, cells in layout_to.items():
        doms[i + k] = [(x + dx, y + dy) for dx, dy in cells]
    return DominoTableau(T.core, doms)


# offsets relative to the top-left cell of dom_i; keys are 0, 1, 2 for i, i+1, i+2
_CASE1_U = {0: ((0, 0), (0, 1)), 1: ((1, 0), (2, 0)), 2: ((1, 1), (2, 1))}
_CASE1_U2 = {0: ((0, 0), (1, 0)), 1: ((0, 1), (1, 1)), 2: ((2, 0), (2, 1))}
_CASE2_U = {0: ((0, 0), (0, 1)), 1: ((1, 0), (1, 1)), 2: ((0, 2), (1, 2))}
_CASE2_U2 = {0: ((0, 0), (1, 0)), 1: ((0, 1), (0, 2)), 2: ((1, 1), (1, 2))}


def _vogan_up(T: DominoTableau, i: int) -> DominoTableau:
    """``V_{i,i+1}`` on ``D_{i,i+1}(SDT)``."""
    if _lies_below(T, i, i + 2):
        if not _share_edge(T, i, i + 1):
            return T.swap_labels(i, i + 1)
        out = _surgery(T, i, _CASE1_U, _CASE1_U2)
    else:
        if not _share_edge(T, i + 1, i + 2):
            return T.swap_labels(i + 1, i + 2)
        out = _surgery(T, i, _CASE2_U, _CASE2_U2)
    if out is None:
        raise RuntimeError(f"V_{{{i},{i + 1}}}: unexpected local configuration in {T}")
    return out


def _vogan_down(T: DominoTableau, i: int) -> DominoTableau:
    """``V_{i+1,i}``, the inverse of ``V_{i,i+1}``."""
    cands = []
    for op in (lambda: T.swap_labels(i, i + 1), lambda: T.swap_labels(i + 1, i + 2),
               lambda: _surgery(T, i, _CASE1_U2, _CASE1_U), lambda: _surgery(T, i, _CASE2_U2, _CASE2_U)):
        try:
            S = op()
        except ValueError:
            continue
        if S is None or not des_class(i, i + 1, domino_descents(S)):
            continue
        if _vogan_up(S, i) == T and S not in cands:
            cands.append(S)
    if len(cands) != 1:
        raise RuntimeError(f"V_{{{i + 1},{i}}} has {len(cands)} preimages for {T}")
    return cands[0]


def vogan_tableau(T: DominoTableau, i: int, j: int) -> DominoTableau:
    n = len(T)
    _check_adjacent(i, j, n)
    if not des_class(i, j, domino_descents(T)):
        raise ValueError(f"tableau is not in D_{{{i},{j}}}")
    out = _vogan_up(T, i) if j == i + 1 else _vogan_down(T, j)
    if not des_class(j, i, domino_descents(out)):
        raise RuntimeError(f"V_{{{i},{j}}} left D_{{{j},{i}}}")
    return out


# plactic relations

def _d1(w, r):
    m = len(w)
    for i in range(1, m):
        lo, hi = sorted((w[i - 1], w[i]))
        hit = (i + 1 < m and lo < w[i + 1] < hi) or (i >= 2 and lo < w[i - 2] < hi)
        if hit:
            v = list(w)
            v[i - 1], v[i] = v[i], v[i - 1]
            yield MoveLabel("D1", (i,)), v


def _d2(w, r):
    m = len(w)
    for j in range(1, min(r, m - 1) + 1):
        if (w[j - 1] > 0) != (w[j] > 0):
            v = list(w)
            v[j - 1], v[j] = v[j], v[j - 1]
            yield MoveLabel("D2", (j,)), v


def _signed_runs_ok(seq: Sequence[int]) -> bool:
    """seq is a negative increasing run followed by a positive decreasing run,
    or a positive decreasing run followed by a negative increasing run."""
    def split_ok(first_neg: bool) -> bool:
        k = 0
        while k < len(seq) and ((seq[k] < 0) == first_neg):
            k += 1
        head, tail = seq[:k], seq[k:]
        if any((x < 0) == first_neg for x in tail):
            return False
        neg, pos = (head, tail) if first_neg else (tail, head)
        return all(a < b for a, b in zip(neg, neg[1:])) and all(a > b for a, b in zip(pos, pos[1:]))
    return len(seq) > 0 and (split_ok(True) or split_ok(False))


def _d3(w, r):
    m = len(w)
    if m < r + 2:
        return
    if all(abs(w[0]) > abs(w[i]) for i in range(1, r + 2)) and _signed_runs_ok(list(w[1:r + 2])):
        v = list(w)
        v[0] = -v[0]
        yield MoveLabel("D3", ()), v


def d4_layout(r: int, k: int) -> list[tuple[str, int, int]]:
    out = []
    for i in range(1, k + 1):
        out += [("a", i, j) for j in range(r + i, 0, -1)]
        out += [("b", i, j) for j in range(i, 0, -1)]
    out += [("a", k + 1, j) for j in range(r + k, 0, -1)]
    return out


def d5_layout(r: int, k: int) -> list[tuple[str, int, int]]:
    out = []
    for i in range(1, k + 1):
        out += [("a", i, j) for j in range(r + i, 0, -1)]
        out += [("b", i, j) for j in range(i, 0, -1)]
    out += [("a", k + 1, j) for j in range(r + k + 1, 0, -1)]
    out += [("b", k + 1, j) for j in range(k, 0, -1)]
    return out


def _chains_ok(val: dict) -> bool:
    for (kind, i, j), x in val.items():
        if kind == "a" and any((y < 0) == (x < 0) for (kk, _, _), y in val.items() if kk == "b"):
            return False
        prev = val.get((kind, i, j - 1))
        if prev is not None and not abs(prev) < abs(x):
            return False
        up = val.get((kind, i + 1, j))
        if up is not None and not abs(x) < abs(up):
            return False
    signs_a = {x > 0 for (kind, _, _), x in val.items() if kind == "a"}
    signs_b = {x > 0 for (kind, _, _), x in val.items() if kind == "b"}
    return len(signs_a) <= 1 and len(signs_b) <= 1


def _d4_ok(u: Sequence[int], z: int, r: int, k: int) -> str | None:
    names = d4_layout(r, k)
    val = dict(zip(names, u))
    if not _chains_ok(val):
        return None
    # the chain a_{1,r+1} < b_{1,1} < a_{2,r+2} < ... < b_{k,k} in absolute value
    for i in range(1, k):
        if not abs(val[("b", i, i)]) < abs(val[("a", i + 1, r + i + 1)]) < abs(val[("b", i + 1, i + 1)]):
            return None
    for i in range(1, k + 1):
        if not abs(val[("a", i, r + i)]) < abs(val[("b", i, i)]):
            return None
    N = max(abs(x) for x in u)
    a = lambda i, j: val[("a", i, j)]
    b = lambda i, j: val[("b", i, j)]
    if abs(b(k, k)) == N and _between(z, a(k + 1, 1), b(k, 1)):
        return "i"
    if abs(a(k + 1, r + k)) == N:
        if _between(z, a(k, 1), b(k, 1)):
            return "ii"
        if _between(z, a(k, 1), a(k + 1, 1)) and any(
                abs(a(k + 1, i)) < abs(a(k, i + 1)) for i in range(1, r + k)):
            return "iii"
    return None


def _d5_ok(u: Sequence[int], z: int, r: int, k: int) -> str | None:
    names = d5_layout(r, k)
    val = dict(zip(names, u))
    if not _chains_ok(val):
        return None
    for i in range(1, k + 1):
        if not abs(val[("a", i, r + i)]) < abs(val[("b", i, i)]) < abs(val[("a", i + 1, r + i + 1)]):
            return None
    N = max(abs(x) for x in u)
    a = lambda i, j: val[("a", i, j)]
    b = lambda i, j: val[("b", i, j)]
    if abs(a(k + 1, r + k + 1)) == N and _between(z, a(k + 1, 1), b(k + 1, 1)):
        return "i"
    if abs(b(k + 1, k)) == N:
        if _between(z, a(k + 1, 1), b(k, 1)):
            return "ii"
        if _between(z, b(k, 1), b(k + 1, 1)) and any(
                abs(b(k + 1, i)) < abs(b(k, i + 1)) for i in range(2, k)):
            return "iii"
    return None


def _d4_forward(u: list[int], r: int, k: int) -> list[int]:
    # move b_{k,k}, negated, in front of a_{k,r+k}
    names = d4_layout(r, k)
    src = names.index(("b", k, k))
    dst = names.index(("a", k, r + k))
    x = u[src]
    out = u[:src] + u[src + 1:]
    out.insert(dst, -x)
    return out


def _d4_backward(v: list[int], r: int, k: int) -> list[int]:
    names = d4_layout(r, k)
    src = names.index(("b", k, k))
    dst = names.index(("a", k, r + k))
    x = v[dst]
    out = v[:dst] + v[dst + 1:]
    out.insert(src, -x)
    return out


def _d5_forward(u: list[int], r: int, k: int) -> list[int]:
    # move a_{k+1,r+k+1}, negated, in front of b_{k,k}
    names = d5_layout(r, k)
    src = names.index(("a", k + 1, r + k + 1))
    dst = names.index(("b", k, k))
    x = u[src]
    out = u[:src] + u[src + 1:]
    out.insert(dst, -x)
    return out


def _d5_backward(v: list[int], r: int, k: int) -> list[int]:
    names = d5_layout(r, k)
    src = names.index(("a", k + 1, r + k + 1))
    dst = names.index(("b", k, k))
    x = v[dst]
    out = v[:dst] + v[dst + 1:]
    out.insert(src, -x)
    return out


def d4_length(r: int, k: int) -> int:
    return (k + 1) * (r + k + 1)


def d5_length(r: int, k: int) -> int:
    return (k + 1) * (r + k + 2)


def _d45(w, r, family, length, ok, forward, backward):
    m = len(w)
    k = 1
    while length(r, k) <= m:
        s = length(r, k)
        u, z, rest = list(w[:s - 1]), w[s - 1], list(w[s:])
        case = ok(u, z, r, k)
        if case:
            yield MoveLabel(family, (k, case, "+")), forward(u, r, k) + [z] + rest
        back = backward(u, r, k)
        case = ok(back, z, r, k)
        if case and forward(back, r, k) == u:
            yield MoveLabel(family, (k, case, "-")), back + [z] + rest
        k += 1


def _d4(w, r):
    yield from _d45(w, r, "D4", d4_length, _d4_ok, _d4_forward, _d4_backward)


def _d5(w, r):
    yield from _d45(w, r, "D5", d5_length, _d5_ok, _d5_forward, _d5_backward)


_FAMILIES = {"D1": _d1, "D2": _d2, "D3": _d3, "D4": _d4, "D5": _d5}


def plactic_candidates(w: Sequence[int], r: int = 0,
                       families: Sequence[str] = tuple(_FAMILIES)) -> list[tuple[MoveLabel, SignedPerm]]:
    """Every literal D1..D5 instance at w, before the insertion-tableau guard."""
    w = tuple(w)
    out = []
    for fam in families:
        for label, v in _FAMILIES[fam](w, r):
            out.append((label, SignedPerm(v)))
    return out


def plactic_moves(w: Sequence[int], r: int = 0, rejected: list | None = None) -> list[tuple[MoveLabel, SignedPerm]]:
    """Plactic neighbours of w, scanned left to right in the order D1..D5.

    A candidate that changes the insertion tableau is dropped, logged, and
    appended to ``rejected`` when given.
    """
    w = SignedPerm(w)
    P = None
    out = []
    for label, v in plactic_candidates(w, r):
        if label.family in ("D4", "D5"):
            P = P if P is not None else P_D(w, r)
            if P_D(v, r) != P:
                log.warning("rejected %s move %s -> %s (r=%d): insertion tableau changes", label, w, v, r)
                if rejected is not None:
                    rejected.append((w, label, v))
                continue
        out.append((label, v))
    return out


def plactic_closure(w: Sequence[int], r: int = 0) -> set[SignedPerm]:
    return closure(SignedPerm(w), lambda x: plactic_moves(x, r))


# recording tableau predictions

def _move_domino(doms: dict, label: int, cells) -> None:
    doms[label] = tuple(sorted(cells))


T00 = {1: ((1, 1), (1, 2)), 2: ((2, 1), (2, 2))}
T00_PRIME = {1: ((1, 1), (2, 1)), 2: ((1, 2), (2, 2))}


def substitute_t00(Q: DominoTableau) -> DominoTableau | None:
    """Swap the configurations T00 (two stacked horizontal dominoes 1, 2) and
    T00' (two vertical dominoes 1, 2 side by side); None if neither is present."""
    here = {k: Q.cells(k) for k in (1, 2) if k in Q.labels}
    for src, dst in ((T00, T00_PRIME), (T00_PRIME, T00)):
        if here == src:
            doms = dict(Q.dominoes)
            doms.update(dst)
            return DominoTableau(Q.core, doms)
    return None


def _flip_square(Q: DominoTableau, label: int) -> tuple:
    """The domino ``label`` turned about its top-left cell, and the rest of the 2x2 square."""
    (x, y), _ = Q.cells(label)
    if Q.is_vertical(label):
        return ((x, y), (x, y + 1)), ((x + 1, y), (x + 1, y + 1))
    return ((x, y), (x + 1, y)), ((x, y + 1), (x + 1, y + 1))


def _shift_flip(Q: DominoTableau, lo: int, src: int, s: int) -> DominoTableau:
    # dom_i -> dom_{i+1} for lo <= i < src; dom_src flips into dom_lo; dom_s fills the square
    doms = dict(Q.dominoes)
    for i in range(lo, src):
        doms[i + 1] = Q.cells(i)
    doms[lo], doms[s] = _flip_square(Q, src)
    return DominoTableau(Q.core, doms)


def _shift_flip_inverse(Q: DominoTableau, lo: int, src: int, s: int) -> DominoTableau:
    doms = dict(Q.dominoes)
    for i in range(lo, src):
        doms[i] = Q.cells(i + 1)
    doms[src], doms[s] = _flip_square(Q, lo)
    return DominoTableau(Q.core, doms)


def _d45_window(family: str, r: int, k: int) -> tuple[int, int, int]:
    """``(lo, src, s)``: dominoes lo..src-1 shift up by one and dom_src flips into dom_lo."""
    if family == "D4":
        s = d4_length(r, k)
        lo = k * r + k * k + 1
        return lo, lo + k - 1, s
    s = d5_length(r, k)
    return k * r + k * k + k + 1, s - k - 1, s


def predict_recording(w: Sequence[int], label: MoveLabel, r: int = 0) -> DominoTableau | None:
    """Predicted recording tableau of the neighbour reached from w by ``label``.

    Covers D2 (labels j, j+1 swapped), D3 with r = 0 (T00 <-> T00'), and the
    D4/D5 domino shifts in both directions.  Returns None for moves without a prediction.
    """
    Q = Q_D(w, r)
    fam = label.family
    if fam == "D2":
        j = label.index[0]
        return Q.swap_labels(j, j + 1)
    if fam == "D3" and r == 0:
        return substitute_t00(Q)
    if fam in ("D4", "D5"):
        k, _, direction = label.index
        window = _d45_window(fam, r, k)
        if direction == "+":
            return _shift_flip(Q, *window)
        return _shift_flip_inverse(Q, *window)
    return None


def d3_prefix_claims(w: Sequence[int], r: int) -> list[str]:
    """Check the five structural claims about the prefix tableaux of a D3 move.

    ``w' = w_1..w_{r+2}`` and ``v'`` is w' with the first letter negated.
    Returns the list of failed claims (empty when all hold).
    """
    wp = list(w[:r + 2])
    vp = [-wp[0]] + wp[1:]
    fails = []
    Qs = {}
    for name, u in (("w'", wp), ("v'", vp)):
        Q = Q_D(u, r)
        Qs[name] = Q
        stair = set((a, b) for a in range(1, r + 3) for b in range(1, r + 4 - a))
        extra = set(Q.grid) - stair
        if not (len(extra) == 1 and stair <= set(Q.grid)):
            fails.append(f"1: shape of Q({name}) is not delta_(r+2) plus one box")
            continue
        (box,) = extra
        if box[0] == 1 or box[1] == 1:
            fails.append(f"1: extra box of Q({name}) is in the first row or column")
        if Q.label_at(box) != r + 2:
            fails.append(f"2: extra box of Q({name}) is not in dom_(r+2)")
        if Q.is_vertical(r + 2) != (u[0] < 0):
            fails.append(f"2: orientation of dom_(r+2) in Q({name})")
        for i in range(1, r + 2):
            if Q.is_vertical(i) != (u[i - 1] < 0):
                fails.append(f"3: orientation of dom_{i} in Q({name})")
        want = ((1, r + 1), (1, r + 2)) if u[0] > 0 else ((r + 1, 1), (r + 2, 1))
        if Q.cells(1) != want:
            fails.append(f"4: position of dom_1 in Q({name})")
    if len(Qs) == 2 and not fails:
        def rest(Q):
            box = (set(Q.grid) - set((a, b) for a in range(1, r + 3) for b in range(1, r + 4 - a))).pop()
            return {c for i in range(2, r + 3) for c in Q.cells(i)} - {box}
        D, D2 = rest(Qs["w'"]), rest(Qs["v'"])
        # with w_1 > 0, dom_1 sits at the top right of Q(w') and the others
        # move up and to the right in Q(v'); the opposite sign convention fails
        shift = (-1, 1) if wp[0] > 0 else (1, -1)
        if {(x + shift[0], y + shift[1]) for x, y in D} != D2:
            fails.append("5: shifted positions of dom_2..dom_(r+2)")
    return fails


# Knuth moves acting on recording tableaux by Vogan maps

def knuth_vogan_cases(w: Sequence[int], i: int) -> list[tuple[int, int]]:
    """Vogan indices (a, b) with ``beta^-1 = V_{a,b}(w^-1)`` predicted for the
    swap beta of positions i, i+1, one pair per matching Knuth pattern."""
    n = len(w)
    x = lambda k: w[k - 1]
    out = []
    if i + 2 <= n and x(i) < x(i + 2) < x(i + 1):
        out.append((i + 1, i))
    if i + 2 <= n and x(i) > x(i + 2) > x(i + 1):
        out.append((i, i + 1))
    if i >= 2 and x(i) < x(i - 1) < x(i + 1):
        out.append((i - 1, i))
    if i >= 2 and x(i) > x(i - 1) > x(i + 1):
        out.append((i, i - 1))
    return out
