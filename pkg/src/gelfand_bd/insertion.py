"""Insertion algorithms: RSK, domino insertion, column Beissinger insertion and
the bitableau correspondences."""
from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple, Sequence

from .signed import SignedPerm, elements, is_involution
from .tableaux import Bitableau, Cell, DominoTableau, StandardTableau, standard_domino_tableaux


# Robinson-Schensted-Knuth

def rsk_insert(T: StandardTableau, a: int) -> tuple[StandardTableau, Cell]:
    """Row-insert ``a`` into ``T``; returns the new tableau and the new cell."""
    if a in T.labels:
        raise ValueError(f"{a} is already in the tableau")
    rows = [list(r) for r in T.rows]
    x = a
    for r, row in enumerate(rows):
        bigger = [k for k, y in enumerate(row) if y > x]
        if not bigger:
            row.append(x)
            return StandardTableau(rows), (r + 1, len(row))
        k = bigger[0]
        row[k], x = x, row[k]
    rows.append([x])
    return StandardTableau(rows), (len(rows), 1)


def rsk(top: Sequence[int], bottom: Sequence[int]) -> tuple[StandardTableau, StandardTableau]:
    """Insertion and recording tableaux of the biword ``top / bottom``."""
    if len(top) != len(bottom) or any(a >= b for a, b in zip(top, top[1:])):
        raise ValueError("biword top row must be strictly increasing and match the bottom row")
    P, Q = StandardTableau(), StandardTableau()
    for t, b in zip(top, bottom):
        P, (r, c) = rsk_insert(P, b)
        rows = [list(x) for x in Q.rows]
        if r > len(rows):
            rows.append([])
        rows[r - 1].append(t)
        Q = StandardTableau(rows)
    return P, Q


# domino insertion

def _row_length(cells: Mapping[Cell, int], r: int) -> int:
    return max((c for (rr, c) in cells if rr == r), default=0)


def _col_height(cells: Mapping[Cell, int], c: int) -> int:
    return max((r for (r, cc) in cells if cc == c), default=0)


def domino_insert(T: DominoTableau, a: int) -> DominoTableau:
    """Insert the signed letter ``a`` into the domino tableau ``T``.

    ``B`` starts as the dominoes of ``T`` with labels below ``|a|`` (plus the
    core) and a new domino ``|a|``: horizontal at the end of row 1 if a > 0,
    vertical at the bottom of column 1 if a < 0.  The remaining dominoes are
    then re-added in increasing order:

    1. no overlap with B: added as they are;
    2. one shared box: the other box of the domino together with the box
       below it (horizontal domino) or to its right (vertical domino);
    3. horizontal and fully covered: horizontal domino at the end of the
       next row;
    4. vertical and fully covered: vertical domino at the bottom of the next
       column.
    """
    i = abs(a)
    if a == 0 or i in T.labels:
        raise ValueError(f"cannot insert {a}")
    B: dict[Cell, int] = {cell: lab for cell, lab in T.grid.items() if lab < i}
    if a > 0:
        L = _row_length(B, 1)
        new = ((1, L + 1), (1, L + 2))
    else:
        H = _col_height(B, 1)
        new = ((H + 1, 1), (H + 2, 1))
    out = {lab: T.cells(lab) for lab in T.labels if lab < i}
    out[i] = new
    for cell in new:
        B[cell] = i
    for j in sorted(lab for lab in T.labels if lab > i):
        gamma = T.cells(j)
        (r1, c1), (r2, c2) = gamma
        horizontal = r1 == r2
        shared = [cell for cell in gamma if cell in B]
        if not shared:
            dom = gamma
        elif len(shared) == 1:
            if shared[0] != gamma[0]:
                raise RuntimeError(f"unexpected overlap of domino {j} at {shared[0]}")
            if horizontal:
                dom = ((r2, c2), (r2 + 1, c2))
            else:
                dom = ((r2, c2), (r2, c2 + 1))
        elif horizontal:
            L = _row_length(B, r1 + 1)
            dom = ((r1 + 1, L + 1), (r1 + 1, L + 2))
        else:
            H = _col_height(B, c1 + 1)
            dom = ((H + 1, c1 + 1), (H + 2, c1 + 1))
        for cell in dom:
            if cell in B:
                raise RuntimeError(f"domino {j} collides at {cell}")
            B[cell] = j
        out[j] = dom
    return DominoTableau(T.core, out)


class DominoPair(NamedTuple):
    P: DominoTableau
    Q: DominoTableau


def domino_correspondence(w: SignedPerm | Sequence[int], r: int = 0) -> DominoPair:
    """``w -> (P_D^r(w), Q_D^r(w))``; the domino created at step i gets label i in Q."""
    P = DominoTableau(r)
    Q: dict[int, tuple[Cell, Cell]] = {}
    for step, a in enumerate(w, start=1):
        before = set(P.grid)
        P = domino_insert(P, a)
        added = sorted(set(P.grid) - before)
        if len(added) != 2:
            raise RuntimeError("insertion must add exactly one domino")
        Q[step] = tuple(added)
    return DominoPair(P, DominoTableau(r, Q))


def P_D(w, r: int = 0) -> DominoTableau:
    return domino_correspondence(w, r).P


def Q_D(w, r: int = 0) -> DominoTableau:
    return domino_correspondence(w, r).Q


def bijection_report(n: int, r: int = 0) -> dict:
    """Injectivity and the same-shape pair count for the domino correspondence."""
    seen: dict[tuple, SignedPerm] = {}
    collisions, shape_mismatch = [], []
    for w in elements(n):
        P, Q = domino_correspondence(w, r)
        if P.shape != Q.shape:
            shape_mismatch.append(str(w))
        key = (P, Q)
        if key in seen:
            collisions.append((str(seen[key]), str(w)))
        seen[key] = w
    shapes: dict = {}
    for T in standard_domino_tableaux(n, r):
        shapes[T.shape] = shapes.get(T.shape, 0) + 1
    pairs = sum(v * v for v in shapes.values())
    return {
        "rank": n,
        "core": r,
        "elements": len(seen) + len(collisions),
        "distinct_images": len(seen),
        "same_shape_pairs": pairs,
        "collisions": collisions,
        "shape_mismatches": shape_mismatch,
    }


# column Beissinger insertion

def cbs_insert(T: StandardTableau, a: int, b: int) -> StandardTableau:
    """``T <- (a, b)``: for a < b, RSK-insert a and put b at the end of the column
    right of the new cell; for a == b put b at the end of column 1."""
    if a > b:
        raise ValueError("column Beissinger insertion needs a <= b")
    if a == b:
        col = 1
        U = T
    else:
        U, (_, j) = rsk_insert(T, a)
        col = j + 1
    rows = [list(r) for r in U.rows]
    height = sum(1 for row in rows if len(row) >= col)
    if height == len(rows):
        rows.append([])
    if len(rows[height]) != col - 1:
        raise ValueError(f"cannot append {b} to column {col}")
    rows[height].append(b)
    return StandardTableau(rows)


def involution_pairs(z: Mapping[int, int]) -> list[tuple[int, int]]:
    """Pairs ``(a, z(a))`` with ``a <= z(a)``, sorted by the larger entry."""
    for a, b in z.items():
        if z.get(b) != a:
            raise ValueError(f"not an involution at {a}")
    return sorted(((a, b) for a, b in z.items() if a <= b), key=lambda p: p[1])


def p_cbs(z: Mapping[int, int]) -> StandardTableau:
    T = StandardTableau()
    for a, b in involution_pairs(z):
        T = cbs_insert(T, a, b)
    return T


def p_rsk_involution(z: Mapping[int, int]) -> StandardTableau:
    top = sorted(z)
    return rsk(top, [z[t] for t in top])[0]


# bitableau correspondences

class Biword(NamedTuple):
    top: tuple[int, ...]
    bottom: tuple[int, ...]


def split_biword(w: SignedPerm | Sequence[int]) -> tuple[Biword, Biword]:
    plus = [(i, v) for i, v in enumerate(w, start=1) if v > 0]
    minus = [(i, -v) for i, v in enumerate(w, start=1) if v < 0]
    mk = lambda pairs: Biword(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))
    return mk(plus), mk(minus)


class BitableauPair(NamedTuple):
    P: Bitableau
    Q: Bitableau


def bitableau_correspondence(w: SignedPerm | Sequence[int]) -> BitableauPair:
    wp, wm = split_biword(w)
    Pp, Qp = rsk(wp.top, wp.bottom)
    Pm, Qm = rsk(wm.top, wm.bottom)
    return BitableauPair(Bitableau(Pp, Pm), Bitableau(Qp, Qm))


def P_B(w) -> Bitableau:
    return bitableau_correspondence(w).P


def involution_parts(z: SignedPerm) -> tuple[dict[int, int], dict[int, int]]:
    """``z^+`` on the labels with z(i) > 0 and ``|z|`` on the labels with z(i) < 0."""
    if not is_involution(z):
        raise ValueError(f"{z} is not an involution")
    plus = {i: v for i, v in enumerate(z, start=1) if v > 0}
    minus = {i: -v for i, v in enumerate(z, start=1) if v < 0}
    return plus, minus


def bitableau_prime(z: SignedPerm) -> BitableauPair:
    """``P_B'(z) = (P_RSK(z^+), P_cBS(z^-))``; the recording bitableau equals it."""
    plus, minus = involution_parts(z)
    P = Bitableau(p_rsk_involution(plus), p_cbs(minus))
    return BitableauPair(P, P)


def P_Bprime(z: SignedPerm) -> Bitableau:
    return bitableau_prime(z).P
