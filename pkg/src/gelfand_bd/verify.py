"""Exhaustive verification suites.

Each suite scans one rank (and core or type where relevant) and returns a
report ``{"suite", "params", "checked", "counts", "failures", "ok"}``.  The
failure list is capped at ``MAX_FAILURES`` entries; ``counts["failures"]``
always holds the full number.
"""
from __future__ import annotations

import math
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from .equivalence import (
    adm_prime_relation, admissible_closure, admissible_moves, d3_prefix_claims, des_class,
    dual_equiv_bi, knuth_vogan_cases, plactic_candidates, plactic_closure, predict_recording,
    vogan_tableau, vogan_word,
)
from .hecke import (
    GelfandModule, bar_failures, braid_failures, canonical_basis, quadratic_failures,
    solve_canonical_basis,
)
from .insertion import P_B, P_Bprime, P_D, Q_D, bijection_report, domino_correspondence
from .signed import CoxType, SignedPerm, bfs_lengths, elements, involutions, left_descents, length
from .tableaux import domino_descents
from .wgraph import bidirected_edges, build_graph, molecules, verify_edge_tableau_theorems, z_classify

MAX_FAILURES = 50


class _Report:
    def __init__(self, suite: str, **params):
        self.suite = suite
        self.params = params
        self.checked = 0
        self.counts: dict[str, int] = {}
        self.failures: list[str] = []
        self.n_failures = 0

    def count(self, key: str, k: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + k

    def check(self, ok: bool, message: Callable[[], str] | str) -> None:
        self.checked += 1
        if not ok:
            self.fail(message() if callable(message) else message)

    def fail(self, message: str) -> None:
        self.n_failures += 1
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(message)

    def done(self) -> dict:
        counts = dict(sorted(self.counts.items()))
        counts["failures"] = self.n_failures
        return {
            "suite": self.suite,
            "params": self.params,
            "checked": self.checked,
            "counts": counts,
            "failures": self.failures,
            "ok": self.n_failures == 0,
        }


def descents(n: int, r: int = 0) -> dict:
    """Left descents of w equal the descents of P_D^r(w)."""
    rep = _Report("descents", rank=n, core=r)
    for w in elements(n):
        P = P_D(w, r)
        rep.check(left_descents(w, "B") == domino_descents(P), lambda: f"Des_L({w}) != Des(P_D)")
    return rep.done()


def bijection(n: int, r: int = 0) -> dict:
    """The domino correspondence is injective and hits every same-shape pair."""
    rep = _Report("bijection", rank=n, core=r)
    data = bijection_report(n, r)
    order = 2 ** n * math.factorial(n)
    rep.count("elements", data["elements"])
    rep.count("distinct_images", data["distinct_images"])
    rep.count("same_shape_pairs", data["same_shape_pairs"])
    rep.check(not data["collisions"], f"collisions: {data['collisions'][:5]}")
    rep.check(not data["shape_mismatches"], f"P and Q differ in shape: {data['shape_mismatches'][:5]}")
    rep.check(data["distinct_images"] == data["same_shape_pairs"] == order,
              f"{data['distinct_images']} images, {data['same_shape_pairs']} pairs, group order {order}")
    return rep.done()


def plactic(n: int, r: int = 0) -> dict:
    """Every D1..D5 candidate keeps P_D^r; closures equal the P_D^r fibres."""
    rep = _Report("plactic", rank=n, core=r)
    fibres: dict = defaultdict(set)
    for w in elements(n):
        P = P_D(w, r)
        fibres[P].add(w)
        for label, v in plactic_candidates(w, r):
            rep.count(label.family)
            rep.check(P_D(v, r) == P, lambda: f"{label} {w} -> {v} changes P_D")
    for P, fibre in sorted(fibres.items(), key=lambda kv: min(kv[1])):
        closure = plactic_closure(min(fibre), r)
        rep.check(closure == fibre, lambda: f"closure of {min(fibre)} has {len(closure)} elements, fibre {len(fibre)}")
    rep.count("fibres", len(fibres))
    return rep.done()


def plactic_spot(n: int, r: int = 0, families: tuple[str, ...] = ("D4", "D5")) -> dict:
    """Soundness of the long relations alone, for ranks where full closures are too costly."""
    rep = _Report("plactic-spot", rank=n, core=r)
    for w in elements(n):
        found = plactic_candidates(w, r, families)
        if not found:
            continue
        P = P_D(w, r)
        for label, v in found:
            rep.count(f"{label.family}_k{label.index[0]}")
            rep.check(P_D(v, r) == P, lambda: f"{label} {w} -> {v} changes P_D")
    return rep.done()


def vogan(n: int, r: int = 0) -> dict:
    """V_{i,j} commutes with P_D^r, and Knuth moves act on Q_D^r by Vogan maps."""
    rep = _Report("vogan", rank=n, core=r)
    for w in elements(n):
        D = left_descents(w, "B")
        P, Q = domino_correspondence(w, r)
        for i in range(1, n):
            for j in (i - 1, i + 1):
                if not 1 <= j <= n - 1 or not des_class(i, j, D):
                    continue
                rep.count("commutation")
                try:
                    ok = des_class(i, j, domino_descents(P)) and P_D(vogan_word(w, i, j), r) == vogan_tableau(P, i, j)
                except (ValueError, RuntimeError):
                    ok = False
                rep.check(ok, lambda: f"V_{{{i},{j}}} does not commute with P_D at {w}")
            for a, b in knuth_vogan_cases(list(w), i):
                rep.count("knuth_moves")
                beta = list(w)
                beta[i - 1], beta[i] = beta[i], beta[i - 1]
                beta = SignedPerm(beta)
                try:
                    ok = (beta.inverse() == vogan_word(w.inverse(), a, b)
                          and Q_D(beta, r) == vogan_tableau(Q, a, b))
                except (ValueError, RuntimeError):
                    ok = False
                rep.check(ok, lambda: f"Knuth move at {i} of {w} is not V_{{{a},{b}}} on Q_D")
    return rep.done()


def recording(n: int, r: int = 0) -> dict:
    """Predicted recording tableaux of D2..D5 neighbours, and the D3 prefix claims."""
    rep = _Report("recording", rank=n, core=r)
    for w in elements(n):
        for label, v in plactic_candidates(w, r):
            if label.family == "D3":
                rep.count("D3 prefix")
                fails = d3_prefix_claims(w, r)
                rep.check(not fails, lambda: f"D3 at {w}: {fails}")
                if r > 0:
                    continue
            pred = predict_recording(w, label, r)
            if pred is None:
                continue
            rep.count(label.family)
            rep.check(pred == Q_D(v, r), lambda: f"{label} {w} -> {v}: predicted Q_D differs")
    return rep.done()


def admissible(n: int) -> dict:
    """A-moves keep P_B and admissible closures equal the P_B fibres."""
    rep = _Report("admissible", rank=n)
    fibres: dict = defaultdict(set)
    for w in elements(n):
        P = P_B(w)
        fibres[P].add(w)
        for label, v in admissible_moves(w):
            rep.count(label.family)
            rep.check(P_B(v) == P, lambda: f"admissible move {w} -> {v} changes P_B")
    for fibre in sorted(fibres.values(), key=min):
        closure = admissible_closure(min(fibre))
        rep.check(closure == fibre, lambda: f"admissible closure of {min(fibre)} differs from its fibre")
    rep.count("fibres", len(fibres))
    return rep.done()


def bitableau_prime(n: int) -> dict:
    """P_B'(z) = D_i(P_B'(y)) for z = adm'_i(y), all y in I_n and 1 < i < n."""
    rep = _Report("bitableau-prime", rank=n)
    for y in involutions(n):
        for i in range(2, n):
            z = adm_prime_relation(y, i)
            rep.check(P_Bprime(z) == dual_equiv_bi(P_Bprime(y), i), lambda: f"adm'_{i}({y}) = {z}")
    return rep.done()


def module_axioms(n: int, t: CoxType | str = "B", model: str | None = None) -> dict:
    rep = _Report("module-axioms", rank=n, type=CoxType.parse(t).value, model=model or "both")
    for m in ([model] if model else ["m", "n"]):
        module = GelfandModule(n, t, m)
        rep.count(f"vertices_{m}", len(module.vertices))
        for msg in quadratic_failures(module) + braid_failures(module):
            rep.fail(f"model {m}: {msg}")
        rep.checked += len(module.vertices) * len(module.gens) ** 2
    return rep.done()


def basis(n: int, t: CoxType | str = "B", model: str | None = None) -> dict:
    """Bar invariance, unitriangularity, agreement with the solver and path independence."""
    rep = _Report("basis", rank=n, type=CoxType.parse(t).value, model=model or "both")
    for m in ([model] if model else ["m", "n"]):
        module = GelfandModule(n, t, m)
        cb = canonical_basis(n, t, m, module=module)
        other = canonical_basis(n, t, m, choose=max, module=GelfandModule(n, t, m))
        oracle = solve_canonical_basis(GelfandModule(n, t, m))
        for msg in bar_failures(cb):
            rep.fail(f"model {m}: {msg}")
        for z in module.vertices:
            rep.check(cb.columns[z].terms == oracle.columns[z].terms, lambda: f"model {m}: column {z} differs from the solver")
            rep.check(cb.columns[z].terms == other.columns[z].terms, lambda: f"model {m}: column {z} depends on the descent chosen")
        mu_count = sum(1 for z in module.vertices for y in module.vertices if y != z and cb.mu(y, z))
        rep.count(f"nonzero_mu_{m}", mu_count)
    return rep.done()


def edges(n: int, t: CoxType | str = "B") -> dict:
    """Bidirected edges of Gamma^row equal the Z-relations, and both give the same molecules."""
    t = CoxType.parse(t)
    rep = _Report("edges", rank=n, type=t.value)
    g = build_graph(n, t, "row")
    bi = bidirected_edges(g)
    verts = g.vertices
    classified = set()
    for k, y in enumerate(verts):
        for z in verts[k + 1:]:
            if z_classify(y, z, t) is not None:
                classified.add(frozenset((y, z)))
    rep.count("bidirected", len(bi))
    rep.count("classified", len(classified))
    for e in sorted(bi - classified, key=sorted):
        rep.fail("bidirected but unclassified: " + " <-> ".join(str(v) for v in sorted(e)))
    for e in sorted(classified - bi, key=sorted):
        rep.fail("classified but not bidirected: " + " <-> ".join(str(v) for v in sorted(e)))
    rep.checked += len(verts) * (len(verts) - 1) // 2
    by_z = _components(verts, classified)
    rep.check(by_z == molecules(g), "molecules differ between the graph and the Z-relations")
    rep.count("molecules", len(by_z))
    return rep.done()


def edge_tableaux(n: int, t: CoxType | str = "B") -> dict:
    """The tableau identities attached to each classified bidirected edge."""
    t = CoxType.parse(t)
    rep = _Report("edge-tableaux", rank=n, type=t.value)
    tab = verify_edge_tableau_theorems(n, t)
    for key, k in tab.checked.items():
        rep.count(f"checked_{key}", k)
        rep.checked += k
    for key, k in tab.skipped.items():
        rep.count(f"no_claim_{key}", k)
    for msg in tab.violations:
        rep.fail(msg)
    rep.count("violations_explained_by_s", tab.explained_by_s)
    return rep.done()


def _components(verts, pairs) -> list[list[SignedPerm]]:
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in pairs:
        a, b = tuple(e)
        parent[find(a)] = find(b)
    groups: dict = defaultdict(list)
    for v in verts:
        groups[find(v)].append(v)
    return sorted(sorted(c) for c in groups.values())


def lengths(n: int, t: CoxType | str = "B") -> dict:
    rep = _Report("lengths", rank=n, type=CoxType.parse(t).value)
    dist = bfs_lengths(n, t)
    for w in elements(n, t):
        rep.check(dist.get(w) == length(w, t), lambda: f"length of {w}: formula {length(w, t)}, bfs {dist.get(w)}")
    rep.check(len(dist) == sum(1 for _ in elements(n, t)), "bfs reached a different number of elements")
    return rep.done()


SUITES = ("descents", "bijection", "plactic", "plactic-spot", "vogan", "recording", "admissible",
          "bitableau-prime", "module-axioms", "basis", "edges", "edge-tableaux", "lengths")


def _task(args: tuple) -> dict:
    name, n, r, t, model = args
    if name == "descents":
        return descents(n, r)
    if name == "bijection":
        return bijection(n, r)
    if name == "plactic":
        return plactic(n, r)
    if name == "plactic-spot":
        return plactic_spot(n, r)
    if name == "vogan":
        return vogan(n, r)
    if name == "recording":
        return recording(n, r)
    if name == "admissible":
        return admissible(n)
    if name == "bitableau-prime":
        return bitableau_prime(n)
    if name == "module-axioms":
        return module_axioms(n, t, model)
    if name == "basis":
        return basis(n, t, model)
    if name == "edges":
        return edges(n, t)
    if name == "edge-tableaux":
        return edge_tableaux(n, t)
    if name == "lengths":
        return lengths(n, t)
    raise ValueError(f"unknown suite {name!r}")


def run_suites(names: list[str], n: int, r: int = 0, t: str = "B", model: str | None = None,
               jobs: int = 1) -> list[dict]:
    """Run suites in the given order; results come back in the same order for any ``jobs``."""
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
    tasks = [(name, n, r, t, model) for name in names]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_task, tasks))
    return [_task(task) for task in tasks]
