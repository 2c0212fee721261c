"""Catalogs of indecomposables: knitting for Dynkin quivers and induction."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .algebra import PathAlgebra
from .homology import coxeter_dim, injectives, is_injective, projectives, tau, tau_inverse
from .modules import Representation, induce, is_indecomposable, is_isomorphic, simple


class NotDynkinError(ValueError):
    pass


@dataclass
class CatalogEntry:
    name: str
    module: Representation
    tau: Optional[str] = None      # name of tau X, None when X is projective
    tau_inv: Optional[str] = None  # name of tau^-1 X, None when X is injective
    source: Optional[str] = None   # kQ name this entry was induced from


@dataclass
class IndecomposableCatalog:
    algebra: PathAlgebra
    entries: list[CatalogEntry] = field(default_factory=list)

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def module(self, name: str) -> Representation:
        for e in self.entries:
            if e.name == name:
                return e.module
        raise KeyError(name)

    def entry(self, name: str) -> CatalogEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def identify(self, X: Representation) -> Optional[str]:
        for e in self.entries:
            if e.module.dims == X.dims and is_isomorphic(X, e.module):
                return e.name
        return None

    def __len__(self) -> int:
        return len(self.entries)


def positive_roots(q, bound: int = 6) -> list[tuple[int, ...]]:
    """Positive vectors with Tits form 1 (coordinates at most ``bound``)."""
    E = q.euler_matrix()
    out = []
    for v in itertools.product(range(bound + 1), repeat=q.n):
        if not any(v):
            continue
        val = sum(v[i] * E[i, j] * v[j] for i in range(q.n) for j in range(q.n))
        if val == 1:
            out.append(v)
    return out


def canonical_hereditary_name(A: PathAlgebra, X: Representation) -> str:
    for i, P in enumerate(projectives(A)):
        if P.dims == X.dims and is_isomorphic(P, X):
            return f"P{i + 1}"
    for i, I in enumerate(injectives(A)):
        if I.dims == X.dims and is_isomorphic(I, X):
            return f"I{i + 1}"
    for i in range(A.n):
        if X.dims == simple(A, i).dims:
            return f"S{i + 1}"
    return "X[" + ",".join(str(d) for d in X.dims) + "]"


def knit_hereditary_catalog(A: PathAlgebra) -> IndecomposableCatalog:
    """All indecomposables of ``kQ`` for Dynkin ``Q``, as ``tau^-k P_i``.

    Each step is checked against the Coxeter transformation on dimension
    vectors; the total is checked against the number of positive roots.
    """
    q = A.quiver
    if A.relations:
        raise ValueError("knitting expects a path algebra without relations")
    q.require_hereditary_input()
    if not q.is_dynkin():
        raise NotDynkinError("quiver is not of Dynkin type; the catalog would be infinite")
    n_roots = len(positive_roots(q))
    modules: list[Representation] = []
    links: list[tuple[Optional[int], Optional[int]]] = []
    for i, P in enumerate(projectives(A)):
        X = P
        prev = None
        while True:
            idx = len(modules)
            modules.append(X)
            links.append((prev, None))
            if prev is not None:
                links[prev] = (links[prev][0], idx)
            if is_injective(X):
                break
            Y = tau_inverse(X)
            if coxeter_dim(Y.dims, q) != list(X.dims):
                raise AssertionError("knitting step disagrees with the Coxeter transformation")
            if not is_indecomposable(Y):
                raise AssertionError("tau^-1 of an indecomposable is decomposable")
            prev = idx
            X = Y
            if len(modules) > n_roots:
                raise AssertionError("knitting produced more modules than positive roots")
    if len(modules) != n_roots:
        raise AssertionError(f"knitting found {len(modules)} modules, expected {n_roots}")
    dims = [m.dims for m in modules]
    if len(set(dims)) != len(dims):
        raise AssertionError("dimension vectors in a Dynkin catalog must be distinct")
    names = [canonical_hereditary_name(A, m) for m in modules]
    cat = IndecomposableCatalog(A)
    for k, (m, nm) in enumerate(zip(modules, names)):
        t, ti = links[k]
        cat.entries.append(CatalogEntry(nm, m.renamed(nm),
                                        names[t] if t is not None else None,
                                        names[ti] if ti is not None else None))
    cat.entries.sort(key=lambda e: _name_key(e.name))
    return cat


def _name_key(name: str):
    order = {"P": 0, "I": 1, "S": 2, "X": 3}
    base = name[4:-1] if name.startswith("Ind(") else name
    return (order.get(base[0], 4), base)


def induced_catalog(L: PathAlgebra, cat: IndecomposableCatalog) -> IndecomposableCatalog:
    """``{L (x) X}`` with names ``P_i``/``I_i`` when (co)projective, else ``Ind(X)``."""
    out = IndecomposableCatalog(L)
    ps, js = projectives(L), injectives(L)
    rename = {}
    for e in cat.entries:
        X = induce(L, e.module.renamed(None))
        name = None
        if e.name.startswith("P"):
            i = int(e.name[1:]) - 1
            if not is_isomorphic(X, ps[i]):
                raise AssertionError(f"induced {e.name} is not projective")
            name = e.name
        elif e.name.startswith("I"):
            i = int(e.name[1:]) - 1
            if X.dims == js[i].dims and is_isomorphic(X, js[i]):
                name = e.name
        if name is None:
            name = f"Ind({e.name})"
        rename[e.name] = name
        out.entries.append(CatalogEntry(name, X.renamed(name), source=e.name))
    for new, e in zip(out.entries, cat.entries):
        new.tau = rename.get(e.tau) if e.tau else None
        new.tau_inv = rename.get(e.tau_inv) if e.tau_inv else None
    return out


def verify_induced_tau(L: PathAlgebra, cat: IndecomposableCatalog, lcat: IndecomposableCatalog,
                       dual_coefficients: bool = False):
    """Yields ``(name, ok, witness)`` for ``tau(L (x) X) = L (x) tau X``.

    With ``dual_coefficients`` the right side is ``D(R) (x) tau X``, which is
    the correct target when ``R`` is not self-injective.
    """
    for e, le in zip(cat.entries, lcat.entries):
        lhs = tau(le.module)
        rhs = induce(L, tau(e.module), dual_coefficients=dual_coefficients)
        if lhs.dims != rhs.dims:
            yield e.name, False, None
            continue
        ok, w = is_isomorphic(lhs, rhs, with_witness=True)
        yield e.name, ok, w
