"""Quivers, path algebras with relations, abstract algebras, and R (x) kQ.

Conventions used throughout the package:

* vertices are ``0 .. n-1`` internally and printed 1-based;
* a path is stored as ``(start, arrows)`` with ``arrows`` in the order they
  are traversed, so the product ``p * q`` means "first ``q``, then ``p``";
* an algebra element ``x`` with ``x = e_j x e_i`` has source ``i`` and
  target ``j`` and acts on a left module as a map ``V_i -> V_j``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from gmpy2 import mpq

from .linalg import QQ, Matrix, kernel_basis, rank, rref

DEFAULT_PATH_CAP = 64


class AdmissibilityError(ValueError):
    """The relations do not cut the path algebra down to finite dimension."""


class NotBasicError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple[Arrow, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[str, int, int]]) -> "Quiver":
        q = cls(n, tuple(Arrow(a, s, t) for a, s, t in edges))
        names = [a.name for a in q.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow names")
        for a in q.arrows:
            if not (0 <= a.source < n and 0 <= a.target < n):
                raise ValueError(f"arrow {a.name} has an endpoint outside 0..{n - 1}")
        return q

    @classmethod
    def linear_A(cls, n: int) -> "Quiver":
        """1 -> 2 -> ... -> n with arrows named a, b, c, ..."""
        names = "abcdefghijklmnopqrstuvw"
        return cls.from_edges(n, [(names[i], i, i + 1) for i in range(n - 1)])

    @classmethod
    def D4(cls) -> "Quiver":
        """Three arms pointing into the central vertex 1."""
        return cls.from_edges(4, [("a", 1, 0), ("b", 2, 0), ("c", 3, 0)])

    def arrow_index(self, name: str) -> int:
        for k, a in enumerate(self.arrows):
            if a.name == name:
                return k
        raise KeyError(f"no arrow named {name!r}")

    def has_loops(self) -> bool:
        return any(a.source == a.target for a in self.arrows)

    def is_acyclic(self) -> bool:
        if self.has_loops():
            return False
        indeg = [0] * self.n
        for a in self.arrows:
            indeg[a.target] += 1
        stack = [v for v in range(self.n) if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for a in self.arrows:
                if a.source == v:
                    indeg[a.target] -= 1
                    if indeg[a.target] == 0:
                        stack.append(a.target)
        return seen == self.n

    def require_hereditary_input(self) -> None:
        if not self.is_acyclic():
            raise ValueError("quiver must be acyclic without loops")

    def euler_matrix(self) -> Matrix:
        """Matrix ``E`` with ``<d, e> = d^T E e``."""
        rows = [[1 if i == j else 0 for j in range(self.n)] for i in range(self.n)]
        for a in self.arrows:
            rows[a.source][a.target] -= 1
        return Matrix(self.n, self.n, rows)

    def is_dynkin(self) -> bool:
        """Positive definiteness of the symmetrized Tits form (exact minors)."""
        E = self.euler_matrix()
        S = E + E.T
        for k in range(1, self.n + 1):
            if _det(S.submatrix(range(k), range(k))) <= 0:
                return False
        return True

    def paths_from(self, v: int, max_len: int):
        """All paths ``(v, word)`` starting at ``v`` of length ``<= max_len``."""
        return [(v, w) for _, w in self._walk(v, max_len)]

    def _walk(self, v: int, max_len: int):
        frontier = [(v, ())]
        out = list(frontier)
        for _ in range(max_len):
            nxt = []
            for end, word in frontier:
                for k, a in enumerate(self.arrows):
                    if a.source == end:
                        nxt.append((a.target, word + (k,)))
            out.extend(nxt)
            frontier = nxt
        return out

    def all_paths(self, max_len: int):
        """Triples ``(start, end, word)`` for all paths up to ``max_len``."""
        return [(v, e, w) for v in range(self.n) for e, w in self._walk(v, max_len)]


def _det(m: Matrix):
    n = m.rows
    rows = [list(r) for r in m.data]
    det = mpq(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return mpq(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        det *= rows[c][c]
        for i in range(c + 1, n):
            f = rows[i][c] / rows[c][c]
            if f != 0:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det


# ---------------------------------------------------------------------------
# relations


Word = tuple[int, ...]
Relation = tuple[tuple[mpq, int, Word], ...]  # (coefficient, start vertex, traversal word)


_TERM = re.compile(r"\s*([+-]?)\s*([^+-]+)")


def parse_relation(q: Quiver, text: str) -> Relation:
    """Parse e.g. ``"a*x1 - x2*a"`` or ``"x1^2"``.

    Factors are written in composition order: ``a*x1`` traverses ``x1``
    first.  A leading rational coefficient is allowed (``2*a*b``).
    """
    terms = []
    for sign, body in _TERM.findall(text.replace(" ", "")):
        factors = [f for f in body.split("*") if f]
        coef = mpq(-1 if sign == "-" else 1)
        if factors and re.fullmatch(r"\d+(/\d+)?", factors[0]):
            coef *= mpq(factors.pop(0))
        word: list[int] = []
        for f in factors:
            name, _, power = f.partition("^")
            word.extend([q.arrow_index(name)] * (int(power) if power else 1))
        if not word:
            raise ValueError(f"relation term {body!r} has no arrows")
        traversal = tuple(reversed(word))
        start = q.arrows[traversal[0]].source
        _check_word(q, start, traversal)
        terms.append((coef, start, traversal))
    ends = {(s, _word_end(q, s, w)) for _, s, w in terms}
    if len(ends) != 1:
        raise ValueError(f"relation {text!r} is not uniform in its endpoints")
    return tuple(terms)


def _check_word(q: Quiver, start: int, word: Word) -> None:
    v = start
    for k in word:
        a = q.arrows[k]
        if a.source != v:
            raise ValueError(f"arrows do not compose at arrow {a.name}")
        v = a.target


def _word_end(q: Quiver, start: int, word: Word) -> int:
    v = start
    for k in word:
        v = q.arrows[k].target
    return v


# ---------------------------------------------------------------------------
# path algebras


class PathAlgebra:
    """``kQ / I`` for an admissible ideal ``I``, with a basis of paths.

    The basis consists of "standard" paths: those that are not leading terms
    of the ideal when longer paths are eliminated first, so idempotents and
    arrows are always basis elements.  ``mult[i][j]`` holds the product of
    basis elements ``i`` and ``j`` as a sparse ``{index: coefficient}``.
    """

    def __init__(
        self,
        quiver: Quiver,
        relations: Sequence[Relation] = (),
        *,
        name: str = "A",
        path_cap: int = DEFAULT_PATH_CAP,
    ):
        self.quiver = quiver
        self.relations = tuple(relations)
        self.name = name
        self.n = quiver.n
        self.arrows = quiver.arrows
        self._build(path_cap)

    # -- construction -------------------------------------------------------
    def _build(self, cap: int) -> None:
        q = self.quiver
        for L in range(1, cap + 1):
            paths = q.all_paths(L)
            index = _order_paths([(s, w) for s, _, w in paths])
            ending = {}
            for s_, e_, w in paths:
                ending.setdefault(e_, []).append((s_, w))
            pivots = _SparseEchelon()
            for rel in self.relations:
                rs = rel[0][1]
                re_ = _word_end(q, rs, rel[0][2])
                rmin = min(len(w) for _, _, w in rel)
                for rstart, right in ending.get(rs, []):
                    if len(right) + rmin > L:
                        continue
                    for _, left in q.paths_from(re_, L - rmin - len(right)):
                        row = {}
                        for c, _, w in rel:
                            word = right + w + left
                            if len(word) > L:
                                continue
                            col = index[(rstart, word)]
                            row[col] = row.get(col, mpq(0)) + c
                        pivots.add(row)
            basis_cols = [c for c in range(len(index)) if c not in pivots.rows]
            keys = sorted(index, key=index.get)
            longest = max((len(keys[c][1]) for c in basis_cols), default=0)
            if longest < L:
                self._finish(keys, index, pivots, basis_cols, L)
                return
        raise AdmissibilityError(
            f"path basis did not terminate below length {cap}; ideal not admissible"
        )

    def _finish(self, keys, index, pivots, basis_cols, L) -> None:
        q = self.quiver
        # present basis: idempotents first, then by length, then lexicographic
        basis_paths = sorted((keys[c] for c in basis_cols), key=lambda p: (len(p[1]), p[1], p[0]))
        self.basis = basis_paths
        self.dim = len(basis_paths)
        self._pos = {p: k for k, p in enumerate(basis_paths)}
        self._index = index
        self._keys = keys
        self._pivots = pivots
        self._maxlen = L
        self.source = [p[0] for p in basis_paths]
        self.target = [_word_end(q, p[0], p[1]) for p in basis_paths]
        self.words = [p[1] for p in basis_paths]
        self.idempotent = [self._pos[(v, ())] for v in range(q.n)]
        self.arrow_basis = [self._pos[(a.source, (k,))] for k, a in enumerate(q.arrows)]
        # mult[i][j] = b_i * b_j (b_j first)
        self.mult = [[self._product(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def _product(self, i: int, j: int) -> dict:
        if self.target[j] != self.source[i]:
            return {}
        return self.reduce_path(self.source[j], self.words[j] + self.words[i])

    def reduce_path(self, start: int, word: Word) -> dict:
        """Normal form of a path as ``{basis index: coefficient}``."""
        if len(word) > self._maxlen:
            return {}
        col = self._index[(start, word)]
        vec = self._pivots.reduce({col: mpq(1)})
        return {self._pos[self._keys[c]]: v for c, v in vec.items()}

    # -- generic algebra interface -------------------------------------------
    def element_of_word(self, start: int, word: Word) -> dict:
        return self.reduce_path(start, word)

    def mul_vec(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.mult[i][j].items():
                    out[k] = out.get(k, mpq(0)) + a * b * c
        return {k: c for k, c in out.items() if c != 0}

    def basis_label(self, k: int) -> str:
        s, w = self.basis[k]
        if not w:
            return f"e{s + 1}"
        return "*".join(self.arrows[a].name for a in reversed(w))

    def cartan_matrix(self) -> list[list[int]]:
        """``C[j][i] = dim e_j A e_i``."""
        C = [[0] * self.n for _ in range(self.n)]
        for k in range(self.dim):
            C[self.target[k]][self.source[k]] += 1
        return C

    def radical_series_dims(self) -> list[int]:
        """Dimensions of ``rad^k A`` for k = 0, 1, ... until zero."""
        dims = [self.dim]
        k = 1
        while True:
            d = _radical_power_dim(self, k)
            dims.append(d)
            if d == 0:
                return dims
            k += 1

    def __repr__(self) -> str:
        return f"PathAlgebra({self.name}, n={self.n}, dim={self.dim})"


def _radical_power_dim(A: PathAlgebra, k: int) -> int:
    # rad^k is spanned by images of all paths of length >= k
    rows = []
    for v in range(A.n):
        for start, word in A.quiver.paths_from(v, A._maxlen):
            if len(word) >= k:
                vec = A.reduce_path(v, word)
                if vec:
                    row = [mpq(0)] * A.dim
                    for i, c in vec.items():
                        row[i] = c
                    rows.append(row)
    return rank(rows) if rows else 0


def _order_paths(paths) -> dict:
    """Column index for each path: longer paths first, so they become pivots."""
    ordered = sorted(set((p[0], p[1]) for p in paths), key=lambda p: (-len(p[1]), p[1], p[0]))
    return {p: k for k, p in enumerate(ordered)}


class _SparseEchelon:
    """Incremental sparse row echelon form; pivot = smallest column."""

    def __init__(self):
        self.rows: dict[int, dict] = {}

    def reduce(self, vec: dict) -> dict:
        vec = {c: v for c, v in vec.items() if v != 0}
        while True:
            hit = [c for c in vec if c in self.rows]
            if not hit:
                return vec
            c = min(hit)
            f = vec[c]
            for k, v in self.rows[c].items():
                nv = vec.get(k, mpq(0)) - f * v
                if nv == 0:
                    vec.pop(k, None)
                else:
                    vec[k] = nv

    def add(self, vec: dict) -> bool:
        vec = self.reduce(vec)
        if not vec:
            return False
        c = min(vec)
        f = vec[c]
        row = {k: v / f for k, v in vec.items()}
        self.rows[c] = row
        return True


def build_path_algebra(q: Quiver, relations: Sequence = (), *, name: str = "A",
                       path_cap: int = DEFAULT_PATH_CAP) -> PathAlgebra:
    rels = [parse_relation(q, r) if isinstance(r, str) else r for r in relations]
    for r in rels:
        if any(len(w) < 2 for _, _, w in r):
            raise AdmissibilityError("relations must lie in the square of the arrow ideal")
    return PathAlgebra(q, rels, name=name, path_cap=path_cap)


# ---------------------------------------------------------------------------
# abstract algebras


class AbstractAlgebra:
    """A finite dimensional algebra given by structure constants.

    ``table[i][j]`` is the product ``b_i * b_j`` as a sparse dict.  A complete
    set of primitive orthogonal idempotents is supplied as vectors.
    """

    def __init__(self, dim: int, table, idempotents: Sequence[dict], *, name: str = "B",
                 labels: Sequence[str] | None = None):
        self.dim = dim
        self.table = table
        self.idempotents = [dict(e) for e in idempotents]
        self.name = name
        self.labels = list(labels) if labels else [f"b{k}" for k in range(dim)]

    def mul(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            if a == 0:
                continue
            row = self.table[i]
            for j, b in v.items():
                if b == 0:
                    continue
                for k, c in row[j].items():
                    out[k] = out.get(k, mpq(0)) + a * b * c
        return {k: c for k, c in out.items() if c != 0}

    def unit(self) -> dict:
        out: dict = {}
        for e in self.idempotents:
            for k, c in e.items():
                out[k] = out.get(k, mpq(0)) + c
        return {k: c for k, c in out.items() if c != 0}

    def left_mult_matrix(self, x: dict) -> Matrix:
        cols = []
        for j in range(self.dim):
            v = self.mul(x, {j: mpq(1)})
            cols.append([v.get(k, mpq(0)) for k in range(self.dim)])
        return Matrix.from_columns(cols, self.dim)

    def check_idempotents(self) -> None:
        es = self.idempotents
        for a, e in enumerate(es):
            for b, f in enumerate(es):
                prod = self.mul(e, f)
                want = e if a == b else {}
                if _clean(prod) != _clean(want):
                    raise ValueError("idempotents are not orthogonal")
        total = self.unit()
        for j in range(self.dim):
            if _clean(self.mul(total, {j: mpq(1)})) != {j: mpq(1)}:
                raise ValueError("idempotents do not sum to 1")

    def radical_basis(self) -> list[dict]:
        """Kernel of the trace form ``(x, y) -> tr(L_{xy})`` (characteristic 0)."""
        return trace_form_radical(self.dim, lambda i, j: self.table[i][j])

    def corner(self, j: int, i: int) -> list[dict]:
        """Basis of ``e_j A e_i``."""
        ej, ei = self.idempotents[j], self.idempotents[i]
        rows = []
        for k in range(self.dim):
            v = self.mul(self.mul(ej, {k: mpq(1)}), ei)
            rows.append([v.get(m, mpq(0)) for m in range(self.dim)])
        R, _ = rref(rows, QQ, self.dim)
        return [{m: x for m, x in enumerate(r) if x != 0} for r in R]

    def __repr__(self) -> str:
        return f"AbstractAlgebra({self.name}, dim={self.dim})"


def _clean(v: dict) -> dict:
    return {k: c for k, c in v.items() if c != 0}


def trace_form_radical(dim: int, product) -> list[dict]:
    """Radical of an algebra with ``product(i, j) -> dict`` via the trace form."""
    tr = [mpq(0)] * dim
    for k in range(dim):
        for m in range(dim):
            tr[k] += product(k, m).get(m, mpq(0))
    gram = [[sum((c * tr[k] for k, c in product(i, j).items()), mpq(0)) for j in range(dim)]
            for i in range(dim)]
    return [{k: x for k, x in enumerate(v) if x != 0} for v in kernel_basis(gram, QQ, dim)]


def abstract_from_path_algebra(A: PathAlgebra) -> AbstractAlgebra:
    idem = [{A.idempotent[v]: mpq(1)} for v in range(A.n)]
    labels = [A.basis_label(k) for k in range(A.dim)]
    return AbstractAlgebra(A.dim, A.mult, idem, name=A.name, labels=labels)


# ---------------------------------------------------------------------------
# local coefficient algebras


class LocalCoefficientAlgebra:
    """A local commutative finite dimensional algebra ``R``; ``b_0 = 1``.

    ``generators`` lists basis indices whose span maps onto ``m / m^2``; they
    become the loops of the tensor presentation.
    """

    def __init__(self, dim: int, table, *, labels: Sequence[str] | None = None,
                 generators: Sequence[int] | None = None, kind: str = "structure_constants",
                 t: int | None = None):
        self.dim = dim
        self.table = table
        self.labels = list(labels) if labels else [f"r{k}" for k in range(dim)]
        self.kind = kind
        self.t = t
        self._validate()
        self.generators = list(generators) if generators is not None else self._find_generators()

    @classmethod
    def truncated_polynomial(cls, t: int) -> "LocalCoefficientAlgebra":
        """``k[x]/(x^t)`` with basis ``1, x, ..., x^(t-1)``."""
        if t < 1:
            raise ValueError("t must be positive")
        table = [[({i + j: mpq(1)} if i + j < t else {}) for j in range(t)] for i in range(t)]
        labels = ["1"] + [("x" if k == 1 else f"x^{k}") for k in range(1, t)]
        return cls(t, table, labels=labels, generators=[1] if t > 1 else [],
                   kind="truncated_polynomial", t=t)

    @classmethod
    def from_dense(cls, constants, **kw) -> "LocalCoefficientAlgebra":
        """``constants[i][j][k]`` = coefficient of ``b_k`` in ``b_i b_j``."""
        d = len(constants)
        table = [[{k: mpq(c) for k, c in enumerate(constants[i][j]) if c != 0} for j in range(d)]
                 for i in range(d)]
        return cls(d, table, **kw)

    def mul(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.table[i][j].items():
                    out[k] = out.get(k, mpq(0)) + a * b * c
        return _clean(out)

    def mult_matrix(self, k: int) -> Matrix:
        """Matrix of multiplication by ``b_k`` on the basis."""
        cols = []
        for j in range(self.dim):
            v = self.table[k][j]
            cols.append([v.get(m, mpq(0)) for m in range(self.dim)])
        return Matrix.from_columns(cols, self.dim)

    def _validate(self) -> None:
        d = self.dim
        e = {0: mpq(1)}
        for j in range(d):
            if _clean(self.mul(e, {j: mpq(1)})) != {j: mpq(1)}:
                raise ValueError("basis element 0 is not the unit")
        for i in range(d):
            for j in range(d):
                if _clean(self.table[i][j]) != _clean(self.table[j][i]):
                    raise ValueError("coefficient algebra is not commutative")
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    lhs = self.mul(self.mul({i: 1}, {j: 1}), {k: 1})
                    rhs = self.mul({i: 1}, self.mul({j: 1}, {k: 1}))
                    if lhs != rhs:
                        raise ValueError("structure constants are not associative")
        # local: non-unit basis elements span a nilpotent ideal
        m = [{k: mpq(1)} for k in range(1, d)]
        power = m
        for _ in range(d + 1):
            if not power:
                break
            nxt = []
            for u in power:
                for v in m:
                    w = self.mul(u, v)
                    if w:
                        nxt.append(w)
            power = _span_basis(nxt, d)
            if any(w.get(0, 0) != 0 for w in power):
                raise ValueError("maximal ideal is not closed: algebra is not local")
        if power:
            raise ValueError("the span of non-unit basis elements is not nilpotent")

    def _find_generators(self) -> list[int]:
        d = self.dim
        m2 = [self.mul({i: 1}, {j: 1}) for i in range(1, d) for j in range(1, d)]
        base = _span_basis(m2, d)
        gens = []
        for k in range(1, d):
            trial = base + [{k: mpq(1)}]
            if len(_span_basis(trial, d)) > len(base):
                gens.append(k)
                base = _span_basis(trial, d)
        return gens

    def is_self_injective(self) -> bool:
        """A local algebra is self-injective iff its socle is one dimensional."""
        if self.dim == 1:
            return True
        rows = []
        for g in self.generators:
            rows.extend(self.mult_matrix(g).data)
        return self.dim - rank(rows, QQ) == 1

    def __repr__(self) -> str:
        if self.kind == "truncated_polynomial":
            return f"k[x]/(x^{self.t})"
        return f"LocalCoefficientAlgebra(dim={self.dim})"


def _span_basis(vecs: Sequence[dict], d: int) -> list[dict]:
    rows = [[v.get(k, mpq(0)) for k in range(d)] for v in vecs if v]
    if not rows:
        return []
    R, _ = rref(rows, QQ, d)
    return [{k: x for k, x in enumerate(r) if x != 0} for r in R]


# ---------------------------------------------------------------------------
# presentations of abstract algebras


@dataclass
class BasicPresentation:
    quiver: Quiver
    relations: list[Relation]
    arrow_elements: list[dict]  # arrow k -> element of the abstract algebra
    algebra: PathAlgebra = field(repr=False, default=None)
    embedding: list[dict] = field(repr=False, default=None)  # path basis -> abstract


def basic_presentation(B: AbstractAlgebra, *, arrow_prefix: str = "g",
                       name: str | None = None) -> BasicPresentation:
    """Gabriel quiver and relations of a basic algebra.

    Arrows ``i -> j`` are lifts of a basis of ``e_j (rad / rad^2) e_i``;
    relations are a complement of ``J K + K J`` in the kernel ``K`` of the
    map from paths (up to the nilpotency length) onto ``B``.
    """
    B.check_idempotents()
    n = len(B.idempotents)
    d = B.dim
    rad = B.radical_basis()
    if d - len(rad) != n:
        raise NotBasicError(
            f"semisimple quotient has dimension {d - len(rad)} but there are {n} idempotents"
        )
    rad2 = _span_basis([B.mul(u, v) for u in rad for v in rad], d)
    edges, elems = [], []
    for j in range(n):
        for i in range(n):
            ej, ei = B.idempotents[j], B.idempotents[i]
            corner = _span_basis([B.mul(B.mul(ej, r), ei) for r in rad], d)
            corner2 = _span_basis([B.mul(B.mul(ej, r), ei) for r in rad2], d)
            base = list(corner2)
            for v in corner:
                trial = _span_basis(base + [v], d)
                if len(trial) > len(base):
                    base = base + [v]
                    edges.append((f"{arrow_prefix}{len(edges) + 1}", i, j))
                    elems.append(v)
    q = Quiver.from_edges(n, edges)
    # nilpotency index of the radical
    N, power = 1, rad
    while power:
        power = _span_basis([B.mul(u, v) for u in power for v in rad], d)
        N += 1
    # N is now the least integer with rad^N = 0
    paths = [p for v in range(n) for p in q.paths_from(v, N)]

    def image(start, word):
        x = dict(B.idempotents[start])
        for k in word:
            x = B.mul(elems[k], x)
        return x

    imgs = [image(s, w) for s, w in paths]
    span = _span_basis(imgs, d)
    if len(span) != d:
        raise NotBasicError("arrows and idempotents do not generate the algebra")
    # kernel of path-space -> B, by endpoint blocks
    relations: list[Relation] = []
    for s in range(n):
        for t in range(n):
            block = [(p, im) for p, im in zip(paths, imgs)
                     if p[0] == s and _word_end(q, s, p[1]) == t and p[1]]
            if not block:
                continue
            M = [[im.get(k, mpq(0)) for _, im in block] for k in range(d)]
            K = kernel_basis(M, QQ, len(block))
            if not K:
                continue
            relations_block = _minimal_relations(K, s, t, paths, imgs, q, elems, B, N)
            relations.extend(
                tuple((c, s, block[j][0][1]) for j, c in enumerate(v) if c != 0)
                for v in relations_block
            )
    pres = BasicPresentation(q, relations, elems)
    A = PathAlgebra(q, relations, name=name or f"{B.name}'")
    if A.dim != d:
        raise AssertionError(f"presented algebra has dimension {A.dim}, expected {d}")
    pres.algebra = A
    pres.embedding = [image(A.source[k], A.words[k]) for k in range(A.dim)]
    return pres


def _minimal_relations(K, s, t, paths, imgs, q: Quiver, elems, B, N):
    """Complement, inside ``K`` (kernel vectors on the (s,t) block), of the
    part of the ideal generated by kernels of shorter blocks."""
    d = B.dim
    # all kernel elements of the full path space, used to build J K + K J
    block = [p for p in paths if p[0] == s and _word_end(q, s, p[1]) == t and p[1]]
    bidx = {p: c for c, p in enumerate(block)}
    generated = []
    # for each factorisation path = post * mid * pre with mid a kernel element
    # of a strictly smaller block: enumerate kernel elements of sub-blocks
    for mid_s in range(q.n):
        for mid_t in range(q.n):
            sub = [(p, im) for p, im in zip(paths, imgs)
                   if p[0] == mid_s and _word_end(q, mid_s, p[1]) == mid_t and p[1]]
            if not sub:
                continue
            M = [[im.get(k, mpq(0)) for _, im in sub] for k in range(d)]
            for kv in kernel_basis(M, QQ, len(sub)):
                for pre in q.paths_from(s, N):
                    if _word_end(q, s, pre[1]) != mid_s:
                        continue
                    for post in q.paths_from(mid_t, N):
                        if post[0] != mid_t or _word_end(q, mid_t, post[1]) != t:
                            continue
                        if not pre[1] and not post[1]:
                            continue
                        row = [mpq(0)] * len(block)
                        ok = False
                        for c, x in enumerate(kv):
                            if x == 0:
                                continue
                            w = pre[1] + sub[c][0][1] + post[1]
                            key = (s, w)
                            if key in bidx:
                                row[bidx[key]] += x
                                ok = True
                        if ok:
                            generated.append(row)
    base = rref(generated, QQ, len(block))[0] if generated else []
    chosen = []
    for v in K:
        trial = rref(base + [v], QQ, len(block))[0]
        if len(trial) > len(base):
            base = trial
            chosen.append(v)
    return chosen


# ---------------------------------------------------------------------------
# R (x) kQ


class TensorAlgebra(AbstractAlgebra):
    """``R (x) kQ`` on the basis ``r (x) p`` ordered lexicographically (r major)."""

    def __init__(self, R: LocalCoefficientAlgebra, kq: PathAlgebra):
        self.R = R
        self.kq = kq
        dr, dp = R.dim, kq.dim
        self.pairs = [(r, p) for r in range(dr) for p in range(dp)]
        pos = {rp: k for k, rp in enumerate(self.pairs)}
        table = []
        for (r1, p1) in self.pairs:
            row = []
            for (r2, p2) in self.pairs:
                out = {}
                for r3, a in R.table[r1][r2].items():
                    for p3, b in kq.mult[p1][p2].items():
                        out[pos[(r3, p3)]] = out.get(pos[(r3, p3)], mpq(0)) + a * b
                row.append(_clean(out))
            table.append(row)
        idem = [{pos[(0, kq.idempotent[v])]: mpq(1)} for v in range(kq.n)]
        labels = [f"{R.labels[r]}(x){kq.basis_label(p)}" for r, p in self.pairs]
        super().__init__(len(self.pairs), table, idem, name=f"{R}(x){kq.name}", labels=labels)
        self._pos = pos

    def pure(self, r: int, p: int) -> dict:
        return {self._pos[(r, p)]: mpq(1)}


def tensor_algebra(R: LocalCoefficientAlgebra, q, *, name: str = "Lambda") -> PathAlgebra:
    """The algebra ``R (x) kQ`` as a path algebra with relations.

    For ``k[x]/(x^t)`` the presentation is written down directly (one loop
    per vertex, nilpotency and commutation relations).  For other ``R`` the
    Gabriel quiver is computed from structure constants.  ``q`` is a
    quiver or an existing relation-free path algebra to reuse as ``kQ``.  Either way the
    result carries ``arrow_elements`` into the abstract tensor algebra and is
    checked against it.
    """
    if isinstance(q, PathAlgebra):
        kq, q = q, q.quiver
    else:
        kq = PathAlgebra(q, (), name="kQ")
    q.require_hereditary_input()
    if kq.relations:
        raise ValueError("hereditary factor must be a path algebra without relations")
    T = TensorAlgebra(R, kq)
    if R.kind == "truncated_polynomial":
        t = R.t
        if t == 1:
            A = PathAlgebra(q, (), name=name)
            elems = [T.pure(0, kq.arrow_basis[k]) for k in range(len(q.arrows))]
        else:
            edges = [(a.name, a.source, a.target) for a in q.arrows]
            edges += [(f"x{v + 1}", v, v) for v in range(q.n)]
            ql = Quiver.from_edges(q.n, edges)
            rels = [f"x{v + 1}^{t}" for v in range(q.n)]
            rels += [f"{a.name}*x{a.source + 1} - x{a.target + 1}*{a.name}" for a in q.arrows]
            A = build_path_algebra(ql, rels, name=name)
            elems = [T.pure(0, kq.arrow_basis[k]) for k in range(len(q.arrows))]
            elems += [T.pure(1, kq.idempotent[v]) for v in range(q.n)]
    else:
        pres = basic_presentation(T, arrow_prefix="y", name=name)
        A = pres.algebra
        elems = pres.arrow_elements
    if A.dim != R.dim * kq.dim:
        raise AssertionError(f"dim {A.dim} != dim R * dim kQ = {R.dim * kq.dim}")
    A.coefficients = R
    A.hereditary = kq
    A.tensor = T
    A.arrow_elements = elems
    A.embedding = [_image_of_word(T, A, k, elems) for k in range(A.dim)]
    return A


def _image_of_word(T: AbstractAlgebra, A: PathAlgebra, k: int, elems) -> dict:
    x = dict(T.idempotents[A.source[k]])
    for a in A.words[k]:
        x = T.mul(elems[a], x)
    return x


def compare_presentations(A: PathAlgebra, B: PathAlgebra) -> dict:
    """Invariants that must agree for isomorphic algebras."""
    return {
        "dim": (A.dim, B.dim),
        "radical_series": (A.radical_series_dims(), B.radical_series_dims()),
        "cartan": (A.cartan_matrix(), B.cartan_matrix()),
    }
