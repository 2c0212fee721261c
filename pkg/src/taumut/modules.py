"""Finite dimensional modules as quiver representations.

A :class:`Representation` stores one vector space per vertex (by
dimension) and one matrix per arrow of the presenting quiver of its
algebra.  Loops count as arrows.  Everything is exact over the rationals.
"""
from __future__ import annotations

import itertools
from typing import Optional, Sequence

from gmpy2 import mpq

from .algebra import PathAlgebra, Quiver, _word_end
from .linalg import (
    QQ,
    Matrix,
    PrimeField,
    block_diag,
    complement_indices,
    inverse,
    kernel_basis,
    parse_matrix,
    rank,
    rref,
    serialize_matrix,
    solve_all,
)


class AlgebraMismatch(ValueError):
    pass


class DecompositionError(RuntimeError):
    """Fitting sweep exhausted without splitting a decomposable module."""


def kron(a: Matrix, b: Matrix) -> Matrix:
    rows = []
    for ra in a.data:
        for rb in b.data:
            rows.append([x * y for x in ra for y in rb])
    return Matrix(a.rows * b.rows, a.cols * b.cols, rows)


def _columns_matrix(vectors: Sequence[Sequence], rows: int) -> Matrix:
    return Matrix.from_columns(list(vectors), rows)


def _column_space(m: Matrix) -> list[list]:
    if m.rows == 0 or m.cols == 0:
        return []
    return rref(m.transpose(), QQ, m.rows)[0]


def _solve_columns(basis: Matrix, targets: Matrix) -> Matrix:
    """``X`` with ``basis @ X = targets``; ``basis`` has full column rank."""
    if basis.cols == 0:
        return Matrix(0, targets.cols)
    sols, _ = solve_all(basis, targets.columns())
    if any(s is None for s in sols):
        raise ValueError("subspace is not invariant under the action")
    return Matrix.from_columns(sols, basis.cols)


class Representation:
    """A representation of the quiver of ``algebra`` satisfying its relations.

    Args:
        algebra: a :class:`PathAlgebra`.
        dims: dimension of the space at each vertex.
        act: one matrix per arrow, of shape ``dims[target] x dims[source]``.
        name: optional display name.
        check: verify shapes and relations.
    """

    def __init__(self, algebra: PathAlgebra, dims: Sequence[int], act: Sequence[Matrix],
                 name: Optional[str] = None, check: bool = True):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        self.act = tuple(act)
        self.name = name
        self._basis_cache: dict = {}
        if check:
            self._validate()

    # -- basic data -----------------------------------------------------------
    @property
    def dim(self) -> int:
        return sum(self.dims)

    @property
    def n(self) -> int:
        return self.algebra.n

    def offsets(self) -> list[int]:
        out, s = [], 0
        for d in self.dims:
            out.append(s)
            s += d
        return out

    def is_zero(self) -> bool:
        return self.dim == 0

    def _validate(self) -> None:
        A = self.algebra
        if len(self.dims) != A.n:
            raise ValueError(f"expected {A.n} vertex dimensions, got {len(self.dims)}")
        if len(self.act) != len(A.arrows):
            raise ValueError(f"expected {len(A.arrows)} arrow matrices, got {len(self.act)}")
        for a, m in zip(A.arrows, self.act):
            if m.shape != (self.dims[a.target], self.dims[a.source]):
                raise ValueError(
                    f"arrow {a.name} needs shape {(self.dims[a.target], self.dims[a.source])}, got {m.shape}"
                )
        for rel in A.relations:
            if not self.relation_value(rel).is_zero():
                raise ValueError("representation violates a defining relation")

    def path_matrix(self, start: int, word) -> Matrix:
        m = Matrix.identity(self.dims[start])
        for k in word:
            m = self.act[k] @ m
        return m

    def relation_value(self, rel) -> Matrix:
        q = self.algebra.quiver
        s = rel[0][1]
        t = _word_end(q, s, rel[0][2])
        out = Matrix.zero(self.dims[t], self.dims[s])
        for c, start, word in rel:
            out = out + self.path_matrix(start, word).scale(c)
        return out

    def basis_action(self, k: int) -> Matrix:
        """Action of path-basis element ``k`` as a map ``V_source -> V_target``."""
        m = self._basis_cache.get(k)
        if m is None:
            A = self.algebra
            m = self.path_matrix(A.source[k], A.words[k])
            self._basis_cache[k] = m
        return m

    def element_action(self, x: dict, source: int, target: int) -> Matrix:
        A = self.algebra
        out = Matrix.zero(self.dims[target], self.dims[source])
        for k, c in x.items():
            if A.source[k] == source and A.target[k] == target:
                out = out + self.basis_action(k).scale(c)
        return out

    def dim_vector(self) -> tuple[int, ...]:
        return self.dims

    def __repr__(self) -> str:
        label = self.name or "?"
        return f"<{label} dims={list(self.dims)}>"

    def renamed(self, name: Optional[str]) -> "Representation":
        r = Representation(self.algebra, self.dims, self.act, name, check=False)
        r._basis_cache = self._basis_cache
        return r

    def same_data(self, other: "Representation") -> bool:
        return self.algebra is other.algebra and self.dims == other.dims and self.act == other.act

    def identity(self) -> "ModuleMorphism":
        return ModuleMorphism(self, self, [Matrix.identity(d) for d in self.dims])

    def zero_map(self, other: "Representation") -> "ModuleMorphism":
        return ModuleMorphism(self, other, [Matrix.zero(e, d) for d, e in zip(self.dims, other.dims)])

    # -- constructions ----------------------------------------------------------
    def dual(self, opposite: PathAlgebra) -> "Representation":
        """``D M = Hom_k(M, k)`` as a module over the opposite algebra."""
        return Representation(opposite, self.dims, [m.transpose() for m in self.act], check=False)

    def subrepresentation(self, bases: Sequence[Sequence[Sequence]]) -> tuple["Representation", "ModuleMorphism"]:
        """Submodule spanned at each vertex by ``bases[i]`` (invariant), with its inclusion."""
        A = self.algebra
        B = [_columns_matrix(bases[i], self.dims[i]) for i in range(self.n)]
        act = []
        for a, m in zip(A.arrows, self.act):
            act.append(_solve_columns(B[a.target], m @ B[a.source]))
        sub = Representation(A, [len(b) for b in bases], act, check=False)
        return sub, ModuleMorphism(sub, self, B)

    def quotient(self, bases: Sequence[Sequence[Sequence]]) -> tuple["Representation", "ModuleMorphism"]:
        """Quotient by the invariant subspaces ``bases``, with the projection."""
        A = self.algebra
        proj, lift = [], []
        for i in range(self.n):
            d = self.dims[i]
            sub = list(bases[i])
            comp = complement_indices(sub, d)
            E = [[mpq(1) if r == c else mpq(0) for r in range(d)] for c in comp]
            if d == 0:
                proj.append(Matrix(0, 0))
                lift.append(Matrix(0, 0))
                continue
            full = _columns_matrix(sub + E, d)
            inv = inverse(full)
            proj.append(inv.submatrix(range(len(sub), d), range(d)))
            lift.append(_columns_matrix(E, d))
        act = [proj[a.target] @ m @ lift[a.source] for a, m in zip(A.arrows, self.act)]
        quo = Representation(A, [p.rows for p in proj], act, check=False)
        q = ModuleMorphism(self, quo, proj)
        q.section = lift  # k-linear right inverse of the projection
        return quo, q


class ModuleMorphism:
    """A morphism of representations, one matrix per vertex."""

    def __init__(self, source: Representation, target: Representation, blocks: Sequence[Matrix],
                 check: bool = False):
        self.source = source
        self.target = target
        self.blocks = tuple(blocks)
        if check:
            self.verify()

    def verify(self) -> None:
        A = self.source.algebra
        for i, b in enumerate(self.blocks):
            if b.shape != (self.target.dims[i], self.source.dims[i]):
                raise ValueError("block shape mismatch")
        for k, a in enumerate(A.arrows):
            lhs = self.blocks[a.target] @ self.source.act[k]
            rhs = self.target.act[k] @ self.blocks[a.source]
            if lhs != rhs:
                raise ValueError(f"map does not commute with arrow {a.name}")

    def __matmul__(self, other: "ModuleMorphism") -> "ModuleMorphism":
        """``self @ other`` is ``self`` after ``other``."""
        return ModuleMorphism(other.source, self.target,
                              [b @ c for b, c in zip(self.blocks, other.blocks)])

    def __add__(self, other: "ModuleMorphism") -> "ModuleMorphism":
        return ModuleMorphism(self.source, self.target, [b + c for b, c in zip(self.blocks, other.blocks)])

    def scale(self, c) -> "ModuleMorphism":
        return ModuleMorphism(self.source, self.target, [b.scale(c) for b in self.blocks])

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def ranks(self) -> list[int]:
        return [rank(b) for b in self.blocks]

    def is_injective(self) -> bool:
        return all(r == d for r, d in zip(self.ranks(), self.source.dims))

    def is_surjective(self) -> bool:
        return all(r == d for r, d in zip(self.ranks(), self.target.dims))

    def is_isomorphism(self) -> bool:
        return self.source.dims == self.target.dims and self.is_injective()

    def total(self) -> Matrix:
        return block_diag(self.blocks)

    def kernel(self) -> tuple[Representation, "ModuleMorphism"]:
        bases = [kernel_basis(b, QQ, b.cols) if b.cols else [] for b in self.blocks]
        return self.source.subrepresentation(bases)

    def image_bases(self) -> list[list]:
        return [_column_space(b) for b in self.blocks]

    def image(self) -> tuple[Representation, "ModuleMorphism"]:
        return self.target.subrepresentation(self.image_bases())

    def cokernel(self) -> tuple[Representation, "ModuleMorphism"]:
        return self.target.quotient(self.image_bases())

    def __repr__(self) -> str:
        return f"<morphism {self.source!r} -> {self.target!r}>"


def direct_sum(mods: Sequence[Representation], name: Optional[str] = None) -> Representation:
    if not mods:
        raise ValueError("direct_sum needs at least one summand; use zero_module")
    A = mods[0].algebra
    for m in mods:
        if m.algebra is not A:
            raise AlgebraMismatch("summands over different algebras")
    dims = [sum(m.dims[i] for m in mods) for i in range(A.n)]
    act = [block_diag([m.act[k] for m in mods]) for k in range(len(A.arrows))]
    return Representation(A, dims, act, name, check=False)


def sum_injections(mods: Sequence[Representation], total: Representation) -> list[ModuleMorphism]:
    """Canonical inclusions of the summands into ``direct_sum(mods)``."""
    out = []
    for j, m in enumerate(mods):
        blocks = []
        for i in range(total.n):
            before = sum(x.dims[i] for x in mods[:j])
            rows = [[mpq(1) if r == before + c else mpq(0) for c in range(m.dims[i])]
                    for r in range(total.dims[i])]
            blocks.append(Matrix(total.dims[i], m.dims[i], rows))
        out.append(ModuleMorphism(m, total, blocks))
    return out


def sum_projections(mods: Sequence[Representation], total: Representation) -> list[ModuleMorphism]:
    return [ModuleMorphism(total, f.source, [b.transpose() for b in f.blocks])
            for f in sum_injections(mods, total)]


def zero_module(A: PathAlgebra) -> Representation:
    return Representation(A, [0] * A.n, [Matrix(0, 0) for _ in A.arrows], "0", check=False)


def hstack_maps(maps: Sequence[ModuleMorphism], source: Representation) -> ModuleMorphism:
    """``(f_1, ..., f_k) : X_1 + ... + X_k -> Y`` with ``source`` the direct sum."""
    target = maps[0].target
    blocks = []
    for i in range(target.n):
        rows = [[] for _ in range(target.dims[i])]
        for f in maps:
            for r in range(target.dims[i]):
                rows[r].extend(f.blocks[i].data[r])
        blocks.append(Matrix(target.dims[i], source.dims[i], rows))
    return ModuleMorphism(source, target, blocks)


def vstack_maps(maps: Sequence[ModuleMorphism], target: Representation) -> ModuleMorphism:
    """``(f_1; ...; f_k) : X -> Y_1 + ... + Y_k``."""
    source = maps[0].source
    blocks = []
    for i in range(source.n):
        rows = []
        for f in maps:
            rows.extend(f.blocks[i].data)
        blocks.append(Matrix(target.dims[i], source.dims[i], rows))
    return ModuleMorphism(source, target, blocks)


# ---------------------------------------------------------------------------
# standard modules


def projective(A: PathAlgebra, i: int) -> Representation:
    """``P_i = A e_i``; the basis at vertex ``j`` is the paths ``i -> j``."""
    at = [[k for k in range(A.dim) if A.source[k] == i and A.target[k] == j] for j in range(A.n)]
    pos = {k: (j, r) for j in range(A.n) for r, k in enumerate(at[j])}
    act = []
    for arr, ab in zip(A.arrows, A.arrow_basis):
        rows = [[mpq(0)] * len(at[arr.source]) for _ in at[arr.target]]
        for c, b in enumerate(at[arr.source]):
            for k, v in A.mult[ab][b].items():
                rows[pos[k][1]][c] += v
        act.append(Matrix(len(at[arr.target]), len(at[arr.source]), rows))
    rep = Representation(A, [len(x) for x in at], act, f"P{i + 1}", check=False)
    rep.path_index = at
    return rep


def injective(A: PathAlgebra, i: int) -> Representation:
    """``I_i = D(e_i A)``; the basis at vertex ``j`` is dual to the paths ``j -> i``."""
    at = [[k for k in range(A.dim) if A.target[k] == i and A.source[k] == j] for j in range(A.n)]
    pos = {k: r for j in range(A.n) for r, k in enumerate(at[j])}
    act = []
    for arr, ab in zip(A.arrows, A.arrow_basis):
        # (a.phi)(y) = phi(y a): row y at target, column b at source
        rows = [[mpq(0)] * len(at[arr.source]) for _ in at[arr.target]]
        for r, y in enumerate(at[arr.target]):
            for k, v in A.mult[y][ab].items():
                rows[r][pos[k]] += v
        act.append(Matrix(len(at[arr.target]), len(at[arr.source]), rows))
    rep = Representation(A, [len(x) for x in at], act, f"I{i + 1}", check=False)
    rep.path_index = at
    return rep


def simple(A: PathAlgebra, i: int) -> Representation:
    dims = [1 if j == i else 0 for j in range(A.n)]
    act = [Matrix.zero(dims[a.target], dims[a.source]) for a in A.arrows]
    return Representation(A, dims, act, f"S{i + 1}", check=False)


def standard_modules(A: PathAlgebra) -> dict[str, Representation]:
    out = {}
    for i in range(A.n):
        out[f"P{i + 1}"] = projective(A, i)
        out[f"I{i + 1}"] = injective(A, i)
        out[f"S{i + 1}"] = simple(A, i)
    return out


def projective_element_map(P: Representation, i: int, M: Representation, v: Sequence) -> ModuleMorphism:
    """The map ``P_i -> M`` sending ``e_i`` to ``v in M_i``."""
    A = P.algebra
    blocks = []
    for j in range(A.n):
        cols = []
        for k in P.path_index[j]:
            cols.append(M.basis_action(k).apply(v))
        blocks.append(Matrix.from_columns(cols, M.dims[j]) if cols else Matrix(M.dims[j], 0))
    return ModuleMorphism(P, M, blocks)


# ---------------------------------------------------------------------------
# Hom spaces


def hom_system(M: Representation, N: Representation) -> tuple[list[list], int, list[int]]:
    """Linear equations cutting out ``Hom(M, N)``.

    Unknowns are the entries of the blocks ``f_i`` (row-major, vertex by
    vertex); each arrow ``a: s -> t`` contributes ``f_t M(a) - N(a) f_s = 0``.
    Returns ``(rows, nvars, offsets)``.
    """
    if M.algebra is not N.algebra:
        raise AlgebraMismatch("Hom between modules over different algebras")
    A = M.algebra
    off, s = [], 0
    for i in range(A.n):
        off.append(s)
        s += N.dims[i] * M.dims[i]
    nvars = s
    rows = []
    for k, a in enumerate(A.arrows):
        Ma, Na = M.act[k], N.act[k]
        ds, dt = a.source, a.target
        for r in range(N.dims[dt]):
            for c in range(M.dims[ds]):
                row = {}
                # (f_t Ma)[r,c] = sum_m f_t[r,m] Ma[m,c]
                for m in range(M.dims[dt]):
                    x = Ma.data[m][c]
                    if x != 0:
                        key = off[dt] + r * M.dims[dt] + m
                        row[key] = row.get(key, 0) + x
                # (Na f_s)[r,c] = sum_m Na[r,m] f_s[m,c]
                for m in range(N.dims[ds]):
                    x = Na.data[r][m]
                    if x != 0:
                        key = off[ds] + m * M.dims[ds] + c
                        row[key] = row.get(key, 0) - x
                row = {kk: v for kk, v in row.items() if v != 0}
                if row:
                    dense = [mpq(0)] * nvars
                    for kk, v in row.items():
                        dense[kk] = mpq(v)
                    rows.append(dense)
    return rows, nvars, off


def hom_space(M: Representation, N: Representation) -> list[ModuleMorphism]:
    """Basis of ``Hom(M, N)`` from a single kernel computation."""
    rows, nvars, off = hom_system(M, N)
    A = M.algebra
    if nvars == 0:
        return []
    K = kernel_basis(rows, QQ, nvars) if rows else [
        [mpq(1) if j == i else mpq(0) for j in range(nvars)] for i in range(nvars)]
    out = []
    for v in K:
        blocks = []
        for i in range(A.n):
            r_, c_ = N.dims[i], M.dims[i]
            seg = v[off[i]: off[i] + r_ * c_]
            blocks.append(Matrix(r_, c_, [seg[r * c_:(r + 1) * c_] for r in range(r_)]))
        out.append(ModuleMorphism(M, N, blocks))
    return out


def hom_dim(M: Representation, N: Representation) -> int:
    return len(hom_space(M, N))


def hom_dim_mod_p(M: Representation, N: Representation, p: int) -> int:
    """``dim Hom(M, N)`` with the same equations reduced modulo ``p``."""
    rows, nvars, _ = hom_system(M, N)
    if not rows:
        return nvars
    return nvars - rank(rows, PrimeField(p))


def end_algebra_trace_rank(M: Representation, basis: Sequence[ModuleMorphism] | None = None) -> int:
    """``dim End(M)/rad End(M)`` via the trace form of the action on ``M``."""
    basis = hom_space(M, M) if basis is None else basis
    n = len(basis)
    G = [[mpq(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            t = mpq(0)
            for bi, bj in zip(basis[i].blocks, basis[j].blocks):
                if bi.rows:
                    p = bi @ bj
                    t += sum((p.data[k][k] for k in range(p.rows)), mpq(0))
            G[i][j] = G[j][i] = t
    return rank(G)


def is_indecomposable(M: Representation) -> bool:
    if M.dim == 0:
        raise ValueError("the zero module is not indecomposable")
    return end_algebra_trace_rank(M) == 1


_SWEEP_COEFFS = (1, -1, 2)


def _sweep(basis: Sequence[ModuleMorphism], max_terms: int = 3):
    """Deterministic sweep: basis elements, then fixed generic combinations,
    then all sums of up to ``max_terms`` elements with small coefficients."""
    n = len(basis)
    for f in basis:
        yield f
    if n > 1:
        for w in ((1,), (2,), (3,)):
            f = basis[0]
            for k in range(1, n):
                f = f + basis[k].scale(w[0] * k + 1 + k * k)
            yield f
    for t in range(2, min(max_terms, n) + 1):
        for idx in itertools.combinations(range(n), t):
            for coeffs in itertools.product(_SWEEP_COEFFS, repeat=t):
                f = basis[idx[0]].scale(coeffs[0])
                for c, k in zip(coeffs[1:], idx[1:]):
                    f = f + basis[k].scale(c)
                yield f


def is_isomorphic(M: Representation, N: Representation, with_witness: bool = False):
    """Isomorphism test with a verified witness.

    Returns a bool, or ``(bool, witness-or-None)`` when ``with_witness``.
    """
    def ret(ok, w=None):
        return (ok, w) if with_witness else ok

    if M.algebra is not N.algebra:
        raise AlgebraMismatch("isomorphism test across algebras")
    if M.dims != N.dims:
        return ret(False)
    if M.dim == 0:
        return ret(True, M.zero_map(N))
    if M.same_data(N):
        return ret(True, M.identity())
    H = hom_space(M, N)
    if not H:
        return ret(False)
    if len(hom_space(N, M)) != len(H) or len(hom_space(M, M)) != len(H):
        # dim Hom(M,-) and dim Hom(-,M) determine a module up to iso only
        # together; a mismatch here already rules out M = N
        return ret(False)
    for f in _sweep(H):
        if f.is_isomorphism():
            f.verify()
            return ret(True, f)
    return ret(False)


def _split_by(M: Representation, phi: ModuleMorphism):
    """Fitting split ``M = ker(phi^N) + im(phi^N)`` if nontrivial."""
    p = phi
    for _ in range(max(1, M.dim.bit_length())):
        p = p @ p
    r = sum(p.ranks())
    if r == 0 or r == M.dim:
        return None
    ker, ki = p.kernel()
    im, ii = p.image()
    return (ker, ki), (im, ii)


def decompose(M: Representation, reverse: bool = False) -> list[tuple[Representation, ModuleMorphism, ModuleMorphism]]:
    """Krull-Schmidt decomposition.

    Returns ``(summand, inclusion, projection)`` triples with
    ``sum inclusion @ projection = id``.
    """
    if M.dim == 0:
        return []
    basis = hom_space(M, M)
    if end_algebra_trace_rank(M, basis) == 1:
        return [(M, M.identity(), M.identity())]
    if reverse:
        basis = basis[::-1]
    for phi in _sweep(basis):
        split = _split_by(M, phi)
        if split is None:
            continue
        (K, ki), (I, ii) = split
        # projections from the direct sum decomposition M = K + I
        incl = hstack_maps([ki, ii], direct_sum([K, I]))
        inv = [inverse(b) if b.rows else b for b in incl.blocks]
        S = direct_sum([K, I])
        pk, pi = sum_projections([K, I], S)
        back = ModuleMorphism(M, S, inv)
        out = []
        for part, inc, pr in ((K, ki, pk), (I, ii, pi)):
            for sub, a, b in decompose(part, reverse):
                out.append((sub, inc @ a, b @ (pr @ back)))
        return out
    raise DecompositionError(f"could not split {M!r}; End/rad has dimension {end_algebra_trace_rank(M, basis)}")


# ---------------------------------------------------------------------------
# change of rings


def induce(A: PathAlgebra, M: Representation, name: Optional[str] = None,
           dual_coefficients: bool = False) -> Representation:
    """``A (x)_{kQ} M`` for ``A`` built by :func:`tensor_algebra`.

    The space at vertex ``i`` is ``M_i (x) R`` (index ``m * dim R + r``); the
    presentation arrow with tensor element ``sum c (r (x) p)`` acts by
    ``sum c M(p) (x) L_r``.

    Args:
        dual_coefficients: build ``D(R) (x)_k M`` instead, with ``R`` acting
            on ``D(R)`` in the dual basis.
    """
    R, kq, T = A.coefficients, A.hereditary, A.tensor
    if M.algebra is not kq:
        raise AlgebraMismatch("induce expects a module over the hereditary factor")
    dr = R.dim
    Lr = [R.mult_matrix(r) for r in range(dr)]
    if dual_coefficients:
        Lr = [m.T for m in Lr]
        name = name or (f"D(R)(x){M.name}" if M.name else None)
    dims = [d * dr for d in M.dims]
    act = []
    for arr, el in zip(A.arrows, A.arrow_elements):
        out = Matrix.zero(dims[arr.target], dims[arr.source])
        for k, c in el.items():
            r, p = T.pairs[k]
            if kq.source[p] != arr.source or kq.target[p] != arr.target:
                continue
            out = out + kron(M.basis_action(p), Lr[r]).scale(c)
        act.append(out)
    if name is None and M.name:
        name = M.name if _is_standard_name(M.name) else f"Ind({M.name})"
    return Representation(A, dims, act, name)


def _is_standard_name(name: str) -> bool:
    return len(name) >= 2 and name[0] in "PI" and name[1:].isdigit()


def restrict(X: Representation, name: Optional[str] = None) -> Representation:
    """Restriction of scalars along ``kQ -> A``."""
    A = X.algebra
    kq, T = A.hereditary, A.tensor
    inv = _embedding_inverse(A)
    act = []
    for k, arr in enumerate(kq.arrows):
        target_el = T.pure(0, kq.arrow_basis[k])
        x = _in_path_basis(inv, target_el, A.dim)
        act.append(X.element_action(x, arr.source, arr.target))
    return Representation(kq, X.dims, act, name)


def _embedding_inverse(A: PathAlgebra) -> Matrix:
    inv = getattr(A, "_embedding_inv", None)
    if inv is None:
        d = A.dim
        cols = [[e.get(m, mpq(0)) for m in range(d)] for e in A.embedding]
        inv = inverse(Matrix.from_columns(cols, d))
        A._embedding_inv = inv
    return inv


def _in_path_basis(inv: Matrix, el: dict, d: int) -> dict:
    v = inv.apply([el.get(m, mpq(0)) for m in range(d)])
    return {k: c for k, c in enumerate(v) if c != 0}


# ---------------------------------------------------------------------------
# serialization


def serialize_module(M: Representation, algebra_id: str | None = None) -> str:
    lines = [f"module {M.name or '?'} over {algebra_id or M.algebra.name}",
             "dims = [" + ",".join(str(d) for d in M.dims) + "]"]
    for a, m in zip(M.algebra.arrows, M.act):
        lines.append(f"act {a.name} = {serialize_matrix(m)}")
    return "\n".join(lines) + "\n"


def parse_module(text: str, A: PathAlgebra) -> Representation:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    head = lines[0].split()
    if len(head) != 4 or head[0] != "module" or head[2] != "over":
        raise ValueError(f"bad module header: {lines[0]!r}")
    name = None if head[1] == "?" else head[1]
    key, _, val = lines[1].partition("=")
    if key.strip() != "dims":
        raise ValueError("second line must give dims")
    dims = [int(x) for x in val.strip().strip("[]").split(",") if x.strip()]
    acts = {}
    for ln in lines[2:]:
        key, _, val = ln.partition("=")
        tag, gen = key.split()
        if tag != "act":
            raise ValueError(f"unexpected line {ln!r}")
        acts[gen] = parse_matrix(val)
    act = [acts[a.name] for a in A.arrows]
    return Representation(A, dims, act, name)
