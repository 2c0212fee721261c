"""Projective presentations, Ext^1, the AR translate and related functors."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from gmpy2 import mpq

from .algebra import PathAlgebra, Quiver
from .linalg import QQ, Matrix, block_diag, complement_indices, rank, rref
from .modules import (
    ModuleMorphism,
    Representation,
    direct_sum,
    hom_space,
    hstack_maps,
    injective,
    is_isomorphic,
    projective,
    projective_element_map,
    vstack_maps,
    zero_module,
)


class ExtensionRefused(ValueError):
    """A universal (co)extension was requested although Ext^1 vanishes."""


# ---------------------------------------------------------------------------
# algebra-level caches


def projectives(A: PathAlgebra) -> list[Representation]:
    ps = getattr(A, "_projectives", None)
    if ps is None:
        ps = [projective(A, i) for i in range(A.n)]
        A._projectives = ps
    return ps


def injectives(A: PathAlgebra) -> list[Representation]:
    js = getattr(A, "_injectives", None)
    if js is None:
        js = [injective(A, i) for i in range(A.n)]
        A._injectives = js
    return js


def opposite(A: PathAlgebra) -> PathAlgebra:
    """The opposite algebra, on the quiver with every arrow reversed."""
    op = getattr(A, "_opposite", None)
    if op is not None:
        return op
    q = A.quiver
    qop = Quiver(q.n, tuple(type(a)(a.name, a.target, a.source) for a in q.arrows))
    rels = []
    for rel in A.relations:
        terms = []
        for c, start, word in rel:
            end = start
            for k in word:
                end = q.arrows[k].target
            terms.append((c, end, tuple(reversed(word))))
        rels.append(tuple(terms))
    op = PathAlgebra(qop, rels, name=f"{A.name}^op")
    if op.dim != A.dim:
        raise AssertionError("opposite algebra has the wrong dimension")
    A._opposite = op
    op._opposite = A
    return op


def dual(M: Representation) -> Representation:
    return M.dual(opposite(M.algebra))


# ---------------------------------------------------------------------------
# presentations


def top_complements(M: Representation) -> list[list[list]]:
    """Vectors at each vertex spanning a complement of ``rad M``."""
    A = M.algebra
    out = []
    for i in range(A.n):
        imgs = []
        for k, a in enumerate(A.arrows):
            if a.target == i:
                imgs.extend(M.act[k].columns())
        comp = complement_indices(imgs, M.dims[i]) if M.dims[i] else []
        out.append([[mpq(1) if r == c else mpq(0) for r in range(M.dims[i])] for c in comp])
    return out


@dataclass
class ProjectiveCover:
    P: Representation
    summands: list[int]  # vertex of each indecomposable summand
    cover: ModuleMorphism


def projective_cover(M: Representation) -> ProjectiveCover:
    cached = getattr(M, "_cover", None)
    if cached is not None:
        return cached
    A = M.algebra
    ps = projectives(A)
    summands, maps = [], []
    for i, vecs in enumerate(top_complements(M)):
        for v in vecs:
            summands.append(i)
            maps.append(v)
    if not summands:
        Z = zero_module(A)
        pc = ProjectiveCover(Z, [], Z.zero_map(M))
    else:
        mods = [ps[i] for i in summands]
        P = direct_sum(mods)
        f = hstack_maps([projective_element_map(ps[i], i, M, v) for i, v in zip(summands, maps)], P)
        if not f.is_surjective():
            raise AssertionError("projective cover is not surjective")
        pc = ProjectiveCover(P, summands, f)
    M._cover = pc
    return pc


@dataclass
class ProjectivePresentation:
    P1: Representation
    P0: Representation
    d: ModuleMorphism
    cover: ModuleMorphism
    summands1: list[int]
    summands0: list[int]
    kernel: Representation
    kernel_incl: ModuleMorphism


def min_proj_presentation(M: Representation) -> ProjectivePresentation:
    cached = getattr(M, "_presentation", None)
    if cached is not None:
        return cached
    c0 = projective_cover(M)
    K, inc = c0.cover.kernel()
    c1 = projective_cover(K)
    d = inc @ c1.cover
    pres = ProjectivePresentation(c1.P, c0.P, d, c0.cover, c1.summands, c0.summands, K, inc)
    M._presentation = pres
    return pres


def is_projective(M: Representation) -> bool:
    return projective_cover(M).P.dim == M.dim


def is_injective(M: Representation) -> bool:
    return is_projective(dual(M))


def proj_dimension(M: Representation, cap: int = 8) -> Optional[int]:
    """Projective dimension, or ``None`` when it exceeds ``cap``."""
    if cap < 0:
        raise ValueError("cap must be non-negative")
    X = M
    for k in range(cap + 1):
        if is_projective(X):
            return k
        X = min_proj_presentation(X).kernel
    return None


def _components(d: ModuleMorphism, s1: Sequence[int], s0: Sequence[int]) -> list[list[dict]]:
    """Elements ``a_{lk} in e_{i_k} A e_{j_l}`` with ``d = (. a_{lk})``."""
    A = d.source.algebra
    ps = projectives(A)
    comp = []
    for l, j in enumerate(s0):
        row = []
        for k, i in enumerate(s1):
            # generator e_i of summand k sits at vertex i
            col = sum(ps[x].dims[i] for x in s1[:k]) + ps[i].path_index[i].index(A.idempotent[i])
            block = d.blocks[i]
            start = sum(ps[x].dims[i] for x in s0[:l])
            a = {}
            for r, path in enumerate(ps[j].path_index[i]):
                c = block.data[start + r][col]
                if c != 0:
                    a[path] = c
            row.append(a)
        comp.append(row)
    return comp


def _nakayama_block(A: PathAlgebra, a: dict, i: int, j: int) -> list[Matrix]:
    """Per-vertex matrices of ``nu(. a) : I_i -> I_j`` for ``a in e_i A e_j``."""
    Ii, Ij = injectives(A)[i], injectives(A)[j]
    out = []
    for v in range(A.n):
        bs = Ii.path_index[v]
        ys = Ij.path_index[v]
        pos = {b: c for c, b in enumerate(bs)}
        rows = [[mpq(0)] * len(bs) for _ in ys]
        for r, y in enumerate(ys):
            for p, coef in a.items():
                for k, v2 in A.mult[p][y].items():
                    if k in pos:
                        rows[r][pos[k]] += coef * v2
        out.append(Matrix(len(ys), len(bs), rows))
    return out


def tau(M: Representation) -> Representation:
    """``tau M = ker(nu d)`` for a minimal presentation ``d : P1 -> P0``."""
    cached = getattr(M, "_tau", None)
    if cached is not None:
        return cached
    A = M.algebra
    pres = min_proj_presentation(M)
    if not pres.summands1:
        out = zero_module(A)
    else:
        js = injectives(A)
        I1 = direct_sum([js[i] for i in pres.summands1])
        if not pres.summands0:
            raise AssertionError("nonzero P1 with zero P0")
        I0 = direct_sum([js[j] for j in pres.summands0])
        comp = _components(pres.d, pres.summands1, pres.summands0)
        nak = [[_nakayama_block(A, comp[l][k], i, j) for k, i in enumerate(pres.summands1)]
               for l, j in enumerate(pres.summands0)]
        blocks = []
        for v in range(A.n):
            rows = []
            for l, j in enumerate(pres.summands0):
                parts = [nb[v] for nb in nak[l]]
                for r in range(js[j].dims[v]):
                    row = []
                    for p in parts:
                        row.extend(p.data[r])
                    rows.append(row)
            blocks.append(Matrix(I0.dims[v], I1.dims[v], rows))
        nd = ModuleMorphism(I1, I0, blocks, check=True)
        out, _ = nd.kernel()
    M._tau = out
    return out


def tau_inverse(M: Representation) -> Representation:
    """``tau^{-1} = D tau D`` computed over the opposite algebra."""
    cached = getattr(M, "_tau_inv", None)
    if cached is not None:
        return cached
    A = M.algebra
    out = tau(dual(M)).dual(A)
    M._tau_inv = out
    return out


# ---------------------------------------------------------------------------
# Ext^1 and extensions


def _flat(f: ModuleMorphism) -> list:
    out = []
    for b in f.blocks:
        for r in b.data:
            out.extend(r)
    return out


@dataclass
class ExtSpace:
    """``Ext^1(source, target)`` with cocycles ``K -> target`` where ``K`` is
    the first syzygy of ``source`` inside its projective cover."""

    source: Representation
    target: Representation
    dim: int
    cocycles: list[ModuleMorphism]
    presentation: ProjectivePresentation

    def materialize(self, k: int) -> tuple[Representation, ModuleMorphism, ModuleMorphism]:
        """The extension ``0 -> target -> E -> source -> 0`` of cocycle ``k``."""
        E, inc, proj = _pushout(self.presentation, [self.cocycles[k]], self.target, self.source, 1)
        return E, inc, proj


def ext1(B: Representation, C: Representation) -> ExtSpace:
    pres = min_proj_presentation(B)
    K, iota = pres.kernel, pres.kernel_incl
    hk = hom_space(K, C)
    if not hk:
        return ExtSpace(B, C, 0, [], pres)
    restricted = [_flat(g @ iota) for g in hom_space(pres.P0, C)]
    n = len(_flat(hk[0]))
    base = rref(restricted, QQ, n)[0] if restricted else []
    cocycles = []
    for h in hk:
        v = _flat(h)
        trial = rref(base + [v], QQ, n)[0]
        if len(trial) > len(base):
            base = trial
            cocycles.append(h)
    return ExtSpace(B, C, len(cocycles), cocycles, pres)


def ext1_dim(B: Representation, C: Representation) -> int:
    pres = min_proj_presentation(B)
    a = len(hom_space(pres.kernel, C))
    if a == 0:
        return 0
    restricted = [_flat(g @ pres.kernel_incl) for g in hom_space(pres.P0, C)]
    return a - (rank(restricted) if restricted else 0)


def _pushout(pres: ProjectivePresentation, cocycles: Sequence[ModuleMorphism], C: Representation,
             B: Representation, copies: int, coextension: bool = False):
    """Pushouts of ``K -> P0`` along cocycles.

    Extension mode (``copies = r``): ``0 -> C -> E -> B^r -> 0`` from
    ``K^r -> C``.  Coextension mode: ``0 -> C^l -> E -> B -> 0`` from
    ``K -> C^l``.
    """
    K, iota, pi = pres.kernel, pres.kernel_incl, pres.cover
    if coextension:
        Cl = direct_sum([C] * len(cocycles))
        h = vstack_maps(cocycles, Cl)
        Ksum, P0sum, left, iotas, pis = K, pres.P0, Cl, iota, pi
        Bsum = B
    else:
        Ksum = direct_sum([K] * copies)
        P0sum = direct_sum([pres.P0] * copies)
        h = hstack_maps(list(cocycles), Ksum)
        iotas = _diag_map([iota] * copies, Ksum, P0sum)
        Bsum = direct_sum([B] * copies)
        pis = _diag_map([pi] * copies, P0sum, Bsum)
        left = C
    middle = direct_sum([left, P0sum])
    phi = vstack_maps([h.scale(-1), iotas], middle)
    E, q = phi.cokernel()
    A = C.algebra
    # left -> E
    inc_blocks, proj_blocks = [], []
    for v in range(A.n):
        dl, dp = left.dims[v], P0sum.dims[v]
        emb = Matrix(dl + dp, dl, [[mpq(1) if r == c else mpq(0) for c in range(dl)] for r in range(dl + dp)])
        inc_blocks.append(q.blocks[v] @ emb)
        # E -> Bsum: (0, pis) on a section of q
        sec = q.section[v]
        zp = Matrix(Bsum.dims[v], dl + dp,
                    [[mpq(0)] * dl + list(pis.blocks[v].data[r]) for r in range(Bsum.dims[v])])
        proj_blocks.append(zp @ sec)
    inc = ModuleMorphism(left, E, inc_blocks)
    proj = ModuleMorphism(E, Bsum, proj_blocks)
    return E, inc, proj


def _diag_map(maps: Sequence[ModuleMorphism], S: Representation, T: Representation) -> ModuleMorphism:
    return ModuleMorphism(S, T, [block_diag([f.blocks[v] for f in maps]) for v in range(S.n)])


def universal_extension(B: Representation, C: Representation):
    """``0 -> C -> E -> B^r -> 0`` with ``r = dim Ext^1(B, C)``.

    Returns ``(E, C -> E, E -> B^r, r)``.
    """
    X = ext1(B, C)
    if X.dim == 0:
        raise ExtensionRefused("Ext^1 vanishes; no universal extension")
    E, inc, proj = _pushout(X.presentation, X.cocycles, C, B, X.dim)
    _check_short_exact(inc, proj)
    return E, inc, proj, X.dim


def universal_coextension(B: Representation, C: Representation):
    """``0 -> C^l -> E' -> B -> 0`` with ``l = dim Ext^1(B, C)``."""
    X = ext1(B, C)
    if X.dim == 0:
        raise ExtensionRefused("Ext^1 vanishes; no universal coextension")
    E, inc, proj = _pushout(X.presentation, X.cocycles, C, B, 1, coextension=True)
    _check_short_exact(inc, proj)
    return E, inc, proj, X.dim


def _check_short_exact(f: ModuleMorphism, g: ModuleMorphism) -> None:
    f.verify()
    g.verify()
    if not f.is_injective() or not g.is_surjective() or not (g @ f).is_zero():
        raise AssertionError("extension sequence is not short exact")
    if f.target.dim != f.source.dim + g.target.dim:
        raise AssertionError("extension middle term has the wrong dimension")


# ---------------------------------------------------------------------------
# torsion-theoretic helpers


def euler_form(d: Sequence[int], e: Sequence[int], q: Quiver) -> int:
    return sum(x * y for x, y in zip(d, e)) - sum(d[a.source] * e[a.target] for a in q.arrows)


def coxeter_dim(d: Sequence[int], q: Quiver) -> list[int]:
    """Dimension vector of ``tau X`` for non-projective ``X`` over ``kQ``."""
    from .linalg import inverse
    E = q.euler_matrix()
    v = (inverse(E) @ E.T).scale(-1).apply(list(d))
    return [int(x) for x in v]


def trace_bases(M: Representation, V: Representation) -> list[list]:
    maps = hom_space(M, V)
    out = []
    for i in range(V.n):
        cols = []
        for f in maps:
            cols.extend(f.blocks[i].columns())
        out.append(rref(cols, QQ, V.dims[i])[0] if cols and V.dims[i] else [])
    return out


def trace_quotient(M: Representation, V: Representation):
    """``(t_M V, inclusion, f_M V, projection)``."""
    bases = trace_bases(M, V)
    t, inc = V.subrepresentation(bases)
    f, proj = V.quotient(bases)
    return t, inc, f, proj


def gen_membership(X: Representation, M: Representation) -> bool:
    bases = trace_bases(M, X)
    return all(len(b) == d for b, d in zip(bases, X.dims))


def cogen_membership(X: Representation, M: Representation) -> bool:
    """``X in Cogen M``: the joint kernel of all maps ``X -> M`` vanishes."""
    maps = hom_space(X, M)
    for i in range(X.n):
        if X.dims[i] == 0:
            continue
        rows = []
        for f in maps:
            rows.extend(f.blocks[i].data)
        if (rank(rows) if rows else 0) < X.dims[i]:
            return False
    return True


def iso_in(X: Representation, mods: Sequence[Representation]) -> Optional[int]:
    for k, m in enumerate(mods):
        if is_isomorphic(X, m):
            return k
    return None
