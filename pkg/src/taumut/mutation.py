"""Exceptional and tau-exceptional sequences, their mutation, and mutation graphs."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .homology import universal_extension
from .modules import direct_sum, hom_space, hstack_maps
from .tilting import Context, ContextError, NotMutable

Seq = tuple  # tuple of ambient names, leftmost = M_1


def fmt_seq(seq: Sequence[str]) -> str:
    return "(" + ",".join(seq) + ")"


# ---------------------------------------------------------------------------
# validation


def validate_tau_exceptional(root: Context, seq: Sequence[str]) -> bool:
    """True iff each ``M_k`` is a member of ``J(M_{k+1}, ..., M_t)``."""
    ctx = root
    for name in reversed(list(seq)):
        if name not in ctx:
            return False
        if ctx.hom_tau(name, name) != 0:
            return False
        ctx = ctx.perp([(name, 0)])
    return True


def validate_exceptional(ctx: Context, seq: Sequence[str]) -> bool:
    """``End = k``, no self-extensions, and ``Hom(X_k, X_j) = Ext(X_k, X_j) = 0`` for ``j < k``."""
    seq = list(seq)
    if any(x not in ctx for x in seq):
        return False
    for x in seq:
        if ctx.hom(x, x) != 1 or ctx.ext(x, x) != 0:
            return False
    for j in range(len(seq)):
        for k in range(j + 1, len(seq)):
            if ctx.hom(seq[k], seq[j]) or ctx.ext(seq[k], seq[j]):
                return False
    return True


def validate_R_exceptional_sequence(ctx: Context, seq: Sequence[str]) -> bool:
    """Hom/Ext vanishing ``Hom(X_k, X_j) = Ext(X_k, X_j) = 0`` for ``j < k``."""
    seq = list(seq)
    return all(ctx.hom(seq[k], seq[j]) == 0 and ctx.ext(seq[k], seq[j]) == 0
               for j in range(len(seq)) for k in range(j + 1, len(seq)))


def enumerate_complete(root: Context) -> list[Seq]:
    """All complete tau-exceptional sequences, by backtracking on the last entry."""
    out: list[Seq] = []

    def rec(ctx: Context, suffix: tuple):
        if ctx.n == 0:
            out.append(suffix)
            return
        for name in ctx.names:
            if ctx.hom_tau(name, name):
                continue
            rec(ctx.perp([(name, 0)]), (name,) + suffix)

    rec(root, ())
    return sorted(out)


# ---------------------------------------------------------------------------
# classical mutation over a hereditary algebra


def _exceptional_completions(ctx: Context, seq: list, pos: int) -> list[str]:
    hits = []
    for y in ctx.names:
        trial = list(seq)
        trial[pos] = y
        if validate_exceptional(ctx, trial):
            hits.append(y)
    return hits


def sigma_constructive(ctx: Context, B: str, C: str) -> list[str]:
    """Candidates for ``Y`` in ``sigma(B, C) = (Y, B)`` from the classical cases."""
    XB, XC = ctx.rep(B), ctx.rep(C)
    if ctx.ext(B, C):
        E, _, _, _ = universal_extension(XB, XC)
        nm = ctx.identify(E)
        return [nm] if nm else []
    homs = hom_space(XB, XC)
    if not homs:
        return [C]
    src = direct_sum([XB] * len(homs))
    f = hstack_maps(homs, src)
    out = []
    for Y, _ in (f.kernel(), f.cokernel()):
        if Y.dim:
            nm = ctx.identify(Y)
            if nm:
                out.append(nm)
    return out


def sigma(ctx: Context, seq: Sequence[str], i: int, right: bool = False) -> Seq:
    """Classical mutation of an exceptional sequence over a hereditary algebra.

    Args:
        ctx: root context of ``kQ``.
        seq: exceptional sequence.
        i: 1-based index of the pair ``(X_i, X_{i+1})``.
        right: right mutation instead of left.
    """
    seq = list(seq)
    if not 1 <= i < len(seq):
        raise ValueError(f"index {i} out of range for length {len(seq)}")
    if not validate_exceptional(ctx, seq):
        raise ValueError(f"{fmt_seq(seq)} is not exceptional")
    B, C = seq[i - 1], seq[i]
    trial = list(seq)
    if right:
        trial[i - 1] = C
        hits = _exceptional_completions(ctx, trial, i)
    else:
        trial[i] = B
        hits = _exceptional_completions(ctx, trial, i - 1)
    if len(hits) != 1:
        raise ContextError(f"sigma_{i}{fmt_seq(seq)}: {len(hits)} completions {hits}")
    if right:
        trial[i] = hits[0]
        if sigma(ctx, trial, i) != tuple(seq):
            raise ContextError("right mutation is not inverse to left mutation")
    else:
        trial[i - 1] = hits[0]
        if hits[0] not in sigma_constructive(ctx, B, C):
            raise ContextError(f"constructive route disagrees with completion {hits[0]}")
    return tuple(trial)


# ---------------------------------------------------------------------------
# tau-tilting mutation


def _phi_pair_cached(ctx: Context, B: str, C: str):
    cache = ctx.__dict__.setdefault("_phi_cache", {})
    key = (B, C)
    v = cache.get(key)
    if v is None:
        v = ctx.phi_pair(B, C)
        cache[key] = v
    return v


def phi(root: Context, seq: Sequence[str], i: int) -> Seq:
    """Left mutation ``phi_i``; applies pair mutation inside ``J(M_{i+2}, ..., M_t)``."""
    seq = list(seq)
    if not 1 <= i < len(seq):
        raise ValueError(f"index {i} out of range for length {len(seq)}")
    if not validate_tau_exceptional(root, seq):
        raise ValueError(f"{fmt_seq(seq)} is not tau-exceptional")
    K = root.chain(seq[i + 1:])
    Cn, Bn, _ = _phi_pair_cached(K, seq[i - 1], seq[i])
    seq[i - 1], seq[i] = Cn, Bn
    return tuple(seq)


def tau_exceptional_pairs(K: Context) -> list[tuple[str, str]]:
    out = []
    for C in K.names:
        if K.hom_tau(C, C):
            continue
        for B in K.perp([(C, 0)]).names:
            out.append((B, C))
    return out


def phi_inverse(root: Context, seq: Sequence[str], i: int) -> Seq:
    """Right mutation, as the unique preimage under ``phi_i``."""
    seq = list(seq)
    if not 1 <= i < len(seq):
        raise ValueError(f"index {i} out of range for length {len(seq)}")
    K = root.chain(seq[i + 1:])
    target = (seq[i - 1], seq[i])
    hits = [p for p in tau_exceptional_pairs(K) if _phi_pair_cached(K, *p)[:2] == target]
    if len(hits) != 1:
        raise ContextError(f"phi_{i}^-1{fmt_seq(seq)}: {len(hits)} preimages")
    seq[i - 1], seq[i] = hits[0]
    return tuple(seq)


# ---------------------------------------------------------------------------
# graphs


@dataclass
class MutationGraph:
    vertices: list
    edges: list = field(default_factory=list)  # (source, index, target)

    def successor(self, v, i):
        for s, k, t in self.edges:
            if s == v and k == i:
                return t
        raise KeyError((v, i))

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = {v: set() for v in self.vertices}
        for s, _, t in self.edges:
            adj[s].add(t)
            adj[t].add(s)
        seen, stack = {self.vertices[0]}, [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


def mutation_graph(root: Context, threads: int = 4, vertices: Optional[list] = None) -> MutationGraph:
    verts = vertices if vertices is not None else enumerate_complete(root)
    n = root.n

    def work(v):
        return [(v, i, phi(root, v, i)) for i in range(1, n)]

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(work, verts))
    else:
        chunks = [work(v) for v in verts]
    edges = sorted(e for chunk in chunks for e in chunk)
    vset = set(verts)
    for s, i, t in edges:
        if t not in vset:
            raise ContextError(f"phi_{i}{fmt_seq(s)} = {fmt_seq(t)} is not a listed vertex")
    return MutationGraph(sorted(verts), edges)


def emit_dot(graph: MutationGraph, name: str = "mutation") -> str:
    lines = [f"digraph {name} {{"]
    for v in graph.vertices:
        lines.append(f'  "{fmt_seq(v)}";')
    for s, i, t in graph.edges:
        if i == 1:
            attr = "style=solid"
        elif i == 2:
            attr = "style=dashed"
        else:
            attr = f'label="phi_{i}"'
        lines.append(f'  "{fmt_seq(s)}" -> "{fmt_seq(t)}" [{attr}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
