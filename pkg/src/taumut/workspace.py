"""A configured algebra with its catalogs, contexts and verification checks."""
from __future__ import annotations

import itertools
import re
from importlib import resources
from typing import Callable, Iterable, Optional, Sequence

from .algebra import LocalCoefficientAlgebra, Quiver, build_path_algebra, tensor_algebra
from .catalog import induced_catalog, knit_hereditary_catalog, positive_roots, verify_induced_tau
from .config import RunConfig
from .homology import euler_form, proj_dimension
from .modules import hom_dim_mod_p, injective, projective, simple
from .mutation import (
    emit_dot,
    enumerate_complete,
    fmt_seq,
    mutation_graph,
    phi,
    phi_inverse,
    sigma,
    tau_exceptional_pairs,
    validate_exceptional,
    validate_R_exceptional_sequence,
)
from .tilting import Context, ContextError, NotMutable, fmt_strict, is_gen_minimal, is_R_exceptional

CHECKS = (
    "catalog",
    "taurigid",
    "tau-induction",
    "sequences",
    "figure1",
    "main-theorem",
    "braid",
    "transitivity",
    "inverse",
    "uniqueness",
    "r-exceptional",
    "e-square",
    "mutation-complete",
    "properties",
    "prime",
)


class UnknownModule(KeyError):
    def __str__(self) -> str:
        return self.args[0]


class CheckNotApplicable(ValueError):
    pass


_STD = re.compile(r"^([PIS])(\d+)$")
_IND = re.compile(r"^Ind\((.+)\)$")


def _normalize(name: str) -> str:
    return name.replace("_", "").replace(" ", "")


class Workspace:
    """Everything computed from one configuration.

    Args:
        quiver: a Dynkin quiver.
        coefficients: the local algebra ``R``; ``None`` or ``k`` means the
            ambient algebra is ``kQ`` itself.
        aliases: display names, e.g. ``{"M": "Ind(S2)"}``.
        threads: worker count for graph construction.
    """

    def __init__(self, quiver: Quiver, coefficients: Optional[LocalCoefficientAlgebra] = None,
                 aliases: Optional[dict] = None, threads: int = 4, prime: Optional[int] = None):
        self.quiver = quiver
        self.coefficients = coefficients
        self.threads = threads
        self.prime = prime
        self.kq = build_path_algebra(quiver, [], name="kQ")
        self.catalog = knit_hereditary_catalog(self.kq)
        self.kq_ctx = Context(self.kq, [(e.name, e.module) for e in self.catalog.entries], "kQ")
        if coefficients is None or coefficients.dim == 1:
            self.algebra = self.kq
            self.lcatalog = None
            self.ctx = self.kq_ctx
            self.ind = {x: x for x in self.catalog.names()}
        else:
            self.algebra = tensor_algebra(coefficients, self.kq, name="Lambda")
            self.lcatalog = induced_catalog(self.algebra, self.catalog)
            self.ctx = Context(self.algebra, [(e.name, e.module) for e in self.lcatalog.entries], "Lambda")
            self.ind = {e.source: e.name for e in self.lcatalog.entries}
        self.aliases: dict[str, str] = {}
        for k, v in (aliases or {}).items():
            self.aliases[_normalize(k)] = self.resolve(v)
        self.display_names = {v: k for k, v in sorted(self.aliases.items())}
        self._seqs = None
        self._graph = None

    @classmethod
    def from_config(cls, cfg: RunConfig, **kw) -> "Workspace":
        return cls(cfg.quiver, cfg.coefficients, cfg.aliases, **kw)

    @property
    def is_hereditary(self) -> bool:
        return self.lcatalog is None

    # -- names ---------------------------------------------------------------------
    def resolve(self, name: str, ctx: Optional[Context] = None) -> str:
        """Canonical member name for a user-supplied name or alias."""
        ctx = ctx or self.ctx
        key = _normalize(name)
        if ctx is self.ctx and key in self.aliases:
            return self.aliases[key]
        if key in ctx:
            return key
        m = _IND.match(key)
        if m and ctx is self.ctx:
            base = self.resolve(m.group(1), self.kq_ctx)
            return self.ind[base]
        m = _STD.match(key)
        if m:
            kind, i = m.group(1), int(m.group(2)) - 1
            A = ctx.algebra
            if 0 <= i < A.n:
                X = {"P": projective, "I": injective, "S": simple}[kind](A, i)
                hit = ctx.identify(X)
                if hit is not None:
                    return hit
        raise UnknownModule(f"unknown module '{name}': not one of the indecomposable tau-rigid modules {', '.join(ctx.names)}")

    def display(self, name: str) -> str:
        return self.display_names.get(name, name)

    def display_seq(self, seq: Sequence[str]) -> str:
        return fmt_seq([self.display(x) for x in seq])

    def parse_seq(self, literal: str) -> tuple:
        body = literal.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"sequence literal must be parenthesised: {literal!r}")
        parts, depth, cur = [], 0, ""
        for ch in body[1:-1]:
            if ch == "," and depth == 0:
                parts.append(cur)
                cur = ""
                continue
            depth += ch == "("
            depth -= ch == ")"
            cur += ch
        parts.append(cur)
        if any(not p.strip() for p in parts):
            raise ValueError(f"empty entry in sequence literal {literal!r}")
        return tuple(self.resolve(p) for p in parts)

    # -- computations --------------------------------------------------------------
    def tau_rigid(self) -> list[str]:
        return [x for x in self.ctx.names if self.ctx.hom_tau(x, x) == 0]

    def sequences(self) -> list[tuple]:
        if self._seqs is None:
            seqs = enumerate_complete(self.ctx)
            if not self.is_hereditary:
                induced = sorted(tuple(self.ind[x] for x in s) for s in enumerate_complete(self.kq_ctx))
                if induced != seqs:
                    raise ContextError("sequences over Lambda differ from induced kQ sequences")
            self._seqs = seqs
        return self._seqs

    def mutate(self, seq: Sequence[str], i: int, right: bool = False) -> tuple:
        if right:
            return phi_inverse(self.ctx, seq, i)
        return phi(self.ctx, seq, i)

    def graph(self):
        if self._graph is None:
            self._graph = mutation_graph(self.ctx, threads=self.threads, vertices=self.sequences())
        return self._graph

    def dot(self) -> str:
        g = self.graph()
        from .mutation import MutationGraph
        renamed = MutationGraph(
            [tuple(self.display(x) for x in v) for v in g.vertices],
            [(tuple(self.display(x) for x in s), i, tuple(self.display(x) for x in t)) for s, i, t in g.edges],
        )
        return emit_dot(renamed)

    # -- verification --------------------------------------------------------------
    def verify(self, checks: Iterable[str]) -> list[str]:
        lines = []
        for name in checks:
            fn = getattr(self, "_check_" + name.replace("-", "_"), None)
            if fn is None or name not in CHECKS:
                raise ValueError(f"unknown check '{name}' (available: {', '.join(CHECKS)})")
            try:
                ok, details = fn()
            except (ContextError, NotMutable, AssertionError) as exc:
                ok, details = False, f"error: {exc}"
            lines.append(f"CHECK {name} {'PASS' if ok else 'FAIL'} {details}")
        return lines

    def _check_catalog(self):
        n = len(self.catalog)
        roots = len(positive_roots(self.quiver))
        return n == roots, f"{n} indecomposables, {roots} positive roots"

    def _check_taurigid(self):
        ctx = self.ctx
        rigid = self.tau_rigid()
        ok, cert = ctx.certify_complete()
        induced = sorted(self.ind.values())
        ok = ok and sorted(rigid) == induced and len(rigid) == len(ctx.names)
        return ok, f"{len(rigid)} tau-rigid indecomposables [{', '.join(rigid)}]; {cert}"

    def _check_tau_induction(self):
        if self.is_hereditary:
            raise CheckNotApplicable("tau-induction needs a non-trivial coefficient algebra")
        frob = self.coefficients.is_self_injective()
        bad = [nm for nm, ok, _ in verify_induced_tau(self.algebra, self.catalog, self.lcatalog,
                                                     dual_coefficients=not frob) if not ok]
        n = len(self.catalog)
        target = "Ind(tau X)" if frob else "D(R)(x)tau X (R not self-injective)"
        return not bad, f"{n - len(bad)}/{n} isomorphisms tau(Ind X) = {target}" + (
            f"; failures {bad}" if bad else "")

    def _check_sequences(self):
        seqs = self.sequences()
        ok = all(self._tau_exc(s) for s in seqs)
        kseqs = enumerate_complete(self.kq_ctx)
        ok = ok and all(validate_exceptional(self.kq_ctx, s) for s in kseqs)
        return ok, f"{len(seqs)} complete tau-exceptional sequences, {len(kseqs)} exceptional over kQ"

    def _tau_exc(self, s):
        from .mutation import validate_tau_exceptional
        return validate_tau_exceptional(self.ctx, s)

    def _check_figure1_applicable(self):
        if not (self.quiver.n == 3 and len(self.quiver.arrows) == 2 and self.coefficients is not None
                and self.coefficients.kind == "truncated_polynomial" and self.coefficients.t == 2
                and [(a.source, a.target) for a in self.quiver.arrows] == [(0, 1), (1, 2)]):
            raise CheckNotApplicable("figure1 needs the linear A3 quiver 1 -> 2 -> 3 with t = 2")

    def _check_figure1(self):
        self._check_figure1_applicable()
        golden = load_figure1(lambda s: self.parse_seq(_figure1_aliases(s)))
        computed = set(self.graph().edges)
        missing = sorted(golden - computed)
        extra = sorted(computed - golden)
        required = [(("I1", "Ind(S2)", "P3"), 1, ("I2", "I1", "P3")),
                    (("P3", "P2", "P1"), 1, ("Ind(S2)", "P3", "P1")),
                    (("P3", "P2", "P1"), 2, ("P3", "I1", "P2"))]
        req_ok = all(e in computed for e in required)
        ok = not missing and not extra and req_ok and len(self.graph().vertices) == 16
        det = f"{len(computed)} edges on {len(self.graph().vertices)} vertices, golden {len(golden)}"
        if missing:
            det += "; missing " + "; ".join(f"phi_{i}{fmt_seq(s)}->{fmt_seq(t)}" for s, i, t in missing[:3])
        if extra:
            det += "; extra " + "; ".join(f"phi_{i}{fmt_seq(s)}->{fmt_seq(t)}" for s, i, t in extra[:3])
        return ok, det + f"; required edges {'present' if req_ok else 'absent'}"

    def _check_main_theorem(self):
        n, bad = 0, []
        for s in enumerate_complete(self.kq_ctx):
            for i in range(1, self.quiver.n):
                lhs = phi(self.ctx, tuple(self.ind[x] for x in s), i)
                rhs = tuple(self.ind[x] for x in sigma(self.kq_ctx, s, i))
                n += 1
                if lhs != rhs:
                    bad.append((s, i, lhs, rhs))
        det = f"{n - len(bad)}/{n} comparisons of phi_i(Ind s) with Ind(sigma_i s)"
        if bad:
            s, i, lhs, rhs = bad[0]
            det += f"; first mismatch i={i} {fmt_seq(s)}: {fmt_seq(lhs)} vs {fmt_seq(rhs)}"
        return not bad, det

    def _check_braid(self):
        n = self.quiver.n
        bad, count = [], 0
        for s in self.sequences():
            for i in range(1, n - 1):
                a = phi(self.ctx, phi(self.ctx, phi(self.ctx, s, i), i + 1), i)
                b = phi(self.ctx, phi(self.ctx, phi(self.ctx, s, i + 1), i), i + 1)
                count += 1
                if a != b:
                    bad.append((s, i))
            for i in range(1, n):
                for j in range(i + 2, n):
                    a = phi(self.ctx, phi(self.ctx, s, i), j)
                    b = phi(self.ctx, phi(self.ctx, s, j), i)
                    count += 1
                    if a != b:
                        bad.append((s, i, j))
        det = f"{count - len(bad)}/{count} braid relations on {len(self.sequences())} sequences"
        if bad:
            det += f"; first failure at {fmt_seq(bad[0][0])}"
        return not bad, det

    def _check_transitivity(self):
        g = self.graph()
        return g.is_connected(), f"{len(g.vertices)} vertices, {len(g.edges)} edges, " + (
            "connected" if g.is_connected() else "disconnected")

    def _check_inverse(self):
        bad, count = [], 0
        for s in self.sequences():
            for i in range(1, self.quiver.n):
                count += 1
                if phi_inverse(self.ctx, phi(self.ctx, s, i), i) != s or \
                        phi(self.ctx, phi_inverse(self.ctx, s, i), i) != s:
                    bad.append((s, i))
        return not bad, f"{count - len(bad)}/{count} round trips"

    def _check_uniqueness(self):
        bad = []
        for ctx, seqs in ((self.ctx, self.sequences()), (self.kq_ctx, enumerate_complete(self.kq_ctx))):
            for a, b in itertools.combinations(seqs, 2):
                diff = [k for k in range(len(a)) if a[k] != b[k]]
                if len(diff) == 1:
                    bad.append((a, b))
        det = f"{len(self.sequences())} sequences, no two differ in exactly one slot"
        if bad:
            det = f"{fmt_seq(bad[0][0])} and {fmt_seq(bad[0][1])} differ in one slot"
        return not bad, det

    def _check_r_exceptional(self):
        if self.is_hereditary:
            raise CheckNotApplicable("r-exceptional needs a non-trivial coefficient algebra")
        entries = sorted({x for s in self.sequences() for x in s})
        bad = []
        for x in entries:
            X = self.ctx.rep(x)
            pd = proj_dimension(X)
            if not is_R_exceptional(X) or pd is None or pd > 1:
                bad.append(x)
        seq_bad = [s for s in self.sequences() if not validate_R_exceptional_sequence(self.ctx, s)]
        det = f"{len(entries) - len(bad)}/{len(entries)} entries R-exceptional with pd <= 1; " \
              f"{len(self.sequences()) - len(seq_bad)}/{len(self.sequences())} sequences satisfy Hom/Ext vanishing"
        if bad:
            det += f"; failing entries {bad}"
        if seq_bad:
            det += f"; failing sequence {fmt_seq(seq_bad[0])}"
        return not bad and not seq_bad, det

    def _check_e_square(self):
        kctx, lctx = self.kq_ctx, self.ctx

        def ind(obj):
            return (self.ind[obj[0]], obj[1])

        objs = kctx.strict_objects()
        pairs = square = bij = 0
        bad = []
        for size in range(1, self.quiver.n):
            for U in itertools.combinations(objs, size):
                U = list(U)
                if not kctx.is_support_tau_rigid(U):
                    continue
                LU = [ind(o) for o in U]
                JL = lctx.perp(LU)
                images = {}
                for V in objs:
                    if V in U or not kctx.is_support_tau_rigid(U + [V]):
                        continue
                    pairs += 1
                    e_k = kctx.e_map(U, V)
                    e_l = lctx.e_map(LU, ind(V))
                    if e_l != ind(e_k):
                        bad.append(("square", U, V))
                    else:
                        square += 1
                    if lctx.e_map_inverse(LU, e_l) != ind(V):
                        bad.append(("inverse", U, V))
                    images[V] = e_l
                target = set(JL.strict_objects())
                if len(set(images.values())) == len(images) and set(images.values()) == target:
                    bij += 1
                else:
                    bad.append(("bijection", U, None))
                if size == 1 and not U[0][1]:
                    gk = sorted(self.ind[g] for g in kctx.perp(U).generators)
                    if gk != sorted(JL.generators):
                        bad.append(("relative projectives", U, None))
        det = f"{square}/{pairs} squares commute; E_U bijective for {bij} objects U"
        if bad:
            kind, U, V = bad[0]
            det += f"; first failure ({kind}) U={[fmt_strict(o) for o in U]}" + (
                f" V={fmt_strict(V)}" if V else "")
        return not bad, det

    def _check_mutation_complete(self):
        seen, count, bad = set(), 0, []
        todo = [self.ctx]
        for s in self.sequences():
            for k in range(len(s)):
                todo.append(self.ctx.chain(s[k:]))
        for K in todo:
            if id(K) in seen or K.n < 2:
                continue
            seen.add(id(K))
            for B, C in tau_exceptional_pairs(K):
                count += 1
                try:
                    cl = K.classify_pair(B, C)
                    Cn, Bn, _ = K.phi_pair(B, C)
                except NotMutable:
                    bad.append((K.label, B, C, "immutable"))
                    continue
                if not (cl["left_mutable"] and cl["right_mutable"]):
                    bad.append((K.label, B, C, "classified immutable"))
                if Bn != B:
                    bad.append((K.label, B, C, f"second entry {Bn} is not {B}"))
        det = f"{count} pairs in {len(seen)} contexts, all mutable with B preserved"
        if bad:
            det = f"{len(bad)}/{count} failures; first {bad[0]}"
        return not bad, det

    def _check_properties(self):
        notes, ok = [], True
        # Euler form against Hom/Ext on the hereditary catalog
        kc, q = self.kq_ctx, self.quiver
        e_bad = [(a, b) for a in kc.names for b in kc.names
                 if euler_form(kc.rep(a).dims, kc.rep(b).dims, q) != kc.hom(a, b) - kc.ext(a, b)]
        notes.append(f"euler {len(kc.names) ** 2 - len(e_bad)}/{len(kc.names) ** 2}")
        ok &= not e_bad
        # AR duality Ext(X, Y) = D Hom(Y, tau X) when pd X <= 1
        ar_bad, ar_n = [], 0
        for c in {id(kc): kc, id(self.ctx): self.ctx}.values():
            for a in c.names:
                pd = proj_dimension(c.rep(a))
                if pd is None or pd > 1:
                    continue
                for b in c.names:
                    ar_n += 1
                    if c.ext(a, b) != c.hom_tau(b, a):
                        ar_bad.append((a, b))
        notes.append(f"AR duality {ar_n - len(ar_bad)}/{ar_n}")
        ok &= not ar_bad
        # gen-minimal tau-rigid modules correspond under induction
        gm_n, gm_bad = 0, []
        for r in range(1, q.n + 1):
            for S in itertools.combinations(kc.names, r):
                if not kc.is_tau_rigid(S):
                    if self.ctx.is_tau_rigid([self.ind[x] for x in S]):
                        gm_bad.append(S)
                    continue
                LS = [self.ind[x] for x in S]
                gm_n += 1
                if not self.ctx.is_tau_rigid(LS) or is_gen_minimal(kc, S) != is_gen_minimal(self.ctx, LS):
                    gm_bad.append(S)
        notes.append(f"gen-minimal {gm_n - len(gm_bad)}/{gm_n}")
        ok &= not gm_bad
        # tau-perpendicular categories stay distinct after induction
        members = {}
        for x in kc.names:
            members[tuple(self.ctx.perp_of(self.ind[x]).names)] = x
        inj = len(members) == len(kc.names)
        notes.append("J injective" if inj else "J not injective")
        ok &= inj
        return ok, "; ".join(notes)

    def _check_prime(self):
        if not self.prime:
            raise CheckNotApplicable("prime needs --prime <p>")
        c = self.ctx
        bad = [(a, b) for a in c.names for b in c.names
               if hom_dim_mod_p(c.rep(a), c.rep(b), self.prime) != c.hom(a, b)]
        n = len(c.names) ** 2
        return not bad, f"{n - len(bad)}/{n} Hom dimensions agree modulo {self.prime}"


def _figure1_aliases(s: str) -> str:
    return re.sub(r"\bM\b", "Ind(S2)", s)


def load_figure1(parse: Callable[[str], tuple]) -> set:
    text = resources.files("taumut").joinpath("data/figure1_edges.txt").read_text()
    edges = set()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        idx, rest = line.split(None, 1)
        src, dst = (x.strip() for x in rest.split("->"))
        edges.add((parse(src), int(idx), parse(dst)))
    return edges
