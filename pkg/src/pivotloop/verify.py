"""Built-in verification suites.

Every check pairs two independent routes to the same object (matrix
formula vs. set-system flip, toggling vs. PPT, stepwise word vs. normal
form, ...) over exhaustive small cases or seeded random ones.  Checks
return a :class:`CheckResult` carrying the first counterexample.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Callable, Iterator

from . import graphs as gr
from . import linalg as la
from . import setsystem as ss
from . import words as wd
from .errors import InapplicableOperation, NotGraphic, SingularPrincipalMinor
from .linalg import F2Matrix
from .orbit import full_orbit, pivot_images, pivot_orbit
from .vertexset import Ground

DEFAULT_SEED = 20100607


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    counterexample: str | None = None
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = "" if self.passed else f": {self.counterexample}"
        return f"{status} {self.name} ({self.cases} cases, {self.seconds:.2f}s){tail}"


class _Counter:
    """Collects cases; the first failure is kept and stops the check."""

    def __init__(self, result: CheckResult):
        self.result = result

    def check(self, ok: bool, describe: Callable[[], str]) -> bool:
        self.result.cases += 1
        if not ok and self.result.counterexample is None:
            self.result.counterexample = describe()
        return ok


class _Stop(Exception):
    pass


def _run(name: str, body: Callable[[Callable[[bool, Callable[[], str]], None]], None]) -> CheckResult:
    res = CheckResult(name)
    counter = _Counter(res)

    def check(ok: bool, describe: Callable[[], str]) -> None:
        if not counter.check(ok, describe):
            raise _Stop

    t0 = time.perf_counter()
    try:
        body(check)
    except _Stop:
        pass
    res.seconds = time.perf_counter() - t0
    return res


# --- generators ----------------------------------------------------------


def ground_of(n: int) -> Ground:
    return Ground("v%d" % i for i in range(n))


def graphs_up_to(max_n: int, loops: bool = True) -> Iterator[gr.Graph]:
    for n in range(1, max_n + 1):
        yield from gr.all_graphs(ground_of(n), loops=loops)


def random_matrix(rng: random.Random, n: int, ground: Ground | None = None) -> F2Matrix:
    ground = ground or ground_of(n)
    return F2Matrix(ground, [rng.getrandbits(n) for _ in range(n)])


def random_graph(rng: random.Random, n: int, loops: bool = True, ground: Ground | None = None) -> gr.Graph:
    ground = ground or ground_of(n)
    rows = [0] * n
    for i in range(n):
        for j in range(i if loops else i + 1, n):
            if rng.getrandbits(1):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    cls = gr.Graph if loops else gr.SimpleGraph
    return cls._unchecked(ground, rows)


def random_set_system(rng: random.Random, n: int) -> ss.SetSystem:
    return ss.SetSystem(ground_of(n), rng.getrandbits(1 << n))


def random_word(rng: random.Random, ground: Ground, length: int, kinds=None) -> list[wd.OpToken]:
    kinds = kinds or (wd.OpKind.PIVOT, wd.OpKind.LOOP, wd.OpKind.DUAL)
    n = len(ground)
    return [wd.OpToken(rng.choice(kinds), ground.from_mask(rng.getrandbits(n))) for _ in range(length)]


def matvec(A: F2Matrix, v: int) -> int:
    """Independent matrix-vector product: entrywise sums, no row tricks."""
    n = A.n
    out = 0
    for i in range(n):
        s = 0
        for j in range(n):
            s ^= (A.rows[i] >> j & 1) & (v >> j & 1)
        out |= s << i
    return out


# --- f2-linalg -----------------------------------------------------------


def check_pivot_involution_composition(max_n: int, rng: random.Random) -> CheckResult:
    def body(check):
        mats = list(graphs_up_to(max_n))
        mats += [random_matrix(rng, rng.randint(1, max_n)) for _ in range(200)]
        for A in mats:
            g = A.ground
            images = {}
            for x in range(1 << A.n):
                try:
                    images[x] = la.ppt(A, g.from_mask(x))
                except SingularPrincipalMinor:
                    continue
            for x, B in images.items():
                X = g.from_mask(x)
                check(la.ppt(B, X) == A, lambda: f"(A*X)*X != A for A={A!r}, X={X}")
                for y in range(1 << A.n):
                    try:
                        C = la.ppt(B, g.from_mask(y))
                    except SingularPrincipalMinor:
                        continue
                    check(images.get(x ^ y) == C, lambda: f"(A*X)*Y != A*(X^Y) for A={A!r}, X={X}, Y={g.from_mask(y)}")

    return _run("linalg.involution_composition", body)


def check_tucker(max_n: int, rng: random.Random) -> CheckResult:
    def body(check):
        mats = list(graphs_up_to(max_n)) + [random_matrix(rng, rng.randint(1, max_n)) for _ in range(200)]
        for A in mats:
            g = A.ground
            for x in range(1 << A.n):
                X = g.from_mask(x)
                if not la.minor(A, X):
                    continue
                B = la.ppt(A, X)
                for y in range(1 << A.n):
                    Y = g.from_mask(y)
                    lhs = la.f2_det(la.principal_submatrix(B, Y))
                    rhs = la.f2_det(la.principal_submatrix(A, X ^ Y))
                    check(lhs == rhs, lambda: f"Tucker fails for A={A!r}, X={X}, Y={Y}")

    return _run("linalg.tucker", body)


def check_partial_inverse(max_n: int, rng: random.Random) -> CheckResult:
    """``A(x1,x2) = (y1,y2)`` iff ``A*X (y1,x2) = (x1,y2)`` on every input."""

    def body(check):
        mats = list(graphs_up_to(min(max_n, 3))) + [random_matrix(rng, rng.randint(1, max(max_n, 5))) for _ in range(200)]
        for A in mats:
            g = A.ground
            for x in range(1 << A.n):
                X = g.from_mask(x)
                try:
                    B = la.ppt(A, X)
                except SingularPrincipalMinor:
                    continue
                for P, Q in ((A, B), (B, A)):
                    for v in range(1 << A.n):
                        w = matvec(P, v)
                        swapped_in = (w & x) | (v & ~x)
                        swapped_out = (v & x) | (w & ~x)
                        check(matvec(Q, swapped_in) == swapped_out, lambda: f"partial inverse fails for A={A!r}, X={X}, v={v:b}")

    return _run("linalg.partial_inverse", body)


def check_symmetry(max_n: int, rng: random.Random) -> CheckResult:
    def body(check):
        for G in graphs_up_to(max_n):
            g = G.ground
            for x in range(1 << G.n):
                X = g.from_mask(x)
                check(la.diag_add(G, X).is_symmetric(), lambda: f"A+X asymmetric for {G!r}, {X}")
                for op in (la.ppt, la.dual_ppt):
                    try:
                        R = op(G, X)
                    except SingularPrincipalMinor:
                        continue
                    check(R.is_symmetric(), lambda: f"{op.__name__} asymmetric for {G!r}, {X}")

    return _run("linalg.symmetry", body)


def check_dual_relation(max_n: int, rng: random.Random, cases: int = 300, size: int = 6) -> CheckResult:
    """Dual pivot: ``A(x1,y1) = (x2,y2)`` iff ``D(x1+x2, y1) = (x2,y2)``; also
    the dual pivot agrees with ``A*X+X*X`` when that side is defined."""

    def body(check):
        for _ in range(cases):
            n = rng.randint(1, size)
            A = random_matrix(rng, n)
            g = A.ground
            x = rng.getrandbits(n)
            X = g.from_mask(x)
            try:
                D = la.dual_ppt(A, X)
            except SingularPrincipalMinor:
                continue
            for v in range(1 << n):
                w = matvec(A, v)
                lhs_in = ((v ^ w) & x) | (v & ~x)
                check(matvec(D, lhs_in) == w, lambda: f"dual relation fails for A={A!r}, X={X}, v={v:b}")
                # reverse direction from D's side
                dv = matvec(D, v)
                a_in = ((v ^ dv) & x) | (v & ~x)
                check(matvec(A, a_in) == dv, lambda: f"dual relation (converse) fails for A={A!r}, X={X}")
            try:
                other = la.diag_add(la.ppt(la.diag_add(la.ppt(A, X), X), X), X)
            except SingularPrincipalMinor:
                continue
            # other = A*X+X*X+X, so other+X is the right-hand side
            check(la.diag_add(other, X) == D, lambda: f"A+X*X+X != A*X+X*X for A={A!r}, X={X}")

    return _run("linalg.dual_relation", body)


def check_kernel_invariance(max_n: int, rng: random.Random, cases: int = 500, size: int = 8) -> CheckResult:
    def body(check):
        done = 0
        while done < cases:
            n = rng.randint(1, size)
            A = random_matrix(rng, n)
            X = A.ground.from_mask(rng.getrandbits(n))
            try:
                D = la.dual_ppt(A, X)
            except SingularPrincipalMinor:
                continue
            done += 1
            ka = {v for v in range(1 << n) if matvec(A, v) == 0}
            kd = {v for v in range(1 << n) if matvec(D, v) == 0}
            check(ka == kd, lambda: f"kernel changes under dual pivot: A={A!r}, X={X}")
            check(la.f2_rank(A) == la.f2_rank(D), lambda: f"rank changes under dual pivot: A={A!r}, X={X}")
            span = {0}
            for b in la.kernel_basis(A):
                span |= {s ^ b.bits for s in span}
            check(span == ka and len(la.kernel_basis(A)) + la.f2_rank(A) == n, lambda: f"kernel basis wrong for {A!r}")

    return _run("linalg.kernel_invariance", body)


def check_full_ground_s3(max_n: int, rng: random.Random, cases: int = 100, size: int = 6) -> CheckResult:
    """``((A^-1 + I)^-1 + I)^-1 + I = A`` whenever each inverse exists."""

    def body(check):
        done = 0
        while done < cases:
            n = rng.randint(1, size)
            A = random_matrix(rng, n)
            V = A.ground.full()
            B = A
            try:
                for _ in range(3):
                    B = la.diag_add(la.inverse(B), V)
            except SingularPrincipalMinor:
                continue
            done += 1
            check(B == A, lambda: f"(inverse, +I)^3 != id for {A!r}")

    return _run("linalg.full_ground_s3", body)


# --- set-system ----------------------------------------------------------


def check_central_identity_ss(max_n: int, rng: random.Random, random_cases: int = 300) -> CheckResult:
    """``M+X*X+X = M*X+X*X`` exhaustively for |V| <= 3 and randomly to |V| = 8."""

    def body(check):
        def one(M, X):
            lhs = ss.ss_loop_complement(ss.ss_pivot(ss.ss_loop_complement(M, X), X), X)
            rhs = ss.ss_pivot(ss.ss_loop_complement(ss.ss_pivot(M, X), X), X)
            check(lhs == rhs, lambda: f"+X*X+X != *X+X*X for {M!r}, X={X}")
            check(ss.ss_dual_pivot(M, X) == lhs, lambda: f"dual pivot != +X*X+X for {M!r}, X={X}")

        for n in range(1, min(max_n, 3) + 1):
            g = ground_of(n)
            for fam in range(1 << (1 << n)):
                M = ss.SetSystem(g, fam)
                for x in range(1 << n):
                    one(M, g.from_mask(x))
        for _ in range(random_cases):
            n = rng.randint(1, 8)
            M = random_set_system(rng, n)
            one(M, M.ground.from_mask(rng.getrandbits(n)))

    return _run("setsystem.central_identity", body)


def _flip_by_definition(M: ss.SetSystem, a: ss.Flip2x2, j: int) -> ss.SetSystem:
    """Vertex flip straight from the case split, one subset at a time."""
    fam = 0
    jb = 1 << j
    for z in range(1 << M.n):
        zin = M.family >> z & 1
        other = M.family >> (z ^ jb) & 1
        if z & jb:
            bit = (a.a11 & zin) ^ (a.a12 & other)
        else:
            bit = (a.a21 & other) ^ (a.a22 & zin)
        fam |= bit << z
    return ss.SetSystem(M.ground, fam)


def check_vertex_flips(max_n: int, rng: random.Random, cases: int = 40) -> CheckResult:
    def body(check):
        for _ in range(cases):
            n = rng.randint(2, 6)
            M = random_set_system(rng, n)
            labs = M.ground.labels
            j, k = rng.sample(range(n), 2)
            for a in ss.ALL_FLIPS:
                direct = ss.vertex_flip(M, a, labs[j])
                check(direct == _flip_by_definition(M, a, j), lambda: f"flip {a} on {labs[j]} disagrees with definition")
                for b in ss.ALL_FLIPS:
                    same = ss.vertex_flip(direct, b, labs[j])
                    check(same == ss.vertex_flip(M, b @ a, labs[j]), lambda: f"(M a^j) b^j != M (ba)^j for a={a}, b={b}")
                    ab = ss.vertex_flip(direct, b, labs[k])
                    ba = ss.vertex_flip(ss.vertex_flip(M, b, labs[k]), a, labs[j])
                    check(ab == ba, lambda: f"flips on distinct vertices do not commute: a={a}, b={b}")
            translated = ss.SetSystem.from_masks(M.ground, [z ^ (1 << j) for z in M.masks()])
            check(ss.vertex_flip(M, ss.ALPHA_STAR, labs[j]) == translated, lambda: "star flip != pivot on {j}")

    return _run("setsystem.vertex_flips", body)


def check_generator_relations(max_n: int, rng: random.Random) -> CheckResult:
    def body(check):
        I = ss.IDENTITY
        check(ss.ALPHA_PLUS @ ss.ALPHA_PLUS == I, lambda: "alpha_+^2 != 1")
        check(ss.ALPHA_STAR @ ss.ALPHA_STAR == I, lambda: "alpha_*^2 != 1")
        check((ss.ALPHA_STAR @ ss.ALPHA_PLUS) ** 3 == I, lambda: "(alpha_* alpha_+)^3 != 1")
        check(ss.ALPHA_DUAL == ss.ALPHA_STAR @ ss.ALPHA_PLUS @ ss.ALPHA_STAR, lambda: "+*+ != *+*")
        check(ss.ALPHA_DUAL == ss.Flip2x2(1, 0, 1, 1), lambda: "dual flip matrix wrong")
        check(len(ss.GL2) == 6, lambda: "GL2(F2) does not have 6 elements")
        gen = {I}
        while True:
            bigger = gen | {g @ h for g in gen for h in (ss.ALPHA_PLUS, ss.ALPHA_STAR)}
            if bigger == gen:
                break
            gen = bigger
        check(gen == set(ss.GL2), lambda: "alpha_+, alpha_* do not generate GL2(F2)")
        names = {f.classify() for f in ss.GL2}
        check(names == {"1", "a", "b", "c", "f", "g"}, lambda: f"classify is not a bijection: {names}")
        check(all(f.classify() is None for f in ss.ALL_FLIPS if not f.is_invertible()), lambda: "singular flip classified")
        triples = {wd.triple_matrix(*t) for t in wd.TRIPLES}
        check(triples == set(ss.GL2), lambda: "normal-form triples do not biject with GL2(F2)")

    return _run("setsystem.generator_relations", body)


def check_extremal_invariance(max_n: int, rng: random.Random, cases: int = 1000) -> CheckResult:
    def naive_max(M):
        ms = M.masks()
        return {z for z in ms if not any(w != z and w & z == z for w in ms)}

    def naive_min(M):
        ms = M.masks()
        return {z for z in ms if not any(w != z and w & z == w for w in ms)}

    def body(check):
        for _ in range(cases):
            n = rng.randint(1, 6)
            M = random_set_system(rng, n)
            X = M.ground.from_mask(rng.getrandbits(n))
            mx = set(ss.ss_max(M).masks())
            check(mx == naive_max(M), lambda: f"ss_max wrong for {M!r}")
            check(set(ss.ss_min(M).masks()) == naive_min(M), lambda: f"ss_min wrong for {M!r}")
            check(mx == naive_max(ss.ss_dual_pivot(M, X)), lambda: f"max(M) != max(M dual X) for {M!r}, X={X}")
            check(naive_min(M) == naive_min(ss.ss_loop_complement(M, X)), lambda: f"min(M) != min(M+X) for {M!r}, X={X}")

    return _run("setsystem.extremal_invariance", body)


def _naive_ss_of_matrix(A: F2Matrix) -> int:
    """M_A by explicit submatrix extraction and cofactor expansion."""

    def det(m: list[list[int]]) -> int:
        if not m:
            return 1
        acc = 0
        for j, a in enumerate(m[0]):
            if a:
                acc ^= det([row[:j] + row[j + 1:] for row in m[1:]])
        return acc

    full = A.to_lists()
    fam = 0
    for x in range(1 << A.n):
        idx = [i for i in range(A.n) if x >> i & 1]
        fam |= det([[full[i][j] for j in idx] for i in idx]) << x
    return fam


def check_bridges(max_n: int, rng: random.Random) -> CheckResult:
    """``M_{A*X} = M_A*X``, ``M_{A+X} = M_A+X``, and graph reconstruction."""

    def body(check):
        for G in graphs_up_to(max_n):
            M = ss.ss_of_matrix(G)
            check(M.family == _naive_ss_of_matrix(G), lambda: f"M_A wrong for {G!r}")
            check(ss.graph_of_ss(M) == G, lambda: f"graph_of_ss(M_G) != G for {G!r}")
            check(bool(ss.is_delta_matroid(M)), lambda: f"M_G not a delta-matroid for {G!r}")
            g = G.ground
            for x in range(1 << G.n):
                X = g.from_mask(x)
                check(ss.ss_of_matrix(la.diag_add(G, X)) == ss.ss_loop_complement(M, X), lambda: f"M_(A+X) != M_A+X for {G!r}, X={X}")
                if M.family >> x & 1:
                    check(ss.ss_of_matrix(la.ppt(G, X)) == ss.ss_pivot(M, X), lambda: f"M_(A*X) != M_A*X for {G!r}, X={X}")

    return _run("setsystem.bridges", body)


def _naive_exchange(M: ss.SetSystem) -> bool:
    ms = M.masks()
    fam = M.family
    for X in ms:
        for Y in ms:
            d = X ^ Y
            for x in range(M.n):
                if not d >> x & 1:
                    continue
                if fam >> (X ^ (1 << x)) & 1:
                    continue
                if not any(y != x and d >> y & 1 and fam >> (X ^ (1 << x) ^ (1 << y)) & 1 for y in range(M.n)):
                    return False
    return True


def check_delta_matroid(max_n: int, rng: random.Random, cases: int = 300) -> CheckResult:
    def body(check):
        for n in range(1, min(max_n, 3) + 1):
            g = ground_of(n)
            for fam in range(1, 1 << (1 << n)):
                M = ss.SetSystem(g, fam)
                check(bool(ss.is_delta_matroid(M)) == _naive_exchange(M), lambda: f"delta-matroid check wrong for {M!r}")
        for _ in range(cases):
            M = random_set_system(rng, rng.randint(1, 5))
            if M.family:
                check(bool(ss.is_delta_matroid(M)) == _naive_exchange(M), lambda: f"delta-matroid check wrong for {M!r}")

    return _run("setsystem.delta_matroid", body)


# --- graph-algebra -------------------------------------------------------


def check_elementary_pivots(max_n: int, rng: random.Random) -> CheckResult:
    def body(check):
        for G in graphs_up_to(max_n):
            g = G.ground
            labs = g.labels
            for u in labs:
                U = g.subset([u])
                if G.has_loop(u):
                    check(gr.local_complement(G, u) == la.ppt(G, U), lambda: f"local complement != pivot for {G!r}, u={u}")
                else:
                    check(not la.minor(G, U), lambda: f"loopless {u} has det 1 in {G!r}")
            for u, v in combinations(labs, 2):
                UV = g.subset([u, v])
                if G.has_edge(u, v) and not G.has_loop(u) and not G.has_loop(v):
                    check(gr.edge_complement(G, u, v) == la.ppt(G, UV), lambda: f"edge complement != pivot for {G!r}, {u}{v}")
            M = ss.ss_of_matrix(G)
            for y in M.masks():
                Y = g.from_mask(y)
                H = G
                for step in gr.elementary_decomposition(G, Y):
                    H = gr.apply_elementary(H, step)
                check(H == gr.g_pivot(G, Y), lambda: f"elementary decomposition of {Y} wrong for {G!r}")

    return _run("graph.elementary_pivots", body)


CHAIN_WORD = "*{u,v} +{u} *{u} *{v} +{u} *{u} +{u}"


def check_identity_chain(max_n: int, rng: random.Random) -> CheckResult:
    """The word ``*{u,v} +{u} *{u} *{v} +{u} *{u} +{u}`` is applicable to
    every graph with a loopless edge ``{u,v}`` and acts as the identity."""

    def body(check):
        for G in graphs_up_to(max_n):
            labs = G.ground.labels
            for u, v in permutations(labs, 2):
                if not (G.has_edge(u, v) and not G.has_loop(u) and not G.has_loop(v)):
                    continue
                word = wd.parse_word(_subst(CHAIN_WORD, u, v), G.ground)
                try:
                    H = wd.apply_word_graph(G, word)
                except InapplicableOperation as exc:
                    check(False, lambda: f"identity chain word not applicable to {G!r} (u={u}, v={v}): {exc}")
                    continue
                check(H == G, lambda: f"identity chain word is not the identity on {G!r}")

    return _run("graph.identity_chain", body)


def _subst(word: str, u: str, v: str) -> str:
    return word.replace("{u,v}", "{%s,%s}" % (u, v)).replace("{u}", "{%s}" % u).replace("{v}", "{%s}" % v)


def check_simple_identities(max_n: int, rng: random.Random) -> CheckResult:
    """``*{u,v} = lc(u)lc(v)lc(u) = lc(v)lc(u)lc(v)``, the triangle identity
    ``(lc(u)lc(v)lc(w))^2 = lc(v)``, and projection/injection rules."""

    def body(check):
        for S in graphs_up_to(max_n, loops=False):
            for u, v in S.edges():
                e = gr.simple_edge_complement(S, u, v)
                check(e == gr.simple_local_sequence(S, [u, v, u]), lambda: f"*{{u,v}} != uvu on {S!r}, {u}{v}")
                check(e == gr.simple_local_sequence(S, [v, u, v]), lambda: f"*{{u,v}} != vuv on {S!r}, {u}{v}")
            for tri in gr.induced_triangles(S):
                for u, v, w in permutations(tri):
                    lhs = gr.simple_local_sequence(S, [u, v, w, u, v, w])
                    check(lhs == gr.simple_local_complement(S, v), lambda: f"triangle identity fails on {S!r}, {u}{v}{w}")
            check(gr.strip_loops(gr.inject(S)) == S, lambda: f"pi(i(S)) != S for {S!r}")

    return _run("graph.simple_identities", body)


def check_projection_rules(max_n: int, rng: random.Random) -> CheckResult:
    def body(check):
        for F in graphs_up_to(max_n):
            g = F.ground
            P = gr.strip_loops(F)
            for x in range(1 << F.n):
                X = g.from_mask(x)
                check(gr.strip_loops(gr.g_loop_complement(F, X)) == P, lambda: f"pi(F+Y) != pi(F) for {F!r}")
            for u in g.labels:
                if F.has_loop(u):
                    check(gr.strip_loops(gr.local_complement(F, u)) == gr.simple_local_complement(P, u), lambda: f"pi(F*{{u}}) mismatch on {F!r}")
            for u, v in F.edges():
                if not F.has_loop(u) and not F.has_loop(v):
                    check(gr.strip_loops(gr.edge_complement(F, u, v)) == gr.simple_edge_complement(P, u, v), lambda: f"pi(F*{{u,v}}) mismatch on {F!r}")

    return _run("graph.projection_rules", body)


def check_graph_central_identity(max_n: int, rng: random.Random) -> CheckResult:
    """Both-defined cases agree; right side defined implies left side defined."""

    def body(check):
        for G in graphs_up_to(max_n):
            g = G.ground
            for x in range(1 << G.n):
                X = g.from_mask(x)
                try:
                    rhs = gr.g_pivot(gr.g_loop_complement(gr.g_pivot(G, X), X), X)
                except InapplicableOperation:
                    rhs = None
                try:
                    lhs = gr.g_loop_complement(gr.g_pivot(gr.g_loop_complement(G, X), X), X)
                except InapplicableOperation:
                    lhs = None
                if rhs is not None:
                    check(lhs is not None, lambda: f"G*X+X*X defined but G+X*X+X not: {G!r}, X={X}")
                    check(lhs == rhs, lambda: f"G+X*X+X != G*X+X*X for {G!r}, X={X}")
                if lhs is not None:
                    check(gr.g_dual_pivot(G, X) == lhs, lambda: f"g_dual_pivot mismatch for {G!r}, X={X}")

    return _run("graph.central_identity", body)


def check_simple_sequences(max_n: int, rng: random.Random, cases: int = 500, size: int = 6, length: int = 8) -> CheckResult:
    """Local-complementation sequences on simple graphs are ``pi(i(S)+X*Y)``,
    and every defined ``F+X*Y`` is reached by local complementations."""

    def body(check):
        for _ in range(cases):
            n = rng.randint(1, size)
            S = random_graph(rng, n, loops=False)
            seq = [rng.choice(S.ground.labels) for _ in range(rng.randint(0, length))]
            X, Y = gr.simple_sequence_as_pivot(S, seq)
            check(X <= Y, lambda: f"X not within Y for {S!r}, {seq}")
            try:
                via = gr.strip_loops(gr.g_pivot(gr.g_loop_complement(gr.inject(S), X), Y))
            except InapplicableOperation:
                check(False, lambda: f"i(S)+X*Y undefined for {S!r}, {seq}")
                continue
            check(via == gr.simple_local_sequence(S, seq), lambda: f"pi(i(S)+X*Y) != S phi for {S!r}, {seq}")
        done = 0
        while done < cases:
            n = rng.randint(1, size)
            F = random_graph(rng, n)
            X = F.ground.from_mask(rng.getrandbits(n))
            Y = F.ground.from_mask(rng.getrandbits(n))
            try:
                target = gr.strip_loops(gr.g_pivot(gr.g_loop_complement(F, X), Y))
            except InapplicableOperation:
                continue
            done += 1
            seq = gr.pivot_as_simple_sequence(F, X, Y)
            check(gr.simple_local_sequence(gr.strip_loops(F), seq) == target, lambda: f"converse fails for {F!r}, X={X}, Y={Y}")

    return _run("graph.simple_sequences", body)


# --- group-word ----------------------------------------------------------


def check_normal_form(max_n: int, rng: random.Random, cases: int = 1000, size: int = 6, length: int = 12) -> CheckResult:
    def body(check):
        kinds = tuple(wd.OpKind)
        for _ in range(cases):
            n = rng.randint(1, size)
            M = random_set_system(rng, n)
            g = M.ground
            word = []
            for _ in range(rng.randint(0, length)):
                kind = rng.choice(kinds)
                if kind is wd.OpKind.LOCAL:
                    args = g.from_mask(1 << rng.randrange(n))
                elif kind is wd.OpKind.EDGE:
                    if n < 2:
                        continue
                    args = g.from_mask(sum(1 << i for i in rng.sample(range(n), 2)))
                else:
                    args = g.from_mask(rng.getrandbits(n))
                word.append(wd.OpToken(kind, args))
            nf = wd.normalize(word, g)
            check(nf.X <= nf.Y, lambda: f"normal form has X not within Y for {wd.render_word(word)}")
            direct = wd.apply_word_ss(M, word)
            check(direct == nf.apply_ss(M), lambda: f"word {wd.render_word(word)} != {nf} on {M!r}")
            check(direct == wd.apply_word_ss(M, nf.to_word()), lambda: f"normal-form word mismatch for {wd.render_word(word)}")

    return _run("word.normal_form", body)


def check_group_axioms(max_n: int, rng: random.Random, cases: int = 300) -> CheckResult:
    def body(check):
        order2 = {ss.IDENTITY, ss.ALPHA_PLUS, ss.ALPHA_STAR, ss.ALPHA_DUAL}
        for n in range(1, min(max_n, 3) + 1):
            g = ground_of(n)
            for entries in product(ss.GL2, repeat=n):
                e = wd.GroupElement(g, entries)
                check(6 % e.order() == 0, lambda: f"order of {e!r} does not divide 6")
                sq = (e * e).is_identity()
                check(sq == all(m in order2 for m in entries), lambda: f"order-2 characterisation fails for {e!r}")
                nf = wd.normal_form(e)
                check(wd.word_to_element(nf.to_word(), g) == e, lambda: f"normal form does not represent {e!r}")
        for _ in range(cases):
            n = rng.randint(1, 5)
            g = ground_of(n)
            w1 = random_word(rng, g, rng.randint(0, 6))
            w2 = random_word(rng, g, rng.randint(0, 6))
            e1, e2 = wd.word_to_element(w1, g), wd.word_to_element(w2, g)
            check(wd.word_to_element(w1 + w2, g) == e1.then(e2), lambda: "concatenation is not composition")
            X = g.from_mask(rng.getrandbits(n))
            dual = wd.word_to_element([wd.OpToken(wd.OpKind.DUAL, X)], g)
            pmp = wd.word_to_element([wd.OpToken(k, X) for k in (wd.OpKind.LOOP, wd.OpKind.PIVOT, wd.OpKind.LOOP)], g)
            mpm = wd.word_to_element([wd.OpToken(k, X) for k in (wd.OpKind.PIVOT, wd.OpKind.LOOP, wd.OpKind.PIVOT)], g)
            check(dual == pmp == mpm, lambda: f"!{{X}} expansion fails for X={X}")
            M = random_set_system(rng, n)
            check(e1.apply_ss(M) == wd.apply_word_ss(M, w1), lambda: "element action != word action")

    return _run("word.group_axioms", body)


def check_graph_word_applicability(max_n: int, rng: random.Random, max_len: int = 4) -> CheckResult:
    """Whenever a word applies to a graph, ``*Y`` applies to ``G+X`` for the
    word's normal form and ``G+X*Y+Z`` equals the stepwise result."""

    def body(check):
        for n in range(1, min(max_n, 3) + 1):
            g = ground_of(n)
            alphabet = [wd.OpToken(wd.OpKind.PIVOT, g.from_mask(m)) for m in range(1, 1 << n)]
            alphabet += [wd.OpToken(wd.OpKind.LOOP, g.from_mask(1 << i)) for i in range(n)]
            alphabet += [wd.OpToken(wd.OpKind.DUAL, g.from_mask(1 << i)) for i in range(n)]
            for G in gr.all_graphs(g):

                def walk(H, elem_entries, word):
                    e = wd.GroupElement(g, elem_entries)
                    nf = wd.normal_form(e)
                    try:
                        via = nf.apply_graph(G)
                    except InapplicableOperation:
                        check(False, lambda: f"normal form {nf} not applicable to {G!r} for word {wd.render_word(word)}")
                        return
                    check(via == H, lambda: f"{nf} != word {wd.render_word(word)} on {G!r}")
                    if len(word) == max_len:
                        return
                    for tok in alphabet:
                        try:
                            H2 = wd.apply_token_graph(H, tok)
                        except InapplicableOperation:
                            continue
                        ents = list(elem_entries)
                        for i in tok.args.indices():
                            ents[i] = tok.flip @ ents[i]
                        walk(H2, ents, word + [tok])

                walk(G, [ss.IDENTITY] * n, [])

    return _run("word.graph_applicability", body)


# --- orbit-explorer ------------------------------------------------------


def check_orbits(max_n: int, rng: random.Random) -> CheckResult:
    def body(check):
        for G in graphs_up_to(max_n):
            orb = pivot_orbit(G)
            check(set(orb.nodes) == set(pivot_images(G)), lambda: f"pivot orbit != {{G*Y}} for {G!r}")
        for _ in range(20):
            G = random_graph(rng, rng.randint(1, min(max_n, 4)))
            orb = pivot_orbit(G)
            for H in orb.nodes.values():
                check(set(pivot_orbit(H).nodes) == set(orb.nodes), lambda: f"orbit not an equivalence class at {G!r}")
            fo = full_orbit(G)
            check(set(orb.nodes) <= set(fo.nodes), lambda: f"full orbit misses pivot orbit of {G!r}")
            H = rng.choice(list(fo.nodes.values()))
            check(set(full_orbit(H).nodes) == set(fo.nodes), lambda: f"full orbit not invariant at {G!r}")

    return _run("orbit.closure", body)


# --- cli formats ---------------------------------------------------------


def check_format_round_trip(max_n: int, rng: random.Random) -> CheckResult:
    def body(check):
        for G in graphs_up_to(max_n):
            text = ss.ss_of_matrix(G).to_text()
            back = ss.graph_of_ss(ss.parse_set_system(text))
            check(back.to_text() == G.to_text(), lambda: f"convert round trip fails for {G!r}")
            check(gr.parse_graph(G.to_text()) == G, lambda: f"graph text round trip fails for {G!r}")
        for n in range(1, min(max_n, 3) + 1):
            g = ground_of(n)
            for fam in range(1 << (1 << n)):
                M = ss.SetSystem(g, fam)
                try:
                    ss.graph_of_ss(M)
                    graphic = True
                except NotGraphic:
                    graphic = False
                expected = any(ss.ss_of_matrix(G) == M for G in gr.all_graphs(g))
                check(graphic == expected, lambda: f"NotGraphic detection wrong for {M!r}")

    return _run("cli.round_trip", body)


SUITES: dict[str, list[Callable[[int, random.Random], CheckResult]]] = {
    "linalg": [
        check_pivot_involution_composition,
        check_tucker,
        check_partial_inverse,
        check_symmetry,
        check_dual_relation,
        check_kernel_invariance,
        check_full_ground_s3,
    ],
    "setsystem": [
        check_central_identity_ss,
        check_vertex_flips,
        check_generator_relations,
        check_extremal_invariance,
        check_bridges,
        check_delta_matroid,
    ],
    "graph": [
        check_elementary_pivots,
        check_identity_chain,
        check_simple_identities,
        check_projection_rules,
        check_graph_central_identity,
        check_simple_sequences,
    ],
    "word": [check_normal_form, check_group_axioms, check_graph_word_applicability],
    "orbit": [check_orbits],
    "cli": [check_format_round_trip],
}


def run_suite(name: str, max_n: int = 4, seed: int = DEFAULT_SEED) -> Iterator[CheckResult]:
    """Run one suite (or ``"small"`` for all of them) and yield results in order."""
    names = list(SUITES) if name == "small" else [name]
    for suite in names:
        for fn in SUITES[suite]:
            yield fn(max_n, random.Random(f"{seed}:{fn.__name__}"))
