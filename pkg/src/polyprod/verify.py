"""Randomized and exhaustive verification suites for the structural identities.

Each suite checks one identity family on randomly generated instances (plus
curated edge instances in the first trial slots) and reports one line per
trial: ``TRIAL <seed> <suite> PASS|FAIL``.  Failing trials carry a shrunk
counterexample rendered in the document format.  Trials are deterministic:
trial i of a run with seed s uses the derived seed ``s * 1_000_003 + i``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .abelian import FgAbelianGroup, GradedGroup
from .complexes import (
    SimplicialComplex,
    composition_complex,
    consecutive_blocks,
    enumerate_complexes,
    ghost_factorization,
    join,
    make_complex,
    mask_of,
    polyhedral_complex,
    random_complex,
    random_subcomplex,
    vertices_of,
)
from .documents import document_of
from .hochster import (
    DualityCheckError,
    alexander_duality_witness,
    composition_homology,
    hochster_composition_formula,
    hochster_table,
)
from .homology import GF, homology_consistency_failures, reduced_homology
from .spaces import (
    FiniteSpacePair,
    SpherePairSystem,
    complement_identity_check,
    factorization_identity_check,
    sphere_pair_duality_check,
    sphere_pair_homology,
    substitution_identity_check,
)

# number of complexes (void and {0} included) on 0..4 labeled vertices;
# the exhaustive census must reproduce these exactly
_COMPLEX_COUNTS = (2, 3, 6, 20, 168)

RP2_FACETS = (
    (1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 6), (1, 4, 5),
    (2, 3, 4), (2, 3, 5), (2, 4, 6), (3, 5, 6), (4, 5, 6),
)


def rp2_complex() -> SimplicialComplex:
    """The 6-vertex triangulation of the real projective plane."""
    return make_complex(range(1, 7), RP2_FACETS)


def cone_over_rp2() -> SimplicialComplex:
    """Cone over the 6-vertex projective plane with apex vertex 7.

    Its slice at (sigma, omega) = ({7}, [6]) is the projective plane, so
    duality suites on this complex exercise torsion.
    """
    facets = [f + (7,) for f in RP2_FACETS]
    return make_complex(range(1, 8), facets)


def cycle_complex(n: int, start: int = 1) -> SimplicialComplex:
    """The n-gon boundary cycle on vertices start..start+n-1 (n >= 3)."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    vs = list(range(start, start + n))
    edges = [(vs[i], vs[(i + 1) % n]) for i in range(n)]
    return make_complex(vs, edges)


# self-dual complexes on local grounds {1..n}, one per size
_SELF_DUAL_FACETS = {
    1: ((),),
    2: ((1,),),
    3: ((1,), (2,), (3,)),
    4: ((1, 4), (2, 4), (3, 4)),
}


def self_dual_complex(n: int) -> SimplicialComplex:
    return make_complex(range(1, n + 1), _SELF_DUAL_FACETS[n])


@dataclass(frozen=True)
class Trial:
    seed: int
    suite: str
    ok: bool
    counterexample: str = ""

    def lines(self) -> list[str]:
        head = f"TRIAL {self.seed} {self.suite} {'PASS' if self.ok else 'FAIL'}"
        if self.ok or not self.counterexample:
            return [head]
        return [head] + ["  " + l for l in self.counterexample.splitlines()]


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    trials: tuple[Trial, ...]

    @property
    def ok(self) -> bool:
        return all(t.ok for t in self.trials)

    @property
    def failures(self) -> tuple[Trial, ...]:
        return tuple(t for t in self.trials if not t.ok)

    def report_lines(self) -> list[str]:
        lines = []
        for t in self.trials:
            lines.extend(t.lines())
        lines.append(
            f"suite {self.suite}: {len(self.trials)} trials, "
            f"{len(self.failures)} failures"
        )
        return lines


def _subseed(seed: int, i: int) -> int:
    return seed * 1_000_003 + i


def _serialize(**named) -> str:
    parts = []
    for label, K in named.items():
        parts.append(f"{label}:")
        parts.extend("  " + line for line in document_of(K).render().splitlines())
    return "\n".join(parts)


def minimize_complex(K: SimplicialComplex, still_fails,
                     drop_vertices: bool = True) -> SimplicialComplex:
    """Greedy counterexample shrinker.

    Repeatedly drops a ground vertex (restricting to the rest) or a maximal
    face, keeping any change under which ``still_fails`` stays true, until
    no single deletion preserves the failure.
    """
    changed = True
    while changed:
        changed = False
        if drop_vertices:
            for v in vertices_of(K.ground):
                smaller = K.restrict(K.ground & ~(1 << (v - 1)))
                if still_fails(smaller):
                    K = smaller
                    changed = True
                    break
            if changed:
                continue
        for f in K.facets():
            cand = SimplicialComplex(K.ground, frozenset(K.faces - {f}))
            if still_fails(cand):
                K = cand
                changed = True
                break
    return K


def _random_pair_split(rng, ground: int):
    """Random disjoint (sigma, omega) inside a ground mask."""
    sigma = omega = 0
    for v in vertices_of(ground):
        digit = rng.randrange(3)
        if digit == 1:
            sigma |= 1 << (v - 1)
        elif digit == 2:
            omega |= 1 << (v - 1)
    return sigma, omega


def _random_block_sizes(rng, m: int, total_max: int, size_max: int = 4):
    budget = total_max
    sizes = []
    for k in range(m):
        hi = max(1, min(size_max, budget - (m - k - 1)))
        n_k = rng.randint(1, hi)
        sizes.append(n_k)
        budget -= n_k
    return sizes


# ---------------------------------------------------------------------------
# suite: dual (involution, De Morgan, small-ground census)

def _dual_failure(K: SimplicialComplex):
    g = K.ground
    if g == 0:
        return None
    d = K.dual(g)
    if len(K.faces) + len(d.faces) != 1 << K.n_vertices:
        return "face counts of a complex and its dual do not sum to 2^n"
    if d.dual(g) != K:
        return "dual applied twice does not return the original"
    return None


def _de_morgan_failure(K1: SimplicialComplex, K2: SimplicialComplex):
    g = K1.ground
    d1, d2 = K1.dual(g), K2.dual(g)
    if K1.union(K2).dual(g) != d1.intersection(d2):
        return "dual of a union is not the intersection of duals"
    if K1.intersection(K2).dual(g) != d1.union(d2):
        return "dual of an intersection is not the union of duals"
    return None


def _census_trial(seed: int) -> Trial:
    for n, expect in enumerate(_COMPLEX_COUNTS):
        g = mask_of(range(1, n + 1))
        family = list(enumerate_complexes(g))
        if len(family) != expect:
            return Trial(
                seed, "dual", False,
                f"census on {n} vertices found {len(family)} complexes, "
                f"expected {expect}",
            )
        if n == 0:
            continue
        for K in family:
            err = _dual_failure(K)
            if err:
                return Trial(seed, "dual", False, err + "\n" + _serialize(complex=K))
        for K1 in family:
            for K2 in family:
                err = _de_morgan_failure(K1, K2)
                if err:
                    return Trial(
                        seed, "dual", False,
                        err + "\n" + _serialize(first=K1, second=K2),
                    )
    return Trial(seed, "dual", True)


def _suite_dual(trials: int, max_vertices: int, seed: int):
    yield _census_trial(_subseed(seed, 0))
    for i in range(1, trials + 1):
        sub = _subseed(seed, i)
        rng = random.Random(sub)
        n = rng.randint(1, max_vertices)
        ground = range(1, n + 1)
        K1 = random_complex(rng, ground)
        K2 = random_complex(rng, ground)
        err = _dual_failure(K1) or _dual_failure(K2) or _de_morgan_failure(K1, K2)
        if err is None:
            yield Trial(sub, "dual", True)
        else:
            small = minimize_complex(K1, lambda c: _dual_failure(c) is not None)
            yield Trial(
                sub, "dual", False,
                err + "\n" + _serialize(first=small, second=K2),
            )


# ---------------------------------------------------------------------------
# suite: slice-dual (dual of a slice is the complementary slice of the dual)

def _slice_dual_failure(K: SimplicialComplex, sigma: int, omega: int):
    lhs = K.slice(sigma, omega).dual(omega)
    rhs = K.dual(K.ground).slice(K.ground & ~(sigma | omega), omega)
    if lhs != rhs:
        return (
            f"slice dual mismatch at sigma={list(vertices_of(sigma))} "
            f"omega={list(vertices_of(omega))}"
        )
    return None


def _suite_slice_dual(trials: int, max_vertices: int, seed: int):
    for i in range(trials):
        sub = _subseed(seed, i)
        rng = random.Random(sub)
        n = rng.randint(1, max_vertices)
        K = random_complex(rng, range(1, n + 1))
        sigma, omega = _random_pair_split(rng, K.ground)
        if omega == 0:
            v = rng.randrange(n)
            omega = 1 << v
            sigma &= ~omega
        err = _slice_dual_failure(K, sigma, omega)
        if err is None:
            yield Trial(sub, "slice-dual", True)
        else:
            def fails(c, s=sigma, w=omega):
                if (s | w) & ~c.ground:
                    return False
                return _slice_dual_failure(c, s, w) is not None

            small = minimize_complex(K, fails, drop_vertices=False)
            yield Trial(sub, "slice-dual", False, err + "\n" + _serialize(complex=small))


# ---------------------------------------------------------------------------
# suite: compose-slice (slices of polyhedral products work blockwise)

def _random_product_instance(rng, max_total: int):
    m = rng.randint(1, 3)
    sizes = _random_block_sizes(rng, m, max_total)
    blocks = consecutive_blocks(sizes)
    K = random_complex(rng, range(1, m + 1))
    pairs = []
    for b in blocks:
        X = random_complex(rng, vertices_of(b))
        A = random_subcomplex(rng, X)
        pairs.append((X, A))
    return K, blocks, pairs


def _suite_compose_slice(trials: int, max_vertices: int, seed: int):
    for i in range(trials):
        sub = _subseed(seed, i)
        rng = random.Random(sub)
        K, blocks, pairs = _random_product_instance(rng, max_vertices)
        S = polyhedral_complex(K, pairs)
        sigma, omega = _random_pair_split(rng, S.ground)
        lhs = S.slice(sigma, omega)
        sliced_pairs = [
            (x.slice(sigma & b, omega & b), a.slice(sigma & b, omega & b))
            for (x, a), b in zip(pairs, blocks)
        ]
        rhs = polyhedral_complex(K, sliced_pairs)
        if lhs != rhs:
            yield Trial(
                sub, "compose-slice", False,
                f"blockwise slice mismatch at sigma={list(vertices_of(sigma))} "
                f"omega={list(vertices_of(omega))}\n"
                + _serialize(outer=K, **{
                    f"factor_{j + 1}": x for j, (x, _) in enumerate(pairs)
                }),
            )
            continue
        # ghost factorization: positions with a void subcomplex split off
        # as join factors over the link
        core, cones = ghost_factorization(K, pairs)
        if join([core] + cones) != S:
            yield Trial(
                sub, "compose-slice", False,
                "ghost factorization does not reassemble the product\n"
                + _serialize(outer=K),
            )
            continue
        yield Trial(sub, "compose-slice", True)


# ---------------------------------------------------------------------------
# suite: compose-dual (duality swaps a composition for the dual composition)

def _suite_compose_dual(trials: int, max_vertices: int, seed: int):
    for i in range(trials):
        sub = _subseed(seed, i)
        rng = random.Random(sub)
        m = rng.randint(1, 3)
        sizes = _random_block_sizes(rng, m, max_vertices)
        blocks = consecutive_blocks(sizes)
        K = random_complex(rng, range(1, m + 1))
        factors = [random_complex(rng, vertices_of(b)) for b in blocks]
        S = composition_complex(K, factors)
        total = mask_of(range(1, sum(sizes) + 1))
        lhs = S.dual(total)
        rhs = composition_complex(
            K.dual(K.ground), [L.dual(b) for L, b in zip(factors, blocks)]
        )
        if lhs != rhs:
            yield Trial(
                sub, "compose-dual", False,
                "dual of the composition is not the composition of duals\n"
                + _serialize(outer=K, **{
                    f"factor_{j + 1}": L for j, L in enumerate(factors)
                }),
            )
            continue
        # closure: compositions of self-dual complexes stay self-dual
        sd_sizes = [rng.randint(1, 4) for _ in range(m)]
        sd_blocks = consecutive_blocks(sd_sizes)
        sd_outer = self_dual_complex(m)
        sd_factors = [
            self_dual_complex(s).relabel(
                {v: v + off for v in range(1, s + 1)}
            )
            for s, off in zip(
                sd_sizes, [sum(sd_sizes[:j]) for j in range(m)]
            )
        ]
        sd = composition_complex(sd_outer, sd_factors)
        if sd.dual(sd.ground) != sd:
            yield Trial(
                sub, "compose-dual", False,
                "composition of self-dual complexes is not self-dual\n"
                + _serialize(outer=sd_outer),
            )
            continue
        yield Trial(sub, "compose-dual", True)


# ---------------------------------------------------------------------------
# suite: alexander (slice homology of K against dual slice cohomology)

def _duality_table_failure(K: SimplicialComplex):
    """Compare every nonempty-omega entry of K's table with the dual table."""
    g = K.ground
    dual = K.dual(g)
    table = hochster_table(K)
    co_dual = hochster_table(dual, cohomology=True)
    for (sigma, omega), lhs in table.items():
        if not omega:
            continue
        rhs = co_dual.entry(g & ~(sigma | omega), omega)
        wsize = omega.bit_count()
        degs = set(lhs.degrees()) | {wsize - d - 1 for d in rhs.degrees()}
        for d in degs:
            if lhs.at(d) != rhs.at(wsize - d - 1):
                return (
                    f"slice homology at sigma={list(vertices_of(sigma))} "
                    f"omega={list(vertices_of(omega))} degree {d} is "
                    f"{lhs.at(d)}, dual cohomology gives {rhs.at(wsize - d - 1)}"
                )
        try:
            alexander_duality_witness(K, sigma, omega, precomputed_dual=dual)
        except DualityCheckError as e:
            return (
                f"witness failed at sigma={list(vertices_of(sigma))} "
                f"omega={list(vertices_of(omega))}: {e}"
            )
    return None


def _suite_alexander(trials: int, max_vertices: int, seed: int):
    curated = [
        c for c in (cone_over_rp2(), rp2_complex())
        if c.n_vertices <= max_vertices
    ]
    for i in range(trials):
        sub = _subseed(seed, i)
        rng = random.Random(sub)
        if i < len(curated):
            K = curated[i]
        else:
            n = rng.randint(1, max_vertices)
            K = random_complex(rng, range(1, n + 1))
        err = _duality_table_failure(K)
        if err is None:
            bad = homology_consistency_failures(K)
            err = "; ".join(bad) if bad else None
        if err is None:
            yield Trial(sub, "alexander", True)
        else:
            small = minimize_complex(
                K, lambda c: c.ground != 0 and _duality_table_failure(c) is not None
            )
            yield Trial(sub, "alexander", False, err + "\n" + _serialize(complex=small))


# ---------------------------------------------------------------------------
# suite: composition-homology (tensor formula for compositions)

def _free_random_complex(rng, ground) -> SimplicialComplex:
    # resample until the reduced homology is torsion-free; on small grounds
    # the first draw already is
    for _ in range(20):
        L = random_complex(rng, ground)
        h = reduced_homology(L)
        if not any(g.torsion for _, g in h.groups):
            return L
    return SimplicialComplex.empty_face_complex(ground)


def _sphere_like(rng, ground) -> SimplicialComplex:
    verts = vertices_of(ground) if isinstance(ground, int) else tuple(sorted(ground))
    if len(verts) >= 3 and rng.random() < 0.5:
        edges = [(verts[i], verts[(i + 1) % len(verts)])
                 for i in range(len(verts))]
        return make_complex(verts, edges)
    return SimplicialComplex.boundary_simplex(verts)


def _biased_free_complex(rng, ground) -> SimplicialComplex:
    # plain random complexes on few vertices are almost always contractible,
    # which would make the tensor identity vacuous; mix in actual spheres
    if rng.random() < 0.6:
        return _sphere_like(rng, ground)
    return _free_random_complex(rng, ground)


def _sphere_degree(parts) -> int:
    return sum(d + 1 for d in parts) - 1


def _composition_curated():
    tri = SimplicialComplex.boundary_simplex(range(1, 4))
    seg = SimplicialComplex.boundary_simplex
    cases = []
    cases.append((tri, [seg(range(4, 6)), seg(range(6, 8)), seg(range(8, 10))]))
    cases.append((
        cycle_complex(4),
        [
            SimplicialComplex.empty_face_complex(mask_of([5])),
            SimplicialComplex.empty_face_complex(mask_of([6])),
            seg(range(7, 9)),
            SimplicialComplex.empty_face_complex(mask_of([9])),
        ],
    ))
    cases.append((seg(range(1, 3)), [cycle_complex(5, start=3),
                                     SimplicialComplex.empty_face_complex(mask_of([8]))]))
    return cases


def _suite_composition_homology(trials: int, max_vertices: int, seed: int):
    curated = _composition_curated()
    for i in range(trials):
        sub = _subseed(seed, i)
        rng = random.Random(sub)
        if i < len(curated):
            K, factors = curated[i]
            try:
                h = composition_homology(K, factors)
            except DualityCheckError as e:
                yield Trial(sub, "composition-homology", False, str(e))
                continue
            want = _sphere_degree(
                [d for d, _ in reduced_homology(K).groups]
                + [d for L in factors for d, _ in reduced_homology(L).groups]
            )
            if h.total_rank() != 1 or h.at(want) != FgAbelianGroup(1):
                yield Trial(
                    sub, "composition-homology", False,
                    f"homology sphere closure failed: got {h}, expected Z "
                    f"in degree {want}\n" + _serialize(outer=K),
                )
                continue
            yield Trial(sub, "composition-homology", True)
            continue
        m = rng.randint(1, 3)
        sizes = _random_block_sizes(rng, m, max_vertices)
        blocks = consecutive_blocks(sizes)
        if rng.random() < 0.6:
            K = _sphere_like(rng, range(1, m + 1))
        else:
            K = random_complex(rng, range(1, m + 1))
        factors = [_biased_free_complex(rng, vertices_of(b)) for b in blocks]
        try:
            composition_homology(K, factors)
            composition_homology(K, factors, GF(2))
        except DualityCheckError as e:
            yield Trial(
                sub, "composition-homology", False,
                str(e) + "\n" + _serialize(outer=K, **{
                    f"factor_{j + 1}": L for j, L in enumerate(factors)
                }),
            )
            continue
        comp = composition_complex(K, factors)
        bad = homology_consistency_failures(comp)
        if bad:
            yield Trial(
                sub, "composition-homology", False,
                "; ".join(bad) + "\n" + _serialize(composition=comp),
            )
            continue
        yield Trial(sub, "composition-homology", True)


# ---------------------------------------------------------------------------
# suite: hochster-composition (piecewise table formula)

def _suite_hochster_composition(trials: int, max_vertices: int, seed: int):
    for i in range(trials):
        sub = _subseed(seed, i)
        rng = random.Random(sub)
        m = rng.randint(1, 3)
        sizes = _random_block_sizes(rng, m, max_vertices)
        blocks = consecutive_blocks(sizes)
        K = random_complex(rng, range(1, m + 1))
        factors = []
        for b in blocks:
            L = random_complex(rng, vertices_of(b))
            if L.is_void:
                L = SimplicialComplex.empty_face_complex(b)
            factors.append(L)
        coeff = GF(2) if i % 5 == 4 else None
        report = hochster_composition_formula(K, factors, coeff)
        if report.ok:
            yield Trial(sub, "hochster-composition", True)
        else:
            v = report.failures()[0]
            yield Trial(
                sub, "hochster-composition", False,
                f"piece mismatch at sigma={list(vertices_of(v.sigma))} "
                f"omega={list(vertices_of(v.omega))}: {v.lhs} vs {v.rhs}\n"
                + _serialize(outer=K, **{
                    f"factor_{j + 1}": L for j, L in enumerate(factors)
                }),
            )


# ---------------------------------------------------------------------------
# suite: complement (finite set models of the complement identity)

_LETTERS = ("a", "b", "c")


def _random_finite_pairs(rng, m: int, allow_empty_sub: bool = True):
    pairs = []
    for _ in range(m):
        nx = rng.randint(1, 3)
        points = frozenset(_LETTERS[:nx])
        lo = 0 if allow_empty_sub else 1
        na = rng.randint(lo, nx)
        sub = frozenset(rng.sample(sorted(points), na))
        pairs.append(FiniteSpacePair(points, sub))
    return pairs


def _suite_complement(trials: int, max_vertices: int, seed: int):
    for i in range(trials):
        sub = _subseed(seed, i)
        rng = random.Random(sub)
        m = rng.randint(1, max_vertices)
        ground = range(1, m + 1)
        if i % 10 == 0:
            K = SimplicialComplex.full_simplex(ground)
        elif i % 10 == 5:
            K = SimplicialComplex.void(ground)
        else:
            K = random_complex(rng, ground)
        pairs = _random_finite_pairs(rng, m)
        v = complement_identity_check(K, pairs)
        if v.ok:
            # idempotence: complementing the complement recovers the start
            v = complement_identity_check(
                K.dual(K.ground), [p.complement() for p in pairs]
            )
        if v.ok:
            yield Trial(sub, "complement", True)
        else:
            yield Trial(sub, "complement", False,
                        v.detail + "\n" + _serialize(complex=K))


# ---------------------------------------------------------------------------
# suite: substitution (two-level products collapse through the composition)

def _suite_substitution(trials: int, max_vertices: int, seed: int):
    for i in range(trials):
        sub = _subseed(seed, i)
        rng = random.Random(sub)
        m = rng.randint(1, max_vertices)
        K = random_complex(rng, range(1, m + 1))
        sizes = [rng.randint(1, 2) for _ in range(m)]
        blocks = consecutive_blocks(sizes)
        inner = []
        for b in blocks:
            X = random_complex(rng, vertices_of(b))
            A = random_subcomplex(rng, X)
            inner.append((X, A))
        leaf_pairs = []
        for _ in range(sum(sizes)):
            nu = rng.randint(0, 2)
            points = frozenset(_LETTERS[:nu])
            csub = frozenset(rng.sample(sorted(points), rng.randint(0, nu)))
            leaf_pairs.append(FiniteSpacePair(points, csub))
        v = substitution_identity_check(K, inner, leaf_pairs)
        if v.ok:
            # factorization of positions with empty subspace through the link
            v = factorization_identity_check(
                K, _random_finite_pairs(rng, m, allow_empty_sub=True)
            )
        if v.ok:
            yield Trial(sub, "substitution", True)
        else:
            yield Trial(sub, "substitution", False,
                        v.detail + "\n" + _serialize(outer=K))


# ---------------------------------------------------------------------------
# suite: sphere-duality (ledger pairing between a space and its complement)

def _sphere_oracles():
    point_pair = (
        SimplicialComplex.empty_face_complex(mask_of([1])),
        SpherePairSystem.of((1, 0)),
        GradedGroup.from_dict({0: FgAbelianGroup(2)}),
    )
    four_spheres = (
        SimplicialComplex.boundary_simplex(range(1, 3)),
        SpherePairSystem.of((1, 0), (1, 0)),
        GradedGroup.from_dict({
            0: FgAbelianGroup(1),
            1: FgAbelianGroup(1),
            2: FgAbelianGroup(4),
        }),
    )
    return [point_pair, four_spheres]


def _suite_sphere_duality(trials: int, max_vertices: int, seed: int):
    oracles = _sphere_oracles()
    for i in range(trials):
        sub = _subseed(seed, i)
        rng = random.Random(sub)
        if i < len(oracles):
            K, system, want = oracles[i]
            report = sphere_pair_homology(K, system)
            if report.total != want:
                yield Trial(
                    sub, "sphere-duality", False,
                    f"oracle total {report.total} differs from {want}",
                )
                continue
            v = sphere_pair_duality_check(K, system)
            yield Trial(sub, "sphere-duality", v.ok, v.detail)
            continue
        n = rng.randint(1, max_vertices)
        K = random_complex(rng, range(1, n + 1))
        params = []
        for _ in range(n):
            r = rng.randint(0, 3)
            params.append((r, rng.randint(0, r)))
        system = SpherePairSystem.of(*params)
        v = sphere_pair_duality_check(K, system)
        if v.ok:
            yield Trial(sub, "sphere-duality", True)
        else:
            yield Trial(sub, "sphere-duality", False,
                        v.detail + "\n" + _serialize(complex=K))


# ---------------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class SuiteSpec:
    fn: object
    trials: int
    max_vertices: int
    summary: str


SUITES = {
    "dual": SuiteSpec(_suite_dual, 10_000, 8,
                      "dual involution, De Morgan laws, small-ground census"),
    "slice-dual": SuiteSpec(_suite_slice_dual, 1000, 10,
                            "dual of a slice vs complementary slice of the dual"),
    "compose-slice": SuiteSpec(_suite_compose_slice, 1000, 10,
                               "blockwise slices and ghost factorization of products"),
    "compose-dual": SuiteSpec(_suite_compose_dual, 1000, 10,
                              "dual of a composition and self-dual closure"),
    "alexander": SuiteSpec(_suite_alexander, 500, 7,
                           "slice homology vs dual slice cohomology with witness"),
    "composition-homology": SuiteSpec(_suite_composition_homology, 210, 9,
                                      "tensor formula for composition homology"),
    "hochster-composition": SuiteSpec(_suite_hochster_composition, 50, 8,
                                      "piecewise table formula for compositions"),
    "complement": SuiteSpec(_suite_complement, 1000, 4,
                            "finite-model complement identity"),
    "substitution": SuiteSpec(_suite_substitution, 500, 3,
                              "two-level finite products and ghost splitting"),
    "sphere-duality": SuiteSpec(_suite_sphere_duality, 200, 6,
                                "sphere-pair ledger duality pairing"),
}


def run_suite(name: str, trials: int | None = None,
              max_vertices: int | None = None, seed: int = 0) -> SuiteResult:
    """Run one named suite and collect its trials."""
    if name not in SUITES:
        known = ", ".join(sorted(SUITES))
        raise ValueError(f"unknown suite {name!r}; choose one of: {known}")
    spec = SUITES[name]
    t = spec.trials if trials is None else trials
    mv = spec.max_vertices if max_vertices is None else max_vertices
    if t < 0:
        raise ValueError("trial count must be nonnegative")
    if mv < 1:
        raise ValueError("max vertices must be at least 1")
    return SuiteResult(name, tuple(spec.fn(t, mv, seed)))
