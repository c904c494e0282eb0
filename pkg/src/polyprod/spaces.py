"""Point-set and sphere-pair models of polyhedral products.

Two kinds of model live here.  Finite set models make the purely
set-theoretic identities (complementation, substitution, ghost
factorization) checkable by exhaustive enumeration of tuples: the product
of a complex K with pairs (X_k, A_k) of finite sets is the union over faces
tau of the products taking X_k at positions in tau and A_k elsewhere.

Sphere-pair models compute the homology a moment-angle style space would
have, purely symbolically from the slice homology tables of K: a pair
(r_k, q_k) stands for the sphere pair (S^(r_k+1), S^(q_k)), every slice
class at internal degree d of the pair (sigma, omega) contributes in total
degree d + t with t = sum over sigma of (r_k+1) plus sum over omega of q_k,
and single faces contribute "hat" classes at their t.  No triangulation of
the product space is ever built.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .abelian import FgAbelianGroup, GradedGroup
from .complexes import SimplicialComplex, _as_mask, submasks, vertices_of
from .hochster import hochster_table
from .homology import FieldCoeff


@dataclass(frozen=True)
class FiniteSpacePair:
    """A finite set with a distinguished (possibly empty) subset."""

    points: frozenset
    sub: frozenset

    def __post_init__(self):
        if not self.sub <= self.points:
            raise ValueError("the subspace must be a subset of the space")

    @classmethod
    def of(cls, points, sub) -> "FiniteSpacePair":
        return cls(frozenset(points), frozenset(sub))

    def complement(self) -> "FiniteSpacePair":
        return FiniteSpacePair(self.points, self.points - self.sub)


def finite_product(K: SimplicialComplex, pairs) -> frozenset:
    """Union over faces of K of the mixed products of the pair sets.

    ``pairs[i]`` belongs to the i-th smallest ground vertex.  The result is
    a set of tuples; it is empty when K is void, and an empty X_k empties
    everything it touches.
    """
    pairs = list(pairs)
    kverts = vertices_of(K.ground)
    if len(pairs) != len(kverts):
        raise ValueError(
            f"expected {len(kverts)} pairs for the ground of K, got {len(pairs)}"
        )
    out = set()
    kbits = [1 << (v - 1) for v in kverts]
    for tau in K.faces:
        sets = [
            sorted(p.points) if tau & b else sorted(p.sub)
            for p, b in zip(pairs, kbits)
        ]
        out.update(product(*sets))
    return frozenset(out)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    detail: str = ""


def complement_identity_check(K: SimplicialComplex, pairs) -> Verdict:
    """Complement of the product inside the full product of the X_k.

    The complement of the K-product must equal the product of the Alexander
    dual of K (relative to K's ground) with the complemented pairs.
    """
    pairs = list(pairs)
    full = frozenset(product(*[sorted(p.points) for p in pairs]))
    lhs = full - finite_product(K, pairs)
    dual = K.dual(K.ground)
    rhs = finite_product(dual, [p.complement() for p in pairs])
    if lhs == rhs:
        return Verdict(True)
    diff = sorted(map(repr, lhs ^ rhs))[:3]
    return Verdict(False, f"complement mismatch at {diff}")


def substitution_identity_check(K: SimplicialComplex, inner, leaf_pairs) -> Verdict:
    """Two-level products agree with the product over the composition.

    ``inner`` lists a simplicial pair (X_k, A_k) per ground vertex of K, on
    disjoint blocks; ``leaf_pairs`` lists a finite pair per block vertex (in
    increasing label order across the union of the blocks).  Substituting
    the finite products of the inner pairs into K must match the finite
    product of the polyhedral complex of K over the leaves directly.
    """
    from .complexes import polyhedral_complex

    inner = list(inner)
    blocks = [x.ground for x, _ in inner]
    allverts = sorted(v for b in blocks for v in vertices_of(b))
    if len(leaf_pairs) != len(allverts):
        raise ValueError(
            f"expected {len(allverts)} leaf pairs, got {len(leaf_pairs)}"
        )
    leaf_of = dict(zip(allverts, leaf_pairs))
    outer_pairs = []
    for x, a in inner:
        leaves = [leaf_of[v] for v in vertices_of(x.ground)]
        outer_pairs.append(
            FiniteSpacePair(
                frozenset(finite_product(x, leaves)),
                frozenset(finite_product(a, leaves)),
            )
        )
    lhs_nested = finite_product(K, outer_pairs)
    lhs = frozenset(
        tuple(c for part in tup for c in part) for tup in lhs_nested
    )
    composed = polyhedral_complex(K, inner)
    rhs = finite_product(composed, [leaf_of[v] for v in allverts])
    if lhs == rhs:
        return Verdict(True)
    diff = sorted(map(repr, lhs ^ rhs))[:3]
    return Verdict(False, f"substitution mismatch at {diff}")


def factorization_identity_check(K: SimplicialComplex, pairs) -> Verdict:
    """Positions with empty subspace factor out through a link.

    With S the set of positions whose pair has empty subspace, the product
    over K equals the product over the link of S (on the remaining
    positions) times the full spaces X_k at positions of S, and is empty
    when S is not a face.
    """
    pairs = list(pairs)
    kverts = vertices_of(K.ground)
    if len(pairs) != len(kverts):
        raise ValueError(
            f"expected {len(kverts)} pairs for the ground of K, got {len(pairs)}"
        )
    s_mask = 0
    for v, p in zip(kverts, pairs):
        if not p.sub:
            s_mask |= 1 << (v - 1)
    lhs = finite_product(K, pairs)
    link = K.link(s_mask)
    core_positions = [i for i, v in enumerate(kverts) if not s_mask >> (v - 1) & 1]
    cone_positions = [i for i, v in enumerate(kverts) if s_mask >> (v - 1) & 1]
    core = finite_product(link, [pairs[i] for i in core_positions])
    cones = [sorted(pairs[i].points) for i in cone_positions]
    rhs = set()
    for core_tup in core:
        for cone_tup in product(*cones):
            full = [None] * len(kverts)
            for i, c in zip(core_positions, core_tup):
                full[i] = c
            for i, c in zip(cone_positions, cone_tup):
                full[i] = c
            rhs.add(tuple(full))
    if lhs == frozenset(rhs):
        return Verdict(True)
    diff = sorted(map(repr, lhs ^ frozenset(rhs)))[:3]
    return Verdict(False, f"factorization mismatch at {diff}")


# ---------------------------------------------------------------------------
# sphere-pair homology ledgers

@dataclass(frozen=True)
class SpherePairSystem:
    """One (r_k, q_k) parameter pair per position: the pair (S^(r+1), S^q)."""

    params: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for r, q in self.params:
            if not (0 <= q <= r):
                raise ValueError(
                    f"sphere parameters need 0 <= q <= r, got (r, q) = ({r}, {q})"
                )

    @classmethod
    def of(cls, *params) -> "SpherePairSystem":
        return cls(tuple((int(r), int(q)) for r, q in params))

    @property
    def total_degree(self) -> int:
        return sum(r + 1 for r, _ in self.params)

    def complement(self) -> "SpherePairSystem":
        return SpherePairSystem(tuple((r, r - q) for r, q in self.params))

    def shift_of(self, kverts, sigma: int, omega: int) -> int:
        t = 0
        for i, v in enumerate(kverts):
            b = 1 << (v - 1)
            if sigma & b:
                t += self.params[i][0] + 1
            elif omega & b:
                t += self.params[i][1]
        return t


@dataclass(frozen=True)
class LedgerEntry:
    """One contribution: kind is 'hat', 'bar' or 'hat_rel'."""

    kind: str
    sigma: int
    omega: int | None
    shift: int
    source_degree: int
    group: FgAbelianGroup
    degree: int


@dataclass(frozen=True)
class SpaceHomologyReport:
    hat: GradedGroup
    bar: GradedGroup
    total: GradedGroup
    ledger: tuple[LedgerEntry, ...]

    def entries(self, kind: str):
        return [e for e in self.ledger if e.kind == kind]


def sphere_pair_homology(K: SimplicialComplex, system: SpherePairSystem,
                         coeff: FieldCoeff | None = None,
                         cohomology: bool = False) -> SpaceHomologyReport:
    """Homology ledger of the sphere-pair product space over K.

    Hat classes: one Z per face sigma of K at degree t(sigma) (the sum of
    r_k + 1 over sigma).  Bar classes: every internal-degree-d class of the
    slice table entry at (sigma, omega) with nonempty omega lands in degree
    d + t(sigma, omega).  The ledger also records, as 'hat_rel' entries,
    the classes of the pair (ambient product, space) attached to non-faces;
    they participate in duality checks but not in the totals.
    """
    kverts = vertices_of(K.ground)
    if len(system.params) != len(kverts):
        raise ValueError(
            f"expected {len(kverts)} sphere pairs, got {len(system.params)}"
        )
    z1 = FgAbelianGroup(1)
    ledger = []
    hat: dict[int, FgAbelianGroup] = {}
    for sigma in sorted(K.faces):
        t = system.shift_of(kverts, sigma, 0)
        hat[t] = hat[t].direct_sum(z1) if t in hat else z1
        ledger.append(LedgerEntry("hat", sigma, None, t, 0, z1, t))
    for sigma in submasks(K.ground):
        if sigma not in K.faces:
            t = system.shift_of(kverts, sigma, 0)
            ledger.append(LedgerEntry("hat_rel", sigma, None, t, 0, z1, t))
    bar: dict[int, FgAbelianGroup] = {}
    table = hochster_table(K, coeff, cohomology=cohomology)
    for (sigma, omega), g in table.items():
        if not omega or g.is_zero:
            continue
        t = system.shift_of(kverts, sigma, omega)
        for d, grp in g.groups:
            tot = d + t
            bar[tot] = bar[tot].direct_sum(grp) if tot in bar else grp
            ledger.append(LedgerEntry("bar", sigma, omega, t, d, grp, tot))
    hat_g = GradedGroup.from_dict(hat)
    bar_g = GradedGroup.from_dict(bar)
    return SpaceHomologyReport(
        hat=hat_g,
        bar=bar_g,
        total=hat_g.direct_sum(bar_g),
        ledger=tuple(ledger),
    )


def sphere_pair_duality_check(K: SimplicialComplex,
                              system: SpherePairSystem) -> Verdict:
    """Degreewise and entrywise duality between a space and its complement.

    The complement space lives over the Alexander dual of K with parameters
    (r_k, r_k - q_k).  Checks, with r the total degree sum of (r_k + 1):

    * every bar entry of K at (sigma, omega), internal degree d, matches the
      complement's cohomology bar entry at (complement sigma, omega) in
      internal degree |omega| - d - 1, with total degrees pairing to r - 1;
    * the assembled bar gradings agree under degree -> r - degree - 1;
    * hat entries pair with 'hat_rel' entries of the complement under
      sigma -> complement of sigma, with degrees pairing to r.
    """
    kverts = vertices_of(K.ground)
    if len(system.params) != len(kverts):
        raise ValueError(
            f"expected {len(kverts)} sphere pairs, got {len(system.params)}"
        )
    r = system.total_degree
    dual = K.dual(K.ground)
    co_system = system.complement()
    report = sphere_pair_homology(K, system)
    co_report = sphere_pair_homology(dual, co_system, cohomology=True)

    table = hochster_table(K)
    co_table = hochster_table(dual, cohomology=True)
    for (sigma, omega), g in table.items():
        if not omega:
            continue
        sigma_tilde = K.ground & ~(sigma | omega)
        co_g = co_table.entry(sigma_tilde, omega)
        wsize = omega.bit_count()
        for d in set(g.degrees()) | {wsize - d2 - 1 for d2 in co_g.degrees()}:
            if g.at(d) != co_g.at(wsize - d - 1):
                return Verdict(
                    False,
                    f"bar entry mismatch at sigma={list(vertices_of(sigma))} "
                    f"omega={list(vertices_of(omega))} degree {d}: "
                    f"{g.at(d)} vs {co_g.at(wsize - d - 1)}",
                )
            t = system.shift_of(kverts, sigma, omega)
            t_c = co_system.shift_of(kverts, sigma_tilde, omega)
            if (d + t) + ((wsize - d - 1) + t_c) != r - 1:
                return Verdict(
                    False,
                    f"shift bookkeeping broken at sigma={list(vertices_of(sigma))} "
                    f"omega={list(vertices_of(omega))}",
                )
    for d in set(report.bar.degrees()) | {
        r - d - 1 for d in co_report.bar.degrees()
    }:
        if report.bar.at(d) != co_report.bar.at(r - d - 1):
            return Verdict(
                False,
                f"assembled bar mismatch in degree {d}: "
                f"{report.bar.at(d)} vs {co_report.bar.at(r - d - 1)}",
            )
    rel = {e.sigma: e.degree for e in co_report.entries("hat_rel")}
    hats = report.entries("hat")
    if len(hats) != len(rel):
        return Verdict(False, "hat and relative-hat counts differ")
    for e in hats:
        partner = K.ground & ~e.sigma
        if partner not in rel:
            return Verdict(
                False,
                f"hat at sigma={list(vertices_of(e.sigma))} has no relative partner",
            )
        if e.degree + rel[partner] != r:
            return Verdict(
                False,
                f"hat degrees at sigma={list(vertices_of(e.sigma))} "
                f"pair to {e.degree + rel[partner]}, expected {r}",
            )
    return Verdict(True)
