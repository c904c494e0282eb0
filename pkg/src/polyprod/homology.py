"""Reduced simplicial (co)homology by exact Smith normal form.

All arithmetic is exact: arbitrary-precision integers for Smith reduction,
rationals or prime fields for basis computations.  Chain complexes are
augmented, so the empty face is a degree -1 generator and the void complex
has zero homology everywhere, while the complex ``{0}`` has a single Z in
degree -1.

Boundary orientation: the vertices of a face are taken in increasing label
order and deleting the i-th one carries sign (-1)^i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .abelian import FgAbelianGroup, GradedGroup
from .complexes import SimplicialComplex, _as_mask, submasks, vertices_of


# ---------------------------------------------------------------------------
# coefficients

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldCoeff:
    """Field coefficients: the rationals (p = None) or a prime field."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"field characteristic must be prime, got {self.p}")


RATIONALS = FieldCoeff(None)


def GF(p: int) -> FieldCoeff:
    return FieldCoeff(p)


# ---------------------------------------------------------------------------
# Smith normal form

def _dense_smith(m: list[list[int]]) -> list[int]:
    # classical reduction with minimal-|pivot| selection and full carry of
    # remainders; fine for the small residual cores left by the sparse pass
    rows = len(m)
    cols = len(m[0]) if m else 0
    out = []
    t = 0
    while t < rows and t < cols:
        pi = pj = -1
        best = 0
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(m[i][j])
                if v and (best == 0 or v < best):
                    best = v
                    pi, pj = i, j
        if best == 0:
            break
        m[t], m[pi] = m[pi], m[t]
        if pj != t:
            for row in m:
                row[t], row[pj] = row[pj], row[t]
        while True:
            p = m[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // p
                    if q:
                        ri, rt = m[i], m[t]
                        for j in range(t, cols):
                            ri[j] -= q * rt[j]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // p
                    if q:
                        for row in m:
                            row[j] -= q * row[t]
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
                        break
            if dirty:
                continue
            clean = True
            for i in range(t + 1, rows):
                ri = m[i]
                for j in range(t + 1, cols):
                    if ri[j] % p:
                        rt = m[t]
                        for j2 in range(t, cols):
                            rt[j2] += ri[j2]
                        clean = False
                        break
                if not clean:
                    break
            if clean:
                break
        out.append(abs(m[t][t]))
        t += 1
    return out


def _invariant_factors(columns: list[dict[int, int]]) -> list[int]:
    """Invariant factors of a sparse integer matrix given as columns.

    Strips +-1 pivots first (Markowitz-style fill minimization), then runs
    the dense reduction on whatever small core remains.
    """
    col_entries: dict[int, dict[int, int]] = {
        j: dict(c) for j, c in enumerate(columns) if c
    }
    row_cols: dict[int, set[int]] = {}
    for j, c in col_entries.items():
        for i in c:
            row_cols.setdefault(i, set()).add(j)
    units = 0
    while True:
        best = None
        best_cost = None
        for j, c in col_entries.items():
            lc = len(c)
            for i, v in c.items():
                if v == 1 or v == -1:
                    cost = (len(row_cols[i]) - 1) * (lc - 1)
                    if best_cost is None or cost < best_cost:
                        best = (i, j)
                        best_cost = cost
                        if cost == 0:
                            break
            if best_cost == 0:
                break
        if best is None:
            break
        i, j = best
        piv_col = col_entries.pop(j)
        v = piv_col.pop(i)
        row_cols[i].discard(j)
        for j2 in list(row_cols[i]):
            c2 = col_entries[j2]
            mult = c2.pop(i) * v
            row_cols[i].discard(j2)
            for i2, w in piv_col.items():
                nv = c2.get(i2, 0) - mult * w
                if nv:
                    if i2 not in c2:
                        row_cols.setdefault(i2, set()).add(j2)
                    c2[i2] = nv
                elif i2 in c2:
                    del c2[i2]
                    row_cols[i2].discard(j2)
            if not c2:
                del col_entries[j2]
        for i2 in piv_col:
            row_cols[i2].discard(j)
        units += 1
    if not col_entries:
        return [1] * units
    rows_left = sorted({i for c in col_entries.values() for i in c})
    rmap = {i: a for a, i in enumerate(rows_left)}
    dense = [[0] * len(col_entries) for _ in rows_left]
    for b, (_, c) in enumerate(sorted(col_entries.items())):
        for i, v in c.items():
            dense[rmap[i]][b] = v
    return [1] * units + _dense_smith(dense)


def smith_normal_form(matrix) -> list[int]:
    """Invariant factors d1 | d2 | ... of a dense integer matrix.

    Only the nonzero diagonal entries are returned, so the length of the
    result is the rank.
    """
    matrix = [list(row) for row in matrix]
    if matrix:
        width = len(matrix[0])
        for row in matrix:
            if len(row) != width:
                raise ValueError("matrix rows must all have the same length")
    ncols = len(matrix[0]) if matrix else 0
    cols = []
    for j in range(ncols):
        col = {i: row[j] for i, row in enumerate(matrix) if row[j]}
        cols.append(col)
    return _invariant_factors(cols)


# ---------------------------------------------------------------------------
# chain complexes

class AugmentedChainComplex:
    """Bases and boundary columns of the augmented chain complex.

    ``bases[d]`` is the sorted tuple of face masks of dimension d (the empty
    face sits in degree -1).  ``boundaries[d]`` holds one column per basis
    face: a list of (row index in ``bases[d-1]``, sign) entries.
    """

    def __init__(self, bases, boundaries):
        self.bases = bases
        self.boundaries = boundaries

    def dense_boundary(self, d: int) -> list[list[int]]:
        nrows = len(self.bases.get(d - 1, ()))
        cols = self.boundaries.get(d, [])
        out = [[0] * len(cols) for _ in range(nrows)]
        for j, col in enumerate(cols):
            for i, s in col:
                out[i][j] = s
        return out


def _boundary_columns(faces_by_deg, degree, index_below):
    cols = []
    for f in faces_by_deg:
        col = []
        for pos, v in enumerate(vertices_of(f)):
            col.append((index_below[f ^ (1 << (v - 1))], -1 if pos & 1 else 1))
        cols.append(col)
    return cols


def chain_complex(K: SimplicialComplex) -> AugmentedChainComplex:
    """Augmented chain complex of a complex (empty for the void complex)."""
    if K.is_void:
        return AugmentedChainComplex({}, {})
    by_deg: dict[int, list[int]] = {}
    for f in K.faces:
        by_deg.setdefault(f.bit_count() - 1, []).append(f)
    bases = {d: tuple(sorted(fs)) for d, fs in by_deg.items()}
    index = {d: {f: i for i, f in enumerate(b)} for d, b in bases.items()}
    boundaries = {}
    for d in sorted(bases):
        if d < 0:
            continue
        boundaries[d] = _boundary_columns(bases[d], d, index[d - 1])
    return AugmentedChainComplex(bases, boundaries)


# ---------------------------------------------------------------------------
# homology groups, cached on the abstract face family

def _canonical_faces(faces) -> tuple[int, ...]:
    support = 0
    for f in faces:
        support |= f
    if support == 0:
        return tuple(sorted(faces))
    bits = []
    s = support
    pos = 0
    while s:
        if s & 1:
            bits.append(pos)
        s >>= 1
        pos += 1
    table = {1 << b: 1 << i for i, b in enumerate(bits)}
    out = []
    for f in faces:
        g = 0
        x = f
        while x:
            low = x & -x
            g |= table[low]
            x ^= low
        out.append(g)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _homology_data(key: tuple[int, ...]):
    # per degree: basis size and invariant factors of the boundary map out
    # of that degree; key is a canonical face-mask family
    if not key:
        return {}, {}
    by_deg: dict[int, list[int]] = {}
    for f in key:
        by_deg.setdefault(f.bit_count() - 1, []).append(f)
    index = {d: {f: i for i, f in enumerate(fs)} for d, fs in by_deg.items()}
    counts = {d: len(fs) for d, fs in by_deg.items()}
    factors = {}
    for d, fs in by_deg.items():
        if d < 0:
            continue
        cols = [
            dict(col)
            for col in (
                {index[d - 1][f ^ (1 << (v - 1))]: (-1 if pos & 1 else 1)
                 for pos, v in enumerate(vertices_of(f))}
                for f in fs
            )
        ]
        factors[d] = tuple(_invariant_factors(cols))
    return counts, factors


def _field_rank(factors, p) -> int:
    if p is None:
        return len(factors)
    return sum(1 for d in factors if d % p)


@lru_cache(maxsize=None)
def _groups_from_key(key, coeff, cohomology) -> GradedGroup:
    counts, factors = _homology_data(key)
    if not counts:
        return GradedGroup()
    out = {}
    for n in range(-1, max(counts) + 1):
        c = counts.get(n, 0)
        fn = factors.get(n, ())
        fn1 = factors.get(n + 1, ())
        if coeff is None:
            rank = c - len(fn) - len(fn1)
            torsion = tuple(d for d in (fn if cohomology else fn1) if d != 1)
            out[n] = FgAbelianGroup.from_divisors(rank, torsion)
        else:
            rank = c - _field_rank(fn, coeff.p) - _field_rank(fn1, coeff.p)
            out[n] = FgAbelianGroup(rank)
    return GradedGroup.from_dict(out)


def homology_of_faces(faces, coeff: FieldCoeff | None = None,
                      cohomology: bool = False) -> GradedGroup:
    """Reduced (co)homology of a raw face-mask family."""
    return _groups_from_key(_canonical_faces(faces), coeff, cohomology)


def reduced_homology(K: SimplicialComplex,
                     coeff: FieldCoeff | None = None) -> GradedGroup:
    """Reduced homology; integer coefficients unless a field is given."""
    return homology_of_faces(K.faces, coeff, False)


def reduced_cohomology(K: SimplicialComplex,
                       coeff: FieldCoeff | None = None) -> GradedGroup:
    """Reduced cohomology, computed from the transposed boundary maps.

    Over the integers the torsion of degree n is the torsion of the n-th
    boundary map, which the universal-coefficient rule reproduces; both are
    exercised against each other in the test suite.
    """
    return homology_of_faces(K.faces, coeff, True)


def euler_characteristic_reduced(K: SimplicialComplex) -> int:
    """Alternating face count including the empty face at degree -1."""
    return sum(-1 if f.bit_count() & 1 else 1 for f in K.faces) * -1


# ---------------------------------------------------------------------------
# relative homology of (simplex, subcomplex) on a common vertex set

def _complex_from_masks(gen_by_deg):
    # gen_by_deg: degree -> sorted list of masks; boundary keeps only masks
    # that are generators (quotient complex of the simplex pair)
    index = {d: {f: i for i, f in enumerate(fs)} for d, fs in gen_by_deg.items()}
    counts = {d: len(fs) for d, fs in gen_by_deg.items()}
    factors = {}
    for d, fs in gen_by_deg.items():
        if d - 1 not in index:
            # the map lands in a zero group
            factors[d] = ()
            continue
        below = index[d - 1]
        cols = []
        for f in fs:
            col = {}
            for pos, v in enumerate(vertices_of(f)):
                sub = f ^ (1 << (v - 1))
                if sub in below:
                    col[below[sub]] = -1 if pos & 1 else 1
            cols.append(col)
        factors[d] = tuple(_invariant_factors(cols))
    return counts, factors


def relative_homology(omega, L: SimplicialComplex):
    """Homology of the pair (full simplex on omega, L), with a cross-check.

    Generators are the subsets of omega that are not faces of L, graded one
    above their reduced dimension.  Returns ``(groups, agrees)`` where
    ``agrees`` reports whether the groups equal the reduced homology of L
    shifted up by one degree, as the long exact sequence of the pair
    demands.  If L is the full simplex there are no generators and the
    groups are zero.
    """
    w = _as_mask(omega)
    if L.ground & ~w:
        bad = vertices_of(L.ground & ~w)[0]
        raise ValueError(f"subcomplex vertex {bad} is not in the vertex set")
    gen_by_deg: dict[int, list[int]] = {}
    for s in submasks(w):
        if s not in L.faces:
            gen_by_deg.setdefault(s.bit_count() - 1, []).append(s)
    for fs in gen_by_deg.values():
        fs.sort()
    counts, factors = _complex_from_masks(gen_by_deg)
    out = {}
    for n in counts:
        c = counts[n]
        fn = factors.get(n, ())
        fn1 = factors.get(n + 1, ())
        rank = c - len(fn) - len(fn1)
        torsion = tuple(d for d in fn1 if d != 1)
        out[n] = FgAbelianGroup.from_divisors(rank, torsion)
    groups = GradedGroup.from_dict(out)
    agrees = groups == reduced_homology(L).shift(1)
    return groups, agrees


# ---------------------------------------------------------------------------
# exact linear algebra over a field (tiny dense systems only)

class _Field:
    def __init__(self, p: int | None):
        self.p = p

    def of(self, n: int):
        return Fraction(n) if self.p is None else n % self.p

    def add(self, a, b):
        c = a + b
        return c if self.p is None else c % self.p

    def sub(self, a, b):
        c = a - b
        return c if self.p is None else c % self.p

    def mul(self, a, b):
        c = a * b
        return c if self.p is None else c % self.p

    def inv(self, a):
        return 1 / a if self.p is None else pow(a, self.p - 2, self.p)

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p


def _eliminate(rows, width, F):
    """Row reduce in place; returns the pivot column list."""
    pivots = []
    r = 0
    for c in range(width):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def _kernel_basis(cols, nrows, F):
    """Kernel of the matrix with the given columns (lists of length nrows)."""
    ncols = len(cols)
    rows = [[cols[j][i] for j in range(ncols)] for i in range(nrows)]
    pivots = _eliminate(rows, ncols, F)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [F.of(0)] * ncols
        v[fc] = F.of(1)
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(rows[r][fc])
        basis.append(v)
    return basis


def _span_coords(cols, target, F):
    """Solve sum(x_j * cols[j]) = target; None if inconsistent."""
    if not cols:
        return [] if all(not t for t in target) else None
    n = len(target)
    rows = [[cols[j][i] for j in range(len(cols))] + [target[i]] for i in range(n)]
    pivots = _eliminate(rows, len(cols), F)
    for row in rows:
        if row[-1] and all(not x for x in row[:-1]):
            return None
    coords = [F.of(0)] * len(cols)
    for r, pc in enumerate(pivots):
        coords[pc] = rows[r][-1]
    return coords


def _independent_extension(base, candidates, width, F):
    """Indices of candidates that enlarge the span of ``base`` step by step."""
    rows = [list(v) for v in base]
    _eliminate(rows, width, F)
    rows = [r for r in rows if any(r)]
    chosen = []
    for idx, cand in enumerate(candidates):
        trial = rows + [list(cand)]
        _eliminate(trial, width, F)
        trial = [r for r in trial if any(r)]
        if len(trial) > len(rows):
            rows = trial
            chosen.append(idx)
    return chosen


# ---------------------------------------------------------------------------
# induced maps of inclusions on field homology

@dataclass(frozen=True)
class InducedDegreeMap:
    """Matrix of an induced map in chosen homology bases, with its dims."""

    matrix: tuple
    kernel_dim: int
    image_dim: int
    cokernel_dim: int


def _field_homology_basis(cx, n, F):
    """(boundary basis, representative cycles) spanning degree-n homology."""
    basis_n = cx.bases.get(n, ())
    cn = len(basis_n)
    if cn == 0:
        return [], []
    cols_out = cx.boundaries.get(n)
    if cols_out is None:
        cycles = []
        for i in range(cn):
            v = [F.of(0)] * cn
            v[i] = F.of(1)
            cycles.append(v)
    else:
        nrows = len(cx.bases.get(n - 1, ()))
        dense_cols = []
        for col in cols_out:
            v = [F.of(0)] * nrows
            for i, s in col:
                v[i] = F.of(s)
            dense_cols.append(v)
        cycles = _kernel_basis(dense_cols, nrows, F)
    bnd_cols = cx.boundaries.get(n + 1, [])
    bvecs = []
    for col in bnd_cols:
        v = [F.of(0)] * cn
        for i, s in col:
            v[i] = F.of(s)
        bvecs.append(v)
    rows = [list(v) for v in bvecs]
    _eliminate(rows, cn, F)
    bbasis = [r for r in rows if any(r)]
    rep_idx = _independent_extension(bbasis, cycles, cn, F)
    return bbasis, [cycles[i] for i in rep_idx]


def induced_inclusion_map(A: SimplicialComplex, X: SimplicialComplex,
                          coeff: FieldCoeff = RATIONALS):
    """Degreewise matrices of the map induced by an inclusion of complexes.

    Returns a dict mapping each degree where either side has homology to an
    :class:`InducedDegreeMap`; columns index the subcomplex generators.
    Field coefficients only.
    """
    if not A.faces <= X.faces:
        extra = next(iter(A.faces - X.faces))
        raise ValueError(
            f"inclusion requires a subcomplex; {list(vertices_of(extra))} is missing"
        )
    F = _Field(coeff.p)
    cxa = chain_complex(A)
    cxx = chain_complex(X)
    ha = reduced_homology(A, coeff)
    hx = reduced_homology(X, coeff)
    out = {}
    for n in sorted(set(ha.degrees()) | set(hx.degrees())):
        _, reps_a = _field_homology_basis(cxa, n, F)
        bnd_x, reps_x = _field_homology_basis(cxx, n, F)
        basis_x = cxx.bases.get(n, ())
        xindex = {f: i for i, f in enumerate(basis_x)}
        cols = [list(v) for v in bnd_x] + [list(v) for v in reps_x]
        matrix_cols = []
        for vec in reps_a:
            moved = [F.of(0)] * len(basis_x)
            for i, f in enumerate(cxa.bases.get(n, ())):
                if vec[i]:
                    moved[xindex[f]] = vec[i]
            coords = _span_coords(cols, moved, F)
            if coords is None:
                raise ArithmeticError("inclusion image escaped the cycle space")
            matrix_cols.append(coords[len(bnd_x):])
        dim_a, dim_x = len(reps_a), len(reps_x)
        matrix = tuple(
            tuple(matrix_cols[j][i] for j in range(dim_a)) for i in range(dim_x)
        )
        rk_rows = [list(r) for r in zip(*matrix)] if matrix and matrix[0] else []
        if rk_rows:
            _eliminate(rk_rows, dim_x, F)
            rank = len([r for r in rk_rows if any(r)])
        else:
            rank = 0
        out[n] = InducedDegreeMap(
            matrix=matrix,
            kernel_dim=dim_a - rank,
            image_dim=rank,
            cokernel_dim=dim_x - rank,
        )
    return out


class UnsupportedSplitCheck(ValueError):
    """Raised when splitness over Z cannot be certified either way."""


def certify_homology_split(A: SimplicialComplex, X: SimplicialComplex,
                           coeff: FieldCoeff | None = None) -> str:
    """Certificate that the inclusion map splits degreewise.

    Over a field every map of vector spaces splits.  Over the integers only
    two checkable sufficient conditions are certified: torsion-free source
    homology with acyclic target, and acyclic source with torsion-free
    target.  Anything else raises :class:`UnsupportedSplitCheck`.
    """
    if coeff is not None:
        return "field"
    ha = reduced_homology(A)
    hx = reduced_homology(X)
    free_a = all(not g.torsion for _, g in ha.groups)
    free_x = all(not g.torsion for _, g in hx.groups)
    if free_a and hx.is_zero:
        return "free-to-acyclic"
    if ha.is_zero and free_x:
        return "acyclic-to-free"
    raise UnsupportedSplitCheck(
        "splitness over Z is only certified for acyclic-target or "
        "acyclic-source inclusions with free homology; use field coefficients"
    )


# ---------------------------------------------------------------------------
# consistency sweep used by the sanity suite

def homology_consistency_failures(K: SimplicialComplex,
                                  primes=(2, 3)) -> list[str]:
    """Cross-checks between Euler count, integer and field homology.

    Returns a list of human-readable discrepancies (empty when everything
    agrees): the alternating face count must match the alternating sum of
    integer ranks, rational dimensions must equal integer ranks, prime field
    dimensions must obey the universal-coefficient count, and cohomology
    must carry the same ranks with torsion shifted up one degree.
    """
    problems = []
    hz = reduced_homology(K)
    chi = euler_characteristic_reduced(K)
    chi_h = sum((-1) ** d * g.rank for d, g in hz.groups)
    if chi != chi_h:
        problems.append(f"euler count {chi} != alternating rank sum {chi_h}")
    hq = reduced_homology(K, RATIONALS)
    for d in set(hz.degrees()) | set(hq.degrees()):
        if hq.at(d).rank != hz.at(d).rank:
            problems.append(f"rational dim at {d} differs from integer rank")
    for p in primes:
        hp = reduced_homology(K, GF(p))
        degrees = set(hp.degrees()) | set(hz.degrees())
        for d in sorted(degrees):
            expected = (
                hz.at(d).rank
                + sum(1 for t in hz.at(d).torsion if t % p == 0)
                + sum(1 for t in hz.at(d - 1).torsion if t % p == 0)
            )
            if hp.at(d).rank != expected:
                problems.append(
                    f"mod-{p} dim at {d} is {hp.at(d).rank}, expected {expected}"
                )
    hc = reduced_cohomology(K)
    degrees = set(hc.degrees()) | set(hz.degrees())
    for d in sorted(degrees):
        if hc.at(d).rank != hz.at(d).rank:
            problems.append(f"cohomology rank at {d} differs from homology")
        if hc.at(d).torsion != hz.at(d - 1).torsion:
            problems.append(f"cohomology torsion at {d} is not homology torsion at {d - 1}")
    return problems
