"""Finitely generated polyhedral cones over the rationals, exactly.

Cones are stored by generators (V-representation).  The dual cone is
computed with the double description method: constraints are the
generators of the primal, an initial simplicial cone comes from a
maximal independent subset of them, and the remaining constraints are
inserted one at a time, combining only adjacent ray pairs.  Adjacency
is the algebraic test: two extreme rays are adjacent iff the rank of
their common active constraints is two less than the ambient rank.

Membership questions (is a vector a nonnegative combination of given
vectors) are answered by an exact phase-1 simplex with Bland's rule, so
the package carries two independent engines for cone membership: the
dual-inequality route and the simplex route.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exact import Matrix, RationalLike, Scalar, _as_fraction, inverse

Vec = tuple[Fraction, ...]


def _dot(a: Vec, b: Vec) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def canonical_ray(v: Sequence[RationalLike]) -> Vec:
    """Scale by a positive rational so the largest |coordinate| is 1."""
    w = tuple(_as_fraction(x) for x in v)
    m = max((abs(x) for x in w), default=Fraction(0))
    if m == 0:
        raise ValueError("zero vector cannot represent a ray")
    return tuple(x / m for x in w)


@dataclass(frozen=True)
class Ray:
    """A ray of a cone, stored in canonical form."""

    v: Vec

    def __post_init__(self):
        if not self.v:
            raise ValueError("ray needs at least one coordinate")
        if max(abs(x) for x in self.v) != 1:
            raise ValueError("ray is not in canonical form")

    @staticmethod
    def of(coords: Sequence[RationalLike]) -> "Ray":
        return Ray(canonical_ray(coords))


@dataclass(frozen=True)
class Cone:
    """cone(rays) in Q^dim.  Rays are canonical, distinct, sorted."""

    dim: int
    rays: tuple[Ray, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("cone dimension must be positive")
        for r in self.rays:
            if len(r.v) != self.dim:
                raise ValueError("ray dimension mismatch")
        vs = [r.v for r in self.rays]
        if sorted(set(vs)) != list(vs):
            raise ValueError("rays must be deduplicated and sorted")

    @staticmethod
    def of(dim: int, rays: Sequence[Sequence[RationalLike]]) -> "Cone":
        canon = sorted({canonical_ray(v) for v in rays})
        return Cone(dim, tuple(Ray(v) for v in canon))


@dataclass(frozen=True)
class PropernessReport:
    is_pointed: bool
    is_solid: bool
    is_proper: bool


# -- exact linear algebra on Fraction vectors ---------------------------


def _rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form.  Returns (rows, pivot column indices)."""
    work = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(work[0]) if work else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        pv = work[r][c]
        work[r] = [x / pv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work, pivots


def _frac_rank(rows: Sequence[Vec]) -> int:
    return len(_rref(rows)[1])


def _nullspace(rows: Sequence[Vec], n: int) -> list[Vec]:
    """Deterministic basis of {x : rows @ x = 0} via RREF free columns."""
    if not rows:
        return [tuple(Fraction(1 if i == j else 0) for i in range(n))
                for j in range(n)]
    red, pivots = _rref(rows)
    pivset = set(pivots)
    basis: list[Vec] = []
    for free in range(n):
        if free in pivset:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for ri, p in enumerate(pivots):
            v[p] = -red[ri][free]
        basis.append(tuple(v))
    return basis


def _independent_subset(vecs: Sequence[Vec]) -> list[int]:
    """Indices of a maximal independent subset, greedily in given order."""
    ech: list[list[Fraction]] = []
    keep: list[int] = []
    for idx, v in enumerate(vecs):
        row = list(v)
        for e in ech:
            lead = next(i for i, x in enumerate(e) if x != 0)
            if row[lead] != 0:
                f = row[lead] / e[lead]
                row = [x - f * y for x, y in zip(row, e)]
        if any(x != 0 for x in row):
            ech.append(row)
            keep.append(idx)
    return keep


# -- exact phase-1 simplex ----------------------------------------------


def _nonneg_combination(columns: Sequence[Vec],
                        target: Vec) -> Optional[list[Fraction]]:
    """Coefficients c >= 0 with sum c_k * columns[k] == target, or None.

    Phase-1 simplex over exact rationals.  Bland's rule (smallest index
    enters, smallest basis index on ratio ties) rules out cycling, so
    termination is unconditional.
    """
    m = len(target)
    n = len(columns)
    if n == 0:
        return [] if all(x == 0 for x in target) else None
    rows = [[columns[k][i] for k in range(n)] for i in range(m)]
    b = list(target)
    for i in range(m):
        if b[i] < 0:
            b[i] = -b[i]
            rows[i] = [-x for x in rows[i]]
    # tableau columns: n structural + m artificial + rhs
    tab = [rows[i]
           + [Fraction(1 if j == i else 0) for j in range(m)]
           + [b[i]]
           for i in range(m)]
    basis = [n + i for i in range(m)]
    # reduced costs for minimizing the sum of artificials
    obj = [Fraction(0)] * (n + m + 1)
    for j in range(n + m):
        cj = Fraction(0) if j < n else Fraction(1)
        obj[j] = cj - sum(tab[i][j] for i in range(m))
    obj[n + m] = -sum(b)  # negated objective value
    while True:
        enter = next((j for j in range(n + m) if obj[j] < 0), None)
        if enter is None:
            break
        leave = -1
        best: Optional[Fraction] = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][n + m] / tab[i][enter]
                if (best is None or ratio < best
                        or (ratio == best and basis[i] < basis[leave])):
                    best = ratio
                    leave = i
        if leave < 0:
            # phase-1 objective is bounded below by zero
            raise AssertionError("unbounded phase-1 pivot")
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, tab[leave])]
        basis[leave] = enter
    value = sum(tab[i][n + m] for i in range(m) if basis[i] >= n)
    if value != 0:
        return None
    out = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            out[basis[i]] = tab[i][n + m]
    return out


# -- cone operations ------------------------------------------------------


def _dd_insert(rays: list[Vec], processed: list[Vec], h: Vec,
               ambient_rank: int) -> list[Vec]:
    """One double description step: intersect cone(rays) with h.x >= 0."""
    s = [_dot(h, r) for r in rays]
    pos = [i for i, x in enumerate(s) if x > 0]
    zer = [i for i, x in enumerate(s) if x == 0]
    neg = [i for i, x in enumerate(s) if x < 0]
    if not neg:
        return rays
    active = [[i for i, c in enumerate(processed) if _dot(c, r) == 0]
              for r in rays]
    out: dict[Vec, None] = {}
    for i in pos:
        out[rays[i]] = None
    for i in zer:
        out[rays[i]] = None
    for p in pos:
        zp = set(active[p])
        for q in neg:
            common = [processed[i] for i in active[q] if i in zp]
            if _frac_rank(common) != ambient_rank - 2:
                continue
            w = tuple(s[p] * x - s[q] * y
                      for x, y in zip(rays[q], rays[p]))
            out[canonical_ray(w)] = None
    return list(out)


@functools.lru_cache(maxsize=512)
def _dual_ray_vectors(cone: Cone) -> tuple[Vec, ...]:
    n = cone.dim
    gens = [r.v for r in cone.rays]
    if not gens:
        out = []
        for j in range(n):
            e = [Fraction(0)] * n
            e[j] = Fraction(1)
            out.append(tuple(e))
            out.append(tuple(-x for x in e))
        return tuple(sorted(out))
    basis_idx = _independent_subset(gens)
    d = len(basis_idx)
    w = [gens[i] for i in basis_idx]  # basis of the span of the generators
    lineality = _nullspace(gens, n)   # dual contains +- these directions
    # pointed part lives in the span; coordinates u with x = sum u_j w_j
    proj = [tuple(_dot(g, wj) for wj in w) for g in gens]
    bmat = Matrix.from_rows([[Scalar(x) for x in proj[i]] for i in basis_idx])
    binv = inverse(bmat)
    rays_u: list[Vec] = []
    for j in range(d):
        col = tuple(binv.entry(i, j).re for i in range(d))
        rays_u.append(canonical_ray(col))
    processed = [proj[i] for i in basis_idx]
    for idx, h in enumerate(proj):
        if idx in basis_idx:
            continue
        rays_u = _dd_insert(rays_u, processed, h, d)
        processed.append(h)
    out_vecs: set[Vec] = set()
    for u in rays_u:
        x = [Fraction(0)] * n
        for j in range(d):
            if u[j] != 0:
                x = [a + u[j] * c for a, c in zip(x, w[j])]
        out_vecs.add(canonical_ray(x))
    for ell in lineality:
        out_vecs.add(canonical_ray(ell))
        out_vecs.add(canonical_ray(tuple(-x for x in ell)))
    return tuple(sorted(out_vecs))


def dual(k: Cone) -> Cone:
    """The dual cone {x : r.x >= 0 for every generator r of k}."""
    return Cone(k.dim, tuple(Ray(v) for v in _dual_ray_vectors(k)))


def properness(k: Cone) -> PropernessReport:
    gens = [r.v for r in k.rays]
    solid = _frac_rank(gens) == k.dim
    if not gens:
        pointed = True
    else:
        # pointed iff no nonzero nonnegative combination vanishes
        cols = [g + (Fraction(1),) for g in gens]
        tgt = tuple([Fraction(0)] * k.dim + [Fraction(1)])
        pointed = _nonneg_combination(cols, tgt) is None
    return PropernessReport(is_pointed=pointed, is_solid=solid,
                            is_proper=pointed and solid)


def extreme_rays(k: Cone) -> tuple[Ray, ...]:
    """The irredundant generators.  Requires a pointed cone."""
    if not properness(k).is_pointed:
        raise ValueError("extreme rays are only defined for pointed cones")
    keep = [r.v for r in k.rays]
    for v in [r.v for r in k.rays]:
        if v not in keep:
            continue
        others = [u for u in keep if u != v]
        if not others:
            continue
        if _nonneg_combination(others, v) is not None:
            keep = others
    return tuple(Ray(v) for v in keep)


def contains(k: Cone, v: Sequence[RationalLike]) -> bool:
    """Membership via the dual inequalities."""
    w = tuple(_as_fraction(x) for x in v)
    if len(w) != k.dim:
        raise ValueError("vector dimension does not match cone")
    return all(_dot(c, w) >= 0 for c in _dual_ray_vectors(k))


def is_invariant(m: Matrix, k: Cone) -> bool:
    """Whether m maps the cone into itself (checked on generators)."""
    if not m.is_square or m.rows != k.dim:
        raise ValueError("matrix size does not match cone dimension")
    if any(not e.is_real for e in m.entries):
        raise ValueError("cone invariance is defined for real matrices")
    duals = _dual_ray_vectors(k)
    for r in k.rays:
        img = [sum((m.entry(i, j).re * r.v[j] for j in range(k.dim)),
                   Fraction(0)) for i in range(k.dim)]
        for c in duals:
            if _dot(c, tuple(img)) < 0:
                return False
    return True
