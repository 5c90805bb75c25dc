"""Regular triangulations from lifting vectors, convergence/unimodularity
classification, staircase (ladder) triangulations and the bipartite-graph
exponent formula.

Simplices carry 1-based column indices matching the usual labels (e.g.
"235").  A candidate triangulation is validated by a volume sum against an
independently computed normalized volume plus a random-ray multiplicity
test; failures raise NotATriangulation instead of proceeding silently.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (BadDimensions, DegenerateLifting, ExhaustedRetries,
                     NotATriangulation)
from . import intlinalg


@dataclass(frozen=True)
class Simplex:
    indices: tuple          # sorted 1-based column indices, length d
    det: int                # det A_sigma
    inv: tuple              # A_sigma^{-1}, tuple of tuples of Fractions
    blocks: tuple           # sigma^(0), ..., sigma^(k)

    @property
    def r(self):
        return abs(self.det)


@dataclass(frozen=True)
class Triangulation:
    simplices: tuple        # tuple of Simplex, sorted by indices
    omega: tuple            # lifting vector (may be None entries-free tuple)
    convergent: bool
    unimodular: bool

    def index_sets(self):
        return frozenset(s.indices for s in self.simplices)


def make_simplex(cfg, indices):
    indices = tuple(sorted(indices))
    sub = cfg.submatrix(indices)
    inv, det = intlinalg.rat_inverse(sub)
    blocks = tuple(tuple(j for j in indices if j in blk) for blk in cfg.blocks)
    return Simplex(indices=indices, det=det,
                   inv=tuple(tuple(row) for row in inv), blocks=blocks)


def block_decompose(sigma, cfg):
    """Partition sigma by the configuration's blocks I_0, ..., I_k."""
    return tuple(tuple(j for j in sorted(sigma) if j in blk)
                 for blk in cfg.blocks)


def _triangulate_raw(cfg, omega):
    """Simplices of T(omega) without validation."""
    d, N = cfg.d, cfg.N
    if len(omega) != N:
        raise BadDimensions(f"omega length {len(omega)} != {N}")
    omega = [Fraction(w) for w in omega]
    out = []
    for sigma in combinations(range(1, N + 1), d):
        sub = cfg.submatrix(sigma)
        if intlinalg.det_bareiss(sub) == 0:
            continue
        inv, _ = intlinalg.rat_inverse(sub)
        # row vector m = omega_sigma * A_sigma^{-1}
        w_sigma = [omega[j - 1] for j in sigma]
        m = [sum(w_sigma[i] * inv[i][c] for i in range(d)) for c in range(d)]
        ok = True
        for j in range(1, N + 1):
            if j in sigma:
                continue
            val = sum(m[r] * cfg.matrix[r][j - 1] for r in range(d))
            if val == omega[j - 1]:
                raise DegenerateLifting(
                    f"lifting is non-generic: equality at sigma={sigma}, j={j}")
            if val > omega[j - 1]:
                ok = False
                break
        if ok:
            out.append(make_simplex(cfg, sigma))
    return out


def _ray_test(cfg, simplices, rays, rng):
    """Each of `rays` random rational rays strictly inside cone(A) must lie
    in exactly one simplicial cone."""
    d, N = cfg.d, cfg.N
    A = [[Fraction(x) for x in row] for row in cfg.matrix]
    inv_cache = {s.indices: s.inv for s in simplices}
    done = 0
    while done < rays:
        lam = [Fraction(rng.randint(1, 1000), rng.randint(1, 7)) for _ in range(N)]
        ray = intlinalg.mat_vec(A, lam)
        hits = 0
        boundary = False
        for s in simplices:
            x = intlinalg.mat_vec([list(r) for r in inv_cache[s.indices]], ray)
            if any(v == 0 for v in x):
                boundary = True
                break
            if all(v > 0 for v in x):
                hits += 1
        if boundary:
            continue
        if hits != 1:
            return False
        done += 1
    return True


def _rank_fraction(rows):
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def is_homogeneous(cfg):
    """True when the all-ones vector lies in the rational row span of the
    configuration matrix, i.e. all columns lie on a common affine
    hyperplane.  The sum of simplex volumes is a triangulation invariant
    only in this case."""
    rows = [list(r) for r in cfg.matrix]
    return _rank_fraction(rows) == _rank_fraction(rows + [[1] * cfg.N])


_volume_cache = {}


def normalized_volume(cfg):
    """Normalized volume of the configuration: sum of |det A_sigma| over a
    reference regular triangulation obtained from a fixed pseudo-random
    lifting, validated by the random-ray test."""
    key = cfg.matrix
    if key in _volume_cache:
        return _volume_cache[key]
    rng = random.Random(20240 + cfg.N)
    for _ in range(200):
        omega = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(cfg.N)]
        try:
            simplices = _triangulate_raw(cfg, omega)
        except DegenerateLifting:
            continue
        if simplices and _ray_test(cfg, simplices, 200, rng):
            vol = sum(s.r for s in simplices)
            _volume_cache[key] = vol
            return vol
    raise ExhaustedRetries("could not build a reference triangulation")


def is_convergent(cfg, simplices):
    """Exact check: for every sigma and j outside it, the entry sum of
    A_sigma^{-1} a(j) is <= 1."""
    for s in simplices:
        for j in range(1, cfg.N + 1):
            if j in s.indices:
                continue
            col = cfg.column(j)
            x = intlinalg.mat_vec([list(r) for r in s.inv], col)
            if sum(x) > 1:
                return False
    return True


def is_unimodular(simplices):
    return all(s.r == 1 for s in simplices)


def triangulate(cfg, omega, validate=True, rays=200, seed=0):
    """Regular triangulation T(omega); validated unless validate=False."""
    simplices = _triangulate_raw(cfg, omega)
    simplices.sort(key=lambda s: s.indices)
    if validate:
        if is_homogeneous(cfg):
            vol = sum(s.r for s in simplices)
            if vol != normalized_volume(cfg):
                raise NotATriangulation(
                    f"volume sum {vol} != normalized volume "
                    f"{normalized_volume(cfg)}")
        if not _ray_test(cfg, simplices, rays, random.Random(seed)):
            raise NotATriangulation("random-ray multiplicity test failed")
    return Triangulation(simplices=tuple(simplices), omega=tuple(omega),
                         convergent=is_convergent(cfg, simplices),
                         unimodular=is_unimodular(simplices))


def triangulation_from_simplices(cfg, index_sets, validate=True, seed=0):
    """Build a Triangulation from explicit index sets (e.g. a staircase
    triangulation known in closed form); validated like triangulate."""
    simplices = sorted((make_simplex(cfg, s) for s in index_sets),
                       key=lambda s: s.indices)
    if validate:
        if is_homogeneous(cfg):
            vol = sum(s.r for s in simplices)
            if vol != normalized_volume(cfg):
                raise NotATriangulation(
                    f"volume sum {vol} != normalized volume "
                    f"{normalized_volume(cfg)}")
        if not _ray_test(cfg, simplices, 200, random.Random(seed)):
            raise NotATriangulation("random-ray multiplicity test failed")
    return Triangulation(simplices=tuple(simplices), omega=(),
                         convergent=is_convergent(cfg, simplices),
                         unimodular=is_unimodular(simplices))


def sample_interior_lifting(cfg, seed=0, tries=1000, span=10 ** 6):
    """A random integer lifting for which triangulate succeeds without
    degeneracy."""
    rng = random.Random(seed)
    for _ in range(tries):
        omega = [rng.randint(-span, span) for _ in range(cfg.N)]
        try:
            _triangulate_raw(cfg, omega)
        except DegenerateLifting:
            continue
        return omega
    raise ExhaustedRetries(f"no generic lifting found in {tries} tries")


def enumerate_regular_triangulations(cfg, samples=500, seed=0):
    """Sampling-based scan of the secondary fan: deduplicated set of T(omega)
    over random liftings.  Not guaranteed exhaustive."""
    rng = random.Random(seed)
    seen = {}
    for _ in range(samples):
        omega = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(cfg.N)]
        try:
            tri = triangulate(cfg, omega)
        except (DegenerateLifting, NotATriangulation):
            # liftings outside the support of the secondary fan (possible
            # for non-homogeneous configurations) do not subdivide cone(A)
            continue
        key = tri.index_sets()
        if key not in seen:
            seen[key] = tri
    return list(seen.values())


# ---------------------------------------------------------------------------
# Ladders (staircase triangulations).
# ---------------------------------------------------------------------------

def enumerate_ladders(k, n):
    """All monotone staircase paths from (k, k+1) to (0, n): each step
    decrements i or increments j by one.  The ambient index set is
    {0..k} x {k+1..n}; there are C(n-1, k) ladders."""
    if not 0 <= k < n:
        raise BadDimensions(f"need 0 <= k < n, got k={k}, n={n}")
    out = []

    def walk(path):
        i, j = path[-1]
        if (i, j) == (0, n):
            out.append(tuple(path))
            return
        if i > 0:
            walk(path + [(i - 1, j)])
        if j < n:
            walk(path + [(i, j + 1)])

    walk([(k, k + 1)])
    return out


def ladder_exponents(ladder, ctilde, confluent=False):
    """Exponent map (i,j) -> v_{ij} from the spanning-tree formula: remove
    the edge (i,j) from the ladder's tree (vertices 0..n) and sum ctilde
    over the component of j.

    In the confluent case the ladder omits the (0, n) cell; the component is
    computed in the completed tree (with (0, n) restored) and vertex n is
    excluded from the sum.  ctilde is indexed 0..n (0..n-1 when confluent).
    """
    cells = list(ladder)
    n = max(j for _, j in cells) if not confluent else len(ctilde)
    if confluent:
        tree = cells + [(0, n)]
    else:
        tree = cells
    adj = {}
    for (i, j) in tree:
        adj.setdefault(i, set()).add(j)
        adj.setdefault(j, set()).add(i)
    out = {}
    for (i, j) in cells:
        # component of j with edge (i,j) removed
        comp = {j}
        stack = [j]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if (v, w) in ((i, j), (j, i)):
                    continue
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        verts = comp - {n} if confluent else comp
        out[(i, j)] = sum(ctilde[l] for l in verts)
    return out


def ladder_to_simplex(ladder, cfg):
    """1-based column indices of a ladder inside a configuration that
    carries (i, j) column labels."""
    if cfg.pairs is None:
        raise BadDimensions("configuration has no (i,j) column labels")
    pos = {p: c + 1 for c, p in enumerate(cfg.pairs)}
    cells = [c for c in ladder if c in pos]   # confluent ladders drop (0,n)
    return tuple(sorted(pos[c] for c in cells))


def staircase_triangulation(cfg, k, n, confluent=False, validate=True):
    """The staircase triangulation of an Aomoto-Gelfand (or confluent)
    configuration, as explicit ladder simplices."""
    ladders = enumerate_ladders(k, n)
    if confluent:
        sets = [ladder_to_simplex([c for c in lad if c != (0, n)], cfg)
                for lad in ladders]
    else:
        sets = [ladder_to_simplex(lad, cfg) for lad in ladders]
    return triangulation_from_simplices(cfg, sets, validate=validate)


def triangulation_to_json(tri):
    return {
        "omega": list(tri.omega),
        "simplices": [list(s.indices) for s in tri.simplices],
        "convergent": tri.convergent,
        "unimodular": tri.unimodular,
    }
