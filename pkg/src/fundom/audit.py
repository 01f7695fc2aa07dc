"""Brute-force and sampling audits of symmetry-breaking cones.

The checks here deliberately avoid the builders' own logic: coverage is
certified by enumerating group elements and testing images, orbit counts
come from an independent cube partition, and orthogonality is re-derived
from cycle structure.  Classification of sampled points runs on integer
rescalings of the exact rationals (classification is invariant under
positive scaling), so everything stays exact.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from . import bitcube
from .cones import ConeSystem, fix_space_basis
from .errors import CapExceeded
from .groups import DEFAULT_ENUM_CAP, PermGroup
from .ratvec import RatVec
from .sampling import grid_vector, trial_rng

DEFAULT_BINARY_CAP = 20
DEFAULT_TRIALS = 1000
_SUBSET_SEARCH_BUDGET = 5_000_000


class FDReport:
    """Outcome of the fundamental-domain axiom checks."""

    __slots__ = (
        "coverage_trials", "coverage_failures",
        "interior_collision_trials", "interior_collisions",
        "binary_orbits_total", "binary_orbits_covered",
        "exhaustive", "seed",
    )

    def __init__(self, coverage_trials, coverage_failures,
                 interior_collision_trials, interior_collisions,
                 binary_orbits_total, binary_orbits_covered,
                 exhaustive, seed):
        self.coverage_trials = coverage_trials
        self.coverage_failures = coverage_failures
        self.interior_collision_trials = interior_collision_trials
        self.interior_collisions = interior_collisions
        self.binary_orbits_total = binary_orbits_total
        self.binary_orbits_covered = binary_orbits_covered
        self.exhaustive = exhaustive
        self.seed = seed

    @property
    def ok(self) -> bool:
        if self.coverage_failures or self.interior_collisions:
            return False
        if self.binary_orbits_total is not None:
            return self.binary_orbits_covered == self.binary_orbits_total
        return True

    def to_dict(self) -> dict:
        return {
            "coverage_trials": self.coverage_trials,
            "coverage_failures": self.coverage_failures,
            "interior_collision_trials": self.interior_collision_trials,
            "interior_collisions": self.interior_collisions,
            "binary_orbits_total": self.binary_orbits_total,
            "binary_orbits_covered": self.binary_orbits_covered,
            "element_check": "exhaustive" if self.exhaustive else "sampled, not exhaustive",
            "seed": self.seed,
            "ok": self.ok,
        }


class EffectivenessReport:
    """Worst-case orbit representation counts over the binary cube."""

    __slots__ = ("lambda_", "histogram", "witness_rep", "witness_orbit_size",
                 "witness_members")

    def __init__(self, lambda_, histogram, witness_rep, witness_orbit_size,
                 witness_members):
        self.lambda_ = lambda_
        self.histogram = histogram
        self.witness_rep = witness_rep
        self.witness_orbit_size = witness_orbit_size
        self.witness_members = witness_members

    def to_dict(self) -> dict:
        return {
            "lambda": self.lambda_,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "witness_orbit": {
                "representative": list(self.witness_rep),
                "size": self.witness_orbit_size,
                "members_in_cone": [list(v) for v in self.witness_members],
            },
        }


def _scale_to_ints(x: RatVec) -> tuple[int, ...]:
    scale = 1
    for c in x.coords:
        d = c.denominator
        if scale % d:
            g = _gcd(scale, d)
            scale = scale // g * d
    return tuple(int(c * scale) for c in x.coords)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _sparse_normals(system: ConeSystem):
    """Primitive normals as (index, coefficient) pairs, zeros dropped."""
    return [
        tuple((j, c) for j, c in enumerate(ineq.normal) if c)
        for ineq in system.ineqs
    ]


def _classify_int(normals, xs) -> int:
    """1 = interior, 0 = boundary, -1 = outside; early exit on violation."""
    tight = False
    for nrm in normals:
        s = 0
        for j, c in nrm:
            s += c * xs[j]
        if s < 0:
            return -1
        if s == 0:
            tight = True
    return 0 if tight else 1


def _sampled_elements(group: PermGroup, seed: int, count: int):
    """Uniform random elements via one transversal witness per chain level."""
    from random import Random

    rng = Random("%d:pool" % seed)
    chain = group.chain
    keys = [sorted(lvl.transversal) for lvl in chain.levels]
    out = []
    for _ in range(count):
        g = None
        for lvl, lvl_keys in zip(chain.levels, keys):
            w = lvl.transversal[rng.choice(lvl_keys)]
            g = w if g is None else g * w
        out.append(g)
    return out


def verify_fundamental_domain(group: PermGroup, system: ConeSystem,
                              trials: int = DEFAULT_TRIALS, seed: int = 0,
                              binary_cap: int = DEFAULT_BINARY_CAP,
                              enum_cap: int = DEFAULT_ENUM_CAP,
                              sample_pool: int = 2048) -> FDReport:
    """Check the tiling axioms on random rational points and the binary cube.

    (a) coverage: some group element maps each sampled point into the cone;
    (b) disjoint interiors: an interior cover admits no second interior
        image under a non-identity element;
    (c) every binary orbit keeps at least one weak representative (when the
        dimension is within ``binary_cap``).

    Groups larger than ``enum_cap`` cannot be enumerated; coverage is then
    skipped and the interior check runs against a sampled element pool,
    flagged as such in the report.
    """
    n = group.degree
    if system.dim != n:
        raise ValueError("system dimension does not match group degree")
    exhaustive = group.order() <= enum_cap
    if exhaustive:
        elements = group.elements(enum_cap)
    else:
        elements = [g for g in _sampled_elements(group, seed, sample_pool)
                    if not g.is_identity()]
    images = [g.images for g in elements]
    normals = _sparse_normals(system)

    coverage_trials = coverage_failures = 0
    interior_trials = interior_collisions = 0
    for t in range(trials):
        rng = trial_rng(seed, t)
        x = grid_vector(rng, n)
        xi = _scale_to_ints(x)
        if exhaustive:
            coverage_trials += 1
            cover = None
            cover_cls = -1
            for img in images:
                yi = tuple(_permute(img, xi))
                cls = _classify_int(normals, yi)
                if cls >= 0:
                    cover = yi
                    cover_cls = cls
                    break
            if cover is None:
                coverage_failures += 1
                continue
        else:
            cover = xi
            cover_cls = _classify_int(normals, xi)
            if cover_cls < 0:
                continue
        if cover_cls == 1:
            interior_trials += 1
            for img in images:
                if _is_identity_images(img):
                    continue
                yi = tuple(_permute(img, cover))
                # a fixed interior point (yi == cover) is itself a violation:
                # the interiors of F and gF then share it
                if _classify_int(normals, yi) == 1:
                    interior_collisions += 1
                    break

    binary_total = binary_covered = None
    if n <= binary_cap:
        reps = bitcube.orbit_reps(n, [g.images for g in group.generators])
        members = bitcube.cone_members(n, [ineq.normal for ineq in system.ineqs])
        covered = {}
        for mask in range(1 << n):
            r = reps[mask]
            if members[mask]:
                covered[r] = True
            else:
                covered.setdefault(r, False)
        binary_total = len(covered)
        binary_covered = sum(1 for v in covered.values() if v)

    return FDReport(coverage_trials, coverage_failures,
                    interior_trials, interior_collisions,
                    binary_total, binary_covered, exhaustive, seed)


def _permute(img, xs):
    out = [0] * len(xs)
    for i, j in enumerate(img):
        out[j] = xs[i]
    return out


def _is_identity_images(img) -> bool:
    return all(i == j for i, j in enumerate(img))


def effectiveness(group: PermGroup, system: ConeSystem,
                  n_cap: int = DEFAULT_BINARY_CAP) -> EffectivenessReport:
    """Partition {0,1}^n into orbits and count weak cone members per orbit.

    The reported value is the maximum count over all orbits; the witness is
    the orbit achieving it with the smallest representative mask.
    """
    n = group.degree
    if system.dim != n:
        raise ValueError("system dimension does not match group degree")
    if n > n_cap:
        raise CapExceeded("dimension %d exceeds binary cube cap %d" % (n, n_cap))
    reps = bitcube.orbit_reps(n, [g.images for g in group.generators])
    members = bitcube.cone_members(n, [ineq.normal for ineq in system.ineqs])
    size = {}
    count = {}
    for mask in range(1 << n):
        r = reps[mask]
        size[r] = size.get(r, 0) + 1
        if members[mask]:
            count[r] = count.get(r, 0) + 1
    lam = 0
    witness = None
    histogram = {}
    for r in size:
        c = count.get(r, 0)
        histogram[c] = histogram.get(c, 0) + 1
        if c > lam or (c == lam and (witness is None or r < witness)):
            lam = c
            witness = r
    witness_members = [
        _mask_to_tuple(mask, n)
        for mask in range(1 << n)
        if reps[mask] == witness and members[mask]
    ]
    return EffectivenessReport(lam, histogram, _mask_to_tuple(witness, n),
                               size[witness], witness_members)


def _mask_to_tuple(mask: int, n: int) -> tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(n))


def facet_elements_generate(group: PermGroup, system: ConeSystem) -> bool:
    """Do the inequality elements (closed under inverses) generate the group?"""
    gens = []
    seen = set()
    for ineq in system.ineqs:
        for g in (ineq.g, ineq.g.inverse()):
            if g.images not in seen:
                seen.add(g.images)
                gens.append(g)
    return PermGroup(group.degree, gens).order() == group.order()


def min_generating_size(group: PermGroup, cap: int = 4096) -> int:
    """Smallest cardinality of a generating subset, by exhaustive search.

    Searches subsets of the non-identity elements in increasing size, so
    the first hit is minimal.  Both the group order and the number of
    candidate subsets are capped.
    """
    order = group.order()
    if order > cap:
        raise CapExceeded("group order %d exceeds search cap %d" % (order, cap))
    if order == 1:
        return 0
    candidates = [g for g in group.elements(cap) if not g.is_identity()]
    for k in range(1, len(candidates) + 1):
        if comb(len(candidates), k) > _SUBSET_SEARCH_BUDGET:
            raise CapExceeded("subset search at size %d is too large" % k)
        for subset in combinations(candidates, k):
            if PermGroup(group.degree, subset).order() == order:
                return k
    raise AssertionError("the full element set always generates")


def fix_orthogonality_check(system: ConeSystem) -> bool:
    """Every normal must be orthogonal to the fixed space of its element."""
    for ineq in system.ineqs:
        for v in fix_space_basis(ineq.g):
            if ineq.gamma.dot(v) != 0:
                return False
    return True
