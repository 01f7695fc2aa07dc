"""Builders for symmetry-breaking cones.

Three constructions are provided:

  * ``dirichlet_domain`` -- one inequality per non-identity group element,
    anchored at a vector with trivial stabilizer;
  * ``gdd`` -- the recursive coset construction: pick a vector, cut against
    a transversal of its stabilizer (closed under inverses), then recurse
    on the stabilizer until it is trivial;
  * ``ssp`` / ``ssp_reduced`` -- the cone  x_i >= x_j  over the entries of
    the coset-representative table, optionally pruned to the transitive
    reduction of its comparison digraph.

Every builder records a per-round trace (chosen vector, coset count,
stabilizer order, inequalities added) in the returned system.
"""

from __future__ import annotations

from fractions import Fraction

from .cones import ConeSystem, Round, make_ineq
from .errors import NontrivialStabilizer, StrategyExhausted
from .groups import DEFAULT_ENUM_CAP, PermGroup, vector_orbit
from .perms import Perm
from .ratvec import RatVec, basis_vector


def k_universal_vector(n: int, k: int = 2) -> RatVec:
    """(k^{n-1}, k^{n-2}, ..., k, 1); pairwise-distinct positive entries."""
    if n < 1:
        raise ValueError("dimension must be positive")
    if k < 2:
        raise ValueError("universal ordering vector needs k >= 2")
    return RatVec(Fraction(k) ** (n - 1 - i) for i in range(n))


class Explicit:
    """Use the given vectors, in order."""

    def __init__(self, vectors):
        self.vectors = [v if isinstance(v, RatVec) else RatVec(v) for v in vectors]

    def candidates(self, group: PermGroup) -> list[RatVec]:
        for v in self.vectors:
            if v.dim != group.degree:
                raise ValueError("strategy vector dimension %d does not match degree %d"
                                 % (v.dim, group.degree))
        return list(self.vectors)

    def describe(self) -> str:
        return "explicit(%d vectors)" % len(self.vectors)


class CanonicalBasis:
    """e_1, e_2, ..., e_n; reproduces the table cone x_i >= x_j."""

    def candidates(self, group: PermGroup) -> list[RatVec]:
        n = group.degree
        return [basis_vector(n, i) for i in range(n)]

    def describe(self) -> str:
        return "canonical"


class PerOrbitWeights:
    """One vector per index orbit, weighted base^(m-1), ..., base, 1.

    On the orbit {o_1 < ... < o_m} the vector takes value base^(m-t) at
    o_t and 0 elsewhere, so consecutive rounds peel off one orbit each.
    """

    def __init__(self, base: int = 2):
        if base < 2:
            raise ValueError("orbit weights need base >= 2")
        self.base = base

    def candidates(self, group: PermGroup) -> list[RatVec]:
        n = group.degree
        out = []
        for orbit in group.index_orbits():
            m = len(orbit)
            coords = [Fraction(0)] * n
            for t, point in enumerate(orbit):
                coords[point] = Fraction(self.base) ** (m - 1 - t)
            out.append(RatVec(coords))
        return out

    def describe(self) -> str:
        return "orbit-weights:%d" % self.base


class KUniversal:
    """The single vector (k^{n-1}, ..., k, 1); trivial stabilizer in one round."""

    def __init__(self, k: int = 2):
        if k < 2:
            raise ValueError("k-universal strategy needs k >= 2")
        self.k = k

    def candidates(self, group: PermGroup) -> list[RatVec]:
        return [k_universal_vector(group.degree, self.k)]

    def describe(self) -> str:
        return "k-universal:%d" % self.k


def dirichlet_domain(group: PermGroup, alpha: RatVec,
                     cap: int = DEFAULT_ENUM_CAP) -> ConeSystem:
    """alpha^T x >= alpha^T (g x) for every non-identity g.

    Requires the stabilizer of alpha to be trivial; otherwise inequalities
    within a stabilizer coset coincide and the construction is rejected.
    """
    if alpha.dim != group.degree:
        raise ValueError("alpha dimension %d does not match degree %d"
                         % (alpha.dim, group.degree))
    order = group.order()
    orbit = group.vector_orbit(alpha, cap)
    if len(orbit) != order:
        raise NontrivialStabilizer(
            "stabilizer of the base vector has order %d; the Dirichlet "
            "construction needs a trivially-stabilized vector" % (order // len(orbit))
        )
    system = ConeSystem(group.degree)
    added = 0
    # with a trivial stabilizer the orbit witnesses enumerate the group
    for _, g in orbit.images:
        ineq = make_ineq(alpha, g)
        if ineq is not None and system.add(ineq):
            added += 1
    system.trace.append(Round(alpha, order, 1, added))
    return system


def gdd(group: PermGroup, strategy, cap: int = DEFAULT_ENUM_CAP) -> ConeSystem:
    """Recursive coset construction of a fundamental cone.

    Round i: take the next strategy vector moved by the current stabilizer
    (vectors it fixes are skipped), collect the orbit witnesses as a coset
    transversal, close it under inverses, and add the cut
    gamma_i^T x >= gamma_i^T (h x) for every transversal element h.  The
    identity coset contributes only the trivial cut and is dropped.  The
    next round works inside the stabilizer of gamma_i; the loop ends when
    the stabilizer is trivial.
    """
    degree = group.degree
    system = ConeSystem(degree)
    candidates = strategy.candidates(group)
    idx = 0
    gens = list(group.generators)
    current_order = group.order()
    while current_order > 1:
        gamma = None
        while idx < len(candidates):
            cand = candidates[idx]
            idx += 1
            if any(g.act(cand) != cand for g in gens):
                gamma = cand
                break
        if gamma is None:
            raise StrategyExhausted(
                "strategy %s ran out of vectors with the stabilizer still of order %d"
                % (strategy.describe(), current_order)
            )
        orbit = vector_orbit(degree, gens, gamma, cap)
        coset_count = len(orbit)
        new_order = current_order // coset_count
        transversal = orbit.witnesses()
        added = 0
        for h in transversal + [w.inverse() for w in transversal]:
            ineq = make_ineq(gamma, h)
            if ineq is not None and system.add(ineq):
                added += 1
        system.trace.append(Round(gamma, coset_count, new_order, added))
        gens = orbit.stabilizer_gens
        current_order = new_order
    return system


def ssp(group: PermGroup) -> ConeSystem:
    """The cone x_i >= x_j over the off-diagonal table entries.

    The stored group element of the (i, j) inequality maps j to i (the
    inverse of the table witness), which makes the derived normal exactly
    e_i - e_j; this is asserted.
    """
    table = group.schreier_sims_table()
    return _system_from_edges(group, table, table.edge_list())


def ssp_reduced(group: PermGroup) -> ConeSystem:
    """Same cone as ``ssp`` with transitively implied comparisons removed.

    The comparison digraph is acyclic (edges only go to larger points), so
    its transitive reduction is unique; one inequality per surviving edge.
    """
    table = group.schreier_sims_table()
    edges = transitive_reduction(group.degree, table.edge_list())
    return _system_from_edges(group, table, edges)


def _system_from_edges(group: PermGroup, table, edges) -> ConeSystem:
    n = group.degree
    chain = group.chain
    system = ConeSystem(n)
    keep = set(edges)
    for i, row in enumerate(table.rows):
        if len(row) <= 1:
            continue
        added = 0
        for j in sorted(row):
            if j == i or (i, j) not in keep:
                continue
            g = row[j].inverse()
            ineq = make_ineq(basis_vector(n, i), g)
            assert ineq is not None and ineq.normal == _edge_normal(n, i, j)
            if system.add(ineq):
                added += 1
        system.trace.append(Round(basis_vector(n, i), len(row),
                                  chain.order_from(i + 1), added))
    return system


def _edge_normal(n: int, i: int, j: int) -> tuple[int, ...]:
    normal = [0] * n
    normal[i] = 1
    normal[j] = -1
    return tuple(normal)


def transitive_reduction(n: int, edges) -> list[tuple[int, int]]:
    """Minimum equivalent edge set of a DAG on points 0..n-1.

    An edge (u, v) is dropped iff v stays reachable from u without it;
    for DAGs the result is unique, so removals can be committed greedily.
    """
    succ = {u: set() for u in range(n)}
    for u, v in edges:
        succ[u].add(v)
    kept = list(edges)
    for u, v in list(kept):
        succ[u].discard(v)
        if _reaches(succ, u, v):
            kept.remove((u, v))
        else:
            succ[u].add(v)
    return kept


def _reaches(succ, src: int, dst: int) -> bool:
    stack = [src]
    seen = {src}
    while stack:
        p = stack.pop()
        for q in succ[p]:
            if q == dst:
                return True
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return False
