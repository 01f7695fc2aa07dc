"""Permutation groups, stabilizer chains, and orbit machinery.

The stabilizer chain is built by a deterministic (non-randomized)
Schreier-Sims procedure over the full base ``0, 1, ..., n-1`` by default.
Keeping every point in the base costs nothing (redundant points carry
singleton transversals) and makes the chain line up exactly with the rows
of the coset-representative table: row i is the transversal of level i.

Determinism rules used throughout:
  * transversal witnesses are found by BFS in generator order; the first
    witness discovered for a point is kept;
  * group elements are enumerated by BFS from the identity in generator
    order;
  * no randomness anywhere.
"""

from __future__ import annotations

from collections import deque

from .errors import CapExceeded
from .perms import Perm
from .ratvec import RatVec

#: Default limit for explicit element / vector-orbit enumeration.
DEFAULT_ENUM_CAP = 10**6


class _Level:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens: list[Perm] = []
        # point -> witness u with u(level point) = point, in BFS discovery order
        self.transversal: dict[int, Perm] = {point: Perm.identity(degree)}


def _rebuild_transversal(lvl: _Level):
    """BFS orbit of the level point; first-discovered witness wins."""
    identity = lvl.transversal[lvl.point]
    tr = {lvl.point: identity}
    queue = deque([lvl.point])
    while queue:
        p = queue.popleft()
        u = tr[p]
        for s in lvl.gens:
            q = s(p)
            if q not in tr:
                tr[q] = s * u
                queue.append(q)
    lvl.transversal = tr


class StabilizerChain:
    """Chain of pointwise stabilizers with coset transversals.

    Level i holds the subgroup of elements fixing ``base[0..i-1]``; its
    transversal is the orbit of ``base[i]`` under that subgroup, with one
    witness permutation per orbit point.
    """

    def __init__(self, degree: int, base: tuple[int, ...], levels: list[_Level]):
        self.degree = degree
        self.base = base
        self.levels = levels

    def order(self) -> int:
        out = 1
        for lvl in self.levels:
            out *= len(lvl.transversal)
        return out

    def order_from(self, i: int) -> int:
        """Order of the subgroup fixing base[0..i-1] pointwise."""
        out = 1
        for lvl in self.levels[i:]:
            out *= len(lvl.transversal)
        return out

    def transversal_sizes(self) -> list[int]:
        return [len(lvl.transversal) for lvl in self.levels]

    def sift(self, g: Perm) -> Perm:
        """Strip g through the chain; the residue is the identity iff g is a member."""
        for lvl in self.levels:
            a = g(lvl.point)
            u = lvl.transversal.get(a)
            if u is None:
                return g
            g = u.inverse() * g
        return g

    def contains(self, g: Perm) -> bool:
        if g.degree != self.degree:
            return False
        return self.sift(g).is_identity()


def build_stabilizer_chain(degree, generators=None, base_order=None) -> StabilizerChain:
    """Deterministic Schreier-Sims over a full base.

    Accepts either ``(degree, generators)`` or a ``PermGroup`` as the first
    argument.  ``base_order`` may list a subset of points to stabilize
    first; the remaining points are appended in increasing order so that
    the base always covers every point.
    """
    if isinstance(degree, PermGroup):
        degree, generators = degree.degree, degree.generators
    if base_order is None:
        base = list(range(degree))
    else:
        base = list(base_order)
        if len(set(base)) != len(base) or any(not 0 <= b < degree for b in base):
            raise ValueError("base_order must be distinct points in range")
        used = set(base)
        base.extend(p for p in range(degree) if p not in used)
    base = tuple(base)
    levels = [_Level(b, degree) for b in base]

    def attach(g: Perm) -> int:
        # g joins every level whose base prefix it fixes
        k = 0
        while g(base[k]) == base[k]:
            k += 1
        for j in range(k + 1):
            levels[j].gens.append(g)
        for j in range(k + 1):
            _rebuild_transversal(levels[j])
        return k

    seen = set()
    for g in generators:
        if g.degree != degree:
            raise ValueError("generator degree %d does not match %d" % (g.degree, degree))
        if g.is_identity() or g.images in seen:
            continue
        seen.add(g.images)
        attach(g)

    def sift_from(i: int, g: Perm):
        for j in range(i, len(levels)):
            a = g(levels[j].point)
            u = levels[j].transversal.get(a)
            if u is None:
                return g, j
            g = u.inverse() * g
        return g, len(levels)

    # Establish the Schreier-Sims closure bottom-up: at each level every
    # Schreier generator must sift to the identity through deeper levels.
    i = len(levels) - 1
    while i >= 0:
        lvl = levels[i]
        changed_at = None
        for p in list(lvl.transversal):
            u_p = lvl.transversal[p]
            for s in lvl.gens:
                q = s(p)
                schreier = lvl.transversal[q].inverse() * (s * u_p)
                if schreier.is_identity():
                    continue
                residue, _ = sift_from(i + 1, schreier)
                if not residue.is_identity():
                    changed_at = attach(residue)
                    break
            if changed_at is not None:
                break
        if changed_at is not None:
            # deeper levels up to changed_at gained a generator; re-verify them
            i = changed_at
        else:
            i -= 1

    return StabilizerChain(degree, base, levels)


class SchreierSimsTable:
    """Sparse table of coset representatives for the natural stabilizer chain.

    ``rows[i]`` maps j to a permutation h with h(i) = j that fixes
    0..i-1 pointwise; j ranges over the orbit of i under the pointwise
    stabilizer of 0..i-1.  The diagonal entry is always the identity.
    """

    def __init__(self, degree: int, rows: list[dict[int, Perm]]):
        self.degree = degree
        self.rows = rows

    def entries(self):
        """Yield the off-diagonal entries (i, j, h) in row-major order."""
        for i, row in enumerate(self.rows):
            for j in sorted(row):
                if j != i:
                    yield i, j, row[j]

    def edge_list(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j, _ in self.entries()]


class VectorOrbit:
    """BFS orbit of a vector with one witness per image and stabilizer generators."""

    def __init__(self, base_vector: RatVec, images, stabilizer_gens):
        self.base_vector = base_vector
        self.images = images  # list of (RatVec, Perm witness), BFS order
        self.stabilizer_gens = stabilizer_gens

    def __len__(self) -> int:
        return len(self.images)

    def vectors(self):
        return [v for v, _ in self.images]

    def witnesses(self):
        return [w for _, w in self.images]


def vector_orbit(degree: int, generators, v: RatVec, cap: int = DEFAULT_ENUM_CAP) -> VectorOrbit:
    """Orbit of v under the group generated by ``generators``.

    Witness w for an image y satisfies w.act(v) = y; the stabilizer
    generators are the Schreier generators of the orbit BFS.
    """
    if v.dim != degree:
        raise ValueError("vector dimension %d does not match degree %d" % (v.dim, degree))
    identity = Perm.identity(degree)
    witnesses: dict[RatVec, Perm] = {v: identity}
    order: list[RatVec] = [v]
    queue = deque([v])
    while queue:
        x = queue.popleft()
        u = witnesses[x]
        for s in generators:
            y = s.act(x)
            if y not in witnesses:
                if len(witnesses) >= cap:
                    raise CapExceeded(
                        "vector orbit exceeded cap of %d; the chosen vector is too "
                        "generic for this group (pick another or raise the cap)" % cap
                    )
                witnesses[y] = s * u
                order.append(y)
                queue.append(y)
    stab: list[Perm] = []
    stab_seen = set()
    for x in order:
        u = witnesses[x]
        for s in generators:
            y = s.act(x)
            schreier = witnesses[y].inverse() * (s * u)
            if not schreier.is_identity() and schreier.images not in stab_seen:
                stab_seen.add(schreier.images)
                stab.append(schreier)
    return VectorOrbit(v, [(x, witnesses[x]) for x in order], stab)


class PermGroup:
    """A finite permutation group given by generators.

    The stabilizer chain (natural base) is built lazily on first use and
    cached; all derived data (order, membership, table) comes from it.
    """

    def __init__(self, degree: int, generators):
        self.degree = degree
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Perm):
                g = Perm(g)
            if g.degree != degree:
                raise ValueError("generator degree %d does not match %d" % (g.degree, degree))
            if g.is_identity() or g.images in seen:
                continue
            seen.add(g.images)
            gens.append(g)
        self.generators: tuple[Perm, ...] = tuple(gens)
        self._chain: StabilizerChain | None = None

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = build_stabilizer_chain(self.degree, self.generators)
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def contains(self, g: Perm) -> bool:
        return self.chain.contains(g)

    __contains__ = contains

    def index_orbits(self) -> list[list[int]]:
        """Orbits of the group acting on points, sorted by least element."""
        n = self.degree
        seen = bytearray(n)
        blocks = []
        for start in range(n):
            if seen[start]:
                continue
            block = [start]
            seen[start] = 1
            queue = deque([start])
            while queue:
                p = queue.popleft()
                for g in self.generators:
                    q = g(p)
                    if not seen[q]:
                        seen[q] = 1
                        block.append(q)
                        queue.append(q)
            blocks.append(sorted(block))
        return blocks

    def elements(self, cap: int = DEFAULT_ENUM_CAP) -> list[Perm]:
        """All group elements by BFS from the identity, in discovery order."""
        identity = Perm.identity(self.degree)
        found: dict[tuple, Perm] = {identity.images: identity}
        order = [identity]
        queue = deque([identity])
        while queue:
            g = queue.popleft()
            for s in self.generators:
                h = s * g
                if h.images not in found:
                    if len(found) >= cap:
                        raise CapExceeded(
                            "group enumeration exceeded cap of %d elements" % cap
                        )
                    found[h.images] = h
                    order.append(h)
                    queue.append(h)
        return order

    def vector_orbit(self, v: RatVec, cap: int = DEFAULT_ENUM_CAP) -> VectorOrbit:
        return vector_orbit(self.degree, self.generators, v, cap)

    def vector_stabilizer_order(self, v: RatVec, cap: int = DEFAULT_ENUM_CAP) -> int:
        return self.order() // len(self.vector_orbit(v, cap))

    def schreier_sims_table(self) -> SchreierSimsTable:
        """Coset-representative table for the natural chain 0, 1, ..., n-1."""
        chain = self.chain
        rows = [dict(lvl.transversal) for lvl in chain.levels]
        return SchreierSimsTable(self.degree, rows)


def group_order(group: PermGroup) -> int:
    return group.order()


def orbits_on_indices(group: PermGroup) -> list[list[int]]:
    return group.index_orbits()
