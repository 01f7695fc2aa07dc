"""Inequalities of Dirichlet type and polyhedral cone systems.

An inequality is a pair (alpha, g) encoding  alpha^T x >= alpha^T (g x),
stored with its derived normal gamma (gamma_j = alpha_j - alpha_{g(j)}), so
the halfspace is  gamma^T x >= 0.  Systems deduplicate on the primitive
integer normal; the primitive form keeps the orientation of the halfspace
(positive scaling only), so it is also safe to evaluate and export.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from . import farkas
from .errors import DimensionMismatch
from .perms import Perm
from .ratvec import RatVec


class Classification(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


class DirichletIneq:
    """alpha^T x >= alpha^T (g x), normalized as gamma^T x >= 0."""

    __slots__ = ("alpha", "g", "gamma", "normal")

    def __init__(self, alpha: RatVec, g: Perm, gamma: RatVec):
        self.alpha = alpha
        self.g = g
        self.gamma = gamma
        self.normal = gamma.primitive()

    def __repr__(self):
        return "DirichletIneq(normal=%r, g=%s)" % (self.normal, self.g.cycle_string())

    def value(self, x: RatVec) -> Fraction:
        return self.gamma.dot(x)


def make_ineq(alpha: RatVec, g: Perm):
    """Build the inequality for (alpha, g); None when it is trivial (g fixes alpha)."""
    if alpha.dim != g.degree:
        raise DimensionMismatch(
            "alpha dimension %d does not match degree %d" % (alpha.dim, g.degree)
        )
    coords = alpha.coords
    gamma = RatVec(coords[j] - coords[g(j)] for j in range(alpha.dim))
    if gamma.is_zero():
        return None
    return DirichletIneq(alpha, g, gamma)


def fix_space_basis(g: Perm) -> list[RatVec]:
    """0/1 indicator vectors of the cycles of g; they span fix(g)."""
    n = g.degree
    out = []
    for cycle in g.cycles(include_fixed=True):
        coords = [Fraction(0)] * n
        for p in cycle:
            coords[p] = Fraction(1)
        out.append(RatVec(coords))
    return out


class Round:
    """One construction round: the chosen vector and its coset data."""

    __slots__ = ("gamma", "coset_count", "stabilizer_order", "inequalities_added")

    def __init__(self, gamma: RatVec, coset_count: int, stabilizer_order: int,
                 inequalities_added: int):
        self.gamma = gamma
        self.coset_count = coset_count
        self.stabilizer_order = stabilizer_order
        self.inequalities_added = inequalities_added


class ConeSystem:
    """A list of Dirichlet-type inequalities with a construction trace.

    Represents the cone {x : gamma^T x >= 0 for every inequality}.  The
    all-zeros vector always satisfies every inequality, so the set is a
    (possibly improper) cone.  Inequalities sharing a primitive normal are
    stored once, first occurrence wins.
    """

    def __init__(self, dim: int, ineqs=(), trace=()):
        self.dim = dim
        self.ineqs: list[DirichletIneq] = []
        self.trace: list[Round] = list(trace)
        self._normals = set()
        for ineq in ineqs:
            self.add(ineq)

    def add(self, ineq: DirichletIneq) -> bool:
        """Insert unless an inequality with the same primitive normal exists."""
        if ineq.gamma.dim != self.dim:
            raise DimensionMismatch("inequality dimension does not match system")
        if ineq.normal in self._normals:
            return False
        self._normals.add(ineq.normal)
        self.ineqs.append(ineq)
        return True

    def __len__(self) -> int:
        return len(self.ineqs)

    def normals(self) -> list[tuple[int, ...]]:
        return [ineq.normal for ineq in self.ineqs]

    def classify(self, x: RatVec) -> Classification:
        """Exact membership: all strict / all weak with a tie / some violated."""
        if x.dim != self.dim:
            raise DimensionMismatch("vector dimension does not match system")
        tight = False
        for ineq in self.ineqs:
            v = ineq.gamma.dot(x)
            if v < 0:
                return Classification.OUTSIDE
            if v == 0:
                tight = True
        return Classification.BOUNDARY if tight else Classification.INTERIOR

    def weakly_contains(self, x: RatVec) -> bool:
        return self.classify(x) is not Classification.OUTSIDE


def implies(system: ConeSystem, ineq: DirichletIneq) -> bool:
    """True iff the system's inequalities imply the given one.

    For homogeneous systems this is exactly a Farkas question: the normal
    must be a nonnegative combination of the system's normals.
    """
    if ineq.gamma.dim != system.dim:
        raise DimensionMismatch("inequality dimension does not match system")
    return farkas.in_cone(system.normals(), ineq.normal)


def mutually_imply(a: ConeSystem, b: ConeSystem) -> bool:
    """Each system implies every inequality of the other."""
    return all(implies(a, ineq) for ineq in b.ineqs) and all(
        implies(b, ineq) for ineq in a.ineqs
    )


def irredundant_core(system: ConeSystem) -> ConeSystem:
    """Greedy removal, in stored order, of inequalities implied by the rest.

    The result describes the same cone; for full-dimensional cones the
    survivors are exactly the facet-defining inequalities.
    """
    kept = list(system.ineqs)
    i = 0
    while i < len(kept):
        candidate = kept[i]
        rest = kept[:i] + kept[i + 1:]
        if farkas.in_cone([q.normal for q in rest], candidate.normal):
            kept = rest
        else:
            i += 1
    return ConeSystem(system.dim, kept, trace=system.trace)
