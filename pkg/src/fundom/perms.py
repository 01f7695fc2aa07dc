"""Permutations of {0, ..., n-1} and their action on coordinate vectors.

Points are 0-based everywhere inside the package; the 1-based convention of
group files and printed cycles is handled at parse/print time only.

A permutation g acts on a vector x by moving the value at position i to
position g(i), i.e. (gx)_{g(i)} = x_i, equivalently (gx)_i = x_{g^{-1}(i)}.
"""

from __future__ import annotations

from .ratvec import RatVec


class Perm:
    """A permutation stored as its tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        seen = bytearray(n)
        for v in images:
            if not isinstance(v, int) or not 0 <= v < n or seen[v]:
                raise ValueError("not a permutation of 0..%d: %r" % (n - 1, images))
            seen[v] = 1
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Perm":
        """Build a permutation from disjoint cycles of 0-based points."""
        images = list(range(n))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        """Composition g*h: first apply h, then g."""
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch in composition")
        simg = self.images
        return Perm(simg[j] for j in other.images)

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Perm(%s)" % self.cycle_string()

    def act(self, vec):
        """Apply the coordinate action to a RatVec or plain sequence."""
        if isinstance(vec, RatVec):
            coords = vec.coords
            if len(coords) != len(self.images):
                raise ValueError("dimension mismatch in action")
            out = [None] * len(coords)
            for i, j in enumerate(self.images):
                out[j] = coords[i]
            return RatVec(out)
        out = [None] * len(vec)
        for i, j in enumerate(self.images):
            out[j] = vec[i]
        return tuple(out)

    def cycles(self, include_fixed: bool = True):
        """Disjoint cycles as lists of 0-based points, sorted by least point."""
        n = len(self.images)
        seen = bytearray(n)
        out = []
        for start in range(n):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = 1
            j = self.images[start]
            while j != start:
                seen[j] = 1
                cycle.append(j)
                j = self.images[j]
            if include_fixed or len(cycle) > 1:
                out.append(cycle)
        return out

    def cycle_string(self) -> str:
        """Cycle notation with 1-based points, fixed points omitted."""
        parts = [
            "(%s)" % " ".join(str(p + 1) for p in cycle)
            for cycle in self.cycles(include_fixed=False)
        ]
        return "".join(parts) if parts else "()"


def compose(g: Perm, h: Perm) -> Perm:
    """result(i) = g(h(i))."""
    return g * h


def act_on_vector(g: Perm, x: RatVec) -> RatVec:
    return g.act(x)
