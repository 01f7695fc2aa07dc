"""Shared group builders and the verification battery."""

import pytest

from fundom import Perm, PermGroup


def sym(n):
    """Symmetric group on n points."""
    gens = []
    if n >= 2:
        gens.append(Perm.from_cycles(n, [[0, 1]]))
    if n >= 3:
        gens.append(Perm.from_cycles(n, [list(range(n))]))
    return PermGroup(n, gens)


def cyc(n):
    return PermGroup(n, [Perm.from_cycles(n, [list(range(n))])])


def dihedral(n):
    """Symmetries of the n-gon acting on its n vertices."""
    rot = Perm.from_cycles(n, [list(range(n))])
    refl = Perm([n - 1 - i for i in range(n)])
    return PermGroup(n, [rot, refl])


def elem_abelian(n):
    """(1 2)(3 4)... on n points, n even; isomorphic to (Z_2)^(n/2)."""
    assert n % 2 == 0
    return PermGroup(n, [Perm.from_cycles(n, [[2 * i, 2 * i + 1]]) for i in range(n // 2)])


def cyclic_triples(n):
    """Direct product of 3-cycles on consecutive triples; n divisible by 3."""
    assert n % 3 == 0
    return PermGroup(n, [Perm.from_cycles(n, [[3 * i, 3 * i + 1, 3 * i + 2]])
                         for i in range(n // 3)])


def direct_product(*factors):
    degree = sum(G.degree for G in factors)
    gens = []
    offset = 0
    for G in factors:
        for g in G.generators:
            images = list(range(degree))
            for i, j in enumerate(g.images):
                images[offset + i] = offset + j
            gens.append(Perm(images))
        offset += G.degree
    return PermGroup(degree, gens)


def _build_battery():
    """(name, group, is a product of full symmetric groups on its orbits)."""
    entries = []
    for n in range(2, 7):
        entries.append(("S%d" % n, sym(n), True))
    for n in (3, 4, 5, 6, 8, 10):
        entries.append(("C%d" % n, cyc(n), False))
    for n in (4, 5, 6, 8):
        entries.append(("D%d" % n, dihedral(n), False))
    for n in (4, 6, 8, 10):
        # (Z_2)^(n/2) is the full product S_2 x ... x S_2 on its orbits
        entries.append(("E%d" % n, elem_abelian(n), True))
    for n in (6, 9, 12):
        entries.append(("CT%d" % n, cyclic_triples(n), False))
    entries.append(("S3xC4", direct_product(sym(3), cyc(4)), False))
    entries.append(("S4xS3", direct_product(sym(4), sym(3)), True))
    entries.append(("C3xS2", direct_product(cyc(3), sym(2)), False))
    return entries


BATTERY = _build_battery()

BATTERY_IDS = [name for name, _, _ in BATTERY]


@pytest.fixture(params=BATTERY, ids=BATTERY_IDS)
def battery_entry(request):
    return request.param
