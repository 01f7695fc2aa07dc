"""Pure-Python binary-cube kernels.

Reference implementation of the hot loops; the compiled extension in
``_bitkernel.pyx`` mirrors these functions exactly.  Masks encode binary
vectors with bit i holding coordinate i.
"""

from array import array


def orbit_reps(n, gen_maps):
    """Orbit representative (minimum mask) for every mask in {0,1}^n.

    ``gen_maps`` lists each generator as its image array: applying a
    generator moves bit i of a mask to bit gen_map[i].
    """
    size = 1 << n
    reps = array("q", [-1]) * size
    for start in range(size):
        if reps[start] >= 0:
            continue
        reps[start] = start
        stack = [start]
        while stack:
            m = stack.pop()
            for gm in gen_maps:
                t = 0
                mm = m
                while mm:
                    low = mm & -mm
                    t |= 1 << gm[low.bit_length() - 1]
                    mm ^= low
                if reps[t] < 0:
                    reps[t] = start
                    stack.append(t)
    return reps


def cone_members(n, normals):
    """Byte per mask: 1 iff every normal has nonnegative dot with the mask.

    Dot products are evaluated through half-mask partial-sum tables, so the
    per-mask cost is independent of the number of coordinates.
    """
    size = 1 << n
    member = bytearray(b"\x01") * size
    h = n >> 1
    lo_size = 1 << h
    lo_mask = lo_size - 1
    for normal in normals:
        lo = _subset_sums(normal[:h])
        hi = _subset_sums(normal[h:])
        for mask in range(size):
            if member[mask] and lo[mask & lo_mask] + hi[mask >> h] < 0:
                member[mask] = 0
    return member


def _subset_sums(coeffs):
    table = [0] * (1 << len(coeffs))
    for i, c in enumerate(coeffs):
        bit = 1 << i
        for m in range(bit):
            table[bit | m] = table[m] + c
    return table
