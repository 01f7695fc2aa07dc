"""Exact nonnegative-combination feasibility over the rationals.

Decides whether a target vector b lies in the cone generated by a list of
columns c_1, ..., c_m, i.e. whether there exist y >= 0 with sum y_k c_k = b.
This is the Farkas certificate question behind inequality implication for
homogeneous systems.

Method: phase-1 simplex (minimize the sum of artificial variables) on a
dense Fraction tableau with Bland's anti-cycling rule, so termination is
guaranteed regardless of degeneracy.  Sizes here are desk scale; clarity
beats speed.
"""

from __future__ import annotations

from fractions import Fraction


def nonneg_combination(columns, target):
    """Multipliers y >= 0 with sum y_k columns[k] = target, or None.

    ``columns`` is a sequence of equal-length sequences of ints/Fractions;
    ``target`` has the same length.  Returns a list of Fractions (one per
    column) when the system is feasible.
    """
    m = len(columns)
    n = len(target)
    b = [Fraction(v) for v in target]
    if all(v == 0 for v in b):
        return [Fraction(0)] * m
    if m == 0:
        return None
    for col in columns:
        if len(col) != n:
            raise ValueError("column length %d does not match target %d" % (len(col), n))

    # Rows: sum_k A[i][k] y_k + a_i = b_i with b >= 0 after sign flips.
    # Columns 0..m-1 are the y variables, m..m+n-1 the artificials.
    width = m + n
    tab = []
    for i in range(n):
        sign = -1 if b[i] < 0 else 1
        row = [sign * Fraction(columns[k][i]) for k in range(m)]
        row.extend(Fraction(1) if j == i else Fraction(0) for j in range(n))
        row.append(sign * b[i])
        tab.append(row)
    basis = [m + i for i in range(n)]

    # Objective: minimize w = sum of artificials.  With the artificials
    # basic, w = sum_i rhs_i - sum_j (sum_i tab[i][j]) x_j, so x_j with a
    # positive column sum decreases w when entering.
    drow = [sum(tab[i][j] for i in range(n)) for j in range(width)]
    wval = sum(tab[i][width] for i in range(n))

    while True:
        enter = -1
        for j in range(width):
            if j not in basis and drow[j] > 0:
                enter = j
                break
        if enter < 0:
            break
        # ratio test; Bland tie-break on the smallest basis variable index
        leave_row = -1
        best = None
        for i in range(n):
            coef = tab[i][enter]
            if coef > 0:
                ratio = tab[i][width] / coef
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave_row]
                ):
                    best = ratio
                    leave_row = i
        if leave_row < 0:
            raise ArithmeticError("phase-1 objective unbounded; tableau corrupt")
        # pivot
        piv = tab[leave_row][enter]
        prow = tab[leave_row]
        for j in range(width + 1):
            prow[j] /= piv
        for i in range(n):
            if i == leave_row:
                continue
            c = tab[i][enter]
            if c:
                row = tab[i]
                for j in range(width + 1):
                    row[j] -= c * prow[j]
        c = drow[enter]
        if c:
            for j in range(width):
                drow[j] -= c * prow[j]
            wval -= c * prow[width]
        basis[leave_row] = enter

    if wval != 0:
        return None
    y = [Fraction(0)] * m
    for i, var in enumerate(basis):
        if var < m:
            y[var] = tab[i][width]
        elif tab[i][width] != 0:
            # an artificial stuck at a nonzero level means infeasible;
            # unreachable when wval == 0
            return None
    return y


def in_cone(columns, target) -> bool:
    """True iff target is a nonnegative combination of the columns."""
    y = nonneg_combination(columns, target)
    if y is None:
        return False
    # exact certificate check
    n = len(target)
    for i in range(n):
        acc = Fraction(0)
        for k, yk in enumerate(y):
            if yk:
                acc += yk * columns[k][i]
        if acc != Fraction(target[i]):
            raise ArithmeticError("simplex returned an invalid certificate")
    return True
