"""Exact Gaussian elimination over a field.

Matrices are lists of rows; rows are lists of field elements.  The element
type only needs +, -, *, division via `inverse()`, and truthiness (nonzero
test) — `CycNum` satisfies all of that.  Everything returns canonical
reduced row echelon form with pivot entries normalised to 1, so row spaces
compare structurally.
"""

from __future__ import annotations


def rref(rows):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pin = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pin is None:
            continue
        rows[r], rows[pin] = rows[pin], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [inv * v for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [row for row in rows[:r]], pivots


def nullspace(rows, ncols, zero, one):
    """Canonical basis of {x : A x = 0}, one vector per free column."""
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [zero] * ncols
        vec[free] = one
        for row, pc in zip(red, pivots):
            vec[pc] = -row[free]
        basis.append(vec)
    return basis


def solve(rows, rhs, ncols, zero):
    """One solution of A x = b with free variables set to zero, or None.

    The returned solution is the canonical one read off the reduced echelon
    form of the augmented system, which makes solver output reproducible.
    """
    if not rows:
        return [zero] * ncols if not any(b for b in rhs) else None
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    sol = [zero] * ncols
    for row, pc in zip(red, pivots):
        sol[pc] = row[-1]
    return sol


def rank(rows):
    return len(rref(rows)[0])
