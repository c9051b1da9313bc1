"""Partial group cohomology in degrees relevant to Kummer theory.

An n-cochain assigns to each tuple (g_1, ..., g_n) a unit of the ideal
S 1_{g_1} 1_{g_1 g_2} ... 1_{g_1 ... g_n}; a 0-cochain is a unit of S.
Cochains of fixed arity form an abelian group under pointwise products,
with inverses taken inside the respective ideals.  The coboundary takes

  (d^n f)(g_1,...,g_{n+1}) = alpha_{g_1}(f(g_2,...,g_{n+1}) 1_{g_1^-1})
        * prod_{i=1..n} f(g_1,...,g_i g_{i+1},...,g_{n+1})^{(-1)^i}
        * f(g_1,...,g_n)^{(-1)^{n+1}},

and (d^0 t)(g) = alpha_g(t 1_{g^-1}) t^-1 for a unit t of S.  One-cocycles
are the f with f(gh) 1_g = f(g) alpha_g(f(h) 1_{g^-1}); one-coboundaries
are the d^0 t.

The coboundary membership test is exact over all units of S (orbit
propagation over the component graph).  Enumeration, by contrast, is
restricted to torsion-valued cochains, whose component values are powers
of the fixed root of unity: those are the cochains the Kummer machinery
consumes, and they reduce to a linear system over Z_n in the exponents.
Whether the full unit-valued H^1 is finite is not something this package
decides; only the torsion-valued part is ever enumerated.

All functions are pure; cochains are not mutated after construction.
"""

from __future__ import annotations

import itertools
from math import gcd

from .cyclotomic import CycNum
from .partial_action import PartialAction
from .split_algebra import AlgElem, is_unit


class NotACocycleError(Exception):
    """An operation required a 1-cocycle but the input is not one."""


class EnumerationLimitError(Exception):
    """The torsion cocycle solution set exceeds the configured bound."""


class Cochain:
    """A partial n-cochain: a map from G^n to unit values in sliding ideals."""

    __slots__ = ("action", "arity", "values")

    def __init__(self, action: PartialAction, arity: int, values):
        self.action = action
        self.arity = arity
        self.values = dict(values)
        expected = set(itertools.product(action.group.elements(), repeat=arity))
        if set(self.values) != expected:
            raise ValueError("cochain must assign a value to every tuple in G^n")

    def ideal_support(self, gs) -> frozenset:
        """Support of the ideal S 1_{g_1} 1_{g_1 g_2} ... for the tuple."""
        supp = frozenset(range(self.action.algebra.m))
        acc = self.action.group.identity
        for g in gs:
            acc = self.action.group.op(acc, g)
            supp &= self.action.domains[acc]
        return supp

    def is_valid(self) -> bool:
        """Every value is a unit of its ideal."""
        return all(is_unit(v, self.action.algebra.ideal(self.ideal_support(gs)))
                   for gs, v in self.values.items())

    @classmethod
    def identity(cls, action: PartialAction, arity: int) -> "Cochain":
        vals = {}
        for gs in itertools.product(action.group.elements(), repeat=arity):
            supp = frozenset(range(action.algebra.m))
            acc = action.group.identity
            for g in gs:
                acc = action.group.op(acc, g)
                supp &= action.domains[acc]
            vals[gs] = action.algebra.indicator(supp)
        return cls(action, arity, vals)

    @classmethod
    def unit(cls, action: PartialAction, t: AlgElem) -> "Cochain":
        """Wrap a unit of S as a 0-cochain."""
        if not t.is_unit():
            raise ValueError("a 0-cochain must be a unit of S")
        return cls(action, 0, {(): t})

    def __call__(self, *gs) -> AlgElem:
        return self.values[gs]

    def __mul__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        if other.action is not self.action and other.action != self.action:
            raise ValueError("cochains live over different actions")
        if other.arity != self.arity:
            raise ValueError("cochain arity mismatch")
        return Cochain(self.action, self.arity,
                       {gs: v * other.values[gs] for gs, v in self.values.items()})

    def inv(self) -> "Cochain":
        """Pointwise inverse within each value's ideal."""
        return Cochain(self.action, self.arity,
                       {gs: v.partial_inverse() for gs, v in self.values.items()})

    def __eq__(self, other):
        return (isinstance(other, Cochain) and other.arity == self.arity
                and other.action.algebra == self.action.algebra
                and other.values == self.values)

    def __hash__(self):
        return hash((self.arity, tuple(sorted((gs, v.comps) for gs, v in self.values.items()))))

    def __repr__(self):
        entries = ", ".join(f"{gs}: {v!r}" for gs, v in sorted(self.values.items()))
        return f"Cochain[{entries}]"


def coboundary(f: Cochain) -> Cochain:
    """The coboundary d^n f, one arity up."""
    action, G = f.action, f.action.group
    if f.arity == 0:
        t = f.values[()]
        tinv = t.partial_inverse()
        vals = {(g,): action.apply(g, t) * tinv for g in G.elements()}
        return Cochain(action, 1, vals)
    n = f.arity
    vals = {}
    for gs in itertools.product(G.elements(), repeat=n + 1):
        term = action.apply(gs[0], f.values[gs[1:]])
        for i in range(1, n + 1):
            merged = gs[:i - 1] + (G.op(gs[i - 1], gs[i]),) + gs[i + 1:]
            factor = f.values[merged]
            if i % 2 == 1:
                factor = factor.partial_inverse()
            term = term * factor
        last = f.values[gs[:n]]
        if (n + 1) % 2 == 1:
            last = last.partial_inverse()
        vals[gs] = term * last
    return Cochain(action, n + 1, vals)


def is_cocycle1(f: Cochain) -> bool:
    """The 1-cocycle identity f(gh) 1_g = f(g) alpha_g(f(h) 1_{g^-1}),
    plus the inverse-side identity it implies."""
    if f.arity != 1:
        return False
    action, G = f.action, f.action.group
    finv = f.inv()
    for g in G.elements():
        one_g = action.one_of(g)
        for h in G.elements():
            gh = G.op(g, h)
            if f.values[(gh,)] * one_g != f.values[(g,)] * action.apply(g, f.values[(h,)]):
                return False
            if finv.values[(gh,)] * one_g != action.apply(g, finv.values[(h,)]) * finv.values[(g,)]:
                return False
    return True


def is_coboundary1(f: Cochain):
    """A unit t with f = d^0 t, or None.

    Builds the component graph with an edge sigma_g^-1(c) -> c of weight
    f(g)_c for every g and c in support(S_g); the relation t_{sigma^-1(c)}
    = f(g)_c * t_c then propagates from one root per connected component,
    pinned to t = 1 there, and succeeds iff every cycle closes.
    """
    if not is_cocycle1(f):
        raise NotACocycleError("coboundary test requires a 1-cocycle")
    action = f.action
    m = action.algebra.m
    adj: dict[int, list[tuple[int, CycNum, bool]]] = {c: [] for c in range(m)}
    for g in action.group.elements():
        if g == action.group.identity:
            continue
        for c in action.domains[g]:
            src = action._sigma_inv[g][c]
            w = f.values[(g,)].comps[c]
            adj[src].append((c, w, True))    # t_src = w * t_c
            adj[c].append((src, w, False))   # t_c = t_src / w
    one = action.algebra.knum(1)
    t = [None] * m
    for root in range(m):
        if t[root] is not None:
            continue
        t[root] = one
        stack = [root]
        while stack:
            u = stack.pop()
            for v, w, forward in adj[u]:
                val = t[u] * w if not forward else t[u] * w.inverse()
                if t[v] is None:
                    t[v] = val
                    stack.append(v)
                elif t[v] != val:
                    return None
    witness = AlgElem(action.algebra, tuple(t))
    if coboundary(Cochain.unit(action, witness)) != f:
        return None
    return witness


def cohomologous(f: Cochain, f2: Cochain) -> bool:
    """Whether f and f2 differ by a 1-coboundary."""
    return is_coboundary1(f * f2.inv()) is not None


def torsion_exponents(f: Cochain, n: int):
    """Exponent matrix of a torsion-valued 1-cochain, as a canonical tuple.

    Entry order is (group element, component) ascending; None if some value
    is not a power of the root of unity on its support.
    """
    action = f.action
    powers = {CycNum.root_of_unity(n, k): k for k in range(n)}
    out = []
    for g in sorted(action.group.elements()):
        for c in sorted(action.domains[g]):
            k = powers.get(f.values[(g,)].comps[c])
            if k is None:
                return None
            out.append(k)
    return tuple(out)


def cochain_from_exponents(action: PartialAction, n: int, exps) -> Cochain:
    """Inverse of `torsion_exponents`."""
    it = iter(exps)
    vals = {}
    zero = action.algebra.knum(0)
    for g in sorted(action.group.elements()):
        comps = [zero] * action.algebra.m
        for c in sorted(action.domains[g]):
            comps[c] = CycNum.root_of_unity(n, next(it))
        vals[(g,)] = AlgElem(action.algebra, tuple(comps))
    return Cochain(action, 1, vals)


def _smith_diagonal(rows, ncols):
    """Diagonalise an integer matrix by unimodular row and column operations.

    Returns (diag, V) where diag holds the nonzero diagonal entries and V is
    the accumulated column transform, so that A x = 0 (mod n) iff x = V y
    with diag[i] * y_i = 0 (mod n) and the remaining y coordinates free.
    Only V is tracked; row operations do not affect the solution set.
    """
    A = [list(r) for r in rows]
    nrows = len(A)
    V = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    diag = []
    t = 0
    while t < nrows and t < ncols:
        pivot = next(((i, j) for j in range(t, ncols)
                      for i in range(t, nrows) if A[i][j]), None)
        if pivot is None:
            break
        i0, j0 = pivot
        A[t], A[i0] = A[i0], A[t]
        if j0 != t:
            for row in A:
                row[t], row[j0] = row[j0], row[t]
            for row in V:
                row[t], row[j0] = row[j0], row[t]
        while True:
            dirty = False
            for i in range(t + 1, nrows):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    if q:
                        for j in range(t, ncols):
                            A[i][j] -= q * A[t][j]
                    if A[i][t]:
                        # Euclid step: a smaller remainder becomes the pivot
                        A[t], A[i] = A[i], A[t]
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, ncols):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    if q:
                        for i in range(nrows):
                            A[i][j] -= q * A[i][t]
                        for i in range(ncols):
                            V[i][j] -= q * V[i][t]
                    if A[t][j]:
                        for row in A:
                            row[t], row[j] = row[j], row[t]
                        for row in V:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if not dirty:
                break
        diag.append(abs(A[t][t]))
        t += 1
    return diag, V


def enumerate_torsion_cocycles(action: PartialAction, n: int, max_count: int = 10 ** 6):
    """All 1-cocycles whose values are root-of-unity multiples of component
    idempotents, in canonical exponent order.

    The cocycle identity becomes the Z_n-linear system
    k[gh, c] - k[g, c] - k[h, sigma_g^-1(c)] = 0 over the exponents; the
    solution set is enumerated through the Smith form of the constraint
    matrix.  Raises EnumerationLimitError beyond `max_count` solutions.
    """
    G = action.group
    unknowns = [(g, c) for g in sorted(G.elements()) for c in sorted(action.domains[g])]
    index = {gc: i for i, gc in enumerate(unknowns)}
    N = len(unknowns)
    rows = []
    for g in G.elements():
        sig_inv = action._sigma_inv[g]
        for h in G.elements():
            gh = G.op(g, h)
            for c in action.domains[g] & action.domains[gh]:
                row = [0] * N
                row[index[(gh, c)]] += 1
                row[index[(g, c)]] -= 1
                row[index[(h, sig_inv[c])]] -= 1
                if any(row):
                    rows.append(row)
    diag, V = _smith_diagonal(rows, N)
    choice_sets = []
    for i in range(N):
        if i < len(diag) and diag[i] != 0:
            g_ = gcd(diag[i], n)
            choice_sets.append(range(0, n, n // g_))
        else:
            choice_sets.append(range(n))
    count = 1
    for cs in choice_sets:
        count *= len(cs)
        if count > max_count:
            raise EnumerationLimitError(
                f"torsion cocycle solution set exceeds {max_count}")
    out = []
    for y in itertools.product(*choice_sets):
        k = tuple(sum(V[i][j] * y[j] for j in range(N)) % n for i in range(N))
        out.append(k)
    out = sorted(set(out))
    return [cochain_from_exponents(action, n, k) for k in out]


def h1_torsion(action: PartialAction, n: int, max_count: int = 10 ** 6):
    """Lexicographically-least representatives of the torsion-valued
    cohomology classes inside the enumerated cocycle group."""
    cocycles = enumerate_torsion_cocycles(action, n, max_count)
    boundary = [f for f in cocycles if is_coboundary1(f) is not None]
    seen = set()
    reps = []
    for f in cocycles:
        key = torsion_exponents(f, n)
        if key in seen:
            continue
        reps.append(f)
        for b in boundary:
            seen.add(torsion_exponents(f * b, n))
    return reps
