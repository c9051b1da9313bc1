"""Invertible modules attached to one-cocycles and the Kummer decomposition.

Given a partial Galois extension S over R = S^alpha with a trace-one
element w and coordinates (x_i, y_i), every 1-cocycle f gets two
R-endomorphisms of S,

    f_hat(x)   = sum_g f^-1(g) alpha_g(w x 1_{g^-1}),
    f_tilde(x) = sum_g f^-1(g) alpha_g(x 1_{g^-1}),

whose common image is the invertible R-module

    Q_f = {a in S : alpha_g(a 1_{g^-1}) = f(g) a for all g}.

`q_module` computes Q_f from the eigen-characterisation by an exact linear
solve; `verify_projector` recomputes it as the image of f_hat and f_tilde,
so every module is produced by two independent routes.  The remaining
verifiers exercise the module laws (products, spanning, the coordinate
identity, faithfulness, inversion, freeness versus coboundaries) and the
dimension-level shadows of the Picard statements: for a split base ring
the Picard group is trivial, so rank-1 freeness and the coboundary test
carry all the content of the class-group homomorphism.

Characters enter through their partialisation chi_p(g) = chi(g) 1_g;
summing the modules Q_{chi_p} over all characters recovers S, and the
package records for which exponent subsets the sum is direct.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from . import linalg
from .cohomology import Cochain, NotACocycleError, is_cocycle1, is_coboundary1, cohomologous
from .cyclotomic import CycNum
from .partial_action import PartialAction
from .split_algebra import (AlgElem, Subspace, blocks_of, is_unital_subalgebra,
                            module_product, rank_over)


class NotKummerianError(Exception):
    """The invariant ring fails the root-of-unity unit conditions."""


class SumNotSError(Exception):
    """The character modules do not span S; the input is not partial Galois
    Kummer data."""


class Character:
    """A character of a cyclic group with values in the chosen root group.

    `exps[g]` is the exponent k with chi(g) = omega^k for omega = zeta_n.
    """

    __slots__ = ("group", "n", "exps")

    def __init__(self, group, n: int, exps):
        self.group = group
        self.n = n
        self.exps = dict(exps)

    @classmethod
    def from_generator_exponent(cls, group, n: int, j: int) -> "Character":
        if not group.is_cyclic():
            raise ValueError("characters are provided for cyclic groups only")
        k = group.order
        if (j * k) % n:
            raise ValueError("generator exponent must have order dividing |G|")
        exps = {g: (j * (g[0] if g else 0)) % n for g in group.elements()}
        return cls(group, n, exps)

    def value(self, g) -> CycNum:
        return CycNum.root_of_unity(self.n, self.exps[g])

    def __mul__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return Character(self.group, self.n,
                         {g: (e + other.exps[g]) % self.n for g, e in self.exps.items()})

    def __pow__(self, k: int):
        return Character(self.group, self.n, {g: (e * k) % self.n for g, e in self.exps.items()})

    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.exps.values())

    def is_multiplicative(self) -> bool:
        G = self.group
        return all((self.exps[G.op(a, b)] - self.exps[a] - self.exps[b]) % self.n == 0
                   for a in G.elements() for b in G.elements())

    def __eq__(self, other):
        return (isinstance(other, Character) and other.group == self.group
                and other.n == self.n and other.exps == self.exps)

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.exps.items()))))

    def __repr__(self):
        gen = self.group.generator() if self.group.is_cyclic() else None
        if gen is not None and self.group.order > 1:
            return f"chi[g -> w^{self.exps[gen]}]"
        return "chi[trivial]"


def characters(group, n: int) -> list["Character"]:
    """All homomorphisms from a cyclic group into <omega>, omega = zeta_n.

    For |G| = n this is the full dual group, of order n, generated by
    g -> omega.
    """
    if not group.is_cyclic():
        raise ValueError("characters are provided for cyclic groups only")
    k = group.order
    if k == 1:
        return [Character(group, n, {(): 0} if not group.factors else {(0,): 0})]
    step = n // gcd(n, k)
    return [Character.from_generator_exponent(group, n, j)
            for j in range(0, n, step)]


def char_p(chi: Character, action: PartialAction) -> Cochain:
    """The partialisation g -> chi(g) 1_g as a 1-cochain."""
    vals = {}
    for g in action.group.elements():
        vals[(g,)] = chi.value(g) * action.one_of(g)
    return Cochain(action, 1, vals)


def ker_mu_p(action: PartialAction, chars=None) -> list[Character]:
    """Characters whose partialisation is the identity cochain:
    chi(g) = 1 whenever 1_g != 0."""
    if chars is None:
        chars = characters(action.group, action.algebra.n)
    return [chi for chi in chars
            if all(chi.exps[g] == 0 for g in action.group.elements() if action.domains[g])]


def character_sum_check(group, n: int) -> bool:
    """sum over all characters of chi(g) vanishes exactly for g != e,
    and equals |G| at the identity."""
    chars = characters(group, n)
    zero = CycNum.zero(n)
    order = CycNum.rational(n, group.order)
    for g in group.elements():
        total = sum((chi.value(g) for chi in chars), zero)
        if g == group.identity:
            if total != order:
                return False
        elif total != zero:
            return False
    return True


def is_kummerian(r: Subspace, omega: CycNum, n: int) -> bool:
    """Whether R contains omega diagonally with omega^n = 1 and every
    1 - omega^i (1 <= i < n) a unit of R."""
    algebra = r.parent
    if not is_unital_subalgebra(r):
        return False
    if not r.contains(algebra.scalar(omega)):
        return False
    if (omega ** n) != CycNum.one(omega.n):
        return False
    one = CycNum.one(omega.n)
    for i in range(1, n):
        if not (one - omega ** i):
            return False
    return True


@dataclass(frozen=True)
class KummerData:
    """A partial Galois extension bundled with its Kummer ingredients."""

    action: PartialAction
    omega: CycNum
    invariant_ring: Subspace
    trace_one: AlgElem
    coordinates: tuple

    @classmethod
    def build(cls, action: PartialAction) -> "KummerData":
        algebra = action.algebra
        omega = algebra.omega()
        r = action.invariants()
        if not is_kummerian(r, omega, algebra.n):
            raise NotKummerianError("invariant ring is not n-kummerian")
        w = action.find_trace_one()
        xs, ys = action.find_galois_coordinates()
        return cls(action, omega, r, w, (tuple(xs), tuple(ys)))

    @property
    def algebra(self):
        return self.action.algebra


@dataclass(frozen=True)
class QModule:
    """The invertible module of a 1-cocycle, with its defining cocycle."""

    cocycle: Cochain
    space: Subspace


def _require_cocycle(f: Cochain):
    if not is_cocycle1(f):
        raise NotACocycleError("a 1-cocycle is required")


def f_hat(kd: KummerData, f: Cochain, x: AlgElem) -> AlgElem:
    """Trace-weighted projector onto Q_f evaluated at x."""
    finv = f.inv()
    out = kd.algebra.zero()
    for g in kd.action.group.elements():
        out = out + finv.values[(g,)] * kd.action.apply(g, kd.trace_one * x)
    return out


def f_tilde(kd: KummerData, f: Cochain, x: AlgElem) -> AlgElem:
    """Unweighted companion of f_hat with the same image."""
    finv = f.inv()
    out = kd.algebra.zero()
    for g in kd.action.group.elements():
        out = out + finv.values[(g,)] * kd.action.apply(g, x)
    return out


def q_module(kd: KummerData, f: Cochain) -> QModule:
    """Q_f = {a : alpha_g(a 1_{g^-1}) = f(g) a for all g} by exact solve."""
    _require_cocycle(f)
    action, algebra = kd.action, kd.algebra
    m = algebra.m
    zero, one = algebra.knum(0), algebra.knum(1)
    rows = []
    for g in action.group.elements():
        if g == action.group.identity:
            continue
        fg = f.values[(g,)]
        for c in action.domains[g]:
            src = action._sigma_inv[g][c]
            row = [zero] * m
            row[src] = row[src] + one
            row[c] = row[c] - fg.comps[c]
            if any(row):
                rows.append(row)
    basis = linalg.nullspace(rows, m, zero, one)
    space = Subspace.span(algebra, [AlgElem(algebra, tuple(v)) for v in basis])
    return QModule(f, space)


def image_of_f_hat(kd: KummerData, f: Cochain) -> Subspace:
    return Subspace.span(kd.algebra, [f_hat(kd, f, e) for e in kd.algebra.idempotents()])


def image_of_f_tilde(kd: KummerData, f: Cochain) -> Subspace:
    return Subspace.span(kd.algebra, [f_tilde(kd, f, e) for e in kd.algebra.idempotents()])


def verify_projector(kd: KummerData, f: Cochain) -> bool:
    """f_hat is idempotent and its image agrees with f_tilde's image and
    with the eigen-space characterisation."""
    _require_cocycle(f)
    for e in kd.algebra.idempotents():
        once = f_hat(kd, f, e)
        if f_hat(kd, f, once) != once:
            return False
    eigen = q_module(kd, f).space
    return image_of_f_hat(kd, f) == eigen and image_of_f_tilde(kd, f) == eigen


@dataclass(frozen=True)
class QLawsReport:
    """One boolean per module law; `all_hold` for the conjunction."""

    product_law: bool          # Q_f Q_f' = Q_{ff'}
    spans_s: bool              # Q_f S = S
    coordinate_identity: bool  # sum_i f_hat(x_i) f'~^-1(y_i) = 1
    faithful: bool             # ann_R(Q_f) = 0
    inverse_law: bool          # Q_f Q_{f^-1} = R
    freeness: bool             # coboundary witness t gives Q_f = R t, and
                               # cohomologous pairs differ by a unit factor

    @property
    def all_hold(self) -> bool:
        return (self.product_law and self.spans_s and self.coordinate_identity
                and self.faithful and self.inverse_law and self.freeness)


def verify_q_laws(kd: KummerData, f: Cochain, f2: Cochain) -> QLawsReport:
    """Check the Q-module laws for the pair (f, f2)."""
    _require_cocycle(f)
    _require_cocycle(f2)
    algebra, r = kd.algebra, kd.invariant_ring
    qf = q_module(kd, f).space
    qf2 = q_module(kd, f2).space
    qprod = q_module(kd, f * f2).space
    product_law = module_product(qf, qf2) == qprod

    full = Subspace.full(algebra)
    spans_s = module_product(qf, full) == full

    xs, ys = kd.coordinates
    total = algebra.zero()
    finv = f.inv()
    for x, y in zip(xs, ys):
        total = total + f_hat(kd, f, x) * f_tilde(kd, finv, y)
    coordinate_identity = total == algebra.one()

    # annihilator of Q_f inside R: coefficients c with (sum c_i b_i) q = 0
    zero, one = algebra.knum(0), algebra.knum(1)
    rows = []
    for q in qf.rows:
        for comp in range(algebra.m):
            rows.append([b.comps[comp] * q.comps[comp] for b in r.rows])
    ann = linalg.nullspace(rows, r.dim, zero, one)
    faithful = not ann

    inverse_law = module_product(qf, q_module(kd, f.inv()).space) == r

    freeness = True
    t = is_coboundary1(f)
    if t is not None:
        freeness = module_product(r, Subspace.span(algebra, [t])) == qf
    u = is_coboundary1(f * f2.inv())
    if u is not None:
        if module_product(qf2, Subspace.span(algebra, [u])) != qf:
            freeness = False

    return QLawsReport(product_law, spans_s, coordinate_identity,
                       faithful, inverse_law, freeness)


def unit_generator(q: Subspace, r: Subspace):
    """A unit t of S with Q = R t, or None.

    Splits Q along the blocks of R; Q is free on a unit iff each block
    carries a single basis vector fully supported there.
    """
    algebra = q.parent
    blocks = blocks_of(r)
    pieces = []
    for block in blocks:
        proj = q.project_to_support(block)
        if proj.dim != r.project_to_support(block).dim:
            return None
        if proj.dim != 1 or proj.rows[0].support() != frozenset(block):
            return None
        pieces.append(proj.rows[0])
    t = algebra.zero()
    for p in pieces:
        t = t + p
    if not t.is_unit():
        return None
    if module_product(r, Subspace.span(algebra, [t])) != q:
        return None
    return t


def verify_pic_hom(kd: KummerData, cocycles, rng=None) -> bool:
    """Dimension-level shadows of the class-group statements.

    For each cocycle: rank 1 over every block of R; multiplication by Q_f
    preserves blockwise dimensions of random R-submodules; and Q_f is free
    on a unit generator exactly when f is a coboundary.
    """
    algebra, r = kd.algebra, kd.invariant_ring
    for f in cocycles:
        qf = q_module(kd, f).space
        if any(v != 1 for v in rank_over(qf, r).values()):
            return False
        submodules = [r, Subspace.full(algebra)]
        if rng is not None:
            vecs = [algebra.element([rng.randint(-2, 2) for _ in range(algebra.m)])
                    for _ in range(2)]
            submodules.append(module_product(r, Subspace.span(algebra, vecs)))
        for msub in submodules:
            prod = module_product(qf, msub)
            for block in blocks_of(r):
                if prod.project_to_support(block).dim != msub.project_to_support(block).dim:
                    return False
        free = unit_generator(qf, r) is not None
        bound = is_coboundary1(f) is not None
        if free != bound:
            return False
    return True


@dataclass(frozen=True)
class Decomposition:
    """S as the sum of character modules, with directness bookkeeping."""

    characters: tuple
    modules: tuple            # QModule per character, same order
    spans: bool               # sum of all modules equals S
    full_sum_direct: bool     # dimension count matches dim S
    is_global: bool


def decompose(kd: KummerData) -> Decomposition:
    """Q_{chi_p} for every character chi; raises SumNotSError when the
    modules fail to span S."""
    group, algebra = kd.action.group, kd.algebra
    if not group.is_cyclic() or group.order != algebra.n:
        raise ValueError("decomposition needs a cyclic group of order n")
    chars = characters(group, algebra.n)
    modules = tuple(q_module(kd, char_p(chi, kd.action)) for chi in chars)
    total = Subspace.zero(algebra)
    dims = 0
    for qm in modules:
        total = total.sum_with(qm.space)
        dims += qm.space.dim
    spans = total == Subspace.full(algebra)
    if not spans:
        raise SumNotSError("character modules do not span S")
    direct = dims == algebra.m
    return Decomposition(tuple(chars), modules, spans, direct, kd.action.is_global())


def find_direct_subsets(kd: KummerData, decomposition: Decomposition | None = None,
                        max_order: int = 12):
    """All exponent subsets X with S the direct sum of Q_{chi_p^i}, i in X.

    Returns a sorted list of (subset, saturated) pairs where `saturated`
    records whether the subset is a subgroup of C_n.  Exhaustive subset
    search, guarded to groups of order at most `max_order`.
    """
    from .radical import is_saturated

    if decomposition is None:
        decomposition = decompose(kd)
    n = kd.algebra.n
    if n > max_order:
        raise ValueError(f"subset search is guarded to n <= {max_order}")
    m = kd.algebra.m
    out = []
    spaces = [qm.space for qm in decomposition.modules]
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            if sum(spaces[i].dim for i in subset) != m:
                continue
            total = Subspace.zero(kd.algebra)
            for i in subset:
                total = total.sum_with(spaces[i])
            if total.dim == m:
                out.append((subset, is_saturated(set(subset), n)))
    return sorted(out)
