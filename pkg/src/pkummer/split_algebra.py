"""The split algebra S = K^m over K = Q(zeta_n) and its exact linear algebra.

Components are indexed 0..m-1.  `AlgElem` is a vector of `CycNum` values
with componentwise ring operations; `IdempotentIdeal` is the span of a set
of component idempotents; `Subspace` is a K-subspace of S held in reduced
row echelon form so that equality of subspaces is structural.

Subspaces double as R-submodules throughout the package: the invariant
ring R of a partial action, the modules Q_f attached to one-dimensional
cocycles, and arbitrary submodules all live here.  Products of submodules
(`module_product`) and ranks over a unital subalgebra (`rank_over`) follow
the usual finite-sums-of-products conventions.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .cyclotomic import CycNum


class SplitAlgebra:
    """S = K^m with K = Q(zeta_n); m >= 1 components, Kummer order n >= 2."""

    __slots__ = ("n", "m")

    def __init__(self, n: int, m: int):
        if m < 1:
            raise ValueError("a split algebra needs at least one component")
        if n < 2:
            raise ValueError("the Kummer order n must be at least 2")
        self.n = n
        self.m = m

    def __eq__(self, other):
        return isinstance(other, SplitAlgebra) and (self.n, self.m) == (other.n, other.m)

    def __hash__(self):
        return hash((self.n, self.m))

    def __repr__(self):
        return f"SplitAlgebra(n={self.n}, m={self.m})"

    # -- element constructors ------------------------------------------------

    def knum(self, value) -> CycNum:
        if isinstance(value, CycNum):
            if value.n != self.n:
                raise ValueError("cyclotomic order mismatch")
            return value
        return CycNum.rational(self.n, value)

    def element(self, comps) -> "AlgElem":
        comps = tuple(self.knum(c) for c in comps)
        if len(comps) != self.m:
            raise ValueError(f"expected {self.m} components, got {len(comps)}")
        return AlgElem(self, comps)

    def zero(self) -> "AlgElem":
        return self.element([0] * self.m)

    def one(self) -> "AlgElem":
        return self.element([1] * self.m)

    def scalar(self, value) -> "AlgElem":
        v = self.knum(value)
        return AlgElem(self, (v,) * self.m)

    def idempotent(self, c: int) -> "AlgElem":
        if not 0 <= c < self.m:
            raise ValueError("component index out of range")
        return self.element([1 if i == c else 0 for i in range(self.m)])

    def idempotents(self) -> list["AlgElem"]:
        return [self.idempotent(c) for c in range(self.m)]

    def omega(self, k: int = 1) -> CycNum:
        return CycNum.root_of_unity(self.n, k)

    def indicator(self, support) -> "AlgElem":
        support = set(support)
        return self.element([1 if i in support else 0 for i in range(self.m)])

    def ideal(self, support) -> "IdempotentIdeal":
        return IdempotentIdeal(self, support)


class AlgElem:
    """A vector in S = K^m; all operations are componentwise and pure."""

    __slots__ = ("parent", "comps")

    def __init__(self, parent: SplitAlgebra, comps: tuple):
        self.parent = parent
        self.comps = comps

    def _check(self, other):
        if not isinstance(other, AlgElem):
            return None
        if other.parent != self.parent:
            raise ValueError("elements belong to different split algebras")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return AlgElem(self.parent, tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return AlgElem(self.parent, tuple(a - b for a, b in zip(self.comps, other.comps)))

    def __neg__(self):
        return AlgElem(self.parent, tuple(-a for a in self.comps))

    def __mul__(self, other):
        if isinstance(other, AlgElem):
            self._check(other)
            return AlgElem(self.parent,
                           tuple(a * b if a and b else self.parent.knum(0)
                                 for a, b in zip(self.comps, other.comps)))
        if isinstance(other, (int, Fraction, CycNum)):
            s = self.parent.knum(other)
            return AlgElem(self.parent, tuple(a * s for a in self.comps))
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, AlgElem) and other.parent == self.parent
                and other.comps == self.comps)

    def __hash__(self):
        return hash((self.parent, self.comps))

    def is_zero(self) -> bool:
        return all(not c for c in self.comps)

    def __bool__(self):
        return not self.is_zero()

    def support(self) -> frozenset:
        return frozenset(i for i, c in enumerate(self.comps) if c)

    def restrict(self, support) -> "AlgElem":
        """self * 1_E for the idempotent with the given support."""
        support = set(support)
        return AlgElem(self.parent,
                       tuple(c if i in support else self.parent.knum(0)
                             for i, c in enumerate(self.comps)))

    def partial_inverse(self) -> "AlgElem":
        """Inverse within the ideal carried by this element's support.

        Componentwise inverse on the support, zero elsewhere; for a unit of
        an idempotent ideal this is its inverse there.
        """
        return AlgElem(self.parent,
                       tuple(c.inverse() if c else c for c in self.comps))

    def is_unit(self) -> bool:
        """Unit of the whole algebra: every component nonzero."""
        return all(c for c in self.comps)

    def serialize(self) -> list[list[str]]:
        return [c.serialize() for c in self.comps]

    def __repr__(self):
        return "(" + ", ".join(repr(c) for c in self.comps) + ")"


class IdempotentIdeal:
    """The unital ideal spanned by the component idempotents in `support`."""

    __slots__ = ("parent", "support")

    def __init__(self, parent: SplitAlgebra, support):
        support = frozenset(support)
        if any(not 0 <= c < parent.m for c in support):
            raise ValueError("ideal support out of range")
        self.parent = parent
        self.support = support

    def identity(self) -> AlgElem:
        return self.parent.indicator(self.support)

    def contains(self, a: AlgElem) -> bool:
        return a.support() <= self.support

    def __eq__(self, other):
        return (isinstance(other, IdempotentIdeal) and other.parent == self.parent
                and other.support == self.support)

    def __hash__(self):
        return hash((self.parent, self.support))

    def __repr__(self):
        return f"IdempotentIdeal({sorted(self.support)})"


def is_unit(a: AlgElem, ideal: IdempotentIdeal) -> bool:
    """True iff a is a unit of the ideal: supported exactly on it, no zeros there.

    The unit group of the zero ideal is {0}, so the zero element counts as
    a unit there; this matches the convention for cochain values on group
    elements whose domain ideal vanishes.
    """
    return a.support() == ideal.support


class Subspace:
    """A K-subspace of S in canonical reduced row echelon form.

    The basis rows are pivot-normalised and sorted by pivot column, so two
    subspaces are equal iff their row tuples are equal.
    """

    __slots__ = ("parent", "rows")

    def __init__(self, parent: SplitAlgebra, rows: tuple):
        self.parent = parent
        self.rows = rows

    @classmethod
    def span(cls, parent: SplitAlgebra, vectors) -> "Subspace":
        mat = [list(v.comps) for v in vectors if not v.is_zero()]
        red, _ = linalg.rref(mat)
        return cls(parent, tuple(AlgElem(parent, tuple(r)) for r in red))

    @classmethod
    def zero(cls, parent: SplitAlgebra) -> "Subspace":
        return cls(parent, ())

    @classmethod
    def full(cls, parent: SplitAlgebra) -> "Subspace":
        return cls.span(parent, parent.idempotents())

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis(self) -> list[AlgElem]:
        return list(self.rows)

    def contains(self, v: AlgElem) -> bool:
        if v.parent != self.parent:
            raise ValueError("parent algebra mismatch")
        if v.is_zero():
            return True
        mat = [list(r.comps) for r in self.rows]
        return linalg.rank(mat + [list(v.comps)]) == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def sum_with(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.parent, list(self.rows) + list(other.rows))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus-style intersection via the kernel of [X^T | -Y^T]."""
        self._check(other)
        p, q = self.dim, other.dim
        if p == 0 or q == 0:
            return Subspace.zero(self.parent)
        m = self.parent.m
        zero = self.parent.knum(0)
        one = self.parent.knum(1)
        mat = []
        for c in range(m):
            mat.append([self.rows[i].comps[c] for i in range(p)]
                       + [-other.rows[j].comps[c] for j in range(q)])
        kernel = linalg.nullspace(mat, p + q, zero, one)
        vecs = []
        for k in kernel:
            comps = [zero] * m
            for i in range(p):
                if k[i]:
                    comps = [a + k[i] * b for a, b in zip(comps, self.rows[i].comps)]
            vecs.append(AlgElem(self.parent, tuple(comps)))
        return Subspace.span(self.parent, vecs)

    def _check(self, other):
        if not isinstance(other, Subspace) or other.parent != self.parent:
            raise ValueError("subspaces belong to different algebras")

    def __eq__(self, other):
        return (isinstance(other, Subspace) and other.parent == self.parent
                and other.rows == self.rows)

    def __hash__(self):
        return hash((self.parent, self.rows))

    def project_to_support(self, support) -> "Subspace":
        """The subspace self * e_B for the idempotent of the given support."""
        return Subspace.span(self.parent, [r.restrict(support) for r in self.rows])

    def serialize(self) -> list[list[list[str]]]:
        return [r.serialize() for r in self.rows]

    def __repr__(self):
        return "Subspace[" + "; ".join(repr(r) for r in self.rows) + "]"


def module_product(x: Subspace, y: Subspace) -> Subspace:
    """The span of all pairwise products of elements of X and Y."""
    x._check(y)
    return Subspace.span(x.parent, [a * b for a in x.rows for b in y.rows])


def is_unital_subalgebra(r: Subspace) -> bool:
    """True iff R contains 1 and is closed under products."""
    if not r.contains(r.parent.one()):
        return False
    return all(r.contains(a * b) for a in r.rows for b in r.rows)


def blocks_of(r: Subspace) -> list[tuple[int, ...]]:
    """Partition of the components into the blocks of R.

    Two components belong to the same block iff some echelon basis element
    of R is nonzero on both (transitive closure); for a unital subalgebra
    this recovers the supports of its primitive idempotents.
    """
    m = r.parent.m
    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for row in r.rows:
        supp = sorted(row.support())
        for a, b in zip(supp, supp[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra
    groups: dict[int, list[int]] = {}
    covered = set()
    for row in r.rows:
        covered |= row.support()
    for c in sorted(covered):
        groups.setdefault(find(c), []).append(c)
    return [tuple(g) for _, g in sorted(groups.items())]


def rank_over(q: Subspace, r: Subspace) -> dict[tuple[int, ...], int]:
    """Rank of the R-module Q on each block of the unital subalgebra R.

    Returns {block: dim_K(Q e_B) / dim_K(R e_B)} and raises if R is not a
    unital subalgebra or some quotient fails to be an integer.
    """
    q._check(r)
    if not is_unital_subalgebra(r):
        raise ValueError("rank_over needs a unital subalgebra as base")
    ranks = {}
    for block in blocks_of(r):
        dq = q.project_to_support(block).dim
        dr = r.project_to_support(block).dim
        quot, rem = divmod(dq, dr)
        if rem:
            raise ValueError(f"non-integral rank {dq}/{dr} on block {block}")
        ranks[block] = quot
    return ranks
