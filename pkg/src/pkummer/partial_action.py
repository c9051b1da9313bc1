"""Partial actions of finite abelian groups on split algebras.

A partial action here is a family of partial bijections of the component
set: for every group element g there is a domain ideal S_{g^-1}, an image
ideal S_g, and a bijection sigma_g between their supports realising
alpha_g(e_c) = e_{sigma_g(c)}.  The axioms are

  (i)   S_1 = S and alpha_1 = id,
  (ii)  alpha_g(S_{g^-1} * S_h) = S_g * S_{gh},
  (iii) alpha_g(alpha_h(x)) = alpha_{gh}(x) on S_{h^-1} * S_{(gh)^-1},

all expressible on supports because the maps permute components.  Field
coefficients are never twisted: every map is K-linear.  Since the root of
unity sits diagonally inside the invariant ring and K is generated by it,
this loses no generality for the Kummer-theoretic constructions served by
this package.

The module also provides the trace map, trace-one elements, partial Galois
coordinates, globality and extension-by-zero tests, restriction to
subgroups, and the induced-action construction used as the instance
generator for the property suites.
"""

from __future__ import annotations

import itertools

from . import linalg
from .split_algebra import AlgElem, IdempotentIdeal, SplitAlgebra, Subspace


class NoTraceOneError(Exception):
    """The linear system trace(w) = 1 has no solution."""


class NotGaloisError(Exception):
    """No partial Galois coordinate system exists for this action."""


class FinAbGroup:
    """Finite abelian group in invariant-factor form d1 | d2 | ... .

    Elements are integer tuples, one coordinate per factor, with
    componentwise addition modulo the factors.  The trivial group is
    FinAbGroup(()) with the single element ().
    """

    __slots__ = ("factors",)

    def __init__(self, factors):
        factors = tuple(int(d) for d in factors if int(d) != 1)
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValueError("invariant factors must divide each other")
        if any(d < 1 for d in factors):
            raise ValueError("invariant factors must be positive")
        self.factors = factors

    @classmethod
    def cyclic(cls, k: int) -> "FinAbGroup":
        return cls((k,)) if k > 1 else cls(())

    @property
    def order(self) -> int:
        out = 1
        for d in self.factors:
            out *= d
        return out

    @property
    def identity(self) -> tuple:
        return (0,) * len(self.factors)

    def elements(self) -> list[tuple]:
        return list(itertools.product(*[range(d) for d in self.factors]))

    def op(self, a: tuple, b: tuple) -> tuple:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.factors))

    def inverse(self, a: tuple) -> tuple:
        return tuple((-x) % d for x, d in zip(a, self.factors))

    def power(self, a: tuple, k: int) -> tuple:
        return tuple((x * k) % d for x, d in zip(a, self.factors))

    def element_order(self, a: tuple) -> int:
        k, cur = 1, a
        while cur != self.identity:
            cur = self.op(cur, a)
            k += 1
        return k

    def cyclic_subgroup(self, gen: tuple) -> list[tuple]:
        out, cur = [self.identity], gen
        while cur != self.identity:
            out.append(cur)
            cur = self.op(cur, gen)
        return out

    def is_cyclic(self) -> bool:
        return len(self.factors) <= 1

    def generator(self) -> tuple:
        if not self.is_cyclic():
            raise ValueError("group is not cyclic")
        return (1,) if self.factors else ()

    def __eq__(self, other):
        return isinstance(other, FinAbGroup) and other.factors == self.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        if not self.factors:
            return "C1"
        return " x ".join(f"C{d}" for d in self.factors)


class PartialAction:
    """A unital partial action by partial component bijections.

    `domains[g]` is the support of the ideal S_g and `sigmas[g]` maps
    support(S_{g^-1}) bijectively onto support(S_g).  Instances are
    immutable once built; call `validate()` to check the axioms.
    """

    def __init__(self, algebra: SplitAlgebra, group: FinAbGroup, domains, sigmas):
        self.algebra = algebra
        self.group = group
        e = group.identity
        full = frozenset(range(algebra.m))
        doms = {g: frozenset(domains.get(g, ())) for g in group.elements()}
        sigs = {g: dict(sigmas.get(g, {})) for g in group.elements()}
        doms[e] = full
        sigs[e] = {c: c for c in range(algebra.m)}
        self.domains = doms
        self.sigmas = sigs
        self._sigma_inv = {g: {v: k for k, v in s.items()} for g, s in sigs.items()}

    # -- structure ----------------------------------------------------------

    def one_of(self, g) -> AlgElem:
        """The identity element 1_g of the ideal S_g."""
        return self.algebra.indicator(self.domains[g])

    def ideal(self, g) -> IdempotentIdeal:
        return self.algebra.ideal(self.domains[g])

    def validate(self):
        """None if axioms (i)-(iii) hold, else a message naming the witness."""
        G, inv = self.group, self.group.inverse
        e = G.identity
        full = frozenset(range(self.algebra.m))
        if self.domains[e] != full or self.sigmas[e] != {c: c for c in full}:
            return "axiom (i): identity element must act as the identity on all of S"
        for g in G.elements():
            dom, img = self.domains[inv(g)], self.domains[g]
            sig = self.sigmas[g]
            if set(sig.keys()) != set(dom) or set(sig.values()) != set(img) or len(set(sig.values())) != len(sig):
                return f"structure: sigma_{g} is not a bijection support(S_{inv(g)}) -> support(S_{g})"
        for g in G.elements():
            sig_g = self.sigmas[g]
            for h in G.elements():
                gh = G.op(g, h)
                lhs = {sig_g[c] for c in self.domains[inv(g)] & self.domains[h]}
                rhs = self.domains[g] & self.domains[gh]
                if lhs != rhs:
                    return f"axiom (ii) fails at (g, h) = ({g}, {h})"
                overlap = self.domains[inv(h)] & self.domains[inv(gh)]
                for c in overlap:
                    if sig_g.get(self.sigmas[h][c]) != self.sigmas[gh][c]:
                        return f"axiom (iii) fails at (g, h, c) = ({g}, {h}, {c})"
        return None

    # -- the action ---------------------------------------------------------

    def apply(self, g, x: AlgElem) -> AlgElem:
        """alpha_g(x * 1_{g^-1}) as a total map on S."""
        zero = self.algebra.knum(0)
        comps = [zero] * self.algebra.m
        for c, target in self.sigmas[g].items():
            comps[target] = x.comps[c]
        return AlgElem(self.algebra, tuple(comps))

    def invariants(self) -> Subspace:
        """The ring of subinvariants {x : alpha_g(x 1_{g^-1}) = x 1_g for all g}."""
        m = self.algebra.m
        zero, one = self.algebra.knum(0), self.algebra.knum(1)
        rows = []
        for g in self.group.elements():
            for c, target in self.sigmas[g].items():
                if c == target:
                    continue
                row = [zero] * m
                row[c] = one
                row[target] = row[target] - one
                rows.append(row)
        basis = linalg.nullspace(rows, m, zero, one)
        return Subspace.span(self.algebra, [AlgElem(self.algebra, tuple(v)) for v in basis])

    def trace(self, s: AlgElem) -> AlgElem:
        """tr(s) = sum over g of alpha_g(s 1_{g^-1})."""
        out = self.algebra.zero()
        for g in self.group.elements():
            out = out + self.apply(g, s)
        return out

    def find_trace_one(self) -> AlgElem:
        """A solution of trace(w) = 1, canonical via the echelonised system."""
        m = self.algebra.m
        zero, one = self.algebra.knum(0), self.algebra.knum(1)
        rows = [[zero] * m for _ in range(m)]
        for g in self.group.elements():
            for c, target in self.sigmas[g].items():
                rows[target][c] = rows[target][c] + one
        sol = linalg.solve(rows, [one] * m, m, zero)
        if sol is None:
            raise NoTraceOneError("the system trace(w) = 1 is inconsistent")
        return AlgElem(self.algebra, tuple(sol))

    # -- Galois coordinates ---------------------------------------------------

    def find_galois_coordinates(self):
        """Partial Galois coordinates (xs, ys) or NotGaloisError.

        With x_c the component idempotents, the defining system decouples:
        y_c must have c-th component 1 and component sigma_g^-1(c) equal to
        0 for every g != 1 with c in S_g.  Because the action is K-linear,
        any coordinate system can be folded into one of this shape (replace
        y by sums weighted with the components of x), so insolvability here
        means no coordinate system exists at all.
        """
        e = self.group.identity
        m = self.algebra.m
        xs, ys = [], []
        for c in range(m):
            forced_zero = set()
            for g in self.group.elements():
                if g == e or c not in self.domains[g]:
                    continue
                src = self._sigma_inv[g][c]
                if src == c:
                    raise NotGaloisError(
                        f"component {c} is fixed by sigma_{g}; delta-system unsolvable")
                forced_zero.add(src)
            xs.append(self.algebra.idempotent(c))
            ys.append(self.algebra.element(
                [1 if i == c else 0 for i in range(m)]).restrict(
                    set(range(m)) - forced_zero))
        return xs, ys

    def verify_coordinates(self, xs, ys) -> bool:
        """Check both equivalent coordinate identities.

        sum_i x_i alpha_g(y_i 1_{g^-1}) = delta_{1,g} 1   and
        sum_i alpha_g(x_i 1_{g^-1}) alpha_h(y_i 1_{h^-1}) = delta_{g,h} 1_g.
        """
        e = self.group.identity
        one, zero = self.algebra.one(), self.algebra.zero()
        for g in self.group.elements():
            total = self.algebra.zero()
            for x, y in zip(xs, ys):
                total = total + x * self.apply(g, y)
            if total != (one if g == e else zero):
                return False
        for g in self.group.elements():
            for h in self.group.elements():
                total = self.algebra.zero()
                for x, y in zip(xs, ys):
                    total = total + self.apply(g, x) * self.apply(h, y)
                expected = self.one_of(g) if g == h else zero
                if total != expected:
                    return False
        return True

    # -- shape tests ----------------------------------------------------------

    def is_global(self) -> bool:
        full = frozenset(range(self.algebra.m))
        return all(d == full for d in self.domains.values())

    def is_extension_by_zero(self):
        """The subgroup H = {g : S_g != 0} if the action extends a global
        H-action by zero; None otherwise."""
        full = frozenset(range(self.algebra.m))
        support = {g for g, d in self.domains.items() if d}
        for a in support:
            if self.group.inverse(a) not in support:
                return None
            for b in support:
                if self.group.op(a, b) not in support:
                    return None
        if any(self.domains[h] != full for h in support):
            return None
        return frozenset(support)

    def __eq__(self, other):
        return (isinstance(other, PartialAction)
                and other.algebra == self.algebra and other.group == self.group
                and other.domains == self.domains and other.sigmas == self.sigmas)

    def restrict_to_subgroup(self, gen) -> "PartialAction":
        """Restriction to the cyclic subgroup generated by `gen`.

        The result carries an abstract C_d as its group; element j of C_d
        acts the way gen^j does.
        """
        elems = self.group.cyclic_subgroup(gen)
        d = len(elems)
        H = FinAbGroup.cyclic(d)
        domains, sigmas = {}, {}
        for j, h in enumerate(elems):
            label = (j,) if H.factors else ()
            domains[label] = self.domains[h]
            sigmas[label] = dict(self.sigmas[h])
        return PartialAction(self.algebra, H, domains, sigmas)

    def __repr__(self):
        return f"PartialAction({self.group} on {self.algebra})"


def induced_from_global(n: int, group: FinAbGroup, gen_perms, support) -> "PartialAction":
    """Partial action induced on the ideal K^E of a global permutation action.

    `gen_perms` gives, for each invariant factor of the group, the image
    permutation of the generator as a tuple over the ambient components
    0..M-1.  The induced action on S = K^E has S_g = E intersect beta_g(E)
    and alpha_g the restriction of beta_g, relabelled to components
    0..|E|-1 of a fresh split algebra.
    """
    support = sorted(set(support))
    if not support:
        raise ValueError("the ideal support must be nonempty")
    gen_perms = [tuple(p) for p in gen_perms]
    if len(gen_perms) != len(group.factors):
        raise ValueError("one generator permutation per invariant factor")
    M = len(gen_perms[0]) if gen_perms else len(support)
    for p, d in zip(gen_perms, group.factors):
        if sorted(p) != list(range(M)):
            raise ValueError("generator images must be permutations of range(M)")
        q = list(range(M))
        for _ in range(d):
            q = [p[x] for x in q]
        if q != list(range(M)):
            raise ValueError("generator permutation order must divide its factor")
    for p, q in itertools.combinations(gen_perms, 2):
        if [p[q[x]] for x in range(M)] != [q[p[x]] for x in range(M)]:
            raise ValueError("generator permutations must commute")

    def beta(g):
        out = list(range(M))
        for p, k in zip(gen_perms, g):
            for _ in range(k):
                out = [p[x] for x in out]
        return out

    relabel = {orig: i for i, orig in enumerate(support)}
    algebra = SplitAlgebra(n, len(support))
    domains, sigmas = {}, {}
    eset = set(support)
    for g in group.elements():
        b = beta(g)
        image = eset & {b[c] for c in eset}
        domains[g] = frozenset(relabel[c] for c in image)
        sigmas[g] = {relabel[c]: relabel[b[c]] for c in eset if b[c] in eset}
    return PartialAction(algebra, group, domains, sigmas)


def g_isomorphic(a: PartialAction, b: PartialAction, comp_map, scalars=None) -> bool:
    """Whether `comp_map` (with optional per-component scalars) is a
    G-isomorphism from (S, alpha) to (S', alpha').

    The map e_c -> s_c e_{comp_map[c]} must be an algebra isomorphism,
    which forces every scalar to be 1; it must carry each domain ideal of
    `a` onto the matching ideal of `b` and intertwine the two actions.
    Any failed precondition simply yields False.
    """
    if a.group != b.group or a.algebra.m != b.algebra.m or a.algebra.n != b.algebra.n:
        return False
    m = a.algebra.m
    comp_map = dict(comp_map)
    if sorted(comp_map) != list(range(m)) or sorted(comp_map.values()) != list(range(m)):
        return False
    if scalars is not None:
        one = a.algebra.knum(1)
        if any(a.algebra.knum(scalars.get(c, 1)) != one for c in range(m)):
            return False
    for g in a.group.elements():
        if {comp_map[c] for c in a.domains[g]} != set(b.domains[g]):
            return False
        for c, target in a.sigmas[g].items():
            if b.sigmas[g].get(comp_map[c]) != comp_map[target]:
                return False
    return True
