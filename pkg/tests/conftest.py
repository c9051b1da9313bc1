"""Shared instance builders for the test suite.

The golden instances mirror the JSON corpus in instances/; the induced
families are the generated universe for the property suites: every
nonempty ideal support E of the regular rotation action of a cyclic group
on itself.
"""

import itertools
from pathlib import Path

from pkummer import FinAbGroup, PartialAction, SplitAlgebra, induced_from_global

REPO_ROOT = Path(__file__).resolve().parent.parent
INSTANCE_DIR = REPO_ROOT / "instances"


def e1_action() -> PartialAction:
    """C4 on K^3 with proper overlapping domains; not an extension by zero."""
    algebra = SplitAlgebra(4, 3)
    return PartialAction(
        algebra, FinAbGroup.cyclic(4),
        {(0,): {0, 1, 2}, (1,): {0, 1}, (2,): {0, 2}, (3,): {1, 2}},
        {(1,): {1: 0, 2: 1}, (2,): {0: 2, 2: 0}, (3,): {0: 1, 1: 2}})


def e2_action() -> PartialAction:
    """C5 on K^4 with two blocks; domains vanish at g^2 and g^3."""
    algebra = SplitAlgebra(5, 4)
    return PartialAction(
        algebra, FinAbGroup.cyclic(5),
        {(1,): {0, 2}, (4,): {1, 3}},
        {(1,): {1: 0, 3: 2}, (4,): {0: 1, 2: 3}})


def c2_in_c4_action() -> PartialAction:
    """Extension by zero of the global C2 swap inside C4."""
    algebra = SplitAlgebra(4, 2)
    return PartialAction(
        algebra, FinAbGroup.cyclic(4),
        {(2,): {0, 1}}, {(2,): {0: 1, 1: 0}})


def c3_in_c6_action() -> PartialAction:
    """Extension by zero of the global C3 rotation inside C6."""
    algebra = SplitAlgebra(6, 3)
    return PartialAction(
        algebra, FinAbGroup.cyclic(6),
        {(2,): {0, 1, 2}, (4,): {0, 1, 2}},
        {(2,): {0: 1, 1: 2, 2: 0}, (4,): {0: 2, 1: 0, 2: 1}})


def c2_in_c6_action() -> PartialAction:
    """Extension by zero of the global C2 swap inside C6."""
    algebra = SplitAlgebra(6, 2)
    return PartialAction(
        algebra, FinAbGroup.cyclic(6),
        {(3,): {0, 1}}, {(3,): {0: 1, 1: 0}})


def global_swap_action(n: int = 2) -> PartialAction:
    """The global C2 swap on K^2 over Q(zeta_n)."""
    algebra = SplitAlgebra(n, 2)
    return PartialAction(
        algebra, FinAbGroup.cyclic(2),
        {(0,): {0, 1}, (1,): {0, 1}}, {(1,): {0: 1, 1: 0}})


def global_regular_action(k: int) -> PartialAction:
    """The global regular rotation of C_k on K^k over Q(zeta_k)."""
    rotation = tuple((c + 1) % k for c in range(k))
    return induced_from_global(k, FinAbGroup.cyclic(k), [rotation], range(k))


def induced_rotation(k: int, support) -> PartialAction:
    """Induced partial action of C_k on the ideal K^E of its regular action."""
    rotation = tuple((c + 1) % k for c in range(k))
    return induced_from_global(max(k, 2), FinAbGroup.cyclic(k), [rotation], support)


def induced_family(max_order: int = 6):
    """Every induced instance (k, E) with 2 <= k <= max_order, E nonempty."""
    out = []
    for k in range(2, max_order + 1):
        for size in range(1, k + 1):
            for support in itertools.combinations(range(k), size):
                out.append(((k, support), induced_rotation(k, support)))
    return out


def galois_instances():
    """The generated partial Galois instances used by the law suites:
    all induced instances with k <= 4 plus the five golden fixtures."""
    out = [(key, act) for key, act in induced_family(4)]
    out += [(("e1",), e1_action()), (("e2",), e2_action()),
            (("c2c4",), c2_in_c4_action()), (("c3c6",), c3_in_c6_action()),
            (("c2c6",), c2_in_c6_action())]
    return out
