"""Finite lexicographic products of rank-one groups.

Factors are indexed 1..n from most significant.  C_k is the convex subgroup
zeroing the first k coordinates; C_0 = the whole group, C_n = (0), and these
n+1 subgroups are all convex subgroups of the product.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from . import scalars
from .ordsets import FiniteChain
from .scalars import Scalar, ZERO, ONE


@dataclass(frozen=True)
class LexGroup:
    factors: tuple

    @property
    def rank(self):
        return len(self.factors)


@dataclass(frozen=True)
class GroupElement:
    group: LexGroup
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.group.rank:
            raise DomainError("element has wrong number of coordinates")
        for kind, c in zip(self.group.factors, self.coords):
            if not scalars.contains(kind, c):
                raise DomainError("coordinate %s outside factor" % (c,))

    def __add__(self, other):
        if self.group != other.group:
            raise DomainError("elements of different groups")
        return GroupElement(self.group, tuple(a + b for a, b in
                                              zip(self.coords, other.coords)))

    def __neg__(self):
        return GroupElement(self.group, tuple(-c for c in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return all(c.sign() == 0 for c in self.coords)


@dataclass(frozen=True)
class ConvexSubgroup:
    group: LexGroup
    level: int

    def __post_init__(self):
        if not 0 <= self.level <= self.group.rank:
            raise DomainError("level %d outside 0..%d"
                              % (self.level, self.group.rank))

    def member(self, x):
        return all(c.sign() == 0 for c in x.coords[:self.level])


def element(group, coords):
    return GroupElement(group, tuple(
        c if isinstance(c, Scalar) else Scalar.make(c) for c in coords))


def zero(group):
    return GroupElement(group, (ZERO,) * group.rank)


def unit(group, i):
    """The element with 1 at coordinate i (1-based), 0 elsewhere."""
    coords = [ZERO] * group.rank
    coords[i - 1] = ONE
    return GroupElement(group, tuple(coords))


def lex_compare(x, y):
    if x.group != y.group:
        raise DomainError("elements of different groups")
    for a, b in zip(x.coords, y.coords):
        c = scalars.compare_cross(a, b)
        if c != 0:
            return c
    return 0


def iota(x):
    """Archimedean class: the 1-based index of the first nonzero coordinate."""
    for i, c in enumerate(x.coords):
        if c.sign() != 0:
            return i + 1
    raise DomainError("iota is undefined at zero")


def initial_part(x):
    return x.coords[iota(x) - 1]


def principal_pair(x):
    """(smallest convex subgroup containing x, largest avoiding x)."""
    i = iota(x)
    return (ConvexSubgroup(x.group, i - 1), ConvexSubgroup(x.group, i))


def convex_subgroups(g):
    return [ConvexSubgroup(g, k) for k in range(g.rank + 1)]


def is_principal(c):
    return c.level <= c.group.rank - 1


# ---------------------------------------------------------------------------
# morphisms

@dataclass(frozen=True)
class QuotientProjection:
    group: LexGroup
    level: int

    @property
    def cod(self):
        return LexGroup(self.group.factors[:self.level])

    def apply(self, x):
        return GroupElement(self.cod, x.coords[:self.level])


@dataclass(frozen=True)
class SubgroupInclusion:
    group: LexGroup
    level: int

    @property
    def dom(self):
        return LexGroup(self.group.factors[self.level:])

    def apply(self, x):
        return GroupElement(self.group,
                            (ZERO,) * self.level + tuple(x.coords))


@dataclass(frozen=True)
class FactorwiseInjection:
    dom: LexGroup
    cod: LexGroup
    scales: tuple

    def __post_init__(self):
        if self.dom.rank != self.cod.rank:
            raise DomainError("factorwise morphism needs equal ranks")
        if len(self.scales) != self.dom.rank:
            raise DomainError("one scale per factor required")
        for kd, kc, s in zip(self.dom.factors, self.cod.factors, self.scales):
            if s <= 0:
                raise DomainError("scales must be positive")
            gens = [ONE]
            if kd.d:
                gens.append(Scalar.make(0, 1, kd.d))
            for g in gens:
                if not scalars.contains(kc, g * s):
                    raise DomainError(
                        "scaled factor image leaves the codomain factor")

    def apply(self, x):
        return GroupElement(self.cod, tuple(
            c * s for c, s in zip(x.coords, self.scales)))


def widening(g):
    """The canonical injection of g into its factorwise divisible hull."""
    hull = LexGroup(tuple(scalars.divisible_hull_kind(k) for k in g.factors))
    return FactorwiseInjection(g, hull, (Fraction(1),) * g.rank)


def quotient(g, c):
    """(the quotient by C_k, the projection morphism)."""
    proj = QuotientProjection(g, c.level)
    return proj.cod, proj


def slice_group(g, k1, k2):
    """The sub-quotient C_{k1}/C_{k2}: factors k1+1..k2."""
    if not 0 <= k1 <= k2 <= g.rank:
        raise DomainError("bad slice window %d..%d" % (k1, k2))
    return LexGroup(g.factors[k1:k2])


def skeleton(g):
    """(index chain of size n, the rank-one factor list)."""
    return FiniteChain(g.rank), list(g.factors)


def hahn_embed(x):
    """Coordinates of x under the embedding into the real lex power.

    For lex products the canonical decomposition is coordinatewise, so the
    image is the coordinate sequence itself (order, iota, and initial parts
    are preserved on the nose).
    """
    return tuple(x.coords)


def divisible_hull(g):
    m = widening(g)
    return m.cod, m


def discreteness(g):
    """(has least positive element, all factors discrete, that element)."""
    if g.rank == 0:
        return False, True, None
    is_discrete = scalars.is_discrete_kind(g.factors[-1])
    discretely_ordered = all(scalars.is_discrete_kind(k) for k in g.factors)
    min_positive = unit(g, g.rank) if is_discrete else None
    return is_discrete, discretely_ordered, min_positive


def epsilon_lower(m, c):
    """The convex subgroup of the codomain generated by the image of C_k."""
    if c.group != m.dom:
        raise DomainError("subgroup belongs to a different group")
    return ConvexSubgroup(m.cod, c.level)


def epsilon_upper(m, c):
    """The trace on the domain of a convex subgroup of the codomain."""
    if c.group != m.cod:
        raise DomainError("subgroup belongs to a different group")
    return ConvexSubgroup(m.dom, c.level)


def is_convex_dense(m):
    """Whether the two epsilon maps are mutually inverse bijections."""
    for k in range(m.dom.rank + 1):
        if epsilon_upper(m, epsilon_lower(m, ConvexSubgroup(m.dom, k))).level != k:
            return False
        if epsilon_lower(m, epsilon_upper(m, ConvexSubgroup(m.cod, k))).level != k:
            return False
    return True
