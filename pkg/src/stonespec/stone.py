"""Stone spectra of finite lattices.

A dual ideal (filter) is a nonempty, upward closed, meet closed element set
not containing the bottom; in a finite lattice every dual ideal is the up-set
of its minimum, so the quasipoints (maximal dual ideals) are exactly the
up-sets of atoms.  Enumeration nevertheless proceeds by greedy descent from
every element so the maximality argument is exercised rather than assumed,
and the brute-force subset scan lives in the test suite as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .lattice import Lattice, bits


@dataclass(frozen=True)
class DualIdeal:
    """A filter, stored as a bitmask of element ids."""

    lattice: Lattice
    members: int

    def __contains__(self, e) -> bool:
        return bool(self.members >> self.lattice.eid(e) & 1)

    def element_ids(self) -> tuple:
        return tuple(bits(self.members))

    def element_names(self) -> tuple:
        return tuple(self.lattice.names[i] for i in bits(self.members))


def is_dual_ideal(lattice: Lattice, members: int) -> bool:
    """Check the filter axioms for an element bitmask."""
    if members == 0 or members >> lattice.bottom & 1:
        return False
    for a in bits(members):
        if lattice.up[a] & ~members:
            return False
        for b in bits(members):
            if not members >> lattice.meet2(a, b) & 1:
                return False
    return True


def principal_dual_ideal(lattice: Lattice, a) -> DualIdeal:
    """The up-set of a single nonzero element."""
    ia = lattice.eid(a)
    if ia == lattice.bottom:
        raise InputError("a dual ideal may not contain the bottom element")
    return DualIdeal(lattice, lattice.up[ia])


class StoneSpace:
    """All quasipoints of a lattice plus the basic open sets Q_a.

    ``points`` holds one member bitmask per quasipoint, sorted by the tuple of
    member ids so two enumerations always agree.  ``base[a]`` is the bitmask,
    over point indices, of the quasipoints containing element a.
    """

    def __init__(self, lattice: Lattice, points):
        self.lattice = lattice
        self.points = tuple(points)
        self.point_index = {m: k for k, m in enumerate(self.points)}
        base = []
        for a in range(lattice.n):
            mask = 0
            for k, members in enumerate(self.points):
                if members >> a & 1:
                    mask |= 1 << k
            base.append(mask)
        self.base = tuple(base)
        self.all_points = (1 << len(self.points)) - 1
        self._interior = {}
        self._opens = None

    @property
    def n_points(self) -> int:
        return len(self.points)

    def point_name(self, k: int) -> str:
        names = self.lattice.names
        return "Q{" + ",".join(names[i] for i in bits(self.points[k])) + "}"

    def q(self, a) -> int:
        """The basic open set of quasipoints containing element a."""
        return self.base[self.lattice.eid(a)]

    def interior(self, x: int) -> int:
        """Largest open subset: the union of basic sets inside x."""
        try:
            return self._interior[x]
        except KeyError:
            acc = 0
            for b in self.base:
                if b & ~x == 0:
                    acc |= b
            self._interior[x] = acc
            return acc

    def is_open(self, x: int) -> bool:
        return self.interior(x) == x

    def closure(self, x: int) -> int:
        """Smallest closed superset (complement of the interior of the complement)."""
        return self.all_points ^ self.interior(self.all_points ^ x)

    def opens(self) -> frozenset:
        """Every open set of the spectrum: all unions of basic sets."""
        if self._opens is None:
            acc = {0}
            frontier = [0]
            while frontier:
                x = frontier.pop()
                for b in self.base:
                    y = x | b
                    if y not in acc:
                        acc.add(y)
                        frontier.append(y)
            self._opens = frozenset(acc)
        return self._opens


def enumerate_quasipoints(lattice: Lattice) -> StoneSpace:
    """Enumerate every maximal dual ideal, deterministically.

    Each principal filter is extended to maximality by greedy descent below
    its generator (smaller generator = larger filter); duplicates collapse on
    the canonical bitmask form.
    """
    if lattice.bottom is None:
        raise InputError("lattice has no bottom")
    bottom = lattice.bottom
    seen = set()
    for a in range(lattice.n):
        if a == bottom:
            continue
        m = a
        while True:
            for b in range(lattice.n):
                if b != bottom and b != m and lattice.le(b, m):
                    m = b
                    break
            else:
                break
        seen.add(lattice.up[m])
    points = sorted(seen, key=lambda mask: tuple(bits(mask)))
    return StoneSpace(lattice, points)


def stone_space(lattice: Lattice) -> StoneSpace:
    """Memoized :func:`enumerate_quasipoints`."""
    if lattice._stone is None:
        lattice._stone = enumerate_quasipoints(lattice)
    return lattice._stone


def dual_ideal_intersection_law(lattice: Lattice, a) -> bool:
    """Does the intersection of all quasipoints containing a equal its up-set?

    True on atomistic lattices (all Boolean ones); fails e.g. at the top of a
    three-element chain, whose single quasipoint is strictly larger than {1}.
    """
    ia = lattice.eid(a)
    if ia == lattice.bottom:
        raise InputError("no quasipoint contains the bottom element")
    space = stone_space(lattice)
    acc = (1 << lattice.n) - 1
    hit = False
    for members in space.points:
        if members >> ia & 1:
            acc &= members
            hit = True
    return hit and acc == lattice.up[ia]


def is_completely_distributive(lattice: Lattice, *, limit: int = 20):
    """Test closure(union of Q_a over a family) == Q_(join of family) for every family.

    Exhaustive over all element subsets, so capped at ``limit`` elements.
    Returns (bool, witness) where the witness is the first failing family as a
    tuple of element names.
    """
    n = lattice.n
    if n > limit:
        raise InputError(f"complete-distributivity scan capped at {limit} elements")
    space = stone_space(lattice)
    _, join = lattice._tables()
    base = space.base
    total = 1 << n
    join_of = [0] * total
    union_of = [0] * total
    join_of[0] = lattice.bottom
    closure_memo = {}
    for s in range(1, total):
        low = s & -s
        e = low.bit_length() - 1
        rest = s ^ low
        join_of[s] = join[join_of[rest]][e]
        union_of[s] = union_of[rest] | base[e]
        u = union_of[s]
        try:
            cl = closure_memo[u]
        except KeyError:
            cl = closure_memo[u] = space.closure(u)
        if cl != base[join_of[s]]:
            witness = tuple(lattice.names[i] for i in bits(s))
            return False, witness
    return True, None
