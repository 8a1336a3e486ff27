"""Finite bounded lattices with optional orthocomplement.

Element ids are dense integers backed by a name table, and every element set
is a bitmask, so lattices are capped at a configurable size (64 by default).
Meet and join are resolved through tables computed once per lattice; all
values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import InputError, NoOrthocomplementError

DEFAULT_MAX_ELEMENTS = 64

_ATOM_LETTERS = "xyzwvu"
_PAIR_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def bits(mask: int):
    """Yield the positions of the set bits of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    witness: tuple = ()


@dataclass
class ValidationReport:
    entries: list

    @property
    def ok(self) -> bool:
        return not self.entries

    def codes(self) -> set:
        return {v.code for v in self.entries}

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        return "\n".join(f"{v.code}: {v.message}" for v in self.entries)


class Lattice:
    """A finite bounded poset with meet/join tables and an optional ortho map.

    ``order`` is any set of pairs (a, b) meaning a <= b; the reflexive
    transitive closure is taken, so covering pairs suffice.  ``flags`` are
    claimed properties ("distributive", "orthomodular") checked by
    :meth:`validate`.  ``payload`` optionally attaches opaque per-element data
    (fields of sets and topologies store the underlying subset masks there).
    """

    def __init__(self, names: Sequence[str], order: Iterable[tuple], *,
                 ortho=None, flags: Iterable[str] = (), payload=None,
                 max_elements: int = DEFAULT_MAX_ELEMENTS):
        names = tuple(names)
        if not names:
            raise InputError("a lattice needs at least one element")
        if len(names) > max_elements:
            raise InputError(f"{len(names)} elements exceed the cap of {max_elements}")
        if len(set(names)) != len(names):
            raise InputError("duplicate element names")
        self.names = names
        self.index = {s: i for i, s in enumerate(names)}
        n = self.n = len(names)

        up = [1 << i for i in range(n)]
        for a, b in order:
            up[self.eid(a)] |= 1 << self.eid(b)
        changed = True
        while changed:
            changed = False
            for i in range(n):
                acc = up[i]
                for j in bits(acc):
                    acc |= up[j]
                if acc != up[i]:
                    up[i] = acc
                    changed = True
        self.up = tuple(up)
        down = [0] * n
        for i in range(n):
            for j in bits(up[i]):
                down[j] |= 1 << i
        self.down = tuple(down)

        full = (1 << n) - 1
        bottoms = [i for i in range(n) if up[i] == full]
        tops = [i for i in range(n) if down[i] == full]
        self.bottom = bottoms[0] if len(bottoms) == 1 else None
        self.top = tops[0] if len(tops) == 1 else None

        if ortho is None:
            self.ortho = None
        else:
            omap = [None] * n
            if isinstance(ortho, Mapping):
                for a, b in ortho.items():
                    ia, ib = self.eid(a), self.eid(b)
                    omap[ia], omap[ib] = ib, ia
            else:
                for ia, b in enumerate(ortho):
                    omap[ia] = self.eid(b)
            if any(o is None for o in omap):
                missing = [names[i] for i, o in enumerate(omap) if o is None]
                raise InputError(f"ortho map is not total; missing: {missing}")
            self.ortho = tuple(omap)

        self.flags = frozenset(flags)
        unknown = self.flags - {"distributive", "orthomodular"}
        if unknown:
            raise InputError(f"unknown lattice flags: {sorted(unknown)}")
        self.payload = None if payload is None else tuple(payload)

        self._meet = None
        self._join = None
        self._table_failures = None
        self._stone = None
        self._atoms = None

    # -- identity ---------------------------------------------------------

    def eid(self, e) -> int:
        """Resolve an element name (or id) to its dense id."""
        if isinstance(e, str):
            try:
                return self.index[e]
            except KeyError:
                raise InputError(f"unknown element {e!r}") from None
        i = int(e)
        if not 0 <= i < self.n:
            raise InputError(f"element id {i} out of range")
        return i

    def name(self, i: int) -> str:
        return self.names[i]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Lattice):
            return NotImplemented
        return (self.names == other.names and self.up == other.up
                and self.ortho == other.ortho and self.flags == other.flags
                and self.payload == other.payload)

    __hash__ = None

    def __repr__(self):
        return f"Lattice({self.n} elements, bottom={self.names[self.bottom] if self.bottom is not None else '?'})"

    # -- order and operations ----------------------------------------------

    def le(self, a, b) -> bool:
        return bool(self.up[self.eid(a)] >> self.eid(b) & 1)

    def _tables(self):
        if self._meet is None:
            self._compute_tables()
        if self._table_failures:
            a, b, kind = self._table_failures[0]
            raise InputError(
                f"not a lattice: {self.names[a]}, {self.names[b]} have no {kind}")
        return self._meet, self._join

    def _compute_tables(self):
        n = self.n
        by_down = {self.down[i]: i for i in range(n)}
        by_up = {self.up[i]: i for i in range(n)}
        meet = [[None] * n for _ in range(n)]
        join = [[None] * n for _ in range(n)]
        failures = []
        for a in range(n):
            da, ua = self.down[a], self.up[a]
            for b in range(a, n):
                m = by_down.get(da & self.down[b])
                j = by_up.get(ua & self.up[b])
                meet[a][b] = meet[b][a] = m
                join[a][b] = join[b][a] = j
                if m is None:
                    failures.append((a, b, "greatest lower bound"))
                if j is None:
                    failures.append((a, b, "least upper bound"))
        self._meet, self._join, self._table_failures = meet, join, failures

    def meet2(self, a, b) -> int:
        meet, _ = self._tables()
        return meet[self.eid(a)][self.eid(b)]

    def join2(self, a, b) -> int:
        _, join = self._tables()
        return join[self.eid(a)][self.eid(b)]

    def meet(self, elements: Iterable) -> int:
        """Greatest lower bound of a set of elements; meet of nothing is top."""
        if self.top is None:
            raise InputError("lattice has no top")
        meet, _ = self._tables()
        acc = self.top
        for e in elements:
            acc = meet[acc][self.eid(e)]
        return acc

    def join(self, elements: Iterable) -> int:
        """Least upper bound of a set of elements; join of nothing is bottom."""
        if self.bottom is None:
            raise InputError("lattice has no bottom")
        _, join = self._tables()
        acc = self.bottom
        for e in elements:
            acc = join[acc][self.eid(e)]
        return acc

    def ortho_of(self, a) -> int:
        if self.ortho is None:
            raise NoOrthocomplementError("lattice carries no orthocomplement")
        return self.ortho[self.eid(a)]

    def atoms(self) -> tuple:
        """Minimal nonzero elements, in id order."""
        if self._atoms is None:
            if self.bottom is None:
                raise InputError("lattice has no bottom")
            b = self.bottom
            self._atoms = tuple(
                a for a in range(self.n)
                if a != b and self.down[a] == (1 << a) | (1 << b))
        return self._atoms

    # -- structural checks ---------------------------------------------------

    def is_distributive(self):
        """Exhaustive a&(b|c) == (a&b)|(a&c) scan; returns (bool, witness)."""
        meet, join = self._tables()
        rng = range(self.n)
        for a in rng:
            ma = meet[a]
            for b in rng:
                ab = ma[b]
                for c in rng:
                    if ma[join[b][c]] != join[ab][ma[c]]:
                        return False, (self.names[a], self.names[b], self.names[c])
        return True, None

    def is_orthomodular(self):
        """a <= b implies b == a | (b & a^perp); returns (bool, witness)."""
        if self.ortho is None:
            return False, None
        meet, join = self._tables()
        for a in range(self.n):
            oa = self.ortho[a]
            for b in bits(self.up[a]):
                if join[a][meet[b][oa]] != b:
                    return False, (self.names[a], self.names[b])
        return True, None

    def validate(self) -> ValidationReport:
        """Check every structural invariant; violations become report entries.

        Reflexivity and transitivity hold by construction (the constructor
        closes the order), so the order axioms reduce to antisymmetry here.
        """
        entries = []
        for a in range(self.n):
            for b in range(a + 1, self.n):
                if self.up[a] >> b & 1 and self.up[b] >> a & 1:
                    entries.append(Violation(
                        "antisymmetry",
                        f"{self.names[a]} and {self.names[b]} are mutually comparable",
                        (self.names[a], self.names[b])))
        if self.bottom is None:
            entries.append(Violation("bounds", "no unique bottom element"))
        if self.top is None:
            entries.append(Violation("bounds", "no unique top element"))
        if entries:
            return ValidationReport(entries)

        self._compute_tables()
        for a, b, kind in self._table_failures:
            entries.append(Violation(
                "lattice-law", f"{self.names[a]}, {self.names[b]} have no {kind}",
                (self.names[a], self.names[b])))
        if entries:
            return ValidationReport(entries)

        if self.ortho is not None:
            o = self.ortho
            for a in range(self.n):
                if o[o[a]] != a:
                    entries.append(Violation(
                        "ortho-involution", f"ortho is not involutive at {self.names[a]}",
                        (self.names[a],)))
                for b in bits(self.up[a]):
                    if not self.up[o[b]] >> o[a] & 1:
                        entries.append(Violation(
                            "ortho-antitone",
                            f"{self.names[a]} <= {self.names[b]} but complements are not reversed",
                            (self.names[a], self.names[b])))
                if self.meet2(a, o[a]) != self.bottom or self.join2(a, o[a]) != self.top:
                    entries.append(Violation(
                        "ortho-complement",
                        f"{self.names[a]} and {self.names[o[a]]} are not complements",
                        (self.names[a],)))

        if "orthomodular" in self.flags:
            if self.ortho is None:
                entries.append(Violation(
                    "orthomodular", "flagged orthomodular but carries no ortho map"))
            else:
                ok, witness = self.is_orthomodular()
                if not ok:
                    a, b = witness
                    entries.append(Violation(
                        "orthomodular", f"orthomodular law fails at {a} <= {b}",
                        witness))
        if "distributive" in self.flags:
            ok, witness = self.is_distributive()
            if not ok:
                entries.append(Violation(
                    "distributive",
                    "distributive law fails at ({}, {}, {})".format(*witness),
                    witness))
        return ValidationReport(entries)


# --- standard constructions ------------------------------------------------


def boolean_lattice(n: int) -> Lattice:
    """Power set of n atoms (n <= 6 under the 64-element cap)."""
    if n < 1:
        raise InputError("boolean lattice needs at least one atom")
    if n > len(_ATOM_LETTERS):
        raise InputError(f"boolean lattice capped at {len(_ATOM_LETTERS)} atoms")
    letters = _ATOM_LETTERS[:n]
    full = (1 << n) - 1

    def label(mask):
        if mask == 0:
            return "0"
        if mask == full:
            return "1"
        return "".join(letters[i] for i in bits(mask))

    masks = list(range(1 << n))
    names = [label(m) for m in masks]
    order = [(names[a], names[b]) for a in masks for b in masks if a & ~b == 0]
    ortho = {names[m]: names[full ^ m] for m in masks}
    return Lattice(names, order, ortho=ortho,
                   flags=("distributive", "orthomodular"), payload=masks)


def chain_lattice(n: int) -> Lattice:
    """Total order 0 < m1 < ... < 1 with n elements; no orthocomplement."""
    if n < 1:
        raise InputError("chain needs at least one element")
    if n == 1:
        names = ["0"]
    elif n == 2:
        names = ["0", "1"]
    else:
        names = ["0"] + [f"m{i}" for i in range(1, n - 1)] + ["1"]
    order = [(names[i], names[i + 1]) for i in range(n - 1)]
    return Lattice(names, order, flags=("distributive",))


def mo_lattice(n: int) -> Lattice:
    """0 and 1 plus n orthocomplementary pairs of pairwise incomparable atoms."""
    if n < 1:
        raise InputError("MO lattice needs at least one atom pair")
    if n > len(_PAIR_LETTERS):
        raise InputError(f"MO lattice capped at {len(_PAIR_LETTERS)} pairs")
    mids = []
    for i in range(n):
        mids += [_PAIR_LETTERS[i], _PAIR_LETTERS[i] + "'"]
    names = ["0"] + mids + ["1"]
    order = [("0", m) for m in mids] + [(m, "1") for m in mids] + [("0", "1")]
    ortho = {"0": "1"}
    for i in range(n):
        ortho[_PAIR_LETTERS[i]] = _PAIR_LETTERS[i] + "'"
    flags = ("orthomodular", "distributive") if n == 1 else ("orthomodular",)
    return Lattice(names, order, ortho=ortho, flags=flags)


def product_lattice(l1: Lattice, l2: Lattice) -> Lattice:
    """Componentwise order; ortho carried over when both factors have one."""
    names = [f"({a}|{b})" for a in l1.names for b in l2.names]
    pairs = [(a1, a2, b1, b2)
             for a1 in range(l1.n) for a2 in range(l2.n)
             for b1 in range(l1.n) for b2 in range(l2.n)
             if l1.le(a1, b1) and l2.le(a2, b2)]
    order = [(names[a1 * l2.n + a2], names[b1 * l2.n + b2]) for a1, a2, b1, b2 in pairs]
    ortho = None
    if l1.ortho is not None and l2.ortho is not None:
        ortho = [l1.ortho[i // l2.n] * l2.n + l2.ortho[i % l2.n]
                 for i in range(l1.n * l2.n)]
    return Lattice(names, order, ortho=ortho, flags=l1.flags & l2.flags)


_FIXTURES = {"boolean": boolean_lattice, "chain": chain_lattice, "MO": mo_lattice,
             "product": product_lattice}


def build_fixture(kind: str, *args) -> Lattice:
    """Dispatch to one of the canonical constructions by name."""
    try:
        builder = _FIXTURES[kind]
    except KeyError:
        raise InputError(f"unknown fixture kind {kind!r}") from None
    return builder(*args)
