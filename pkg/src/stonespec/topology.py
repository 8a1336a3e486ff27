"""Finite topological spaces and the continuous-function correspondence.

Open-set lattices, regular open Boolean algebras, strongly regular step
families, quasipoints over points, the point-fibre function algebra and the
completely increasing calculus all live here.  The only finite Hausdorff
spaces are the discrete ones, so every fibre-based statement is exercised on
discrete spaces; everything else works for arbitrary finite topologies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InputError, UnsupportedStructureError
from .family import (ComplexObservableFunction, ObservableFunction,
                     SpectralFamily, observable_function)
from .lattice import Lattice, bits
from .stone import StoneSpace, stone_space


class TopSpace:
    """A finite topology, opens stored as point bitmasks."""

    def __init__(self, points, opens):
        self.points = tuple(points)
        if len(set(self.points)) != len(self.points):
            raise InputError("duplicate point labels")
        if not self.points:
            raise InputError("a space needs at least one point")
        self.full = (1 << len(self.points)) - 1
        opens = frozenset(int(o) for o in opens)
        if any(o < 0 or o > self.full for o in opens):
            raise InputError("open set outside the point set")
        if 0 not in opens or self.full not in opens:
            raise InputError("a topology must contain the empty set and the whole space")
        seq = sorted(opens)
        for a in seq:
            for b in seq:
                if a | b not in opens:
                    raise InputError(
                        f"not closed under union: {self.set_name(a)}, {self.set_name(b)}")
                if a & b not in opens:
                    raise InputError(
                        f"not closed under intersection: {self.set_name(a)}, {self.set_name(b)}")
        self.opens = opens
        self._open_list = seq
        self._interior = {}
        self._lattice = None
        self._r_lattice = None

    @classmethod
    def from_sets(cls, points, sets) -> "TopSpace":
        points = tuple(points)
        idx = {p: i for i, p in enumerate(points)}
        masks = []
        for s in sets:
            m = 0
            for p in s:
                if p not in idx:
                    raise InputError(f"unknown point {p!r}")
                m |= 1 << idx[p]
            masks.append(m)
        return cls(points, masks)

    @classmethod
    def discrete(cls, points) -> "TopSpace":
        points = tuple(points)
        return cls(points, range(1 << len(points)))

    @classmethod
    def generated(cls, points, sets) -> "TopSpace":
        """Close a generating family under union and intersection."""
        points = tuple(points)
        idx = {p: i for i, p in enumerate(points)}
        fam = {0, (1 << len(points)) - 1}
        for s in sets:
            m = 0
            for p in s:
                if p not in idx:
                    raise InputError(f"unknown point {p!r}")
                m |= 1 << idx[p]
            fam.add(m)
        changed = True
        while changed:
            changed = False
            for a in list(fam):
                for b in list(fam):
                    for c in (a | b, a & b):
                        if c not in fam:
                            fam.add(c)
                            changed = True
        return cls(points, fam)

    def mask_of(self, labels) -> int:
        idx = {p: i for i, p in enumerate(self.points)}
        m = 0
        for p in labels:
            if p not in idx:
                raise InputError(f"unknown point {p!r}")
            m |= 1 << idx[p]
        return m

    def set_name(self, mask: int) -> str:
        return "{" + ",".join(str(self.points[i]) for i in bits(mask)) + "}"

    @property
    def is_discrete(self) -> bool:
        """Computed Hausdorff flag: a finite space is Hausdorff iff discrete."""
        return len(self.opens) == self.full + 1

    def interior(self, x: int) -> int:
        try:
            return self._interior[x]
        except KeyError:
            acc = 0
            for o in self._open_list:
                if o & ~x == 0:
                    acc |= o
            self._interior[x] = acc
            return acc

    def closure(self, x: int) -> int:
        return self.full ^ self.interior(self.full ^ x)

    def pseudocomplement(self, u: int) -> int:
        """The complement of the closure; the ortho map of the regular opens."""
        return self.full ^ self.closure(u)

    def is_regular_open(self, u: int) -> bool:
        return u in self.opens and self.interior(self.closure(u)) == u

    def regular_opens(self) -> tuple:
        return tuple(o for o in self._open_list if self.interior(self.closure(o)) == o)

    def lattice(self) -> Lattice:
        """The open sets ordered by inclusion (no orthocomplement)."""
        if self._lattice is None:
            masks = self._open_list
            names = [self.set_name(m) for m in masks]
            order = [(names[i], names[j])
                     for i, a in enumerate(masks) for j, b in enumerate(masks)
                     if a & ~b == 0]
            self._lattice = Lattice(names, order, payload=masks)
        return self._lattice

    def r_lattice(self) -> Lattice:
        """The regular opens as a Boolean lattice, pseudocomplement as ortho."""
        if self._r_lattice is None:
            masks = list(self.regular_opens())
            names = [self.set_name(m) for m in masks]
            order = [(names[i], names[j])
                     for i, a in enumerate(masks) for j, b in enumerate(masks)
                     if a & ~b == 0]
            ortho = {names[i]: names[masks.index(self.pseudocomplement(m))]
                     for i, m in enumerate(masks)}
            self._r_lattice = Lattice(names, order, ortho=ortho,
                                      flags=("distributive", "orthomodular"),
                                      payload=masks)
        return self._r_lattice

    def __eq__(self, other):
        if not isinstance(other, TopSpace):
            return NotImplemented
        return self.points == other.points and self.opens == other.opens

    __hash__ = None

    def __repr__(self):
        return f"TopSpace({len(self.points)} points, {len(self.opens)} opens)"


# --- continuity and the induced families -------------------------------------


def _point_values(space: TopSpace, values) -> tuple:
    if isinstance(values, dict):
        try:
            values = [values[p] for p in space.points]
        except KeyError as e:
            raise InputError(f"no value for point {e.args[0]!r}") from None
    values = tuple(Fraction(v) for v in values)
    if len(values) != len(space.points):
        raise InputError("one value per point required")
    return values


def is_continuous(space: TopSpace, values) -> bool:
    """Preimages of open intervals must be open; intervals with endpoints on
    the midpoint grid between consecutive values suffice at finite scale."""
    values = _point_values(space, values)
    distinct = sorted(set(values))
    cuts = [distinct[0] - 1]
    cuts += [(a + b) / 2 for a, b in zip(distinct, distinct[1:])]
    cuts.append(distinct[-1] + 1)
    for lo, hi in combinations(cuts, 2):
        mask = 0
        for i, v in enumerate(values):
            if lo < v < hi:
                mask |= 1 << i
        if mask not in space.opens:
            return False
    return True


@dataclass(frozen=True)
class NotASpectralFamily:
    """Diagnosis returned when the interiors of the level sets fail to exhaust
    the space; carries the partial jump data.  Cannot occur for a total
    function on a finite space (finite functions are bounded) but the code
    path is kept for the contract."""

    thresholds: tuple
    values: tuple
    missing: int
    message: str


def spectral_family_of_continuous(space: TopSpace, values):
    """The step family t -> interior(preimage of (-inf, t]).

    For continuous inputs this is strongly regular and induces the function
    back; for arbitrary inputs it is still a bounded family at finite scale.
    """
    values = _point_values(space, values)
    thresholds = sorted(set(values))
    jumps = []
    union = 0
    for t in thresholds:
        cum = 0
        for i, v in enumerate(values):
            if v <= t:
                cum |= 1 << i
        e = space.interior(cum)
        union |= e
        jumps.append((t, e))
    if union != space.full:
        return NotASpectralFamily(
            tuple(t for t, _ in jumps), tuple(e for _, e in jumps),
            space.full ^ union,
            "level-set interiors do not exhaust the space")
    lat = space.lattice()
    return SpectralFamily(lat, [(t, lat.payload.index(e)) for t, e in jumps])


def _family_payloads(space: TopSpace, family: SpectralFamily) -> list:
    lat = space.lattice()
    if family.lattice is not lat and family.lattice != lat:
        raise InputError("family does not live in this space's open-set lattice")
    return [lat.payload[v] for v in family.values]


def is_strongly_regular(space: TopSpace, family: SpectralFamily):
    """closure(E at s) inside (E at t) for every s < t; returns (bool, witness).

    With step semantics the condition over all real pairs reduces to every
    step value being closed (pairs inside one step force closure(v) inside v;
    consecutive-step pairs follow by monotonicity).  The witness is a real
    pair (threshold, point inside the same step).
    """
    masks = _family_payloads(space, family)
    ts = family.thresholds
    for i, m in enumerate(masks):
        if space.closure(m) & ~m:
            mu = ts[i] + (ts[i + 1] - ts[i]) / 2 if i + 1 < len(ts) else ts[i] + 1
            return False, (ts[i], mu)
    return True, None


def classify_family(space: TopSpace, family: SpectralFamily) -> str:
    """"strongly-regular", "regular" (all values regular open) or "neither"."""
    if is_strongly_regular(space, family)[0]:
        return "strongly-regular"
    masks = _family_payloads(space, family)
    if all(space.is_regular_open(m) for m in masks):
        return "regular"
    return "neither"


def admissible_domain(space: TopSpace, family: SpectralFamily) -> int:
    """Points missed by some value; the whole space for bounded step families
    (below the first threshold the family is empty)."""
    _family_payloads(space, family)
    inter = 0  # the value below every threshold
    return space.full ^ inter


def induced_function(space: TopSpace, family: SpectralFamily) -> tuple:
    """The least threshold whose value contains each point of the admissible
    domain (total here, since bounded families have full domain)."""
    masks = _family_payloads(space, family)
    out = []
    for p in range(len(space.points)):
        for t, m in zip(family.thresholds, masks):
            if m >> p & 1:
                out.append(t)
                break
        else:
            out.append(None)  # unreachable for bounded families
    return tuple(out)


# --- quasipoints over points ---------------------------------------------------


@dataclass
class PtStructure:
    """Quasipoints sorted by the points they sit over.

    ``q_x[i]`` is the bitmask (over Stone-space point indices) of quasipoints
    over the i-th point: those whose members all have the point in their
    closure.  ``pt`` is the fibre map when the space is Hausdorff (discrete);
    otherwise fibres may overlap and no function is claimed.
    """

    space: TopSpace
    stone: StoneSpace
    q_x: tuple
    q_pt: int
    pt: dict | None

    def fibres(self) -> dict:
        out = {}
        for i, mask in enumerate(self.q_x):
            out[self.space.points[i]] = tuple(bits(mask))
        return out


def pt_structure(space: TopSpace) -> PtStructure:
    lat = space.lattice()
    st = stone_space(lat)
    q_x = [0] * len(space.points)
    for k, members in enumerate(st.points):
        gen = None
        for e in bits(members):
            if lat.up[e] == members:
                gen = e
                break
        w = lat.payload[gen]
        cl = space.closure(w)
        for p in bits(cl):
            q_x[p] |= 1 << k
    q_pt = 0
    for m in q_x:
        q_pt |= m
    pt = None
    if space.is_discrete:
        pt = {}
        for i, mask in enumerate(q_x):
            for k in bits(mask):
                if k in pt:
                    raise InputError("fibres overlap on a Hausdorff space")
                pt[k] = i
    return PtStructure(space, st, tuple(q_x), q_pt, pt)


def identification_check(p: PtStructure) -> bool:
    """A set is open iff its fibre preimage is open in the subspace of
    quasipoints over points."""
    subspace_opens = {o & p.q_pt for o in p.stone.opens()}
    for x in range(p.space.full + 1):
        pre = 0
        for i in bits(x):
            pre |= p.q_x[i]
        if (x in p.space.opens) != (pre in subspace_opens):
            return False
    return True


def covers_spectrum(p: PtStructure) -> bool:
    """Every quasipoint lies over some point (finite spaces are compact)."""
    return p.q_pt == p.stone.all_points


def cpt_membership(p: PtStructure, g: ObservableFunction) -> bool:
    """Is g constant on every fibre?  Needs a Hausdorff (discrete) space for
    the fibres to partition the spectrum."""
    if not p.space.is_discrete:
        raise UnsupportedStructureError(
            "fibre membership needs a Hausdorff (finite: discrete) space")
    if g.space.points != p.stone.points:
        raise InputError("function lives on a different spectrum")
    for mask in p.q_x:
        vals = {g.values[k] for k in bits(mask)}
        if len(vals) > 1:
            return False
    return True


def f_star(space: TopSpace, re_values, im_values=None):
    """Send a point function to the observable function of its level-set
    family; complex inputs go componentwise."""
    e_re = spectral_family_of_continuous(space, re_values)
    if isinstance(e_re, NotASpectralFamily):
        raise InputError("the real part does not induce a spectral family")
    st = stone_space(space.lattice())
    fr = observable_function(e_re, st)
    if im_values is None:
        return fr
    e_im = spectral_family_of_continuous(space, im_values)
    if isinstance(e_im, NotASpectralFamily):
        raise InputError("the imaginary part does not induce a spectral family")
    return ComplexObservableFunction(fr, observable_function(e_im, st))


# --- the completely increasing calculus ----------------------------------------


def r_function(space: TopSpace, g: ObservableFunction) -> dict:
    """For g on the spectrum of the regular opens: r_g(U) is the maximum of g
    over the quasipoints containing U, for every nonzero regular open U."""
    lat = space.r_lattice()
    st = stone_space(lat)
    if g.space.points != st.points:
        raise InputError("function lives on a different spectrum")
    out = {}
    for e in range(lat.n):
        if e == lat.bottom:
            continue
        mask = st.base[e]
        out[e] = max(g.values[k] for k in bits(mask))
    return out


def completely_increasing_check(lat: Lattice, r: dict, *, limit: int = 20):
    """r(join of a family) == max over the family, for every nonempty family
    of nonzero elements; returns (bool, witness)."""
    nz = [e for e in range(lat.n) if e != lat.bottom]
    if len(nz) > limit:
        raise InputError(f"completely-increasing scan capped at {limit} elements")
    _, join = lat._tables()
    total = 1 << len(nz)
    join_of = [lat.bottom] * total
    max_of = [None] * total
    for s in range(1, total):
        low = s & -s
        i = low.bit_length() - 1
        rest = s ^ low
        e = nz[i]
        join_of[s] = e if rest == 0 else join[join_of[rest]][e]
        max_of[s] = r[e] if rest == 0 else max(max_of[rest], r[e])
        if r[join_of[s]] != max_of[s]:
            witness = tuple(lat.names[nz[j]] for j in bits(s))
            return False, witness
    return True, None


def star_condition_check(space: TopSpace, g: ObservableFunction):
    """For every point x and quasipoint over x (in the regular-open lattice):
    the infimum of r_g over the regular open neighbourhoods of x equals the
    infimum over the quasipoint.  Returns (bool, witness)."""
    lat = space.r_lattice()
    st = stone_space(lat)
    r = r_function(space, g)
    for p in range(len(space.points)):
        # nonempty: the whole space is a regular open neighbourhood of p
        prx = [e for e in range(lat.n)
               if e != lat.bottom and lat.payload[e] >> p & 1]
        inf_nbhd = min(r[e] for e in prx)
        prx_mask = 0
        for e in prx:
            prx_mask |= 1 << e
        for k, members in enumerate(st.points):
            if members & prx_mask != prx_mask:
                continue
            inf_qp = min(r[e] for e in bits(members) if e != lat.bottom)
            if inf_nbhd != inf_qp:
                return False, (space.points[p], st.point_name(k))
    return True, None


# --- exhaustive topology generation --------------------------------------------


_TOPOLOGY_CACHE = {}


def all_topologies(n: int) -> tuple:
    """Every topology on n labeled points (1, 4, 29, 355 for n = 1..4).

    Families closed under union and intersection are generated by closing
    single-set extensions starting from the indiscrete topology; the result
    set is exactly the closures of all subfamilies of the power set.
    """
    if n < 1:
        raise InputError("need at least one point")
    if n > 4:
        raise InputError("exhaustive topology generation capped at 4 points")
    if n in _TOPOLOGY_CACHE:
        return _TOPOLOGY_CACHE[n]
    full = (1 << n) - 1

    def close(fam: frozenset) -> frozenset:
        fam = set(fam)
        changed = True
        while changed:
            changed = False
            pairs = list(fam)
            for a in pairs:
                for b in pairs:
                    u, i = a | b, a & b
                    if u not in fam:
                        fam.add(u)
                        changed = True
                    if i not in fam:
                        fam.add(i)
                        changed = True
        return frozenset(fam)

    start = frozenset({0, full})
    seen = {start}
    frontier = [start]
    while frontier:
        fam = frontier.pop()
        for m in range(1, full):
            if m not in fam:
                bigger = close(fam | {m})
                if bigger not in seen:
                    seen.add(bigger)
                    frontier.append(bigger)
    labels = tuple(str(i + 1) for i in range(n))
    ordered = sorted(seen, key=lambda fam: (len(fam), tuple(sorted(fam))))
    spaces = tuple(TopSpace(labels, fam) for fam in ordered)
    _TOPOLOGY_CACHE[n] = spaces
    return spaces
