"""Bounded step spectral families and their observable functions.

A family is a finite list of strictly increasing rational thresholds with
monotone lattice values, read as "value v_i on [t_i, t_{i+1})", bottom below
the first threshold and (by the boundedness requirement) top from the last
one on.  All scalars are exact rationals; the canonical form drops vacuous
jumps so equality of families is plain equality of representations.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InputError, InvalidFamilyError, UnsupportedStructureError
from .lattice import Lattice, bits
from .stone import StoneSpace, stone_space


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise InputError(f"thresholds must be exact rationals, got float {x!r}")
    return Fraction(x)


class SpectralFamily:
    """A bounded monotone step map from the rationals into a lattice."""

    __slots__ = ("lattice", "thresholds", "values")

    def __init__(self, lattice: Lattice, jumps):
        jumps = [(_as_fraction(t), lattice.eid(v)) for t, v in jumps]
        if not jumps:
            raise InvalidFamilyError("a bounded family needs at least one jump")
        for (t1, _), (t2, _) in zip(jumps, jumps[1:]):
            if not t1 < t2:
                raise InvalidFamilyError(f"thresholds not strictly increasing at {t2}")
        for (_, v1), (t2, v2) in zip(jumps, jumps[1:]):
            if not lattice.le(v1, v2):
                raise InvalidFamilyError(
                    f"values not monotone: {lattice.names[v1]} then {lattice.names[v2]}")
        if jumps[-1][1] != lattice.top:
            raise InvalidFamilyError("family is not bounded above (last value must be top)")
        canonical = []
        for t, v in jumps:
            if v == lattice.bottom and lattice.top != lattice.bottom:
                continue
            if canonical and canonical[-1][1] == v:
                continue
            canonical.append((t, v))
        self.lattice = lattice
        self.thresholds = tuple(t for t, _ in canonical)
        self.values = tuple(v for _, v in canonical)

    def eval(self, lam) -> int:
        """E at lam: bottom below the first threshold, else the step value."""
        i = bisect_right(self.thresholds, _as_fraction(lam)) - 1
        return self.lattice.bottom if i < 0 else self.values[i]

    def jumps(self):
        return tuple(zip(self.thresholds, self.values))

    def bounds(self):
        return self.thresholds[0], self.thresholds[-1]

    def __eq__(self, other):
        if not isinstance(other, SpectralFamily):
            return NotImplemented
        return (self.thresholds == other.thresholds and self.values == other.values
                and (self.lattice is other.lattice or self.lattice == other.lattice))

    __hash__ = None

    def __repr__(self):
        parts = ", ".join(f"{t}: {self.lattice.names[v]}"
                          for t, v in zip(self.thresholds, self.values))
        return "SpectralFamily{" + parts + "}"


def spectralize(lattice: Lattice, pairs) -> SpectralFamily:
    """Convert a left-closed ("value attained just past the threshold")
    assignment into the canonical right-continuous step form.

    Replacing each value by the meet over strictly larger arguments turns
    "v on (t_i, t_{i+1}]" into "v on [t_i, t_{i+1})", so the conversion is a
    reinterpretation of the same jump list; it is idempotent on canonical
    families.  Non-monotone values are rejected.
    """
    if isinstance(pairs, SpectralFamily):
        return pairs
    return SpectralFamily(lattice, pairs)


class ObservableFunction:
    """A total rational-valued map on the quasipoints of a Stone space."""

    __slots__ = ("space", "values")

    def __init__(self, space: StoneSpace, values):
        values = tuple(Fraction(v) for v in values)
        if len(values) != space.n_points:
            raise InputError("one value per quasipoint required")
        self.space = space
        self.values = values

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def _same_space(self, other):
        if self.space is not other.space and self.space.points != other.space.points:
            raise InputError("observable functions live on different spectra")

    def __eq__(self, other):
        if not isinstance(other, ObservableFunction):
            return NotImplemented
        return self.values == other.values and (
            self.space is other.space or self.space.points == other.space.points)

    __hash__ = None

    def __add__(self, other):
        self._same_space(other)
        return ObservableFunction(self.space, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._same_space(other)
        return ObservableFunction(self.space, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        self._same_space(other)
        return ObservableFunction(self.space, [a * b for a, b in zip(self.values, other.values)])

    def scale(self, alpha) -> "ObservableFunction":
        alpha = Fraction(alpha)
        return ObservableFunction(self.space, [alpha * v for v in self.values])

    def sup_norm(self) -> Fraction:
        return max(abs(v) for v in self.values)

    def as_dict(self) -> dict:
        return {self.space.point_name(k): v for k, v in enumerate(self.values)}

    def __repr__(self):
        return "ObservableFunction(" + ", ".join(
            f"{self.space.point_name(k)}: {v}" for k, v in enumerate(self.values)) + ")"


class ComplexObservableFunction:
    """A pair of observable functions read as real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: ObservableFunction, im: ObservableFunction):
        re._same_space(im)
        self.re = re
        self.im = im

    def __eq__(self, other):
        if not isinstance(other, ComplexObservableFunction):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    __hash__ = None

    def __add__(self, other):
        return ComplexObservableFunction(self.re + other.re, self.im + other.im)

    def __mul__(self, other):
        return ComplexObservableFunction(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re)

    def conj(self) -> "ComplexObservableFunction":
        return ComplexObservableFunction(self.re, self.im.scale(-1))

    def scale(self, alpha, beta=0) -> "ComplexObservableFunction":
        return ComplexObservableFunction(
            self.re.scale(alpha) - self.im.scale(beta),
            self.re.scale(beta) + self.im.scale(alpha))

    def sup_norm_squared(self) -> Fraction:
        return max(a * a + b * b for a, b in zip(self.re.values, self.im.values))

    def value(self, k: int):
        return self.re.values[k], self.im.values[k]


def observable_function(family: SpectralFamily, space: StoneSpace = None) -> ObservableFunction:
    """f_E: each quasipoint maps to the least threshold whose value it contains.

    The infimum over all reals collapses to a minimum over the jump list
    because membership of the values in a filter is upward closed along the
    family and the last value is the top.
    """
    if space is None:
        space = stone_space(family.lattice)
    elif space.lattice is not family.lattice and space.lattice != family.lattice:
        raise InputError("spectrum was enumerated on a different lattice")
    values = []
    for members in space.points:
        for t, v in zip(family.thresholds, family.values):
            if members >> v & 1:
                values.append(t)
                break
        else:  # unreachable: the top value lies in every filter
            raise InvalidFamilyError("family is not bounded above")
    return ObservableFunction(space, values)


def _require_boolean(lattice: Lattice) -> None:
    if lattice.ortho is None:
        raise UnsupportedStructureError(
            "the inverse transform needs a finite Boolean algebra (no ortho present)")
    cached = getattr(lattice, "_is_boolean", None)
    if cached is None:
        cached = lattice.is_distributive()[0]
        lattice._is_boolean = cached
    if not cached:
        raise UnsupportedStructureError(
            "the inverse transform needs a finite Boolean algebra (not distributive)")


def _point_generators(space: StoneSpace) -> list:
    # each quasipoint of a finite lattice is the up-set of a unique atom
    gens = []
    for members in space.points:
        for e in bits(members):
            if space.lattice.up[e] == members:
                gens.append(e)
                break
        else:
            raise InputError("quasipoint is not a principal filter")
    return gens


def from_observable_function(g: ObservableFunction, lattice: Lattice = None) -> SpectralFamily:
    """The unique family with the given observable function, on a Boolean lattice.

    E at t is the join of the atoms whose quasipoint takes a value <= t.
    Restricted to Boolean lattices; elsewhere no inverse is attempted.
    """
    if lattice is None:
        lattice = g.space.lattice
    _require_boolean(lattice)
    space = g.space
    gens = _point_generators(space)
    thresholds = sorted(set(g.values))
    jumps = []
    for t in thresholds:
        e = lattice.join(p for p, val in zip(gens, g.values) if val <= t)
        jumps.append((t, e))
    return SpectralFamily(lattice, jumps)


# --- the transferred C*-style algebra ---------------------------------------


def add(e, f):
    """Pullback of pointwise addition of the observable functions."""
    return _transfer2(e, f, lambda a, b: a + b)


def mul(e, f):
    """Pullback of pointwise multiplication (complex multiplication when 2-parameter)."""
    return _transfer2(e, f, lambda a, b: a * b)


def scale(alpha, e):
    """Pullback of scalar multiplication."""
    if isinstance(e, ComplexSpectralFamily):
        g = observable_function_complex(e)
        if isinstance(alpha, tuple):
            return from_complex_observable_function(g.scale(*alpha))
        return from_complex_observable_function(g.scale(alpha))
    return from_observable_function(observable_function(e).scale(alpha), e.lattice)


def star(e):
    """Pullback of pointwise conjugation; the identity on real families."""
    if isinstance(e, ComplexSpectralFamily):
        return from_complex_observable_function(observable_function_complex(e).conj())
    _require_boolean(e.lattice)
    return e


def sup_norm(e) -> Fraction:
    """Sup norm of the (real) observable function."""
    return observable_function(e).sup_norm()


def _transfer2(e, f, op):
    if isinstance(e, ComplexSpectralFamily) or isinstance(f, ComplexSpectralFamily):
        ge = _as_complex_function(e)
        gf = _as_complex_function(f)
        return from_complex_observable_function(op(ge, gf))
    ge = observable_function(e)
    gf = observable_function(f)
    return from_observable_function(op(ge, gf), e.lattice)


def _as_complex_function(e):
    if isinstance(e, ComplexSpectralFamily):
        return observable_function_complex(e)
    g = observable_function(e)
    zero = ObservableFunction(g.space, [0] * g.space.n_points)
    return ComplexObservableFunction(g, zero)


# --- spectrum and resolvent --------------------------------------------------


@dataclass(frozen=True)
class SpectrumDecomposition:
    """The jump set of a canonical family and its complementary open intervals."""

    spectrum: tuple
    resolvent: tuple

    def __str__(self):
        sp = "{" + ", ".join(str(t) for t in self.spectrum) + "}"
        iv = " u ".join(
            f"({'-inf' if lo is None else lo}, {'inf' if hi is None else hi})"
            for lo, hi in self.resolvent)
        return f"sp = {sp}; resolvent = {iv}"


def spectrum_of(family: SpectralFamily) -> SpectrumDecomposition:
    """Points where the family is not locally constant: exactly its jump set."""
    ts = family.thresholds
    resolvent = [(None, ts[0])]
    resolvent += [(a, b) for a, b in zip(ts, ts[1:])]
    resolvent.append((ts[-1], None))
    return SpectrumDecomposition(ts, tuple(resolvent))


# --- two-parameter (complex) families ----------------------------------------


class ComplexSpectralFamily:
    """A bounded step map on a rational grid, monotone with the strong meet law.

    ``matrix[i][j]`` is the value on [xs[i], xs[i+1]) x [ys[j], ys[j+1]);
    bottom applies whenever either coordinate lies below its first grid line.
    The meet law  E(s) & E(t) == E(min s, min t)  is checked on the whole
    grid and the corner value must be the top.
    """

    __slots__ = ("lattice", "xs", "ys", "matrix")

    def __init__(self, lattice: Lattice, xs, ys, matrix):
        xs = tuple(_as_fraction(x) for x in xs)
        ys = tuple(_as_fraction(y) for y in ys)
        if not xs or not ys:
            raise InvalidFamilyError("grids must be nonempty")
        if any(not a < b for a, b in zip(xs, xs[1:])) or \
           any(not a < b for a, b in zip(ys, ys[1:])):
            raise InvalidFamilyError("grid lines must be strictly increasing")
        matrix = [[lattice.eid(v) for v in row] for row in matrix]
        if len(matrix) != len(xs) or any(len(row) != len(ys) for row in matrix):
            raise InvalidFamilyError("value matrix does not match the grids")
        cells = [(i, j) for i in range(len(xs)) for j in range(len(ys))]
        for (i, j), (k, l) in combinations(cells, 2):
            got = lattice.meet2(matrix[i][j], matrix[k][l])
            want = matrix[min(i, k)][min(j, l)]
            if got != want:
                raise InvalidFamilyError(
                    f"meet law fails at grid cells ({xs[i]},{ys[j]}) and ({xs[k]},{ys[l]})")
        if matrix[-1][-1] != lattice.top:
            raise InvalidFamilyError("family is not bounded above (corner must be top)")

        bottom = lattice.bottom
        rows = list(range(len(xs)))
        while len(rows) > 1 and all(matrix[rows[0]][j] == bottom for j in range(len(ys))):
            rows.pop(0)
        keep_r = [rows[0]]
        for i in rows[1:]:
            if matrix[i] != matrix[keep_r[-1]]:
                keep_r.append(i)
        cols = list(range(len(ys)))
        while len(cols) > 1 and all(matrix[i][cols[0]] == bottom for i in keep_r):
            cols.pop(0)
        keep_c = [cols[0]]
        for j in cols[1:]:
            if any(matrix[i][j] != matrix[i][keep_c[-1]] for i in keep_r):
                keep_c.append(j)

        self.lattice = lattice
        self.xs = tuple(xs[i] for i in keep_r)
        self.ys = tuple(ys[j] for j in keep_c)
        self.matrix = tuple(tuple(matrix[i][j] for j in keep_c) for i in keep_r)

    def eval(self, lam, mu) -> int:
        i = bisect_right(self.xs, _as_fraction(lam)) - 1
        j = bisect_right(self.ys, _as_fraction(mu)) - 1
        if i < 0 or j < 0:
            return self.lattice.bottom
        return self.matrix[i][j]

    def __eq__(self, other):
        if not isinstance(other, ComplexSpectralFamily):
            return NotImplemented
        return (self.xs == other.xs and self.ys == other.ys
                and self.matrix == other.matrix
                and (self.lattice is other.lattice or self.lattice == other.lattice))

    __hash__ = None

    def __repr__(self):
        return f"ComplexSpectralFamily(xs={self.xs}, ys={self.ys})"


def product_family(e1: SpectralFamily, e2: SpectralFamily) -> ComplexSpectralFamily:
    """The family (lam, mu) -> E1(lam) & E2(mu); always satisfies the meet law."""
    if e1.lattice is not e2.lattice and e1.lattice != e2.lattice:
        raise InputError("components live in different lattices")
    lat = e1.lattice
    matrix = [[lat.meet2(v1, v2) for v2 in e2.values] for v1 in e1.values]
    return ComplexSpectralFamily(lat, e1.thresholds, e2.thresholds, matrix)


def decompose(e: ComplexSpectralFamily):
    """Split into the unique pair of one-parameter families.

    The first component is the map at the top of the second grid and vice
    versa; the meet law makes E(lam, mu) == E1(lam) & E2(mu) everywhere.
    """
    lat = e.lattice
    e1 = SpectralFamily(lat, [(x, row[-1]) for x, row in zip(e.xs, e.matrix)])
    e2 = SpectralFamily(lat, [(y, e.matrix[-1][j]) for j, y in enumerate(e.ys)])
    return e1, e2


def observable_function_complex(e: ComplexSpectralFamily,
                                space: StoneSpace = None) -> ComplexObservableFunction:
    """Componentwise least grid lines whose value (for some partner line) lies
    in the quasipoint; packaged as real + imaginary observable functions."""
    if space is None:
        space = stone_space(e.lattice)
    re = []
    im = []
    for members in space.points:
        re.append(next(x for i, x in enumerate(e.xs)
                       if any(members >> e.matrix[i][j] & 1 for j in range(len(e.ys)))))
        im.append(next(y for j, y in enumerate(e.ys)
                       if any(members >> e.matrix[i][j] & 1 for i in range(len(e.xs)))))
    return ComplexObservableFunction(
        ObservableFunction(space, re), ObservableFunction(space, im))


def from_complex_observable_function(g: ComplexObservableFunction) -> ComplexSpectralFamily:
    """Inverse of the complex transform on a Boolean lattice, componentwise."""
    e1 = from_observable_function(g.re)
    e2 = from_observable_function(g.im)
    return product_family(e1, e2)


# --- step-function integration ----------------------------------------------


def riemann_stieltjes(family: SpectralFamily, grid, space: StoneSpace = None) -> ObservableFunction:
    """Step sum of the indicator increments of Q_(E at t) along a grid.

    Each quasipoint receives the grid tag at which the family first enters it,
    i.e. the sum  sum_k t_k (chi(t_k) - chi(t_{k-1}))  with tags at the jump
    being summed.  The result is within the largest grid gap of f_E, and
    equals f_E exactly whenever the grid contains every threshold.
    """
    if space is None:
        space = stone_space(family.lattice)
    grid = [_as_fraction(t) for t in grid]
    if any(not a < b for a, b in zip(grid, grid[1:])):
        raise InputError("grid must be strictly increasing")
    lo, hi = family.bounds()
    if not grid or grid[0] > lo or grid[-1] < hi:
        raise InputError("grid does not cover the family's support")
    evals = [family.eval(t) for t in grid]
    values = []
    for members in space.points:
        for t, v in zip(grid, evals):
            if members >> v & 1:
                values.append(t)
                break
        else:
            raise InputError("grid does not cover the family's support")
    return ObservableFunction(space, values)


# --- exhaustive generation ----------------------------------------------------


def enumerate_families(lattice: Lattice, grid) -> list:
    """All canonical bounded families with thresholds from a fixed grid.

    Jump value chains are the strictly increasing chains ending at the top and
    avoiding the bottom; each chain of length k is combined with every
    k-subset of the grid.  Deterministic order.
    """
    grid = sorted(_as_fraction(t) for t in set(grid))
    chains = [[lattice.top]]
    frontier = [[lattice.top]]
    while frontier:
        chain = frontier.pop()
        if len(chain) == len(grid):
            continue
        head = chain[0]
        for e in range(lattice.n):
            if e != lattice.bottom and e != head and lattice.le(e, head):
                longer = [e] + chain
                chains.append(longer)
                frontier.append(longer)
    chains.sort(key=lambda c: (len(c), c))
    out = []
    for chain in chains:
        for ts in combinations(grid, len(chain)):
            out.append(SpectralFamily(lattice, list(zip(ts, chain))))
    return out
