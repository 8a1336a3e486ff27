"""Exhaustive desk-scale check suites.

Each suite machine-checks one cluster of structural statements on
exhaustively generated finite instances and reports counterexamples instead
of assuming them away.  Suites are pure functions of (max_size, seed) and
print deterministically; the CLI ``check`` subcommand and the acceptance
tests both run them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from . import family as fam
from . import measurable as mea
from . import topology as top
from .errors import InputError
from .lattice import Lattice, bits, boolean_lattice, chain_lattice, mo_lattice
from .stone import (dual_ideal_intersection_law, is_completely_distributive,
                    stone_space)

HALF = Fraction(1, 2)
GRID3 = (Fraction(0), HALF, Fraction(1))


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def check(self, ok: bool, message: str):
        self.cases += 1
        if not ok:
            self.failures.append(message)

    def lines(self):
        out = []
        for n in self.notes:
            out.append(f"  note: {n}")
        for f_ in self.failures:
            out.append(f"  FAIL: {f_}")
        out.append(f"[{self.name}] {len(self.failures)} failures / {self.cases} cases")
        return out


def _ground(n):
    return tuple(str(i) for i in range(1, n + 1))


# --- bijection between measurable functions and their families ----------------


def suite_bijection(max_size: int = 4, seed: int = 0) -> SuiteResult:
    """Round-trip the level-set family and induced-function transforms over
    every field of sets on a small ground set and every grid function."""
    res = SuiteResult("bijection")
    n = min(4, max_size)
    fields = mea.all_fields(_ground(n))
    res.notes.append(f"{len(fields)} fields of sets on {n} points, grid {GRID3}")
    for f in fields:
        cases, failures = mea.bijection_report(f, GRID3)
        res.cases += cases
        res.failures.extend(f"field {f.atoms}: {msg}" for msg in failures)
    return res


# --- injectivity of the observable-function transform --------------------------


def _injectivity_fixtures(max_size: int):
    out = []
    for n in range(1, min(4, max_size) + 1):
        out.append((f"boolean({n})", boolean_lattice(n)))
    for k in range(1, min(3, max_size) + 1):
        out.append((f"MO({k})", mo_lattice(k)))
    for m in range(2, min(5, max_size + 1) + 1):
        out.append((f"chain({m})", chain_lattice(m)))
    return out


def suite_injectivity(max_size: int = 4, seed: int = 0) -> SuiteResult:
    """Distinct canonical bounded families must induce distinct observable
    functions, over every fixture lattice and the threshold grid {0, 1, 2}.

    Chains with three or more elements genuinely fail this: their spectrum is
    a single quasipoint, so families with two jumps above the atom collide
    (the distinguishing argument needs an orthocomplement).  The failures are
    reported as the counterexamples they are.
    """
    res = SuiteResult("injectivity")
    grid = (Fraction(0), Fraction(1), Fraction(2))
    for label, lat in _injectivity_fixtures(max_size):
        space = stone_space(lat)
        seen = {}
        for e in fam.enumerate_families(lat, grid):
            key = fam.observable_function(e, space).values
            other = seen.setdefault(key, e)
            res.check(other is e or other == e,
                      f"{label}: {other!r} and {e!r} share the observable function "
                      f"{dict(zip((space.point_name(k) for k in range(space.n_points)), key))}")
    return res


# --- continuity of observable functions ----------------------------------------


def _random_family(rng: random.Random, lat: Lattice) -> fam.SpectralFamily:
    pool = sorted(Fraction(k, 4) for k in range(-8, 9))
    k = rng.randint(1, 4)
    thresholds = sorted(rng.sample(pool, k))
    chain = [lat.top]
    for _ in range(k - 1):
        lower = [e for e in range(lat.n) if e != lat.bottom
                 and e != chain[0] and lat.le(e, chain[0])]
        if not lower:
            break
        chain.insert(0, rng.choice(lower))
    jumps = list(zip(thresholds[-len(chain):], chain))
    return fam.SpectralFamily(lat, jumps)


def suite_continuity(max_size: int = 4, seed: int = 0) -> SuiteResult:
    """Preimages of value-separating open intervals under f_E are open in the
    Stone topology, for seeded random families."""
    res = SuiteResult("continuity")
    rng = random.Random(seed)
    lattices = [mo_lattice(min(3, max_size)), boolean_lattice(min(4, max_size))]
    spaces = [stone_space(lat) for lat in lattices]
    res.notes.append(f"seed {seed}, 200 random families")
    for i in range(200):
        lat = lattices[i % 2]
        space = spaces[i % 2]
        e = _random_family(rng, lat)
        g = fam.observable_function(e, space)
        distinct = sorted(set(g.values))
        cuts = [distinct[0] - 1]
        cuts += [(a + b) / 2 for a, b in zip(distinct, distinct[1:])]
        cuts.append(distinct[-1] + 1)
        for lo, hi in combinations(cuts, 2):
            mask = 0
            for k, v in enumerate(g.values):
                if lo < v < hi:
                    mask |= 1 << k
            res.check(space.is_open(mask),
                      f"{e!r}: preimage of ({lo}, {hi}) is not open")
    return res


# --- complex (two-parameter) families -------------------------------------------


def suite_complex(max_size: int = 4, seed: int = 0) -> SuiteResult:
    """Every valid two-parameter family on boolean(2) with grid {0,1}^2
    decomposes uniquely and its function splits componentwise."""
    res = SuiteResult("complex-decomposition")
    lat = boolean_lattice(2)
    space = stone_space(lat)
    grid = (Fraction(0), Fraction(1))
    candidates = fam.enumerate_families(lat, grid)
    valid = 0
    for v12 in range(lat.n):
        for v21 in range(lat.n):
            matrix = [[lat.meet2(v12, v21), v12], [v21, lat.top]]
            e = fam.ComplexSpectralFamily(lat, grid, grid, matrix)
            valid += 1
            e1, e2 = fam.decompose(e)
            res.check(fam.product_family(e1, e2) == e,
                      f"recombine(decompose) != identity for matrix {matrix}")
            matches = [(f1, f2) for f1 in candidates for f2 in candidates
                       if fam.product_family(f1, f2) == e]
            res.check(len(matches) == 1,
                      f"{len(matches)} decompositions found for matrix {matrix}")
            g = fam.observable_function_complex(e, space)
            res.check(g.re == fam.observable_function(e1, space)
                      and g.im == fam.observable_function(e2, space),
                      f"componentwise function split fails for matrix {matrix}")
    res.notes.append(f"{valid} valid matrices on boolean(2) x {{0,1}}^2")
    return res


# --- the step-sum spectral theorem ----------------------------------------------


def suite_spectral_theorem(max_size: int = 6, seed: int = 0) -> SuiteResult:
    """Step sums along epsilon grids approximate the induced function within
    epsilon, exactly on grids containing every threshold."""
    res = SuiteResult("spectral-theorem")
    rng = random.Random(seed)
    f6 = mea.FieldOfSets.from_partition(_ground(6), [[p] for p in _ground(6)])
    res.notes.append(f"seed {seed}, 20 random functions on 6 points")
    for _ in range(20):
        values = [Fraction(rng.randint(0, 20), rng.choice((1, 2, 5, 10)))
                  for _ in f6.ground]
        phi = mea.MeasurableFunction(f6, values)
        e = mea.spectral_family_of(phi)
        lo, hi = e.bounds()
        for eps in (HALF, Fraction(1, 10)):
            steps = int((hi - lo) / eps) + 1
            grid = [lo + k * eps for k in range(steps + 1)]
            s = mea.riemann_stieltjes_on_points(f6, e, grid)
            err = max(abs(a - b) for a, b in zip(phi.values, s.values))
            res.check(err <= eps, f"|phi - s| = {err} > {eps} for {phi!r}")
        exact = mea.riemann_stieltjes_on_points(f6, e, sorted(set(phi.values)))
        res.check(exact == phi, f"threshold grid is not exact for {phi!r}")
    b3 = boolean_lattice(3)
    s3 = stone_space(b3)
    for e in fam.enumerate_families(b3, GRID3):
        g = fam.observable_function(e, s3)
        integral = fam.riemann_stieltjes(e, e.thresholds, s3)
        res.check(integral == g, f"quasipoint step sum differs from f_E for {e!r}")
    return res


# --- the continuous-function correspondence -------------------------------------


def suite_correspondence(max_size: int = 4, seed: int = 0) -> SuiteResult:
    """Sweep every topology on up to four labeled points and every grid
    function: continuity matches strong regularity in both directions, with
    the domain/regularity side conditions."""
    res = SuiteResult("continuous-correspondence")
    n_max = min(4, max_size)
    counts = {1: 1, 2: 4, 3: 29, 4: 355}
    for n in range(1, n_max + 1):
        spaces = top.all_topologies(n)
        res.check(len(spaces) == counts[n],
                  f"{len(spaces)} topologies enumerated on {n} points, wanted {counts[n]}")
        for t in spaces:
            lat = t.lattice()
            for values in product(GRID3, repeat=n):
                cont = top.is_continuous(t, values)
                e = top.spectral_family_of_continuous(t, values)
                res.check(not isinstance(e, top.NotASpectralFamily),
                          f"{t!r}: {values} failed to induce a family")
                if isinstance(e, top.NotASpectralFamily):
                    continue
                if cont:
                    sr, witness = top.is_strongly_regular(t, e)
                    res.check(sr, f"{t!r}: continuous {values} gave a family "
                                  f"that is not strongly regular at {witness}")
                    res.check(top.admissible_domain(t, e) == t.full,
                              f"{t!r}: admissible domain not the whole space")
                    res.check(top.induced_function(t, e) == values,
                              f"{t!r}: induced function differs from {values}")
            # the family-side direction quantifies over all bounded families
            for e in fam.enumerate_families(lat, GRID3):
                sr, _ = top.is_strongly_regular(t, e)
                dom = top.admissible_domain(t, e)
                masks = [lat.payload[v] for v in e.values]
                res.check(dom == t.full, f"{t!r}: bounded family with partial domain")
                res.check(all(o & dom for o in t.opens if o),
                          f"{t!r}: domain of {e!r} is not dense")
                if sr:
                    res.check(dom in t.opens,
                              f"{t!r}: domain of strongly regular {e!r} is not open")
                    induced = top.induced_function(t, e)
                    res.check(top.is_continuous(t, induced),
                              f"{t!r}: strongly regular {e!r} induced a "
                              f"discontinuous function {induced}")
                    back = top.spectral_family_of_continuous(t, induced)
                    res.check(back == e,
                              f"{t!r}: restriction identity fails for {e!r}")
                    res.check(all(t.is_regular_open(m) for m in masks),
                              f"{t!r}: strongly regular {e!r} has a non-regular value")
                    sp = fam.spectrum_of(e).spectrum
                    res.check(tuple(sorted(set(induced))) == sp,
                              f"{t!r}: spectrum of {e!r} differs from the image closure")
    # a two-point discrete space: the indicator of a clopen piece jumps at 1
    disc = top.TopSpace.discrete(("1", "2"))
    e = top.spectral_family_of_continuous(disc, (Fraction(1), Fraction(0)))
    res.check(e.thresholds == (Fraction(0), Fraction(1))
              and e.eval(1 - Fraction(1, 1000)) != e.eval(1)
              and top.is_strongly_regular(disc, e)[0],
              "clopen indicator family should be strongly regular with a left jump at 1")
    found = _regular_not_strongly_regular(n_max)
    if found is None:
        res.notes.append("regular-but-not-strongly-regular family: no witness at scale")
    else:
        t, e = found
        res.check(top.classify_family(t, e) == "regular",
                  f"witness search returned a non-witness on {t!r}")
        res.notes.append(f"regular-but-not-strongly-regular witness on {t!r}: {e!r}")
    return res


def _regular_not_strongly_regular(n_max: int):
    for n in range(1, n_max + 1):
        for t in top.all_topologies(n):
            for values in product(GRID3, repeat=n):
                e = top.spectral_family_of_continuous(t, values)
                if isinstance(e, top.NotASpectralFamily):
                    continue
                if top.classify_family(t, e) == "regular":
                    return t, e
    return None


# --- quotient algebras and the induced transform --------------------------------


def suite_quotient(max_size: int = 4, seed: int = 0) -> SuiteResult:
    """All ideals of the power set on four points: dual-filter laws, the
    kernel law, representative independence and the lift round trip."""
    res = SuiteResult("quotient")
    n = min(4, max_size)
    f = mea.FieldOfSets.from_partition(_ground(n), [[p] for p in _ground(n)])
    space = f.stone()
    lat = f.lattice()
    ideals = mea.ideals_of(f)
    res.notes.append(f"{len(ideals)} ideals of the power set on {n} points")
    for ideal in ideals:
        q = mea.quotient(f, ideal)
        perp = set(ideal.perp_members())
        embedded = q.embedded_point_indices()
        # the dual filter is the intersection of the quasipoints containing it
        acc = None
        for k in embedded:
            members = {lat.payload[e] for e in bits(space.points[k])}
            acc = members if acc is None else acc & members
        res.check(acc == perp,
                  f"ideal {ideal!r}: quasipoint intersection differs from the dual filter")
        for a, b in product(perp, repeat=2):
            res.check(a & b in perp,
                      f"ideal {ideal!r}: dual filter not closed under intersection")
        # quotient quasipoints biject with the embedded ones, member-compatibly
        res.check(len(embedded) == q.stone().n_points,
                  f"ideal {ideal!r}: embedding is not a bijection")
        for j, k in enumerate(embedded):
            for m in f.members():
                in_original = bool(space.points[k] >> f.element_of(m) & 1)
                rm = q.class_of(m)
                in_quotient = bool(
                    q.stone().points[j] >> q.reduced.element_of(rm) & 1)
                res.check(in_original == in_quotient,
                          f"ideal {ideal!r}: membership mismatch for {f.set_name(m)}")
        # kernel law and representative independence over the value grid
        for assignment in product(GRID3, repeat=len(f.atoms)):
            values = [None] * n
            for a, v in zip(f.atoms, assignment):
                for p in bits(a):
                    values[p] = v
            phi = mea.MeasurableFunction(f, values)
            g = mea.gamma_transform(phi, q)
            vanishes = all(v == 0 for v in g.values)
            outside = all(values[p] == 0 for p in bits(q.survivors))
            res.check(vanishes == outside,
                      f"ideal {ideal!r}: kernel law fails for {phi!r}")
            psi_values = list(values)
            for p in bits(ideal.mask):
                psi_values[p] = values[p] + 1  # change only inside the ideal
            if ideal.mask:
                psi = mea.MeasurableFunction(f, psi_values)
                res.check(mea.gamma_transform(psi, q) == g,
                          f"ideal {ideal!r}: representative dependence for {phi!r}")
        # lift round trip on every bounded family of the quotient
        for e in fam.enumerate_families(q.lattice(), GRID3):
            phi = mea.lift_spectral_family(q, e)
            back = mea.spectral_family_of(phi)
            lifted_ok = all(
                q.class_of(lat.payload[back.eval(t)]) ==
                q.reduced.lattice().payload[e.eval(t)]
                for t in (Fraction(-1),) + GRID3)
            res.check(lifted_ok, f"ideal {ideal!r}: lifted family has wrong classes")
            res.check(mea.gamma_transform(phi, q) ==
                      fam.observable_function(e, q.stone()),
                      f"ideal {ideal!r}: lift-then-transform differs from f_E")
    return res


# --- the completely increasing calculus ------------------------------------------


def suite_increasing(max_size: int = 4, seed: int = 0) -> SuiteResult:
    """Closure law and complete distributivity for every regular-open algebra
    on up to four points; complete monotonicity for seeded functions; the
    infimum condition coincides with fibre-constancy on discrete spaces."""
    res = SuiteResult("increasing-calculus")
    rng = random.Random(seed)
    spaces = []
    for n in range(1, min(4, max_size) + 1):
        spaces.extend(top.all_topologies(n))
    res.notes.append(f"{len(spaces)} topologies, seed {seed}, 100 seeded functions")
    for t in spaces:
        lat = t.r_lattice()
        ok, witness = is_completely_distributive(lat)
        res.check(ok, f"{t!r}: closure law fails for the family {witness}")
    for i in range(100):
        t = spaces[i % len(spaces)]
        lat = t.r_lattice()
        st = stone_space(lat)
        g = fam.ObservableFunction(
            st, [Fraction(rng.randint(-6, 6), rng.choice((1, 2, 3)))
                 for _ in range(st.n_points)])
        r = top.r_function(t, g)
        ok, witness = top.completely_increasing_check(lat, r)
        res.check(ok, f"{t!r}: r_g not completely increasing at {witness}")
    for n in range(1, min(4, max_size) + 1):
        t = top.TopSpace.discrete(_ground(n))
        p = top.pt_structure(t)
        st = stone_space(t.r_lattice())
        grid_fns = product((Fraction(0), Fraction(1), HALF), repeat=st.n_points) \
            if st.n_points <= 3 else \
            [tuple(Fraction(rng.randint(0, 4), 2) for _ in range(st.n_points))
             for _ in range(30)]
        for values in grid_fns:
            g = fam.ObservableFunction(st, values)
            stars, _ = top.star_condition_check(t, g)
            # on a discrete space the regular opens are all sets, so the
            # spectra coincide and the fibre test applies verbatim
            member = top.cpt_membership(p, fam.ObservableFunction(p.stone, values))
            res.check(stars == member,
                      f"discrete({n}): infimum condition and fibre test disagree "
                      f"for {values}")
    return res


# --- the point-fibre function algebra ---------------------------------------------


def suite_point_iso(max_size: int = 4, seed: int = 0) -> SuiteResult:
    """On discrete spaces the transform from bounded point functions is a
    norm-preserving *-isomorphism onto the functions on the spectrum, and the
    spectrum reproduces the space."""
    res = SuiteResult("point-isomorphism")
    rng = random.Random(seed)
    for n in range(1, min(5, max_size) + 1):
        t = top.TopSpace.discrete(_ground(n))
        st = stone_space(t.lattice())
        p = top.pt_structure(t)
        res.check(st.n_points == n, f"discrete({n}): spectrum size {st.n_points}")
        res.check(p.pt is not None and sorted(p.pt.values()) == list(range(n)),
                  f"discrete({n}): fibre map is not a bijection")
        res.check(top.identification_check(p),
                  f"discrete({n}): identification topology differs")
        res.check(top.covers_spectrum(p),
                  f"discrete({n}): some quasipoint lies over no point")
        qp_over = {x: k for k, x in p.pt.items()}

        small = (Fraction(0), Fraction(1))
        target_count = 0
        for re_im in product(product(small, repeat=2), repeat=n):
            re = [v[0] for v in re_im]
            im = [v[1] for v in re_im]
            g = fam.ComplexObservableFunction(
                fam.ObservableFunction(st, re), fam.ObservableFunction(st, im))
            # the only candidate source: the point function read off the fibres
            phi_re = [g.re.values[qp_over[x]] for x in range(n)]
            phi_im = [g.im.values[qp_over[x]] for x in range(n)]
            back = top.f_star(t, phi_re, phi_im)
            res.check(back == g, f"discrete({n}): transform misses the target {re}+i{im}")
            res.check(top.cpt_membership(p, g.re) and top.cpt_membership(p, g.im),
                      f"discrete({n}): target not fibre-constant")
            target_count += 1
        res.notes.append(f"discrete({n}): {target_count} exhaustive surjectivity targets")
        for _ in range(25):
            re1 = [Fraction(rng.randint(-4, 4), rng.choice((1, 2))) for _ in range(n)]
            im1 = [Fraction(rng.randint(-4, 4), rng.choice((1, 2))) for _ in range(n)]
            re2 = [Fraction(rng.randint(-4, 4), rng.choice((1, 2))) for _ in range(n)]
            im2 = [Fraction(rng.randint(-4, 4), rng.choice((1, 2))) for _ in range(n)]
            g1 = top.f_star(t, re1, im1)
            g2 = top.f_star(t, re2, im2)
            for k in range(n):
                x = p.pt[k]
                res.check(g1.value(k) == (re1[x], im1[x]),
                          f"discrete({n}): value at the quasipoint over {t.points[x]} "
                          f"differs from the point value")
            s_re = [a + b for a, b in zip(re1, re2)]
            s_im = [a + b for a, b in zip(im1, im2)]
            res.check(top.f_star(t, s_re, s_im) == g1 + g2,
                      f"discrete({n}): additivity fails")
            p_re = [a * c - b * d for a, b, c, d in zip(re1, im1, re2, im2)]
            p_im = [a * d + b * c for a, b, c, d in zip(re1, im1, re2, im2)]
            res.check(top.f_star(t, p_re, p_im) == g1 * g2,
                      f"discrete({n}): multiplicativity fails")
            res.check(top.f_star(t, re1, [-v for v in im1]) == g1.conj(),
                      f"discrete({n}): conjugation fails")
            norm_m = max(a * a + b * b for a, b in zip(re1, im1))
            res.check(g1.sup_norm_squared() == norm_m,
                      f"discrete({n}): sup norm not preserved")
    return res


# --- the counterexample battery -----------------------------------------------------


def suite_counterexamples(max_size: int = 4, seed: int = 0) -> SuiteResult:
    """Named negative cases: the two-point non-discrete space, the six-element
    orthomodular non-distributive lattice and the one-quasipoint chain."""
    res = SuiteResult("counterexamples")
    sierp = top.TopSpace.from_sets(("1", "2"), [[], ["1"], ["1", "2"]])
    e = top.spectral_family_of_continuous(sierp, (Fraction(0), Fraction(1)))
    sr, witness = top.is_strongly_regular(sierp, e)
    res.check(not sr and witness == (Fraction(0), HALF),
              f"two-point space: expected witness (0, 1/2), got {witness}")
    induced = top.induced_function(sierp, e)
    res.check(not top.is_continuous(sierp, induced),
              "two-point space: induced function should not be continuous")
    res.notes.append(f"two-point space witness pair: {witness}")

    mo2 = mo_lattice(2)
    ok, w1 = mo2.is_distributive()
    res.check(not ok and w1 is not None, "MO(2) should fail distributivity")
    ok2, w2 = is_completely_distributive(mo2)
    res.check(not ok2 and set(w2) == {"a", "a'"},
              f"MO(2) complete distributivity witness should be a, a', got {w2}")
    res.notes.append(f"MO(2) witnesses: distributivity {w1}, closure law {w2}")

    c3 = chain_lattice(3)
    space = stone_space(c3)
    res.check(space.n_points == 1,
              f"chain(3) should have exactly 1 quasipoint, got {space.n_points}")
    res.check(space.points[0] == (1 << c3.eid("m1")) | (1 << c3.eid("1")),
              "chain(3) quasipoint should be the filter of the middle element")
    res.check(dual_ideal_intersection_law(c3, "m1")
              and not dual_ideal_intersection_law(c3, "1"),
              "chain(3) intersection law should hold at the atom and fail at the top")
    return res


SUITES = {
    "bijection": suite_bijection,
    "injectivity": suite_injectivity,
    "continuity": suite_continuity,
    "complex-decomposition": suite_complex,
    "spectral-theorem": suite_spectral_theorem,
    "continuous-correspondence": suite_correspondence,
    "quotient": suite_quotient,
    "increasing-calculus": suite_increasing,
    "point-isomorphism": suite_point_iso,
    "counterexamples": suite_counterexamples,
}


def run_suite(name: str, max_size: int = 4, seed: int = 0) -> SuiteResult:
    try:
        suite = SUITES[name]
    except KeyError:
        raise InputError(f"unknown suite {name!r}; choose from "
                         + ", ".join(sorted(SUITES)) + ", all") from None
    return suite(max_size=max_size, seed=seed)
