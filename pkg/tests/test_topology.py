"""Finite spaces, regular opens, strong regularity, quasipoints over points
and the completely increasing calculus."""

from fractions import Fraction
from itertools import product

import pytest

from stonespec import (InputError, ObservableFunction, SpectralFamily,
                       TopSpace, UnsupportedStructureError, admissible_domain,
                       all_topologies, classify_family,
                       completely_increasing_check, cpt_membership, f_star,
                       identification_check, induced_function, is_continuous,
                       is_strongly_regular, pt_structure, r_function,
                       spectral_family_of_continuous, star_condition_check,
                       stone_space)
from stonespec.lattice import bits
from stonespec.topology import NotASpectralFamily, covers_spectrum

HALF = Fraction(1, 2)


def sierpinski():
    return TopSpace.from_sets(("1", "2"), [[], ["1"], ["1", "2"]])


def oracle_interior(space, x):
    """Union of the opens inside x, scanning the declared family."""
    acc = 0
    for o in space.opens:
        if o & ~x == 0:
            acc |= o
    return acc


class TestSpaceBasics:
    def test_closure_laws_not_satisfied_raises(self):
        with pytest.raises(InputError):
            TopSpace.from_sets(("1", "2"), [[], ["1", "2"], ["1"]][:2][:1])
        with pytest.raises(InputError):
            TopSpace.from_sets(("1", "2", "3"),
                               [[], ["1"], ["2"], ["1", "2", "3"]])  # no {1,2}

    def test_interior_closure_pseudocomplement(self):
        s = sierpinski()
        one = s.mask_of(["1"])
        assert s.closure(one) == s.full
        assert s.interior(s.full) == s.full
        assert s.pseudocomplement(one) == 0
        two = s.mask_of(["2"])
        assert s.interior(two) == 0
        assert s.closure(two) == two

    def test_interior_matches_oracle_on_all_subsets(self):
        for n in (2, 3):
            for s in all_topologies(n):
                for x in range(s.full + 1):
                    assert s.interior(x) == oracle_interior(s, x)
                    assert s.closure(x) == s.full ^ oracle_interior(s, s.full ^ x)

    def test_discrete_detection(self):
        assert TopSpace.discrete(("1", "2")).is_discrete
        assert not sierpinski().is_discrete


class TestRegularOpens:
    def test_discrete_regulars_are_all_sets(self):
        d = TopSpace.discrete(("1", "2"))
        assert len(d.regular_opens()) == 4
        assert d.r_lattice().validate().ok

    def test_sierpinski_regulars_collapse(self):
        s = sierpinski()
        assert set(s.regular_opens()) == {0, s.full}

    def test_three_point_example(self):
        t = TopSpace.from_sets(("1", "2", "3"),
                               [[], ["1"], ["2"], ["1", "2"], ["1", "2", "3"]])
        regs = {t.set_name(m) for m in t.regular_opens()}
        assert regs == {"{}", "{1}", "{2}", "{1,2,3}"}
        lat = t.r_lattice()
        assert lat.validate().ok and lat.is_distributive()[0]

    def test_regular_scan_oracle(self):
        for n in (2, 3):
            for t in all_topologies(n):
                for o in t.opens:
                    want = t.interior(t.closure(o)) == o
                    assert t.is_regular_open(o) == want

    def test_regular_join_is_interior_closure_of_union(self):
        for t in all_topologies(3):
            lat = t.r_lattice()
            for a in range(lat.n):
                for b in range(lat.n):
                    join_mask = lat.payload[lat.join2(a, b)]
                    assert join_mask == t.interior(
                        t.closure(lat.payload[a] | lat.payload[b]))
                    meet_mask = lat.payload[lat.meet2(a, b)]
                    assert meet_mask == lat.payload[a] & lat.payload[b]


class TestContinuity:
    def test_constant_is_continuous(self):
        assert is_continuous(sierpinski(), (3, 3))

    def test_sierpinski_steps_not_continuous(self):
        # any non-constant function has {2} as some interval preimage,
        # and {2} is not open, so only constants are continuous here
        assert not is_continuous(sierpinski(), (0, 1))
        assert not is_continuous(sierpinski(), (1, 0))

    def test_discrete_everything_continuous(self):
        d = TopSpace.discrete(("1", "2", "3"))
        for values in product((0, HALF, 1), repeat=3):
            assert is_continuous(d, values)


class TestInducedFamilies:
    def test_constant_function(self):
        s = sierpinski()
        e = spectral_family_of_continuous(s, (2, 2))
        assert e.thresholds == (Fraction(2),)
        assert is_strongly_regular(s, e)[0]

    def test_discrete_two_point(self):
        d = TopSpace.discrete(("1", "2"))
        e = spectral_family_of_continuous(d, (0, 1))
        lat = d.lattice()
        assert [lat.payload[v] for v in e.values] == [d.mask_of(["1"]), d.full]
        assert is_strongly_regular(d, e)[0]

    def test_sierpinski_witness(self):
        s = sierpinski()
        e = spectral_family_of_continuous(s, (0, 1))
        ok, witness = is_strongly_regular(s, e)
        assert not ok and witness == (0, HALF)
        assert induced_function(s, e) == (0, 1)
        assert not is_continuous(s, induced_function(s, e))

    def test_admissible_domain_is_everything(self):
        s = sierpinski()
        e = spectral_family_of_continuous(s, (0, 1))
        assert admissible_domain(s, e) == s.full

    def test_classification(self):
        s = sierpinski()
        e = spectral_family_of_continuous(s, (0, 1))
        assert classify_family(s, e) == "neither"  # {1} is not regular open
        t = TopSpace.from_sets(("1", "2", "3"),
                               [[], ["1"], ["2"], ["1", "2"], ["1", "2", "3"]])
        lat = t.lattice()
        e2 = SpectralFamily(lat, [(0, lat.payload.index(t.mask_of(["1"]))),
                                  (1, lat.top)])
        assert classify_family(t, e2) == "regular"  # {1} regular but not closed
        d = TopSpace.discrete(("1", "2"))
        e3 = spectral_family_of_continuous(d, (0, 1))
        assert classify_family(d, e3) == "strongly-regular"

    def test_strong_regularity_equals_all_values_closed(self):
        for t in all_topologies(3):
            lat = t.lattice()
            from stonespec import enumerate_families
            for e in enumerate_families(lat, (0, 1)):
                masks = [lat.payload[v] for v in e.values]
                want = all(t.closure(m) == m for m in masks)
                assert is_strongly_regular(t, e)[0] == want

    def test_correspondence_both_ways_small(self):
        from stonespec import enumerate_families
        for t in all_topologies(3):
            lat = t.lattice()
            for values in product((0, HALF, 1), repeat=3):
                e = spectral_family_of_continuous(t, values)
                assert not isinstance(e, NotASpectralFamily)
                if is_continuous(t, values):
                    assert is_strongly_regular(t, e)[0]
                    assert induced_function(t, e) == tuple(Fraction(v) for v in values)
            for e in enumerate_families(lat, (0, 1)):
                if is_strongly_regular(t, e)[0]:
                    ind = induced_function(t, e)
                    assert is_continuous(t, ind)
                    assert spectral_family_of_continuous(t, ind) == e


class TestPtStructure:
    def test_discrete_fibres_are_singletons(self):
        d = TopSpace.discrete(("1", "2", "3"))
        p = pt_structure(d)
        assert p.pt is not None
        assert sorted(p.pt.values()) == [0, 1, 2]
        for mask in p.q_x:
            assert bin(mask).count("1") == 1
        assert covers_spectrum(p)
        assert identification_check(p)

    def test_sierpinski_multivalued(self):
        s = sierpinski()
        p = pt_structure(s)
        assert p.pt is None
        # the unique quasipoint (filter of {1}) lies over both points
        assert p.q_x == (1, 1)
        assert covers_spectrum(p)

    def test_every_finite_space_is_covered(self):
        for n in (1, 2, 3):
            for t in all_topologies(n):
                assert covers_spectrum(pt_structure(t))

    def test_identification_on_discrete_sizes(self):
        for n in (1, 2, 3, 4):
            assert identification_check(pt_structure(TopSpace.discrete(
                tuple(str(i) for i in range(n)))))


class TestCptAndFStar:
    def test_membership_trivial_on_discrete(self):
        d = TopSpace.discrete(("1", "2"))
        p = pt_structure(d)
        st = stone_space(d.lattice())
        for values in product((0, 1), repeat=2):
            assert cpt_membership(p, ObservableFunction(st, values))

    def test_non_hausdorff_rejected(self):
        s = sierpinski()
        p = pt_structure(s)
        g = ObservableFunction(stone_space(s.lattice()), [0])
        with pytest.raises(UnsupportedStructureError):
            cpt_membership(p, g)

    def test_f_star_constant(self):
        d = TopSpace.discrete(("1", "2", "3"))
        g = f_star(d, (Fraction(4), Fraction(4), Fraction(4)))
        assert set(g.values) == {Fraction(4)}

    def test_f_star_reads_point_values_on_fibres(self):
        d = TopSpace.discrete(("1", "2", "3", "4"))
        p = pt_structure(d)
        re = [Fraction(k, 2) for k in (0, 1, 2, 3)]
        im = [Fraction(k, 3) for k in (3, 1, 0, 2)]
        g = f_star(d, re, im)
        for k, x in p.pt.items():
            assert g.value(k) == (re[x], im[x])

    def test_f_star_homomorphism_exhaustive_small(self):
        d = TopSpace.discrete(("1", "2"))
        vals = (Fraction(0), Fraction(1))
        for re1 in product(vals, repeat=2):
            for re2 in product(vals, repeat=2):
                g1 = f_star(d, re1, (0, 0))
                g2 = f_star(d, re2, (0, 0))
                s = [a + b for a, b in zip(re1, re2)]
                m = [a * b for a, b in zip(re1, re2)]
                assert f_star(d, s, (0, 0)) == g1 + g2
                assert f_star(d, m, (0, 0)) == g1 * g2


class TestIncreasingCalculus:
    def test_r_of_constant(self):
        d = TopSpace.discrete(("1", "2", "3"))
        st = stone_space(d.r_lattice())
        g = ObservableFunction(st, [Fraction(5)] * st.n_points)
        r = r_function(d, g)
        assert set(r.values()) == {Fraction(5)}
        assert completely_increasing_check(d.r_lattice(), r)[0]
        assert star_condition_check(d, g)[0]

    def test_r_is_max_over_base(self):
        d = TopSpace.discrete(("1", "2", "3"))
        lat = d.r_lattice()
        st = stone_space(lat)
        g = ObservableFunction(st, [Fraction(0), Fraction(2), Fraction(1)])
        r = r_function(d, g)
        for e, val in r.items():
            assert val == max(g.values[k] for k in bits(st.base[e]))

    def test_completely_increasing_for_induced_functions(self):
        for t in all_topologies(3):
            lat = t.r_lattice()
            st = stone_space(lat)
            for values in product((0, 1), repeat=st.n_points):
                g = ObservableFunction(st, values)
                ok, witness = completely_increasing_check(lat, r_function(t, g))
                assert ok, (t, values, witness)

    def test_star_condition_matches_membership_on_discrete(self):
        for n in (1, 2, 3):
            d = TopSpace.discrete(tuple(str(i) for i in range(n)))
            p = pt_structure(d)
            st = stone_space(d.r_lattice())
            for values in product((0, HALF, 1), repeat=st.n_points):
                g = ObservableFunction(st, values)
                member = cpt_membership(p, ObservableFunction(p.stone, values))
                assert star_condition_check(d, g)[0] == member


class TestAllTopologies:
    def test_counts(self):
        assert len(all_topologies(1)) == 1
        assert len(all_topologies(2)) == 4
        assert len(all_topologies(3)) == 29
        assert len(all_topologies(4)) == 355

    def test_oracle_brute_force_on_three_points(self):
        # every union/intersection-closed family containing {} and M
        full = 0b111
        subsets = list(range(8))
        count = 0
        for pick in range(1 << 8):
            fam = {s for s in subsets if pick >> s & 1}
            if 0 not in fam or full not in fam:
                continue
            if all(a | b in fam and a & b in fam for a in fam for b in fam):
                count += 1
        assert count == 29

    def test_all_results_valid_and_distinct(self):
        tops = all_topologies(3)
        seen = {t.opens for t in tops}
        assert len(seen) == 29

    def test_size_cap(self):
        with pytest.raises(InputError):
            all_topologies(5)
