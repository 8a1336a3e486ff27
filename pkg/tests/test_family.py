"""Spectral families, observable functions, the transferred algebra,
two-parameter families and step-sum integration."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stonespec import (ComplexSpectralFamily, InputError, InvalidFamilyError,
                       ObservableFunction, SpectralFamily,
                       UnsupportedStructureError, boolean_lattice,
                       chain_lattice, decompose, enumerate_families,
                       from_observable_function, mo_lattice,
                       observable_function, observable_function_complex,
                       product_family, riemann_stieltjes, spectralize,
                       spectrum_of, stone_space)
from stonespec import family as fam

HALF = Fraction(1, 2)


class TestEval:
    def test_step_semantics(self):
        mo2 = mo_lattice(2)
        e = SpectralFamily(mo2, [(0, "a"), (1, "1")])
        assert e.eval(HALF) == mo2.eid("a")
        assert e.eval(0) == mo2.eid("a")
        assert e.eval(-7) == mo2.bottom
        assert e.eval(1) == mo2.eid("1")
        assert e.eval(100) == mo2.eid("1")

    def test_windowed_floor_family(self):
        # jumps drawn from t -> (-inf, floor(t)) over the points -1/2, 1/2, 3/2:
        # empty below 0, then {-1/2}, then {-1/2, 1/2}, then everything
        b3 = boolean_lattice(3)  # atoms x ~ -1/2, y ~ 1/2, z ~ 3/2
        e = SpectralFamily(b3, [(0, "x"), (1, "xy"), (2, "1")])
        assert b3.names[e.eval(Fraction(12, 10))] == "xy"
        assert e.eval(Fraction(-1, 2)) == b3.bottom
        assert b3.names[e.eval(2)] == "1"

    def test_canonical_form_drops_vacuous_jumps(self):
        b2 = boolean_lattice(2)
        e = SpectralFamily(b2, [(-1, "0"), (0, "x"), (HALF, "x"), (1, "1")])
        assert e.thresholds == (Fraction(0), Fraction(1))
        assert [b2.names[v] for v in e.values] == ["x", "1"]

    def test_invalid_families_rejected(self):
        b2 = boolean_lattice(2)
        with pytest.raises(InvalidFamilyError):
            SpectralFamily(b2, [(1, "x"), (0, "1")])  # thresholds not increasing
        with pytest.raises(InvalidFamilyError):
            SpectralFamily(b2, [(0, "x"), (1, "y")])  # values not monotone
        with pytest.raises(InvalidFamilyError):
            SpectralFamily(b2, [(0, "x")])  # not bounded above
        with pytest.raises(InvalidFamilyError):
            SpectralFamily(b2, [])

    def test_floats_rejected(self):
        with pytest.raises(InputError):
            SpectralFamily(boolean_lattice(2), [(0.5, "1")])


class TestObservableFunction:
    def test_mo2_example(self):
        mo2 = mo_lattice(2)
        space = stone_space(mo2)
        g = observable_function(SpectralFamily(mo2, [(0, "a"), (1, "1")]), space)
        assert g.as_dict() == {"Q{a,1}": 0, "Q{a',1}": 1, "Q{b,1}": 1, "Q{b',1}": 1}

    def test_constant_jump(self):
        mo2 = mo_lattice(2)
        g = observable_function(SpectralFamily(mo2, [(Fraction(3, 2), "1")]))
        assert set(g.values) == {Fraction(3, 2)}

    def test_boolean_matches_atom_values(self):
        b2 = boolean_lattice(2)
        g = observable_function(SpectralFamily(b2, [(0, "x"), (1, "1")]))
        assert g.as_dict() == {"Q{x,1}": 0, "Q{y,1}": 1}

    def test_inf_characterization(self):
        # f_E(B) <= t iff E(u) in B for every u > t; probe around thresholds
        for lat in (mo_lattice(2), boolean_lattice(2)):
            space = stone_space(lat)
            for e in enumerate_families(lat, (0, 1, 2)):
                g = observable_function(e, space)
                for k, members in enumerate(space.points):
                    for t in (Fraction(-1), Fraction(0), HALF, Fraction(1),
                              Fraction(3, 2), Fraction(2)):
                        probes = [t + Fraction(1, q) for q in (2, 3, 7)] + [t + 1, t + 3]
                        rhs = all(members >> e.eval(u) & 1 for u in probes)
                        assert (g.values[k] <= t) == rhs

    def test_mismatched_space_rejected(self):
        e = SpectralFamily(mo_lattice(2), [(0, "1")])
        with pytest.raises(InputError):
            observable_function(e, stone_space(boolean_lattice(2)))


class TestInverseTransform:
    def test_two_atom_example(self):
        b2 = boolean_lattice(2)
        space = stone_space(b2)
        g = ObservableFunction(space, [0, 1])  # Q{x,1} -> 0, Q{y,1} -> 1
        e = from_observable_function(g)
        assert e == SpectralFamily(b2, [(0, "x"), (1, "1")])

    def test_constant(self):
        b2 = boolean_lattice(2)
        g = ObservableFunction(stone_space(b2), [Fraction(5), Fraction(5)])
        assert from_observable_function(g) == SpectralFamily(b2, [(5, "1")])

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.sampled_from([Fraction(0), HALF, Fraction(1)]),
                    min_size=3, max_size=3))
    def test_roundtrip_is_identity_on_boolean3(self, values):
        b3 = boolean_lattice(3)
        space = stone_space(b3)
        g = ObservableFunction(space, values)
        assert observable_function(from_observable_function(g), space) == g

    def test_every_family_roundtrips(self):
        for n in (1, 2, 3):
            lat = boolean_lattice(n)
            space = stone_space(lat)
            for e in enumerate_families(lat, (0, HALF, 1)):
                assert from_observable_function(observable_function(e, space)) == e

    def test_non_boolean_rejected(self):
        mo2 = mo_lattice(2)
        g = observable_function(SpectralFamily(mo2, [(0, "1")]))
        with pytest.raises(UnsupportedStructureError):
            from_observable_function(g)
        c3 = chain_lattice(3)
        g2 = observable_function(SpectralFamily(c3, [(0, "1")]))
        with pytest.raises(UnsupportedStructureError):
            from_observable_function(g2)


class TestTransferredAlgebra:
    def test_additive_identity(self):
        b2 = boolean_lattice(2)
        e = SpectralFamily(b2, [(0, "x"), (1, "1")])
        zero = SpectralFamily(b2, [(0, "1")])
        assert fam.add(e, zero) == e

    def test_star_is_identity_on_real_families(self):
        b2 = boolean_lattice(2)
        e = SpectralFamily(b2, [(0, "x"), (1, "1")])
        assert fam.star(e) == e

    def test_product_of_complementary_indicators_vanishes(self):
        b2 = boolean_lattice(2)
        e = SpectralFamily(b2, [(0, "x"), (1, "1")])  # atom values (0, 1)
        f = SpectralFamily(b2, [(0, "y"), (1, "1")])  # atom values (1, 0)
        assert fam.mul(e, f) == SpectralFamily(b2, [(0, "1")])

    def test_ring_laws_exhaustively(self):
        b2 = boolean_lattice(2)
        families = enumerate_families(b2, (0, 1))
        for e in families:
            for f in families:
                assert fam.add(e, f) == fam.add(f, e)
                assert fam.mul(e, f) == fam.mul(f, e)
                for g in families:
                    assert fam.add(fam.add(e, f), g) == fam.add(e, fam.add(f, g))
                    assert fam.mul(fam.mul(e, f), g) == fam.mul(e, fam.mul(f, g))
                    assert fam.mul(e, fam.add(f, g)) == \
                        fam.add(fam.mul(e, f), fam.mul(e, g))

    def test_scale_and_norm(self):
        b2 = boolean_lattice(2)
        e = SpectralFamily(b2, [(-2, "x"), (1, "1")])
        assert fam.sup_norm(e) == 2
        assert fam.sup_norm(fam.scale(HALF, e)) == 1


class TestSpectrum:
    def test_jump_set(self):
        mo2 = mo_lattice(2)
        d = spectrum_of(SpectralFamily(mo2, [(0, "a"), (1, "1")]))
        assert d.spectrum == (Fraction(0), Fraction(1))
        assert d.resolvent == ((None, Fraction(0)), (Fraction(0), Fraction(1)),
                               (Fraction(1), None))

    def test_constant_jump(self):
        d = spectrum_of(SpectralFamily(boolean_lattice(2), [(Fraction(7, 2), "1")]))
        assert d.spectrum == (Fraction(7, 2),)

    def test_spectrum_equals_image_of_induced_function_on_fields(self):
        from stonespec import FieldOfSets, function_of
        f = FieldOfSets.from_partition(("p", "q", "r"), [["p"], ["q"], ["r"]])
        for e in enumerate_families(f.lattice(), (0, HALF, 1)):
            image = sorted(set(function_of(f, e).values))
            assert tuple(image) == spectrum_of(e).spectrum


class TestSpectralize:
    def test_idempotent_on_canonical_families(self):
        mo2 = mo_lattice(2)
        e = SpectralFamily(mo2, [(0, "a"), (1, "1")])
        assert spectralize(mo2, e) is e
        assert spectralize(mo2, list(zip(e.thresholds, e.values))) == e

    def test_open_convention_single_jump(self):
        b2 = boolean_lattice(2)
        e = spectralize(b2, [(Fraction(3), "1")])
        assert e.eval(3) == b2.top and e.eval(3 - Fraction(1, 100)) == b2.bottom

    def test_strict_level_sets_spectralize_to_the_closed_family(self):
        # pairs (t, preimage of (-inf, t)) reinterpreted match the level-set family
        from stonespec import (FieldOfSets, MeasurableFunction,
                               spectral_family_of)
        f = FieldOfSets.from_partition(("p", "q", "r", "s"),
                                       [["p"], ["q"], ["r"], ["s"]])
        lat = f.lattice()
        for values in [(0, 0, 1, 2), (1, 1, 1, 1), (0, HALF, HALF, 3)]:
            phi = MeasurableFunction(f, [Fraction(v) for v in values])
            pairs = []
            for t in sorted(set(phi.values)):
                below = 0
                for i, v in enumerate(phi.values):
                    if v < t:
                        below |= 1 << i
                pairs.append((t, lat.payload.index(below)))
            # the strict level set at each threshold is the closed level set
            # of the previous step; on reinterpretation they coincide
            strict = [(t, m) for (t, _), (_, m) in zip(pairs, pairs[1:])]
            strict.append((pairs[-1][0], lat.top))
            got = spectralize(lat, strict)
            assert got == spectral_family_of(phi)

    def test_non_monotone_rejected(self):
        with pytest.raises(InvalidFamilyError):
            spectralize(boolean_lattice(2), [(0, "x"), (1, "y")])


def oracle_decompositions(e, candidates):
    """Brute force: all component pairs whose product equals the family."""
    return [(f1, f2) for f1 in candidates for f2 in candidates
            if product_family(f1, f2) == e]


class TestComplexFamilies:
    def test_meet_law_enforced(self):
        b2 = boolean_lattice(2)
        with pytest.raises(InvalidFamilyError):
            # row and column values meet to x, not to the claimed bottom
            ComplexSpectralFamily(b2, (0, 1), (0, 1), [["0", "x"], ["x", "1"]])
        with pytest.raises(InvalidFamilyError):
            # x & y = 0 but the low corner claims x
            ComplexSpectralFamily(b2, (0, 1), (0, 1), [["x", "x"], ["y", "1"]])

    def test_corner_must_be_top(self):
        b2 = boolean_lattice(2)
        with pytest.raises(InvalidFamilyError):
            ComplexSpectralFamily(b2, (0,), (0,), [["x"]])

    def test_eval(self):
        b2 = boolean_lattice(2)
        e = ComplexSpectralFamily(b2, (0, 1), (0, 1),
                                  [["0", "x"], ["y", "1"]])
        assert e.eval(-1, 5) == b2.bottom
        assert b2.names[e.eval(0, 1)] == "x"
        assert b2.names[e.eval(1, 0)] == "y"
        assert b2.names[e.eval(5, 5)] == "1"

    def test_roundtrip_from_components(self):
        mo2 = mo_lattice(2)
        e1 = SpectralFamily(mo2, [(0, "a"), (1, "1")])
        e2 = SpectralFamily(mo2, [(HALF, "a"), (2, "1")])
        e = product_family(e1, e2)
        d1, d2 = decompose(e)
        assert (d1, d2) == (e1, e2)

    def test_exhaustive_decomposition_uniqueness_on_boolean2(self):
        b2 = boolean_lattice(2)
        candidates = enumerate_families(b2, (0, 1))
        for v12 in range(b2.n):
            for v21 in range(b2.n):
                matrix = [[b2.meet2(v12, v21), v12], [v21, b2.top]]
                e = ComplexSpectralFamily(b2, (0, 1), (0, 1), matrix)
                e1, e2 = decompose(e)
                assert product_family(e1, e2) == e
                assert oracle_decompositions(e, candidates) == [(e1, e2)]

    def test_component_functions(self):
        mo2 = mo_lattice(2)
        space = stone_space(mo2)
        e1 = SpectralFamily(mo2, [(0, "a"), (1, "1")])
        e = product_family(e1, e1)
        g = observable_function_complex(e, space)
        assert g.re == observable_function(e1, space)
        assert g.im == observable_function(e1, space)
        assert g.value(space.point_index[mo2.up[mo2.eid("a")]]) == (0, 0)

    def test_all_top_components(self):
        b2 = boolean_lattice(2)
        c = Fraction(4)
        e = ComplexSpectralFamily(b2, (c,), (c,), [["1"]])
        g = observable_function_complex(e)
        assert all(v == (c, c) for v in (g.value(k) for k in range(2)))

    def test_complex_function_splits_componentwise(self):
        # the defining existential formulas agree with the decomposition
        b2 = boolean_lattice(2)
        space = stone_space(b2)
        for v12 in range(b2.n):
            for v21 in range(b2.n):
                matrix = [[b2.meet2(v12, v21), v12], [v21, b2.top]]
                e = ComplexSpectralFamily(b2, (0, 1), (0, 1), matrix)
                e1, e2 = decompose(e)
                g = observable_function_complex(e, space)
                assert g.re == observable_function(e1, space)
                assert g.im == observable_function(e2, space)


class TestStepIntegration:
    def test_exact_on_threshold_grid(self):
        b3 = boolean_lattice(3)
        space = stone_space(b3)
        e = SpectralFamily(b3, [(0, "x"), (HALF, "xy"), (1, "1")])
        g = observable_function(e, space)
        assert riemann_stieltjes(e, e.thresholds, space) == g

    def test_quantizes_up_within_epsilon(self):
        b2 = boolean_lattice(2)
        space = stone_space(b2)
        e = SpectralFamily(b2, [(Fraction(1, 3), "x"), (1, "1")])
        grid = [Fraction(k, 4) for k in range(0, 6)]
        s = riemann_stieltjes(e, grid, space)
        g = observable_function(e, space)
        diffs = [a - b for a, b in zip(s.values, g.values)]
        assert all(0 <= d <= Fraction(1, 4) for d in diffs)
        assert s.values[space.point_index[b2.up[b2.eid("x")]]] == HALF

    def test_literal_increment_sum_oracle(self):
        # the library value equals the sum of tag * indicator increments
        b3 = boolean_lattice(3)
        space = stone_space(b3)
        e = SpectralFamily(b3, [(0, "x"), (HALF, "xy"), (1, "1")])
        grid = [Fraction(k, 4) for k in range(-1, 6)]
        s = riemann_stieltjes(e, grid, space)
        for k, members in enumerate(space.points):
            total = Fraction(0)
            prev = 0
            for t in grid:
                cur = 1 if members >> e.eval(t) & 1 else 0
                total += t * (cur - prev)
                prev = cur
            assert total == s.values[k]

    def test_grid_must_cover_support(self):
        b2 = boolean_lattice(2)
        e = SpectralFamily(b2, [(0, "x"), (1, "1")])
        with pytest.raises(InputError):
            riemann_stieltjes(e, [HALF, 1])
        with pytest.raises(InputError):
            riemann_stieltjes(e, [0, HALF])


def test_enumerate_families_counts():
    # chain(3): the chains ending at the top are [1] and [m1, 1]
    assert len(enumerate_families(chain_lattice(3), (0, 1, 2))) == 3 + 3
    assert len(enumerate_families(boolean_lattice(2), (0, 1))) == 4
    # boolean(4): 3 one-jump + 42 two-jump + 36 three-jump families
    assert len(enumerate_families(boolean_lattice(4), (0, 1, 2))) == 81
