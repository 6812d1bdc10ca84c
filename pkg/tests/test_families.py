"""Family instantiation, case bookkeeping, and the committed instances."""

from fractions import Fraction

import pytest

from nlacs.ceq import realify
from nlacs.cpx import JKind
from nlacs.errors import ForeignParameter, JacobiViolated
from nlacs.exactlin import GaussRational
from nlacs.families import (ACCEPTANCE_GRIDS, COMMITTED_INSTANCES,
                            FAMILY_CASE_TYPES, FAMILY_PARAMS, FamilyParams,
                            acceptance_candidates, brute_force_case_search,
                            case_conditions, family_case_check,
                            family_instantiate)
from nlacs.liealg import bracket
from nlacs.obstruct import DIM8_SNN_TYPES

G = GaussRational.parse


class TestInstantiate:
    def test_all_zero_is_abelian(self):
        eqs = family_instantiate(FamilyParams.make("G2dim5", {}))
        assert eqs.coeffs == {}

    def test_trivial_point(self):
        p = FamilyParams.make("G2dim4", {"A": 1, "L": 1})
        eqs = family_instantiate(p)
        assert eqs.d_of(2) == {("11", 1, 1): G("1")}
        assert eqs.d_of(3) == {}
        assert eqs.d_of(4) == {("11", 1, 1): G("1")}

    def test_g2dim3_shape(self):
        p = FamilyParams.make("G2dim3", {
            "A": "1", "B": "2", "C": "1/2", "D": "-1/2", "E": "1", "F": "2i",
            "G": "1+1i", "H": "-1", "K": "1/2i", "L": "2", "M": "1+2i",
            "N": "-2i", "P": "1/2", "s": "1/2"})
        eqs = family_instantiate(p)
        d2, d3, d4 = eqs.d_of(2), eqs.d_of(3), eqs.d_of(4)
        assert d2 == {("11", 1, 1): G("1"), ("20", 1, 4): G("-2"),
                      ("11", 1, 4): G("2")}
        assert d3[("20", 1, 2)] == G("1/2") - G("-1/2")      # C - D
        assert d3[("11", 1, 2)] == G("1+1i") + G("-1/2")     # G + D
        assert d3[("11", 2, 1)] == G("1/2") - G("1+1i")      # C - G
        assert d3[("20", 2, 4)] == -G("-1")                  # -H
        assert d3[("11", 2, 2)] == G("1/2i")                 # K
        assert d4[("11", 2, 1)] == -G("1+2i").conjugate()    # -conj(M)
        assert d4[("11", 3, 1)] == -G("-2i").conjugate()     # -conj(N)
        assert d4[("11", 3, 2)] == -G("1/2").conjugate()     # -conj(P)
        assert d4[("11", 2, 2)] == G("1/2i")                 # i s with s = 1/2

    def test_g2dim5_has_t_term(self):
        eqs = family_instantiate(FamilyParams.make("G2dim5", {"t": "1/2"}))
        assert eqs.d_of(4) == {("11", 3, 3): G("1/2i")}

    def test_foreign_parameter(self):
        with pytest.raises(ForeignParameter):
            FamilyParams.make("G2dim4", {"B": 1})
        with pytest.raises(ForeignParameter):
            FamilyParams.make("G2dim5", {"s": "1i"})
        with pytest.raises(ForeignParameter):
            FamilyParams.make("G2dim9", {})


class TestCaseConditions:
    def test_g2dim3_cases(self):
        p = FamilyParams.make("G2dim3", {"L": "2i", "K": "1"})
        assert case_conditions("G2dim3", (1, 3, 8), p)       # A=B=0, Re L=0
        assert not case_conditions("G2dim3", (1, 3, 5, 8), p)  # K != 0
        q = FamilyParams.make("G2dim3", {"L": "1"})
        assert case_conditions("G2dim3", (1, 3, 5, 6, 8), q)
        assert not case_conditions("G2dim3", (1, 3, 8), q)

    def test_g2dim4_dichotomy(self):
        zero = FamilyParams.make("G2dim4", {})
        assert case_conditions("G2dim4", (1, 4, 8), zero)
        assert not case_conditions("G2dim4", (1, 4, 6, 8), zero)
        live = FamilyParams.make("G2dim4", {"A": "1"})
        assert case_conditions("G2dim4", (1, 4, 6, 8), live)


class TestCaseCheck:
    def test_committed_instances_pass(self):
        for (fam, typ), p in COMMITTED_INSTANCES.items():
            rep = family_case_check(p)
            assert rep.passed, (fam, typ, rep)
            assert rep.ascending_type == typ
            assert rep.kind is JKind.STRONGLY_NON_NILPOTENT
            assert rep.center_dim == 1
            assert typ in DIM8_SNN_TYPES

    def test_jacobi_violation_raises(self):
        # Re(E conj(N)) != 0 breaks the Jacobi identity in this family
        bad = FamilyParams.make("G2dim5", {"E": "1/2", "N": "1/2"})
        with pytest.raises(JacobiViolated):
            family_case_check(bad)

    def test_non_snn_point_reported(self):
        # the abelian point realifies fine but is not strongly non-nilpotent
        rep = family_case_check(FamilyParams.make("G2dim5", {}))
        assert not rep.passed and rep.ascending_type == (8,)


# (letras-style) extraction: position of each adapted-frame vector in the
# realified coordinates, cf. the corpus file headers.
_IX = {"X4": 1, "JX4": 2, "X3": 3, "JX3": 4, "X2": 5, "JX2": 6,
       "X1": 7, "JX1": 8}


def _coeff(g, a, b, target):
    v = bracket(g, g.basis_vector(_IX[a]), g.basis_vector(_IX[b]))
    return v[_IX[target] - 1]


def coefficient_map(g) -> dict[str, GaussRational]:
    """Parameters recovered from the realified structure constants."""
    half = Fraction(1, 2)

    def gr(re, im=Fraction(0)):
        return GaussRational(re * half, im * half)

    return {
        "A": gr(_coeff(g, "X4", "JX4", "JX3"), _coeff(g, "X4", "JX4", "X3")),
        "B": gr(_coeff(g, "X4", "JX1", "JX3"), _coeff(g, "X4", "JX1", "X3")),
        "C": gr(_coeff(g, "X3", "JX4", "JX2"), _coeff(g, "X3", "JX4", "X2")),
        "D": gr(_coeff(g, "X4", "JX3", "JX2"), _coeff(g, "X4", "JX3", "X2")),
        "E": gr(_coeff(g, "X4", "JX1", "JX2"), _coeff(g, "X4", "JX1", "X2")),
        "F": gr(_coeff(g, "X4", "JX4", "JX2"), _coeff(g, "X4", "JX4", "X2")),
        "G": gr(_coeff(g, "X3", "X4", "X2"), -_coeff(g, "X3", "X4", "JX2")),
        "H": gr(_coeff(g, "X3", "JX1", "JX2"), _coeff(g, "X3", "JX1", "X2")),
        "K": gr(_coeff(g, "X3", "JX3", "JX2"), _coeff(g, "X3", "JX3", "X2")),
        "L": gr(_coeff(g, "X4", "JX4", "JX1"), _coeff(g, "X4", "JX4", "X1")),
        "M": gr(_coeff(g, "X3", "X4", "X1"), _coeff(g, "X3", "JX4", "X1")),
        "N": gr(_coeff(g, "X2", "X4", "X1"), _coeff(g, "X2", "JX4", "X1")),
        "P": gr(_coeff(g, "X2", "X3", "X1"), _coeff(g, "X2", "JX3", "X1")),
        "s": gr(_coeff(g, "X3", "JX3", "X1")),
        "t": gr(_coeff(g, "X2", "JX2", "X1")),
    }


class TestCoefficientMap:
    def test_committed_instances_satisfy_relations(self):
        for (fam, typ), p in COMMITTED_INSTANCES.items():
            g, _, _ = realify(family_instantiate(p))
            recovered = coefficient_map(g)
            cpx_syms, real_syms = FAMILY_PARAMS[fam]
            for sym in cpx_syms + real_syms:
                assert recovered[sym] == p.get(sym), (fam, typ, sym)


class TestAdaptedFrames:
    def test_realified_coordinates_are_doubly_adapted(self, docs, algebras):
        # the realified basis (X4, JX4, ..., X1, JX1) is an adapted frame
        from nlacs.cpx import doubly_adapted_check
        from nlacs.exactlin import Matrix

        for name in algebras:
            if not name.startswith("g2dim"):
                continue
            g, j = algebras[name], docs[name].structure("J")
            assert doubly_adapted_check(g, j, Matrix.identity(8)), name


class TestSearchMachinery:
    def test_small_grid_finds_committed_g2dim5(self):
        case = ("G2dim5", (1, 5, 8))
        found = brute_force_case_search(
            *case, acceptance_candidates(*case), limit=1)
        assert found == [COMMITTED_INSTANCES[case]]

    def test_grids_cover_all_cases(self):
        for fam, types in FAMILY_CASE_TYPES.items():
            for typ in types:
                assert (fam, typ) in ACCEPTANCE_GRIDS
                assert (fam, typ) in COMMITTED_INSTANCES

    def test_grid_values_stay_inside_limits(self):
        for grid in ACCEPTANCE_GRIDS.values():
            for values in grid.values():
                for text in values:
                    z = GaussRational.parse(text)
                    for part in (z.re, z.im):
                        assert -2 <= part.numerator <= 2
                        assert 1 <= part.denominator <= 2
