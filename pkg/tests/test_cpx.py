"""Complex structures: integrability, classification, quotients, bases."""

import random

import pytest

from nlacs.cpx import (Acs, JKind, adapt_frame, doubly_adapted_check,
                       induced_quotient, integrability_defect,
                       j_compatible_series, largest_j_invariant, nijenhuis,
                       standard_acs, validate_acs)
from nlacs.errors import (IndexOutOfRange, NotAlmostComplex, NotIntegrable,
                          NotJAdapted, OddDimension)
from nlacs.exactlin import Matrix, Subspace, is_zero_vector, member, unit_vector
from nlacs.liealg import (LieAlgebra, ascending_central_series, center,
                          change_basis, is_ideal)

from conftest import random_fraction, random_invertible

ABELIAN8 = LieAlgebra.from_brackets(8, {})


def e(n, k):
    return unit_vector(n, k - 1)


def span(vectors, n):
    return Subspace.span(vectors, n)


def pair_acs(dim: int, pairs: dict[int, int]) -> Acs:
    """Acs from a full set of index pairs i -> j meaning J e_i = e_j."""
    cols = {}
    for i, j in pairs.items():
        cols[i] = e(dim, j)
        cols[j] = tuple(-c for c in e(dim, i))
    rows = [[cols[k][r] for k in range(1, dim + 1)] for r in range(dim)]
    return Acs(dim, Matrix.from_rows(rows))


class TestValidate:
    def test_rotation(self):
        j = validate_acs(Matrix.from_rows([[0, -1], [1, 0]]))
        assert j.dim == 2

    def test_identity_rejected(self):
        with pytest.raises(NotAlmostComplex):
            validate_acs(Matrix.identity(2))

    def test_odd_dimension(self):
        with pytest.raises(OddDimension):
            validate_acs(Matrix.identity(3))

    def test_ex2_5_structure(self, docs):
        j = docs["ex2_5"].structure("J")
        assert j.apply(e(8, 1)) == e(8, 2)
        assert j.apply(e(8, 2)) == tuple(-c for c in e(8, 1))


class TestNijenhuis:
    def test_abelian_vanishes(self):
        rnd = random.Random(2)
        j = standard_acs(8)
        for _ in range(10):
            x = tuple(random_fraction(rnd) for _ in range(8))
            y = tuple(random_fraction(rnd) for _ in range(8))
            assert is_zero_vector(nijenhuis(ABELIAN8, j, x, y))

    def test_ex2_5_pair(self, docs, algebras):
        g, j = algebras["ex2_5"], docs["ex2_5"].structure("J")
        assert is_zero_vector(nijenhuis(g, j, e(8, 3), e(8, 5)))

    def test_non_integrable_candidate(self, algebras):
        # brute force over all basis pairs is the oracle here
        g = algebras["ex2_5"]
        bad = pair_acs(8, {1: 3, 2: 4, 5: 6, 7: 8})
        assert integrability_defect(g, bad)

    def test_antisymmetric(self, docs, algebras):
        rnd = random.Random(13)
        g, j = algebras["ex2_5"], docs["ex2_5"].structure("J")
        for _ in range(10):
            x = tuple(random_fraction(rnd) for _ in range(8))
            y = tuple(random_fraction(rnd) for _ in range(8))
            nxy = nijenhuis(g, j, x, y)
            nyx = nijenhuis(g, j, y, x)
            assert tuple(-c for c in nyx) == nxy

    def test_twist_identities(self, algebras):
        # N(Jx, y) = -J N(x, y), hence N(x, Jx) = 0, for any almost
        # complex structure, integrable or not
        rnd = random.Random(37)
        g = algebras["ex2_5"]
        for j in (pair_acs(8, {1: 2, 3: 4, 5: 6, 7: 8}),
                  pair_acs(8, {1: 3, 2: 4, 5: 6, 7: 8})):
            for _ in range(10):
                x = tuple(random_fraction(rnd) for _ in range(8))
                y = tuple(random_fraction(rnd) for _ in range(8))
                lhs = nijenhuis(g, j, j.apply(x), y)
                rhs = tuple(-c for c in j.apply(nijenhuis(g, j, x, y)))
                assert lhs == rhs
                assert is_zero_vector(nijenhuis(g, j, x, j.apply(x)))


class TestIntegrabilityDefect:
    def test_corpus_structures_integrable(self, integrable_pairs):
        for name, sname, g, j in integrable_pairs:
            assert integrability_defect(g, j) == [], (name, sname)

    def test_abelian_any_acs(self):
        rnd = random.Random(19)
        p = random_invertible(rnd, 8)
        j = Acs(8, p @ standard_acs(8).matrix @ p.inverse())
        assert integrability_defect(ABELIAN8, j) == []


class TestJSeries:
    def test_ex2_5_weakly(self, docs, algebras):
        cls = j_compatible_series(algebras["ex2_5"], docs["ex2_5"].structure("J"))
        assert cls.kind is JKind.WEAKLY_NON_NILPOTENT
        assert cls.term(1) == span([e(8, 7), e(8, 8)], 8)
        assert cls.stabilization_index == 1

    def test_ex2_5_nilpotent(self, docs, algebras):
        cls = j_compatible_series(algebras["ex2_5"],
                                  docs["ex2_5"].structure("hat"))
        assert cls.kind is JKind.NILPOTENT
        assert cls.term(1) == span([e(8, 6), e(8, 7)], 8)
        assert cls.term(2) == span([e(8, 1), e(8, 2), e(8, 6), e(8, 7)], 8)
        assert cls.term(3) == Subspace.full(8)

    def test_ex2_6_snn(self, docs, algebras):
        cls = j_compatible_series(algebras["ex2_6"], docs["ex2_6"].structure("J"))
        assert cls.kind is JKind.STRONGLY_NON_NILPOTENT
        assert cls.term(1).dim == 0

    def test_requires_integrability(self, algebras):
        bad = pair_acs(8, {1: 3, 2: 4, 5: 6, 7: 8})
        with pytest.raises(NotIntegrable):
            j_compatible_series(algebras["ex2_5"], bad)

    def test_invariants_on_corpus(self, integrable_pairs):
        # every a_k is J-invariant, even-dimensional, an ideal, inside g_k
        for name, sname, g, j in integrable_pairs:
            cls = j_compatible_series(g, j)
            rep = ascending_central_series(g)
            for k, term in enumerate(cls.j_series):
                assert term.dim % 2 == 0
                assert largest_j_invariant(j, term) == term
                assert is_ideal(g, term)
                assert all(member(v, rep.term(k)) for v in term.basis.entries), \
                    (name, sname, k)

    def test_trichotomy(self, integrable_pairs):
        for _, _, g, j in integrable_pairs:
            cls = j_compatible_series(g, j)
            a1 = cls.term(1)
            top = cls.term(cls.stabilization_index)
            if cls.kind is JKind.STRONGLY_NON_NILPOTENT:
                assert a1.dim == 0
            elif cls.kind is JKind.NILPOTENT:
                assert top == Subspace.full(g.dim) and a1.dim > 0
            else:
                assert 0 < top.dim < g.dim and a1.dim > 0


class TestLargestJInvariant:
    def test_full_space(self, docs):
        j = docs["ex2_5"].structure("J")
        assert largest_j_invariant(j, Subspace.full(8)) == Subspace.full(8)

    def test_ex2_5_center(self, docs, algebras):
        j = docs["ex2_5"].structure("J")
        c = center(algebras["ex2_5"])
        assert largest_j_invariant(j, c) == span([e(8, 7), e(8, 8)], 8)

    def test_line_under_rotation(self):
        rot = validate_acs(Matrix.from_rows([[0, -1], [1, 0]]))
        assert largest_j_invariant(rot, span([e(2, 1)], 2)).dim == 0


class TestInducedQuotient:
    def test_q_zero_is_identity(self, docs, algebras):
        g, j = algebras["ex2_5"], docs["ex2_5"].structure("J")
        gq, jq = induced_quotient(g, j, 0)
        assert gq.table == g.table and jq.matrix == j.matrix

    def test_weakly_quotient_is_snn(self, docs, algebras):
        g, j = algebras["ex2_5"], docs["ex2_5"].structure("J")
        gq, jq = induced_quotient(g, j, 1)
        assert gq.dim == 6
        cls = j_compatible_series(gq, jq)
        assert cls.kind is JKind.STRONGLY_NON_NILPOTENT

    def test_nilpotent_exhausts(self, docs, algebras):
        g, jh = algebras["ex2_5"], docs["ex2_5"].structure("hat")
        t = j_compatible_series(g, jh).stabilization_index
        gq, _ = induced_quotient(g, jh, t)
        assert gq.dim == 0

    def test_out_of_range(self, docs, algebras):
        g, j = algebras["ex2_5"], docs["ex2_5"].structure("J")
        with pytest.raises(IndexOutOfRange):
            induced_quotient(g, j, 5)

    def test_heis3xR3_is_the_induced_quotient_of_ex3_18(self, docs, algebras):
        g, j = algebras["ex3_18"], docs["ex3_18"].structure("J")
        gq, jq = induced_quotient(g, j, 1)
        assert gq.table == algebras["heis3xR3"].table
        assert jq.matrix == docs["heis3xR3"].structure("J").matrix

    def test_integrability_transport(self, integrable_pairs):
        for name, sname, g, j in integrable_pairs:
            cls = j_compatible_series(g, j)
            for q in range(cls.stabilization_index + 1):
                gq, jq = induced_quotient(g, j, q)
                assert integrability_defect(gq, jq) == [], (name, sname, q)


class TestDoublyAdapted:
    def test_abelian_always(self):
        j = standard_acs(4)
        assert doubly_adapted_check(LieAlgebra.from_brackets(4, {}), j,
                                    Matrix.identity(4))

    def test_ex2_5_adapted_order(self, docs, algebras):
        g, j = algebras["ex2_5"], docs["ex2_5"].structure("J")
        cols = []
        for k in (7, 5, 1, 3):  # (X7,JX7,X5,JX5,X1,JX1,X3,JX3)
            v = e(8, k)
            cols += [v, j.apply(v)]
        basis = Matrix.from_rows([[cols[b][a] for b in range(8)]
                                  for a in range(8)])
        assert doubly_adapted_check(g, j, basis)

    def test_ex2_5_bad_basis(self, docs, algebras):
        # only two basis vectors (X7, X8) lie in the 3-dimensional center
        g, j = algebras["ex2_5"], docs["ex2_5"].structure("J")
        x5x3 = tuple(a + b for a, b in zip(e(8, 5), e(8, 3)))
        cols = []
        for v in (e(8, 7), e(8, 1), e(8, 3), x5x3):
            cols += [v, j.apply(v)]
        basis = Matrix.from_rows([[cols[b][a] for b in range(8)]
                                  for a in range(8)])
        assert not doubly_adapted_check(g, j, basis)

    def test_unpaired_columns_rejected(self, docs, algebras):
        g, j = algebras["ex2_5"], docs["ex2_5"].structure("J")
        order = (1, 3, 2, 4, 5, 6, 7, 8)  # first pair (X1, X3) is not (X, JX)
        basis = Matrix.from_rows([[e(8, order[b])[a] for b in range(8)]
                                  for a in range(8)])
        with pytest.raises(NotJAdapted):
            doubly_adapted_check(g, j, basis)


class TestAdaptFrame:
    def test_standardizes_corpus_pairs(self, integrable_pairs):
        for name, sname, g, j in integrable_pairs:
            g2, j2, p = adapt_frame(g, j)
            assert j2.matrix == standard_acs(g.dim).matrix
            assert p.inverse() @ j.matrix @ p == j2.matrix
            assert change_basis(g, p).table == g2.table
            assert integrability_defect(g2, j2) == []
