"""Shared fixtures: corpus access, random generators, sympy oracles."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from nlacs import corpus
from nlacs.cpx import Acs, standard_acs
from nlacs.exactlin import Matrix, Subspace
from nlacs.liealg import LieAlgebra


@pytest.fixture(scope="session")
def docs():
    return {name: corpus.load(name) for name in corpus.names()}


@pytest.fixture(scope="session")
def algebras(docs):
    return {name: doc.algebra() for name, doc in docs.items()}


@pytest.fixture(scope="session")
def integrable_pairs(docs, algebras):
    """Every (name, structure name, algebra, Acs) quadruple in the corpus."""
    pairs = []
    for name, doc in sorted(docs.items()):
        for sname in doc.structure_names():
            pairs.append((name, sname, algebras[name], doc.structure(sname)))
    return pairs


def random_fraction(rnd: random.Random, span: int = 2, den: int = 2) -> Fraction:
    return Fraction(rnd.randint(-span, span), rnd.randint(1, den))


def random_matrix(rnd: random.Random, rows: int, cols: int) -> Matrix:
    return Matrix.from_rows([[random_fraction(rnd) for _ in range(cols)]
                             for _ in range(rows)])


def random_invertible(rnd: random.Random, n: int) -> Matrix:
    while True:
        m = random_matrix(rnd, n, n)
        try:
            m.inverse()
            return m
        except Exception:
            continue


def random_subspace(rnd: random.Random, n: int) -> Subspace:
    k = rnd.randint(0, n)
    return Subspace.span([[random_fraction(rnd) for _ in range(n)]
                          for _ in range(k)], n)


def random_algebra(rnd: random.Random, dim: int, density: float = 0.4) -> LieAlgebra:
    """Random antisymmetric constants; Jacobi usually fails, sometimes not."""
    table = {}
    for i in range(1, dim + 1):
        for j in range(i + 1, dim + 1):
            if rnd.random() < density:
                table[(i, j)] = {rnd.randint(1, dim): random_fraction(rnd)}
    return LieAlgebra.from_brackets(dim, table)


def random_acs(rnd: random.Random, dim: int) -> Acs:
    """Conjugate of the standard structure by a random invertible matrix."""
    p = random_invertible(rnd, dim)
    j0 = standard_acs(dim)
    return Acs(dim, p @ j0.matrix @ p.inverse())


def sympy_rref(m: Matrix):
    """Independent reduced-row-echelon oracle."""
    import sympy

    sm = sympy.Matrix([[sympy.Rational(x) for x in row] for row in m.entries])
    reduced, pivots = sm.rref()
    rows = [[Fraction(str(reduced[i, j])) for j in range(m.cols)]
            for i in range(m.rows)]
    return Matrix.from_rows(rows) if rows else Matrix(0, m.cols, ()), len(pivots)


def sympy_nullspace(m: Matrix) -> Subspace:
    import sympy

    sm = sympy.Matrix([[sympy.Rational(x) for x in row] for row in m.entries])
    vecs = [[Fraction(str(v[i, 0])) for i in range(m.cols)]
            for v in sm.nullspace()]
    return Subspace.span(vecs, m.cols)
