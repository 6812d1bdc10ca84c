"""Finite-dimensional Lie algebras given by rational structure constants.

A LieAlgebra stores the brackets [e_i, e_j] for i < j only; antisymmetry
is structural.  Basis indices are 1-based throughout this module (the
text format and all reports use the same convention), while coordinate
vectors are plain Python tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from .errors import (BadIndex, DimensionMismatch, NotALieAlgebra, NotAnIdeal,
                     NotNilpotent, SingularMatrix)
from .exactlin import (Matrix, Subspace, Vector, add_vectors, is_zero_vector,
                       kernel_basis, member, scalar, scale_vector,
                       unit_vector, vector)


@dataclass(frozen=True)
class LieAlgebra:
    """Anticommutative algebra over Q; Jacobi is *not* assumed at construction."""

    dim: int
    names: tuple[str, ...]
    # canonical: sorted by (i, j), 1-based keys, zero rows omitted
    table: tuple[tuple[tuple[int, int], Vector], ...]

    @classmethod
    def from_brackets(cls, dim: int,
                      brackets: Mapping[tuple[int, int], Mapping[int, object]],
                      names: Sequence[str] | None = None) -> "LieAlgebra":
        """Build from a mapping {(i, j): {k: coeff}} with 1 <= i < j <= dim."""
        if names is None:
            names = tuple(f"e{k}" for k in range(1, dim + 1))
        else:
            names = tuple(names)
            if len(names) != dim:
                raise DimensionMismatch("wrong number of basis names")
        rows: list[tuple[tuple[int, int], Vector]] = []
        for (i, j), targets in sorted(brackets.items()):
            if not (1 <= i < j <= dim):
                raise BadIndex(f"bracket key ({i},{j}) out of range for dim {dim}")
            coeffs = [Fraction(0)] * dim
            for k, val in targets.items():
                if not (1 <= k <= dim):
                    raise BadIndex(f"bracket target {k} out of range")
                coeffs[k - 1] += scalar(val)
            if not is_zero_vector(coeffs):
                rows.append(((i, j), tuple(coeffs)))
        return cls(dim, names, tuple(rows))

    @cached_property
    def _table(self) -> dict[tuple[int, int], Vector]:
        return dict(self.table)

    def basis_bracket(self, i: int, j: int) -> Vector:
        """[e_i, e_j] for 1-based i, j (antisymmetric extension)."""
        if i == j:
            return tuple(Fraction(0) for _ in range(self.dim))
        if i < j:
            v = self._table.get((i, j))
            return v if v is not None else tuple(Fraction(0) for _ in range(self.dim))
        v = self._table.get((j, i))
        return (scale_vector(Fraction(-1), v) if v is not None
                else tuple(Fraction(0) for _ in range(self.dim)))

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i - 1)


@dataclass(frozen=True)
class SeriesReport:
    """Ascending central series g_1 < g_2 < ... up to stabilization."""

    ambient_dim: int
    terms: tuple[Subspace, ...]
    stabilized_at: int
    is_nilpotent: bool
    step: int | None
    ascending_type: tuple[int, ...] | None

    def term(self, k: int) -> Subspace:
        """g_k, with g_0 = 0 and g_k constant beyond stabilization."""
        if k <= 0 or not self.terms:
            return Subspace.zero(self.ambient_dim)
        return self.terms[min(k, len(self.terms)) - 1]


def bracket(g: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    """Bilinear antisymmetric extension of the stored structure constants."""
    xv, yv = vector(x), vector(y)
    if len(xv) != g.dim or len(yv) != g.dim:
        raise DimensionMismatch("vector length differs from the algebra dimension")
    out = [Fraction(0)] * g.dim
    for (i, j), coeffs in g.table:
        c = xv[i - 1] * yv[j - 1] - xv[j - 1] * yv[i - 1]
        if c != 0:
            for k in range(g.dim):
                if coeffs[k] != 0:
                    out[k] += c * coeffs[k]
    return tuple(out)


def jacobi_defect(g: LieAlgebra) -> list[tuple[tuple[int, int, int], Vector]]:
    """Nonzero values of Jac(e_i, e_j, e_k) over basis triples i < j < k.

    Trilinearity makes the basis check complete: the defect list is empty
    exactly when the Jacobi identity holds on all of g.
    """
    defects = []
    n = g.dim
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                t1 = bracket(g, g.basis_bracket(i, j), g.basis_vector(k))
                t2 = bracket(g, g.basis_bracket(j, k), g.basis_vector(i))
                t3 = bracket(g, g.basis_bracket(k, i), g.basis_vector(j))
                total = add_vectors(add_vectors(t1, t2), t3)
                if not is_zero_vector(total):
                    defects.append(((i, j, k), total))
    return defects


def require_lie_algebra(g: LieAlgebra) -> None:
    if jacobi_defect(g):
        raise NotALieAlgebra("structure constants violate the Jacobi identity")


def _next_term(g: LieAlgebra, prev: Subspace) -> Subspace:
    """Kernel of x -> ([x, e_j] mod prev) over all basis directions e_j."""
    n = g.dim
    comp = prev.nonpivots()
    if not comp:
        return Subspace.full(n)
    rows: list[Vector] = []
    for j in range(1, n + 1):
        cols = [prev.coords_mod(g.basis_bracket(i, j)) for i in range(1, n + 1)]
        for r in range(len(comp)):
            rows.append(tuple(cols[i][r] for i in range(n)))
    return kernel_basis(Matrix.from_rows(rows))


def ascending_central_series(g: LieAlgebra) -> SeriesReport:
    """Compute g_k = {x : [x, g] in g_{k-1}} until the series stabilizes."""
    require_lie_algebra(g)
    prev = Subspace.zero(g.dim)
    terms: list[Subspace] = []
    while True:
        nxt = _next_term(g, prev)
        if nxt == prev:
            break
        terms.append(nxt)
        prev = nxt
    nilpotent = prev == Subspace.full(g.dim)
    return SeriesReport(
        ambient_dim=g.dim,
        terms=tuple(terms),
        stabilized_at=len(terms),
        is_nilpotent=nilpotent,
        step=len(terms) if nilpotent else None,
        ascending_type=tuple(t.dim for t in terms) if nilpotent else None,
    )


def ascending_type(g: LieAlgebra) -> tuple[int, ...]:
    report = ascending_central_series(g)
    if not report.is_nilpotent:
        raise NotNilpotent("ascending type is defined for nilpotent algebras only")
    return report.ascending_type


def center(g: LieAlgebra) -> Subspace:
    """First term of the ascending central series."""
    require_lie_algebra(g)
    return _next_term(g, Subspace.zero(g.dim))


def is_ideal(g: LieAlgebra, s: Subspace) -> bool:
    if s.ambient_dim != g.dim:
        raise DimensionMismatch("subspace lives in the wrong ambient space")
    for row in s.basis.entries:
        for j in range(1, g.dim + 1):
            if not member(bracket(g, g.basis_vector(j), row), s):
                return False
    return True


def quotient(g: LieAlgebra, ideal: Subspace) -> tuple[LieAlgebra, Matrix]:
    """Quotient algebra g/ideal together with the projection matrix.

    Coset representatives are the standard basis vectors at the non-pivot
    coordinates of the ideal's canonical basis, which makes the quotient
    constants deterministic.
    """
    if not is_ideal(g, ideal):
        raise NotAnIdeal("the given subspace is not an ideal of g")
    comp = ideal.nonpivots()
    q = len(comp)
    proj = Matrix.from_rows([ideal.coords_mod(unit_vector(g.dim, c))
                             for c in range(g.dim)]).transpose()
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a in range(q):
        for b in range(a + 1, q):
            w = bracket(g, unit_vector(g.dim, comp[a]), unit_vector(g.dim, comp[b]))
            coeffs = ideal.coords_mod(w)
            row = {k + 1: coeffs[k] for k in range(q) if coeffs[k] != 0}
            if row:
                brackets[(a + 1, b + 1)] = row
    names = tuple(g.names[c] for c in comp)
    return LieAlgebra.from_brackets(q, brackets, names), proj


def direct_product(g1: LieAlgebra, g2: LieAlgebra) -> LieAlgebra:
    """Product algebra on the concatenated bases; cross brackets vanish."""
    n1 = g1.dim
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), coeffs in g1.table:
        brackets[(i, j)] = {k + 1: c for k, c in enumerate(coeffs) if c != 0}
    for (i, j), coeffs in g2.table:
        brackets[(i + n1, j + n1)] = {k + 1 + n1: c
                                      for k, c in enumerate(coeffs) if c != 0}
    return LieAlgebra.from_brackets(n1 + g2.dim, brackets, g1.names + g2.names)


def change_basis(g: LieAlgebra, p: Matrix) -> LieAlgebra:
    """Transport the constants to the basis given by the columns of p."""
    if not (p.is_square() and p.rows == g.dim):
        raise DimensionMismatch("change of basis must be square of matching size")
    try:
        pinv = p.inverse()
    except SingularMatrix:
        raise SingularMatrix("change of basis matrix is singular") from None
    n = g.dim
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a in range(1, n + 1):
        fa = p.col(a - 1)
        for b in range(a + 1, n + 1):
            w = pinv.apply(bracket(g, fa, p.col(b - 1)))
            row = {k + 1: w[k] for k in range(n) if w[k] != 0}
            if row:
                brackets[(a, b)] = row
    return LieAlgebra.from_brackets(n, brackets, g.names)
