"""Executable existence obstructions and a theorem consistency audit.

``obstruction_report`` evaluates algebra-level non-existence rules (no
complex structure can exist at all).  ``theorem_audit`` takes a concrete
integrable pair and re-checks the structural statements that are known
to hold for it; a FAIL on a verified pair indicates a bug somewhere in
the tower, never new mathematics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .cpx import Acs, JKind, j_compatible_series, require_integrable
from .errors import NotNilpotent
from .exactlin import apply_map, intersect
from .liealg import LieAlgebra, ascending_central_series

DIM6_SNN_TYPES = frozenset({(1, 3, 6), (1, 3, 4, 6)})
DIM8_SNN_TYPES = frozenset({
    (1, 3, 8), (1, 3, 5, 8), (1, 3, 6, 8), (1, 3, 5, 6, 8),
    (1, 4, 8), (1, 4, 6, 8), (1, 5, 8), (1, 5, 6, 8),
})


def snn_admissible_types(dim: int) -> Optional[frozenset[tuple[int, ...]]]:
    """Ascending types compatible with a strongly non-nilpotent structure.

    Dimensions 2 and 4 admit none (every complex structure there is
    quasi-nilpotent), odd dimensions admit no complex structure at all,
    and for even dimensions above 8 the answer is unknown (None).
    """
    if dim % 2 == 1:
        return frozenset()
    if dim in (0, 2, 4):
        return frozenset()
    if dim == 6:
        return DIM6_SNN_TYPES
    if dim == 8:
        return DIM8_SNN_TYPES
    return None


@dataclass(frozen=True)
class ObstructionVerdict:
    """One evaluated non-existence rule, with the evidence that fired it."""

    rule: str
    triggered: bool
    statement: str
    witness: dict = field(default_factory=dict)


def obstruction_report(g: LieAlgebra) -> list[ObstructionVerdict]:
    """Evaluate every algebra-level obstruction to admitting a complex structure.

    Rules whose hypotheses mention the ascending type of dimension 6/8
    algebras only fire when the center is 1-dimensional: a 1-dimensional
    center forces any complex structure to be strongly non-nilpotent, so
    a type outside the admissible list rules out existence entirely.
    """
    verdicts: list[ObstructionVerdict] = []
    odd = g.dim % 2 == 1
    verdicts.append(ObstructionVerdict(
        rule="odd-dimension",
        triggered=odd,
        statement="odd-dimensional algebras admit no almost complex structure",
        witness={"dim": g.dim},
    ))
    report = ascending_central_series(g)
    if not report.is_nilpotent:
        raise NotNilpotent("obstruction rules apply to nilpotent algebras")
    typ = report.ascending_type
    step = report.step

    if not odd and g.dim > 0:
        n = g.dim // 2
        dim_gn1 = report.term(n - 1).dim
        verdicts.append(ObstructionVerdict(
            rule="halfway-series-gap",
            triggered=dim_gn1 == n - 1,
            statement=("a 2n-dimensional nilpotent Lie algebra with "
                       "dim g_{n-1} = n-1 admits no complex structure"),
            witness={"n": n, "dim_g_{n-1}": dim_gn1},
        ))
        verdicts.append(ObstructionVerdict(
            rule="filiform",
            triggered=step == 2 * n - 1,
            statement="filiform Lie algebras admit no complex structure",
            witness={"step": step, "max_step": 2 * n - 1},
        ))
        center_dim = typ[0] if typ else 0
        admissible = snn_admissible_types(g.dim)
        if g.dim in (6, 8):
            listed = sorted(admissible)
            verdicts.append(ObstructionVerdict(
                rule=f"snn-type-dim{g.dim}",
                triggered=center_dim == 1 and typ not in admissible,
                statement=(f"a {g.dim}-dimensional nilpotent Lie algebra with "
                           "1-dimensional center forces every complex structure "
                           "to be strongly non-nilpotent, which requires "
                           f"ascending type in {listed}"),
                witness={"ascending_type": typ, "center_dim": center_dim,
                         "admissible": listed,
                         "snn_excluded_by_type": typ not in admissible},
            ))
        if g.dim == 8:
            verdicts.append(ObstructionVerdict(
                rule="quasi-filiform-dim8",
                triggered=step == 6,
                statement=("8-dimensional quasi-filiform (6-step) nilpotent Lie "
                           "algebras admit no complex structure (classification "
                           "result, not re-derived here)"),
                witness={"step": step},
            ))
    return verdicts


@dataclass(frozen=True)
class AuditCheck:
    """One structural statement re-checked on a concrete pair."""

    rule: str
    applicable: bool
    passed: bool
    statement: str
    witness: dict = field(default_factory=dict)


def _check(checks: list[AuditCheck], rule: str, applicable: bool,
           passed: bool, statement: str, **witness) -> None:
    checks.append(AuditCheck(rule, applicable, passed if applicable else True,
                             statement, dict(witness)))


def theorem_audit(g: LieAlgebra, j: Acs) -> list[AuditCheck]:
    """Re-verify the structural theorems on an integrable nilpotent pair.

    Every check below is a proved statement about nilpotent Lie algebras
    with complex structures, so on valid input nothing may FAIL.
    """
    require_integrable(g, j)
    report = ascending_central_series(g)
    if not report.is_nilpotent:
        raise NotNilpotent("the audit applies to nilpotent algebras")
    cls = j_compatible_series(g, j)
    checks: list[AuditCheck] = []
    n2 = g.dim
    n = n2 // 2
    s = report.step
    snn = cls.kind is JKind.STRONGLY_NON_NILPOTENT

    _check(checks, "snn-three-step", snn, s >= 3,
           "a strongly non-nilpotent structure forces nilpotency step >= 3",
           step=s)

    jmat = j.matrix
    for k in range(1, s):
        gk = report.term(k)
        jgk = apply_map(jmat, gk)
        if intersect(gk, jgk).dim != 0:
            continue
        gk1 = report.term(k + 1)
        jgk1 = apply_map(jmat, gk1)
        tag = f"k={k}"
        _check(checks, f"next-term-misses-J ({tag})", True,
               intersect(gk1, jgk).dim == 0,
               "g_k ∩ Jg_k = 0 implies g_{k+1} ∩ Jg_k = 0",
               k=k)
        _check(checks, f"term-dim-window ({tag})", True,
               k <= gk.dim <= n - 2,
               "g_k ∩ Jg_k = 0 implies k <= dim g_k <= n-2",
               k=k, dim=gk.dim, n=n)
        _check(checks, f"next-dim-window ({tag})", True,
               1 + gk.dim <= gk1.dim <= 2 * n - 3,
               "g_k ∩ Jg_k = 0 implies 1 + dim g_k <= dim g_{k+1} <= 2n-3",
               k=k, dim_next=gk1.dim)
        if intersect(gk1, jgk1).dim != 0:
            _check(checks, f"next-dim-window-strict ({tag})", True,
                   2 + gk.dim <= gk1.dim,
                   "with g_{k+1} ∩ Jg_{k+1} != 0 the jump is at least 2",
                   k=k, dim=gk.dim, dim_next=gk1.dim)
        _check(checks, f"step-gap ({tag})", True, s >= k + 2,
               "g_k ∩ Jg_k = 0 implies nilpotency step >= k+2",
               k=k, step=s)
        if s == k + 2:
            _check(checks, f"step-gap-boundary ({tag})", True,
                   intersect(gk1, jgk1).dim != 0,
                   "if the step equals k+2 then g_{k+1} meets Jg_{k+1}",
                   k=k)

    center_dim = report.term(1).dim
    _check(checks, "snn-center-bound", snn and n >= 4,
           center_dim <= n - 3,
           "strongly non-nilpotent with n >= 4 forces dim g_1 <= n-3",
           center_dim=center_dim, n=n)
    _check(checks, "many-factor-product", n >= 4 and center_dim >= n - 2,
           cls.kind is not JKind.STRONGLY_NON_NILPOTENT,
           "a center of dimension >= n-2 (e.g. a product of n-2 factors) "
           "forces a quasi-nilpotent structure",
           center_dim=center_dim, kind=cls.kind.value)

    if n2 == 8 and snn:
        g2 = report.term(2)
        _check(checks, "dim8-center-line", True, center_dim == 1,
               "8-dimensional strongly non-nilpotent pairs have a "
               "1-dimensional center", center_dim=center_dim)
        _check(checks, "dim8-g2-window", True, 3 <= g2.dim <= 5,
               "8-dimensional strongly non-nilpotent pairs have 3 <= dim g_2 <= 5",
               dim_g2=g2.dim)
        _check(checks, "dim8-g2-meets-J", True,
               intersect(g2, apply_map(jmat, g2)).dim != 0,
               "8-dimensional strongly non-nilpotent pairs have g_2 ∩ Jg_2 != 0")
        _check(checks, "dim8-type-list", True,
               report.ascending_type in DIM8_SNN_TYPES,
               "8-dimensional strongly non-nilpotent pairs realize one of the "
               "eight admissible ascending types",
               ascending_type=report.ascending_type)
    return checks


def audit_failures(checks: list[AuditCheck]) -> list[AuditCheck]:
    return [c for c in checks if c.applicable and not c.passed]
