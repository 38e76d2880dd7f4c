"""
Per-subject checks of the verification suites. A subject is a shape, a
(shape, m) pair, a partition or a size, depending on the suite; every check
returns a CheckReport so sweeps can be fanned out and merged in order.
"""
from __future__ import annotations

from happ.combinat.compositions import (
    Composition,
    SkewShapePair,
    compositions_of,
    compositions_up_to,
    is_simple,
    lc_leq,
    partitions_of,
    strict_reverse_partitions_of,
)
from happ.combinat.equivalence import canonical_class, equivalence_classes
from happ.combinat.errors import ClassStructureError, PosetError, TableauError
from happ.combinat.hecke import orbit, verify_hecke_relations
from happ.combinat.modrep import (
    branching_check,
    build_class_module,
    build_module,
    build_skew_module,
    characteristic,
    commutant,
    direct_sum_check,
    indecomposability_verdict,
    is_filtration_compatible,
    relations_report,
    restrict_and_verify,
    source_generates,
)
from happ.combinat.posets import rank_statistics, verify_interval_iso, verify_word_property
from happ.combinat.qsym import (
    QSymF,
    canonical_modules_distinct,
    canonical_transition_matrix,
    coproduct_mass_check,
    quasisymmetric_schur,
    schur_expansion_check,
    skew_quasisymmetric_schur,
)
from happ.combinat.reports import CheckReport
from happ.combinat.shifted import class_bijection
from happ.combinat.tableaux import enumerate_srct

NON_RANK_SYMMETRIC_WITNESS = Composition((2, 4))


def check_relations(alpha: Composition) -> CheckReport:
    report = verify_hecke_relations(alpha)
    if not report:
        return report
    matrices = relations_report(build_module(alpha))
    if not matrices:
        return matrices
    return report


def check_characteristic(alpha: Composition) -> CheckReport:
    module = build_module(alpha)
    expected = quasisymmetric_schur(alpha)
    found = characteristic(module)
    if found != expected:
        return CheckReport.failed("characteristic", alpha, {
            "shape": str(alpha), "characteristic": found.to_json(), "expected": expected.to_json(),
        })
    by_classes = QSymF()
    for srct_class in equivalence_classes(alpha):
        by_classes = by_classes + characteristic(build_class_module(srct_class))
    if by_classes != expected:
        return CheckReport.failed("characteristic", alpha, {
            "shape": str(alpha), "reason": "not_additive_over_classes",
        })
    filtration = is_filtration_compatible(module)
    if not filtration:
        return filtration
    return CheckReport.passed("characteristic", alpha, checked=module.dimension)


def check_classes(alpha: Composition) -> CheckReport:
    classes = equivalence_classes(alpha)
    members = 0
    for srct_class in classes:
        source, sink = srct_class.source, srct_class.sink
        members += srct_class.size
        if orbit(source) != list(srct_class.members):
            return CheckReport.failed("classes", alpha, {
                "shape": str(alpha), "tableau": str(source), "reason": "class_is_not_source_orbit",
            })
        for member in srct_class.members:
            if member.positions[1][1] not in srct_class.drn:
                return CheckReport.failed("classes", alpha, {
                    "shape": str(alpha), "tableau": str(member), "reason": "one_outside_drn",
                })
        generated = source_generates(build_class_module(srct_class), source)
        if not generated:
            return generated
        if sink not in orbit(source):
            return CheckReport.failed("classes", alpha, {
                "shape": str(alpha), "tableau": str(sink), "reason": "sink_not_reached",
            })
    if members != len(enumerate_srct(alpha)):
        return CheckReport.failed("classes", alpha, {"shape": str(alpha), "reason": "not_a_partition"})
    if (len(classes) == 1) != is_simple(alpha):
        return CheckReport.failed("classes", alpha, {
            "shape": str(alpha), "classes": len(classes), "simple": is_simple(alpha),
        })
    if list(canonical_class(alpha).members) != enumerate_srct(alpha, columns_increasing=True):
        return CheckReport.failed("classes", alpha, {
            "shape": str(alpha), "reason": "canonical_class_not_columns_increasing",
        })
    return CheckReport.passed("classes", alpha, checked=len(classes))


def check_bruhat(alpha: Composition) -> CheckReport:
    classes = equivalence_classes(alpha)
    for srct_class in classes:
        for report in (verify_interval_iso(srct_class), verify_word_property(srct_class)):
            if not report:
                return report
    return CheckReport.passed("bruhat", alpha, checked=len(classes))


def check_indecomposability(alpha: Composition) -> CheckReport:
    verdict = indecomposability_verdict(alpha)
    if not verdict.consistent:
        return CheckReport.failed("indec", alpha, verdict.to_json())
    details = verdict.to_json()
    if verdict.commutant_dimension is None:
        # class projections are independent commuting idempotents
        details["commutant_dimension"] = commutant(build_module(alpha)).dimension
        if details["commutant_dimension"] < verdict.classes:
            return CheckReport.failed("indec", alpha, details)
    direct_sum = direct_sum_check(alpha)
    if not direct_sum:
        return direct_sum
    return CheckReport.passed("indec", alpha, checked=1, **details)


def check_canonical(n: int) -> CheckReport:
    matrix = canonical_transition_matrix(n)
    if not matrix.is_upper_unitriangular():
        return CheckReport.failed("canonical", n, {"n": n, "matrix": matrix.matrix.tolist()})
    distinct = canonical_modules_distinct(n)
    if not distinct:
        return distinct
    return CheckReport.passed("canonical", n, checked=len(matrix.index))


def check_restriction(subject: tuple[Composition, int]) -> CheckReport:
    alpha, m = subject
    return restrict_and_verify(alpha, m)


def check_skew(pair: SkewShapePair) -> CheckReport:
    module = build_skew_module(pair)
    relations = relations_report(module)
    if not relations:
        return relations
    if characteristic(module) != skew_quasisymmetric_schur(pair):
        return CheckReport.failed("skew", pair, {"shape": str(pair), "reason": "characteristic"})
    skew_relations = verify_hecke_relations(pair)
    if not skew_relations:
        return skew_relations
    return CheckReport.passed("skew", pair, checked=module.dimension)


def check_conjecture(alpha: Composition) -> CheckReport:
    rows = rank_statistics(alpha)
    non_unimodal = [row.to_json() for row in rows if not row.unimodal]
    if alpha == NON_RANK_SYMMETRIC_WITNESS and all(row.symmetric for row in rows):
        return CheckReport.failed("conjecture", alpha, {
            "shape": str(alpha), "reason": "rank_symmetric_witness_missing",
        })
    return CheckReport.passed(
        "conjecture", alpha, checked=len(rows),
        rank_vectors=[row.to_json() for row in rows],
        non_unimodal=non_unimodal,
    )


SUITES = {
    "relations": check_relations,
    "characteristic": check_characteristic,
    "schur": schur_expansion_check,
    "classes": check_classes,
    "bruhat": check_bruhat,
    "indec": check_indecomposability,
    "canonical": check_canonical,
    "restriction": check_restriction,
    "branching": branching_check,
    "coproduct": coproduct_mass_check,
    "skew": check_skew,
    "bijection": class_bijection,
    "conjecture": check_conjecture,
}


def subjects(suite: str, n: int) -> list:
    """What a suite sweeps for sizes up to n, in canonical order."""
    if suite == "schur":
        return [lam for size in range(1, n + 1) for lam in partitions_of(size)]
    if suite == "canonical":
        return list(range(1, n + 1))
    if suite == "restriction":
        return [(alpha, m) for alpha in compositions_up_to(n) for m in range(alpha.size + 1)]
    if suite == "skew":
        return [
            SkewShapePair(alpha, beta)
            for alpha in compositions_up_to(n)
            for size in range(alpha.size + 1)
            for beta in compositions_of(size)
            if lc_leq(beta, alpha)
        ]
    if suite == "bijection":
        return [alpha for size in range(1, n + 1) for alpha in strict_reverse_partitions_of(size)]
    if suite not in SUITES:
        raise KeyError(suite)
    return compositions_up_to(n)


def subject_text(subject) -> str:
    if isinstance(subject, tuple):
        alpha, m = subject
        return f"{alpha} m={m}"
    return str(subject)


def run_check(suite: str, subject) -> CheckReport:
    """Run one check; a broken structural claim becomes a failed report, not an exception."""
    try:
        return SUITES[suite](subject)
    except (ClassStructureError, PosetError, TableauError) as e:
        return CheckReport.failed(suite, subject_text(subject), {
            "shape": subject_text(subject),
            "reason": e.reason,
            "detail": str(e),
        })
