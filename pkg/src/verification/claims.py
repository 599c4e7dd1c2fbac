"""
The fixed menu of checkable claims and their dispatch.

Each claim takes a subject (a partial magma or a truncated partial group),
an optional second subject, and a truncation level, and returns a
FunctorReport. Claims that need a symmetric set build B(P) when given a
magma; claims that need a binary partial group read the carrier when given
a symmetric set.
"""

from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple, Union

from loguru import logger

from src.algebra.magma import (
    BinaryPartialGroup,
    PartialMagma,
    check_anti_automorphism,
    check_baer_criterion,
    check_I2,
)
from src.algebra.words import all_parenthesizations, check_mirror_identity, words_of_length
from src.core.config import get_settings
from src.core.exceptions import UnknownClaimError
from src.core.reports import FunctorReport, Verdict
from src.core.sweep import run_sweep
from src.simplicial.functors import (
    big_embed,
    check_2skeletal_equivalence,
    check_bp_partial_group,
    check_final_remark,
    check_fully_faithful,
    check_inversion_closure,
    check_main_theorem,
    check_simplicial_two_skeleton,
    check_skeleta,
    check_t_skeleton_invariance,
    check_tb_identity,
    check_triangle_identities,
    check_unit_eta,
    small_embed,
)
from src.simplicial.symset import TruncatedPartialGroup

Subject = Union[PartialMagma, BinaryPartialGroup, TruncatedPartialGroup]


class ClaimId(str, Enum):
    """Claims accepted by ``check``"""
    ANTI_AUTO = "anti-auto"
    MIRROR = "mirror"
    INVERSION_CLOSURE = "inversion-closure"
    MAIN_THEOREM = "main-theorem"
    TB_ID = "tb-id"
    ETA = "eta"
    TRIANGLES = "triangles"
    FULLY_FAITHFUL = "fully-faithful"
    TWO_SKELETAL = "two-skeletal"
    BAER = "baer"
    FINAL_REMARK = "final-remark"
    BP_PARTIAL_GROUP = "bp-partial-group"
    SKELETA = "skeleta"
    SIMPLICIAL_REMARK = "simplicial-remark"
    T_SKELETON = "t-skeleton"


def parse_claim(claim: Union[str, ClaimId]) -> ClaimId:
    try:
        return ClaimId(claim)
    except ValueError:
        menu = ", ".join(c.value for c in ClaimId)
        raise UnknownClaimError(f"Unknown claim {claim!r}; expected one of {menu}") from None


def _group(subject: Subject) -> BinaryPartialGroup:
    if isinstance(subject, TruncatedPartialGroup):
        return subject.carrier
    if isinstance(subject, BinaryPartialGroup):
        return subject
    return BinaryPartialGroup.from_magma(subject)


def _magma(subject: Subject) -> PartialMagma:
    if isinstance(subject, TruncatedPartialGroup):
        return subject.carrier.magma
    if isinstance(subject, BinaryPartialGroup):
        return subject.magma
    return subject


def _symset(subject: Subject, N: int, build: Callable = big_embed) -> TruncatedPartialGroup:
    if isinstance(subject, TruncatedPartialGroup):
        return subject
    return build(_group(subject), N)


def check_dagger_lemma(G: BinaryPartialGroup) -> FunctorReport:
    """The dagger is an involutive anti-automorphism and satisfies I2"""
    report = FunctorReport(construction="anti-auto", instances=[G.label])
    report.absorb("anti-auto.anti-automorphism", check_anti_automorphism(G))
    report.absorb("anti-auto.I2", check_I2(G, G.dagger))
    return report


def check_mirror_words(G: BinaryPartialGroup, max_length: Optional[int] = None) -> FunctorReport:
    """Every word up to ``max_length`` under every parenthesization"""
    max_length = max_length if max_length is not None else get_settings().verification.mirror_max_length
    report = FunctorReport(construction="mirror", instances=[G.label])
    for n in range(1, max_length + 1):
        trees = all_parenthesizations(n)
        failure = None
        for w in words_of_length(G.size, n):
            for t in trees:
                single = check_mirror_identity(G, w, t)
                if not single.passed:
                    failure = single
                    break
            if failure:
                break
        if failure:
            report.absorb(f"mirror.length{n}", failure)
        else:
            report.record(f"mirror.length{n}", True, detail=f"{G.size ** n} words × {len(trees)} trees")
    return report


def _dispatch(claim: ClaimId, subject: Subject, other: Optional[Subject], N: int) -> FunctorReport:
    if claim is ClaimId.ANTI_AUTO:
        return check_dagger_lemma(_group(subject))
    if claim is ClaimId.MIRROR:
        return check_mirror_words(_group(subject))
    if claim is ClaimId.INVERSION_CLOSURE:
        return check_inversion_closure(_group(subject), N)
    if claim is ClaimId.MAIN_THEOREM:
        return check_main_theorem(_group(subject), N)
    if claim is ClaimId.TB_ID:
        return check_tb_identity(_group(subject), N)
    if claim is ClaimId.ETA:
        return check_unit_eta(_symset(subject, N))
    if claim is ClaimId.TRIANGLES:
        return check_triangle_identities(_group(subject), N)
    if claim is ClaimId.FULLY_FAITHFUL:
        target = other if other is not None else subject
        return check_fully_faithful(_group(subject), _group(target), N)
    if claim is ClaimId.TWO_SKELETAL:
        return check_2skeletal_equivalence(_symset(subject, N, build=small_embed))
    if claim is ClaimId.BAER:
        return FunctorReport.from_validation("baer", check_baer_criterion(_magma(subject)))
    if claim is ClaimId.FINAL_REMARK:
        X = _symset(other if other is not None else subject, N)
        return check_final_remark(_magma(subject), X)
    if claim is ClaimId.BP_PARTIAL_GROUP:
        return check_bp_partial_group(_group(subject), N)
    if claim is ClaimId.SKELETA:
        return check_skeleta(_group(subject), N)
    if claim is ClaimId.SIMPLICIAL_REMARK:
        return check_simplicial_two_skeleton(_group(subject), N)
    return check_t_skeleton_invariance(_symset(subject, N))


def run_claim(
    claim: Union[str, ClaimId],
    subject: Subject,
    other: Optional[Subject] = None,
    levels: Optional[int] = None,
) -> FunctorReport:
    """
    Check one claim on one instance.

    Raises:
        UnknownClaimError: claim outside the menu
        NotABinaryPartialGroupError: the claim needs a binary partial group
            and the subject is not one
    """
    claim_id = parse_claim(claim)
    N = levels if levels is not None else get_settings().verification.levels
    logger.info(f"Checking {claim_id.value} at N={N}")
    return _dispatch(claim_id, subject, other, N)


def _run_task(task: Tuple[ClaimId, Subject, Optional[Subject], int]) -> FunctorReport:
    claim, subject, other, N = task
    return _dispatch(claim, subject, other, N)


def sweep_claim(
    claim: Union[str, ClaimId],
    structures: Sequence[BinaryPartialGroup],
    levels: Optional[int] = None,
    workers: Optional[int] = None,
) -> FunctorReport:
    """
    One claim over many structures, merged into a single report.

    ``fully-faithful`` runs over every ordered pair.
    """
    claim_id = parse_claim(claim)
    N = levels if levels is not None else get_settings().verification.levels
    if claim_id is ClaimId.FULLY_FAITHFUL:
        tasks = [(claim_id, G, H, N) for G in structures for H in structures]
    else:
        tasks = [(claim_id, G, None, N) for G in structures]
    logger.info(f"Sweeping {claim_id.value} over {len(tasks)} instances at N={N}")
    merged = FunctorReport(construction=f"{claim_id.value} sweep")
    for report in run_sweep(_run_task, tasks, workers):
        instance = " → ".join(report.instances)
        merged.instances.append(instance)
        for check in report.checks:
            merged.checks.append(check.model_copy(update={"claim": f"{instance}: {check.claim}"}))
    failed = sum(1 for check in merged.checks if check.verdict == Verdict.FAIL)
    merged.notes.append(f"{len(tasks)} instances, {len(merged.checks)} checks, {failed} failed")
    return merged


def claim_menu() -> List[str]:
    return [c.value for c in ClaimId]
