"""
Command-line entry point for the partial group lab.

Exit status: 0 on success or pass, 1 when a validation or claim fails,
2 on malformed input, unknown ids, unmet preconditions or usage errors.
Reports go to stdout; logs go to stderr.
"""

import functools
import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Sequence, Union

import click
from loguru import logger
from tabulate import tabulate

from src.algebra.magma import (
    BinaryPartialGroup,
    PartialMagma,
    find_dagger,
    one_sided_candidates,
    validate_unital,
)
from src.atlas.enumerate import (
    WITNESS_PREDICATES,
    candidate_count,
    classify_bpgs,
    build_atlas,
    enumerate_unital_partial_magmas,
    find_witness,
)
from src.atlas.persistence import load_atlas, load_manifest, save_atlas
from src.core.config import get_settings, override_settings
from src.core.exceptions import (
    DocumentError,
    IntegrityError,
    NotABinaryPartialGroupError,
    PartialGroupError,
    PreconditionError,
    ResourceGuardError,
    StructuralError,
    UnknownClaimError,
    UnknownPredicateError,
)
from src.core.reports import ValidationReport
from src.simplicial.functors import big_embed, skeleton, small_embed
from src.simplicial.symset import TruncatedPartialGroup, validate_partial_group
from src.verification.claims import claim_menu, run_claim, sweep_claim
from src.verification.render import report_render

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2

Subject = Union[PartialMagma, TruncatedPartialGroup]

_DIAGNOSTICS = (
    (DocumentError, "malformed document"),
    (StructuralError, "structural error"),
    (UnknownClaimError, "unknown claim"),
    (UnknownPredicateError, "unknown predicate"),
    (ResourceGuardError, "resource bound"),
    (PreconditionError, "precondition not met"),
    (IntegrityError, "integrity error"),
    (PartialGroupError, "error"),
)


def configure_logging(level: Optional[str] = None) -> None:
    """Replace loguru's default sink with one on stderr"""
    settings = get_settings().observability
    logger.remove()
    logger.add(sys.stderr, level=(level or settings.log_level).upper(), format=settings.log_format)


def load_subject(path: Union[str, Path]) -> Subject:
    """A partial magma document, or a truncated partial group when the document has ``N``"""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"Cannot read {path}: {e.strerror}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"{path} is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise DocumentError(f"{path} does not hold a JSON object")
    if "N" in data:
        return TruncatedPartialGroup.from_document(data, label=path.stem)
    return PartialMagma.from_document(data, label=path.stem)


def _magma_of(subject: Subject) -> PartialMagma:
    return subject.carrier.magma if isinstance(subject, TruncatedPartialGroup) else subject


def _emit(data: Any, fmt: str) -> None:
    click.echo(report_render(data, fmt), nl=False)


def _emit_document(data: Dict[str, Any]) -> None:
    click.echo(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False))


class LabGroup(click.Group):
    """Turns library errors into diagnostics and exit status 2"""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except NotABinaryPartialGroupError as e:
            click.echo(f"not a binary partial group: {e}", err=True)
            if e.report is not None:
                fmt = ctx.meta.get("format", "text")
                _emit(e.report, fmt)
            ctx.exit(EXIT_FAILED)
        except PartialGroupError as e:
            kind = next(label for cls, label in _DIAGNOSTICS if isinstance(e, cls))
            click.echo(f"{kind}: {e}", err=True)
            ctx.exit(EXIT_ERROR)


def common_options(command: Callable) -> Callable:
    """--format, --seed, --workers and --unsafe-large, applied before the command runs"""

    @click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", help="Report format")
    @click.option("--seed", type=int, default=None, help="Seed for randomized spot-checks")
    @click.option("--workers", type=click.IntRange(min=1), default=None, help="Worker processes for sweeps")
    @click.option("--unsafe-large", is_flag=True, default=False, help="Allow size 5 and N above the safe bound")
    @functools.wraps(command)
    def wrapper(*args, fmt: str, seed: Optional[int], workers: Optional[int], unsafe_large: bool, **kwargs):
        verification: Dict[str, Any] = {}
        if seed is not None:
            verification["seed"] = seed
        if unsafe_large:
            verification["unsafe_large"] = True
        sections: Dict[str, Dict[str, Any]] = {}
        if verification:
            sections["verification"] = verification
        if workers is not None:
            sections["enumeration"] = {"workers": workers}
        if sections:
            override_settings(**sections)
        click.get_current_context().meta["format"] = fmt
        return command(*args, fmt=fmt, **kwargs)

    return wrapper


levels_option = click.option(
    "--levels", "levels", type=click.IntRange(min=2), default=None, help="Truncation level N (default 6)"
)


@click.group(cls=LabGroup)
@click.option("--log-level", default=None, help="Log level for stderr (default WARNING)")
@click.version_option(get_settings().app_version, prog_name=get_settings().app_name)
def cli(log_level: Optional[str]):
    """Finite binary partial groups and their symmetric set embeddings"""
    configure_logging(log_level)


@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
@common_options
def validate(file: str, fmt: str):
    """Validate a partial magma or a truncated partial group"""
    ctx = click.get_current_context()
    subject = load_subject(file)
    if isinstance(subject, TruncatedPartialGroup):
        report = validate_partial_group(subject)
        _emit(report, fmt)
        ctx.exit(EXIT_OK if report.passed else EXIT_FAILED)

    report = ValidationReport(subject=f"binary partial group {subject.label}")
    report.merge(validate_unital(subject.table, subject.unit, subject.names))
    if report.passed:
        report.merge(find_dagger(subject).report)
    if not report.passed:
        _emit(report, fmt)
        ctx.exit(EXIT_FAILED)
    G = BinaryPartialGroup.from_magma(subject)
    if fmt == "json":
        report.notes.append(f"dagger: {G.describe_dagger()}")
        _emit(report, fmt)
    else:
        click.echo(f"binary partial group; dagger: {G.describe_dagger()}")
    ctx.exit(EXIT_OK)


@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
@common_options
def dagger(file: str, fmt: str):
    """Search for the dagger, listing one-sided candidates per element"""
    ctx = click.get_current_context()
    magma = _magma_of(load_subject(file))
    search = find_dagger(magma)
    if fmt == "json":
        data = search.report.model_dump(mode="json")
        data["dagger"] = None if search.dagger is None else {
            magma.names[a]: magma.names[d] for a, d in enumerate(search.dagger)
        }
        _emit(data, fmt)
    else:
        rows = []
        for a in range(magma.size):
            left, right = one_sided_candidates(magma, a)
            rows.append([
                magma.names[a],
                " ".join(magma.names[c] for c in left) or "-",
                " ".join(magma.names[c] for c in right) or "-",
                magma.names[search.dagger[a]] if search.found else "",
            ])
        click.echo(tabulate(rows, headers=["Element", "Left", "Right", "Dagger"], tablefmt="simple"))
        if not search.found:
            _emit(search.report, fmt)
    ctx.exit(EXIT_OK if search.found else EXIT_FAILED)


@cli.command()
@click.option("--size", "size", type=int, required=True, help="Number of elements k")
@common_options
def classify(size: int, fmt: str):
    """Binary partial groups of one size up to isomorphism"""
    atlas = classify_bpgs(size)
    if fmt == "json":
        _emit({
            "size": size,
            "provenance": atlas.provenance.model_dump(mode="json"),
            "structures": [G.magma.to_document() for G in atlas],
        }, fmt)
        return
    rows = [
        [G.label, sum(1 for _ in G.magma.defined_pairs()), G.describe_dagger()]
        for G in atlas
    ]
    click.echo(f"size {size}: {len(atlas)} classes from {atlas.provenance.candidates} candidates")
    click.echo(tabulate(rows, headers=["Label", "Defined products", "Dagger"], tablefmt="simple"))


@cli.command("build-bp")
@click.argument("file", type=click.Path(dir_okay=False))
@levels_option
@click.option("--small", is_flag=True, default=False, help="Build B′ = sk_2 ∘ B instead of B")
@common_options
def build_bp(file: str, levels: Optional[int], small: bool, fmt: str):
    """Emit B(P) (or B′(P)) as a truncated partial group document"""
    N = levels or get_settings().verification.levels
    magma = _magma_of(load_subject(file))
    X = small_embed(magma, N) if small else big_embed(magma, N)
    _emit_document(X.to_document())


@cli.command("skeleton")
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--degree", "degree", type=int, default=2, help="Skeleton degree k")
@levels_option
@click.option("--monotone", is_flag=True, default=False, help="Close under order-preserving maps only")
@common_options
def skeleton_command(file: str, degree: int, levels: Optional[int], monotone: bool, fmt: str):
    """Emit sk_k of a truncated partial group (or of B(P) for a magma)"""
    subject = load_subject(file)
    if isinstance(subject, PartialMagma):
        subject = big_embed(subject, levels or get_settings().verification.levels)
    _emit_document(skeleton(subject, degree, monotone_only=monotone).to_document())


@cli.command()
@click.argument("claim", metavar="CLAIM")
@click.argument("file", type=click.Path(dir_okay=False))
@click.argument("file2", type=click.Path(dir_okay=False), required=False)
@levels_option
@common_options
def check(claim: str, file: str, file2: Optional[str], levels: Optional[int], fmt: str):
    """Check CLAIM on FILE (and FILE2 for fully-faithful and final-remark)"""
    ctx = click.get_current_context()
    if claim not in claim_menu():
        raise UnknownClaimError(f"Unknown claim {claim!r}; expected one of {', '.join(claim_menu())}")
    subject = load_subject(file)
    other = load_subject(file2) if file2 else None
    report = run_claim(claim, subject, other, levels=levels)
    _emit(report, fmt)
    ctx.exit(EXIT_OK if report.passed else EXIT_FAILED)


@cli.command("enumerate")
@click.option("--size", "size", type=int, required=True, help="Number of elements k")
@click.option("--witness", "predicate", default=None, help=f"Search sizes 1..k for: {', '.join(WITNESS_PREDICATES)}")
@levels_option
@common_options
def enumerate_command(size: int, predicate: Optional[str], levels: Optional[int], fmt: str):
    """Count unital partial magmas of size k, or search for a witness"""
    if predicate is not None:
        _emit(find_witness(size, predicate, levels=levels), fmt)
        return
    generated = sum(1 for _ in enumerate_unital_partial_magmas(size))
    atlas = classify_bpgs(size)
    summary = {
        "size": size,
        "candidates": generated,
        "expected_candidates": candidate_count(size),
        "with_dagger": atlas.provenance.with_dagger,
        "classes": len(atlas),
    }
    if fmt == "json":
        _emit(summary, fmt)
    else:
        click.echo(tabulate([list(summary.values())], headers=list(summary.keys()), tablefmt="simple"))


@cli.command()
@click.option("--size", "size", type=int, default=None, help="Largest size to enumerate")
@click.option("--out", "out", type=click.Path(file_okay=False), default=None, help="Directory to write")
@click.option("--from", "source", type=click.Path(file_okay=False), default=None, help="Load a stored atlas instead")
@click.option("--check", "claim", default=None, help="Sweep a claim over every stored structure")
@levels_option
@common_options
def atlas(size: Optional[int], out: Optional[str], source: Optional[str], claim: Optional[str],
          levels: Optional[int], fmt: str):
    """Build (or load) the atlas and optionally sweep a claim over it"""
    ctx = click.get_current_context()
    if source:
        atlases = load_atlas(source)
        manifest = load_manifest(source)
    else:
        atlases = build_atlas(size)
        manifest = save_atlas(atlases, out)
    if claim is None:
        _emit(manifest, fmt)
        return
    structures = [G for k in sorted(atlases) for G in atlases[k]]
    report = sweep_claim(claim, structures, levels=levels)
    _emit(report, fmt)
    ctx.exit(EXIT_OK if report.passed else EXIT_FAILED)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return its exit status"""
    try:
        result = cli.main(args=list(argv) if argv is not None else None, prog_name="partial-groups",
                          standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_ERROR if isinstance(e, click.UsageError) else e.exit_code
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return EXIT_FAILED
    return result if isinstance(result, int) else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
