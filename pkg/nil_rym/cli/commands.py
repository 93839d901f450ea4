"""
Command line front end.

Exit status: 0 on success, 1 when a demanded verdict is not met (certify
--expect, tune without a solution), 2 on input errors.
"""
import functools
import logging
import os
import sys
from datetime import datetime
from pathlib import Path

import click

from nil_rym import __version__, algebra
from nil_rym.actions import fingerprint
from nil_rym.catalogue import FAMILIES, build, concat, tune_parameter
from nil_rym.cli.documents import TupleDocument, read_document, serialize, write_document
from nil_rym.cli.reports import Report
from nil_rym.errors.catalogue_errors import (ParameterError, ParameterNotFoundError, UnknownBasisMatrixError,
                                             UnknownFamilyError)
from nil_rym.errors.document_errors import DocumentParseError, DocumentSchemaError, DocumentValidationError
from nil_rym.errors.flow_errors import FlowConfigError, FlowIntegrationError
from nil_rym.errors.structure_errors import (DegenerateTupleError, DimensionLimitError, InvalidGroupElementError,
                                             NumericalDefectError, StructureShapeError)
from nil_rym.flow import detect_limit, integrate_many
from nil_rym.models.family import FamilySpec
from nil_rym.models.flow_trace import FlowConfig
from nil_rym.models.models import CertificateMode, Group
from nil_rym.soliton import DEFAULT_TOL, certify, classify

COLOR_ENV = "NIL_RYM_COLOR"

INPUT_ERRORS = (
    OSError,
    DocumentParseError,
    DocumentSchemaError,
    DocumentValidationError,
    StructureShapeError,
    DimensionLimitError,
    DegenerateTupleError,
    InvalidGroupElementError,
    NumericalDefectError,
    UnknownFamilyError,
    UnknownBasisMatrixError,
    ParameterError,
    FlowConfigError,
    FlowIntegrationError,
)

_defaults = FlowConfig()


def _exits_on_input_error(command):
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except INPUT_ERRORS as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(2)

    return wrapper


def _use_color() -> bool:
    return os.environ.get(COLOR_ENV, "0") == "1"


def _emit(report: Report, as_json: bool, timestamp: bool) -> None:
    if as_json:
        click.echo(report.to_json(), nl=False)
        return
    stamp = datetime.now().isoformat(timespec="seconds") if timestamp else None
    click.echo(report.render_text(color=_use_color(), timestamp=stamp), nl=False)


def _parse_value(text: str):
    """
    "1.5" -> 1.5, "2" -> 2, "1,0.5" -> (1.0, 0.5), "0.6:0.8,1:0" -> ((0.6, 0.8), (1.0, 0.0)).
    """

    def number(token):
        token = token.strip()
        try:
            return int(token)
        except ValueError:
            return float(token)

    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise ValueError("empty value")
    if any(":" in t for t in items):
        return tuple(tuple(float(v) for v in t.split(":")) for t in items)
    if len(items) == 1 and "," not in text:
        return number(items[0])
    return tuple(float(t) for t in items)


def parse_params(values) -> dict:
    """
    Turn repeated --param key=value options into a parameter dict.
    """
    params = {}
    for raw in values:
        key, sep, text = raw.partition("=")
        if not sep or not key.strip():
            raise click.BadParameter(f"expected key=value, got '{raw}'", param_hint="--param")
        try:
            params[key.strip()] = _parse_value(text)
        except ValueError:
            raise click.BadParameter(f"cannot read value of '{raw}'", param_hint="--param")
    return params


def _subject(document: TupleDocument, path) -> dict:
    c = document.tuple
    return {"source": str(path), "label": document.label, "q": c.q, "p": c.p, "norm": c.norm}


def _write_or_echo(document: TupleDocument, out) -> None:
    if out:
        write_document(out, document)
        logging.info(f"Wrote {document.label or 'tuple'} to {out}")
    else:
        click.echo(serialize(document), nl=False)


tol_option = click.option("--tol", type=float, default=DEFAULT_TOL, show_default=True, help="Certificate tolerance.")
json_option = click.option("--json", "as_json", is_flag=True, help="Machine-readable JSON output.")
timestamp_option = click.option("--timestamp", is_flag=True, help="Add a timestamp to human-readable output.")
param_option = click.option("--param", "params", multiple=True, metavar="KEY=VALUE", help="Family parameter.")


@click.group()
@click.version_option(__version__, prog_name="nil-rym")
@click.option("-v", "--verbose", count=True, help="-v for info, -vv for debug logging on stderr.")
def main(verbose):
    """
    Moment maps, soliton certificates and gradient flows for 2-step nilpotent metric Lie algebras.
    """
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(message)s", force=True)


@main.command()
@click.argument("path", type=click.Path(dir_okay=False))
@tol_option
@json_option
@timestamp_option
@_exits_on_input_error
def analyze(path, tol, as_json, timestamp):
    """
    Validate a tuple and run every certificate on it.
    """
    document = read_document(path)
    c = document.tuple
    result = classify(c, tol)
    kind = algebra.algebra_type(c)
    bound = algebra.regular_closed_orbit_bound(c.q)
    report = Report(
        "analyze",
        subject=_subject(document, path),
        certificates=[result.rym, result.ricci, result.gfi, result.ricci_and_gfi],
        sections={
            "validation": {
                "effective_p": document.validation.effective_p,
                "regular": document.validation.is_regular,
                "messages": list(document.validation.messages),
            },
            "fingerprint": fingerprint(c).as_dict(),
            "orbits": {
                "type": [kind.p, kind.q],
                "closed_orbit_bound": bound,
                "generically_closed": kind.p <= bound,
                "certificates_consistent": result.consistent,
            },
        },
    )
    _emit(report, as_json, timestamp)


@main.command("certify")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option(
    "--mode",
    type=click.Choice([m.value for m in CertificateMode]),
    default=CertificateMode.RYM.value,
    show_default=True,
)
@tol_option
@click.option("--expect", type=click.Choice(["true", "false"]), help="Exit 1 unless the verdict matches.")
@json_option
@timestamp_option
@_exits_on_input_error
def certify_command(path, mode, tol, expect, as_json, timestamp):
    """
    Run one certificate on a tuple.
    """
    document = read_document(path)
    certificate = certify(document.tuple, mode, tol)
    report = Report("certify", subject=_subject(document, path), certificates=[certificate])
    if expect is not None:
        report.sections["expectation"] = {"expected": expect == "true", "met": certificate.verdict == (expect == "true")}
    _emit(report, as_json, timestamp)
    if expect is not None and certificate.verdict != (expect == "true"):
        sys.exit(1)


@main.command()
@click.argument("paths", nargs=-1, required=True, type=click.Path(dir_okay=False))
@click.option("--group", type=click.Choice([g.value for g in Group]), default=_defaults.group.value, show_default=True)
@click.option("--steps", type=int, default=_defaults.max_steps, show_default=True, help="Maximum number of steps.")
@click.option("--step", type=float, default=_defaults.step, show_default=True, help="Dimensionless step size.")
@click.option("--tol", type=float, default=_defaults.conv_tol, show_default=True, help="Convergence tolerance.")
@click.option("--blowdown-tol", type=float, default=_defaults.blowdown_tol, show_default=True)
@click.option("--projected/--plain", default=_defaults.projected, show_default=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), help="Trace CSV; numbered per input in batch mode.")
@click.option("--workers", type=int, default=None, help="Parallel runs in batch mode.")
@json_option
@timestamp_option
@_exits_on_input_error
def flow(paths, group, steps, step, tol, blowdown_tol, projected, csv_path, workers, as_json, timestamp):
    """
    Integrate the moment-map gradient flow from one or more tuples.
    """
    cfg = FlowConfig(
        group=Group(group), step=step, max_steps=steps, conv_tol=tol, projected=projected, blowdown_tol=blowdown_tol
    )
    documents = [read_document(path) for path in paths]
    traces = integrate_many([d.tuple for d in documents], cfg, workers)
    runs = []
    for i, (path, trace) in enumerate(zip(paths, traces)):
        limit = detect_limit(trace)
        runs.append({"source": str(path), "trace": trace.as_dict(), "limit": limit.as_dict()})
        if csv_path:
            target = Path(csv_path)
            if len(paths) > 1:
                target = target.with_name(f"{target.stem}.{i}{target.suffix}")
            trace.to_csv(target)
            logging.info(f"Wrote trace of {path} to {target}")
    report = Report("flow", subject={"inputs": len(paths), "group": group, "projected": projected}, sections={"runs": runs})
    _emit(report, as_json, timestamp)


@main.command()
@click.argument("name", type=click.Choice(sorted(FAMILIES)))
@param_option
@click.option("--out", type=click.Path(dir_okay=False), help="Output file; stdout if omitted.")
@_exits_on_input_error
def catalog(name, params, out):
    """
    Emit a catalogue tuple as a document.
    """
    spec = FamilySpec(name, parse_params(params))
    c = build(spec)
    provenance = " ".join(["catalog", name, *params])
    _write_or_echo(TupleDocument(c, name, provenance), out)


@main.command()
@click.argument("name", type=click.Choice(sorted(FAMILIES)))
@param_option
@click.option("--free", required=True, help="Free parameter; suffix _sq to tune its square.")
@click.option("--bounds", nargs=2, type=float, required=True, help="LOW HIGH")
@tol_option
@json_option
@timestamp_option
@_exits_on_input_error
def tune(name, params, free, bounds, tol, as_json, timestamp):
    """
    Tune one family parameter to the Ricci Yang-Mills soliton condition.
    """
    spec = FamilySpec(name, parse_params(params))
    try:
        value = tune_parameter(spec, free, bounds, tol)
    except ParameterNotFoundError as e:
        click.echo(f"not found: {e}", err=True)
        sys.exit(1)
    tuned = spec.with_value(free, value)
    certificate = certify(build(tuned), CertificateMode.RYM, tol)
    report = Report(
        "tune",
        subject={"family": name, "free": free, "bounds": list(bounds), "value": value},
        certificates=[certificate],
    )
    _emit(report, as_json, timestamp)


@main.command("concat")
@click.argument("first", type=click.Path(dir_okay=False))
@click.argument("second", type=click.Path(dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), help="Output file; stdout if omitted.")
@_exits_on_input_error
def concat_command(first, second, out):
    """
    Concatenate two tuples; the first may not have more matrices than the second.
    """
    a = read_document(first)
    b = read_document(second)
    c = concat(a.tuple.with_label(a.label), b.tuple.with_label(b.label))
    provenance = f"concat {Path(first).name} {Path(second).name}"
    _write_or_echo(TupleDocument(c, c.label, provenance), out)
