"""Command-line interface.

Usage:
    recipbinom eval --family frisch -n 1 -b 2 -c 1
    recipbinom verify --family lifted --n-range 0..6 --b-range 1..8 --c-range 1..8 -m 2 --seed 7
    recipbinom table --family parametric --n-range 0..4 -b 5 -c 2 -x 1/2 --output csv
    recipbinom scan-stability --n-range 5..40 -b 45 -c 2

Exit status: 0 success, 1 verification failure, 2 invalid parameters.
"""

from __future__ import annotations

import csv
import io
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from pathlib import Path

import click

from .exact import InvalidParameters, SumParams, format_rational, parse_rational
from .families import FAMILIES, check, closed_value
from .stability import stability_report

__all__ = ["CommandRequest", "CommandResult", "main", "parse_range", "read_config", "run_command"]

SUBCOMMANDS = ("eval", "verify", "table", "scan-stability")
OUTPUTS = ("json", "csv", "text")
OUTPUT_ENV = "RECIPBINOM_OUTPUT"

TABLE_COLUMNS = ["n", "b", "c", "x", "m", "family", "exact", "float"]
VERIFY_COLUMNS = TABLE_COLUMNS + ["status"]
STABILITY_COLUMNS = TABLE_COLUMNS + ["relerr_direct", "relerr_closed", "condition"]

RANDOM_BOUND = 50


@dataclass
class CommandRequest:
    subcommand: str
    family: str = "frisch"
    n: int | None = None
    b: int | None = None
    c: int | None = None
    x: str = "1"
    m: int = 0
    n_range: tuple[int, int] | None = None
    b_range: tuple[int, int] | None = None
    c_range: tuple[int, int] | None = None
    output: str = "text"
    seed: int = 0
    samples: int = 2


@dataclass
class CommandResult:
    status: int
    stdout: str = ""
    stderr: str = ""
    rows: list = field(default_factory=list)


def parse_range(text: str) -> tuple[int, int]:
    """``"lo..hi"`` (inclusive) or a single integer."""
    lo, sep, hi = text.partition("..")
    try:
        bounds = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise InvalidParameters(f"malformed range {text!r}; expected 'lo..hi'") from None
    if bounds[0] > bounds[1]:
        raise InvalidParameters(f"empty range {text!r}")
    return bounds


def read_config(path: str | Path) -> dict[str, str]:
    """``key = value`` lines; ``#`` starts a comment. Keys use flag spelling."""
    values = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise click.BadParameter(f"{path}:{lineno}: expected 'key = value'")
        values[key.strip().lstrip("-").replace("-", "_")] = value.strip()
    return values


def _axis(name: str, single: int | None, rng: tuple[int, int] | None) -> range:
    if rng is not None:
        return range(rng[0], rng[1] + 1)
    if single is None:
        raise InvalidParameters(f"-{name} or --{name}-range is required")
    return range(single, single + 1)


def _grid(req: CommandRequest) -> list[SumParams]:
    ns = _axis("n", req.n, req.n_range)
    bs = _axis("b", req.b, req.b_range)
    cs = _axis("c", req.c, req.c_range)
    if ns.start < 0:
        raise InvalidParameters(f"n >= 0 required (got n={ns.start})")
    if cs.start <= 0:
        raise InvalidParameters(f"c > 0 required (got c={cs.start})")
    swept = req.n_range or req.b_range or req.c_range
    points = []
    for n, b, c in product(ns, bs, cs):
        if b < c and swept:
            continue
        points.append(SumParams(n, b, c))
    if not points:
        raise InvalidParameters("no valid (n, b, c) with b >= c in the requested ranges")
    return points


def _random_x(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-RANDOM_BOUND, RANDOM_BOUND), rng.randint(1, RANDOM_BOUND))


def _fmt_float(value: float) -> str:
    return repr(float(value))


def _validate(req: CommandRequest) -> Fraction:
    if req.subcommand not in SUBCOMMANDS:
        raise InvalidParameters(f"unknown subcommand {req.subcommand!r}")
    if req.family not in FAMILIES:
        raise InvalidParameters(f"family must be one of {', '.join(FAMILIES)} (got {req.family!r})")
    if req.output not in OUTPUTS:
        raise InvalidParameters(f"output must be one of {', '.join(OUTPUTS)} (got {req.output!r})")
    if req.m < 0:
        raise InvalidParameters(f"m >= 0 required (got m={req.m})")
    if req.seed < 0:
        raise InvalidParameters(f"seed >= 0 required (got seed={req.seed})")
    if req.samples < 0:
        raise InvalidParameters(f"samples >= 0 required (got samples={req.samples})")
    if req.subcommand == "eval" and (req.n_range or req.b_range or req.c_range):
        raise InvalidParameters("ranges are only valid for verify, table and scan-stability")
    if req.subcommand == "scan-stability" and req.family not in ("frisch", "parametric"):
        raise InvalidParameters("scan-stability supports the frisch and parametric families only")
    x = parse_rational(req.x)
    if req.family == "frisch" and x != 1:
        raise InvalidParameters(f"the frisch family is the x = 1 sum (got x={req.x})")
    return x


def _value_row(family: str, p: SumParams, x: Fraction, m: int, exact: Fraction) -> dict:
    return {
        "n": p.n, "b": p.b, "c": p.c, "x": format_rational(x), "m": m,
        "family": family, "exact": format_rational(exact), "float": float(exact),
    }


def _render(rows: list[dict], columns: list[str], output: str, summary: str | None = None) -> str:
    if output == "json":
        doc = {"rows": rows}
        if summary is not None:
            doc["summary"] = summary
        return json.dumps(doc, indent=2) + "\n"
    if output == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _fmt_float(v) if isinstance(v, float) else v for k, v in row.items()})
        return buf.getvalue()
    lines = []
    for row in rows:
        cells = []
        for key in columns:
            value = row.get(key)
            cells.append(f"{key}={_fmt_float(value) if isinstance(value, float) else value}")
        lines.append("  ".join(cells))
    if summary is not None:
        lines.append(summary)
    return "\n".join(lines) + "\n"


def _eval(req: CommandRequest, x: Fraction) -> CommandResult:
    p = SumParams(req.n, req.b, req.c) if None not in (req.n, req.b, req.c) else _grid(req)[0]
    value = closed_value(req.family, p, x, req.m)
    row = _value_row(req.family, p, x, req.m, value)
    if req.output == "text":
        out = f"{format_rational(value)}\n{_fmt_float(float(value))}\n"
    else:
        out = _render([row], TABLE_COLUMNS, req.output)
    return CommandResult(0, out, rows=[row])


def _verify(req: CommandRequest, x: Fraction) -> CommandResult:
    rng = random.Random(req.seed)
    rows = []
    failed = 0
    for p in _grid(req):
        xs = [x]
        if req.family != "frisch":
            xs += [_random_x(rng) for _ in range(req.samples)]
        for xv in xs:
            closed, oracle, ok = check(req.family, p, xv, req.m)
            row = _value_row(req.family, p, xv, req.m, closed)
            row["oracle"] = format_rational(oracle)
            row["status"] = "PASS" if ok else "FAIL"
            failed += not ok
            rows.append(row)
    total = len(rows)
    summary = f"all {total} points PASS" if not failed else f"{failed} of {total} points FAIL"
    columns = VERIFY_COLUMNS if req.output == "csv" else ["status"] + TABLE_COLUMNS[:5] + ["exact"]
    return CommandResult(1 if failed else 0, _render(rows, columns, req.output, summary), rows=rows)


def _table(req: CommandRequest, x: Fraction) -> CommandResult:
    rows = [
        _value_row(req.family, p, x, req.m, closed_value(req.family, p, x, req.m))
        for p in _grid(req)
    ]
    return CommandResult(0, _render(rows, TABLE_COLUMNS, req.output), rows=rows)


def _scan(req: CommandRequest, x: Fraction) -> CommandResult:
    rows = []
    for p in _grid(req):
        report = stability_report(p, x)
        row = _value_row(req.family, p, x, req.m, report.exact)
        row.update(report.row())
        row["float"] = report.float_direct
        rows.append(row)
    return CommandResult(0, _render(rows, STABILITY_COLUMNS, req.output), rows=rows)


_HANDLERS = {"eval": _eval, "verify": _verify, "table": _table, "scan-stability": _scan}


def run_command(req: CommandRequest) -> CommandResult:
    """Execute one request; never raises for bad parameters (exit status 2)."""
    try:
        x = _validate(req)
        return _HANDLERS[req.subcommand](req, x)
    except InvalidParameters as exc:
        return CommandResult(2, stderr=f"error: invalid parameters: {exc}\n")


# --- click front end -------------------------------------------------------


def _range_option(name: str):
    return click.option(f"--{name}-range", f"{name}_range", default=None, metavar="LO..HI",
                        help=f"Inclusive sweep range for {name}.")


def _common(func):
    options = [
        click.option("--family", type=click.Choice(FAMILIES), default="frisch", show_default=True),
        click.option("-n", "n", type=int, default=None, help="Summation length."),
        click.option("-b", "b", type=int, default=None),
        click.option("-c", "c", type=int, default=None),
        click.option("-x", "x", default="1", show_default=True, help="Rational argument p/q."),
        click.option("-m", "m", type=int, default=0, show_default=True, help="Weight or lift order."),
        click.option("--output", type=click.Choice(OUTPUTS), envvar=OUTPUT_ENV, default="text",
                     show_default=True, help=f"Output format (default from ${OUTPUT_ENV})."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _sweep(func):
    options = [
        _range_option("n"),
        _range_option("b"),
        _range_option("c"),
        click.option("--seed", type=int, default=0, show_default=True),
        click.option("--samples", type=int, default=2, show_default=True,
                     help="Random x values per point in verify (besides -x)."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _dispatch(subcommand: str, **kwargs) -> None:
    try:
        for key in ("n_range", "b_range", "c_range"):
            if kwargs.get(key) is not None:
                kwargs[key] = parse_range(kwargs[key])
    except InvalidParameters as exc:
        click.echo(f"error: invalid parameters: {exc}", err=True)
        sys.exit(2)
    result = run_command(CommandRequest(subcommand, **kwargs))
    if result.stdout:
        click.echo(result.stdout, nl=False)
    if result.stderr:
        click.echo(result.stderr, nl=False, err=True)
    sys.exit(result.status)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--config", type=click.Path(exists=True, dir_okay=False), default=None,
              help="key = value file with defaults for any flag; flags win.")
@click.pass_context
def main(ctx: click.Context, config: str | None) -> None:
    """Evaluate and cross-verify reciprocal binomial sums."""
    if config:
        values = read_config(config)
        ctx.default_map = {name: values for name in SUBCOMMANDS}


@main.command("eval")
@_common
def eval_cmd(**kwargs) -> None:
    """Exact and binary64 value of one family at one point."""
    _dispatch("eval", **kwargs)


@main.command("verify")
@_common
@_sweep
def verify_cmd(**kwargs) -> None:
    """Check closed forms against brute force over a grid."""
    _dispatch("verify", **kwargs)


@main.command("table")
@_common
@_sweep
def table_cmd(**kwargs) -> None:
    """Grid of exact values."""
    kwargs.pop("samples")
    _dispatch("table", **kwargs)


@main.command("scan-stability")
@_common
@_sweep
def scan_cmd(**kwargs) -> None:
    """Cancellation and rounding error of the naive sum over a grid."""
    kwargs.pop("samples")
    _dispatch("scan-stability", **kwargs)


if __name__ == "__main__":
    main()
