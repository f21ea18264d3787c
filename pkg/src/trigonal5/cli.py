"""Command-line front end.

    trigonal5 lemma --id 2.4 --format pretty
    trigonal5 column --id L
    trigonal5 table --id 3
    trigonal5 pipeline --format json
    trigonal5 appendix --config 58
    trigonal5 verify --all
    trigonal5 explain --id column:M --format markdown

Exit codes: 0 success, 1 mismatch or failed check, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Callable

from . import column_engine as ce
from . import config_blocks as cb
from . import fq_oracle as fq
from . import spectral as sp
from .derivation import Derivation, DerivationError, brief, render
from .hg_ring import HGPoly

FORMATS = ("json", "markdown", "pretty")
SUBCOMMANDS = ("lemma", "column", "table", "pipeline", "appendix", "verify", "explain")

OK, MISMATCH, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: str
    inputs: dict
    results: Any
    verdicts: dict[str, bool] = field(default_factory=dict)
    citations: list[str] = field(default_factory=list)
    text: str = ""  # pretty rendering

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_json(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "results": self.results,
                "verdicts": self.verdicts, "citations": self.citations}


def _citations(der: Derivation) -> list[str]:
    return sorted({s.ref for s in der.steps if s.ref})


def _replays(der: Derivation) -> bool:
    try:
        return der.replay()
    except DerivationError:
        return False


def _result_text(value: Any) -> str:
    return value.pretty() if isinstance(value, HGPoly) else brief(value)


def _derivation_report(command: str, inputs: dict, der: Derivation, verdicts: dict | None = None) -> Report:
    v = {"checks pass": all(s.output for s in der.steps if s.kind == "check"), "replays": _replays(der)}
    v.update(verdicts or {})
    return Report(command, inputs, der.to_json(), v, _citations(der), _result_text(der.result))


def _registry_error(kind: str, got: Any, known: list) -> UsageError:
    return UsageError(f"unknown {kind} {got!r}; valid: {', '.join(map(str, known))}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_lemma(args) -> Report:
    if args.id not in cb.LEMMAS:
        raise _registry_error("lemma id", args.id, list(cb.LEMMAS))
    return _derivation_report("lemma", {"id": args.id}, cb.LEMMAS[args.id].build())


def cmd_column(args) -> Report:
    if args.id not in ce.COLUMN_BUILDERS:
        raise _registry_error("column id", args.id, list(ce.COLUMN_IDS))
    return _derivation_report("column", {"id": args.id}, ce.COLUMN_BUILDERS[args.id]())


def cmd_table(args) -> Report:
    if args.id not in sp.TABLES:
        raise _registry_error("table id", args.id, list(sp.TABLES))
    text = sp.TABLES[args.id]()
    verdicts = {}
    if args.id == "2":
        verdicts["matches tabulated classes"] = ce.cone_page().entries() == ce.table2_entries()
    elif args.id == "3":
        verdicts["matches tabulated classes"] = sp.main_page().entries() == sp.table3_entries()
    return Report("table", {"id": args.id}, {"rendering": text.splitlines()}, verdicts, [f"table {args.id}"], text)


def cmd_pipeline(args) -> Report:
    r = sp.run_pipeline()
    der = r.derivation
    lines = [f"{k:>6}: {getattr(r, a).pretty()}" for k, a in
             (("Sigma", "sigma"), ("X", "X"), ("X/GL2", "X_mod_GL2"), ("T5", "T5"), ("T5+H5", "T5_H5"))]
    lines.append(f"killed: {r.killed}")
    return Report("pipeline", {}, r.to_json(), r.verdicts, _citations(der), "\n".join(lines))


def cmd_appendix(args) -> Report:
    if args.config not in ce.APPENDIX:
        raise _registry_error("configuration", args.config, sorted(ce.APPENDIX))
    der = ce.appendix_check(args.config)
    res = der.result
    return _derivation_report("appendix", {"config": args.config}, der,
                              {"contribution vanishes": isinstance(res, HGPoly) and not res})


def _parse_qs(args) -> list[int]:
    if args.q is not None and args.qs:
        raise UsageError("give either --q or --qs")
    if args.q is not None:
        qs = [args.q]
    elif args.qs:
        try:
            qs = [int(x) for x in args.qs.split(",") if x.strip()]
        except ValueError:
            raise UsageError(f"--qs must be a comma-separated list of integers, got {args.qs!r}")
    else:
        qs = list(fq.PRIMES)
    bad = [q for q in qs if q not in fq.PRIMES]
    if bad:
        raise UsageError(f"unsupported q {bad}; valid: {', '.join(map(str, fq.PRIMES))}")
    return qs


def cmd_verify(args) -> Report:
    qs = _parse_qs(args)
    if args.id and args.all:
        raise UsageError("give either --id or --all")
    names = [args.id] if args.id else list(fq.DEFAULT_SPACES)
    for n in names:
        try:
            fq.resolve_space(n)
        except fq.OracleError:
            raise _registry_error("space", n, list(fq.DEFAULT_SPACES) + ["Grass(k,n)"])
    rows = []
    for n in names:
        for q in qs:
            if not fq.admissible(n, q):
                if args.id:
                    raise UsageError(f"{n} is not defined over F_{q}")
                continue
            try:
                rows.append(fq.count_space(n, q))
            except fq.OracleError as e:
                raise UsageError(str(e))
    verdicts = {f"{r.space} q={r.q}": r.match for r in rows}
    head = f"{'space':<12} {'q':>2} {'count':>10} {'predicted':>10}  verdict"
    text = "\n".join([head] + [f"{r.space:<12} {r.q:>2} {r.count:>10} {r.predicted:>10}  "
                               f"{'match' if r.match else 'MISMATCH'}" for r in rows])
    return Report("verify", {"spaces": names, "qs": qs}, [r.to_json() for r in rows], verdicts, [], text)


def _explain_target(target: str) -> tuple[dict, Callable[[], Derivation]]:
    kind, _, ident = target.partition(":")
    if not ident:
        kind, ident = ("pipeline", "") if target == "pipeline" else ("lemma", target)
    if kind == "lemma" and ident in cb.LEMMAS:
        return {"lemma": ident}, cb.LEMMAS[ident].build
    if kind == "column" and ident in ce.COLUMN_BUILDERS:
        return {"column": ident}, ce.COLUMN_BUILDERS[ident]
    if kind == "appendix" and ident.isdigit() and int(ident) in ce.APPENDIX:
        return {"appendix": int(ident)}, lambda: ce.appendix_check(int(ident))
    if kind == "pipeline":
        return {"pipeline": True}, sp.pipeline_derivation
    known = (["pipeline"] + [f"lemma:{k}" for k in cb.LEMMAS] + [f"column:{c}" for c in ce.COLUMN_IDS]
             + [f"appendix:{c}" for c in sorted(ce.APPENDIX)])
    raise _registry_error("explain target", target, known)


def cmd_explain(args) -> Report:
    if not args.id:
        raise UsageError("explain needs --id")
    inputs, build = _explain_target(args.id)
    report = _derivation_report("explain", {"id": args.id, **inputs}, build())
    return report


COMMANDS = {
    "lemma": cmd_lemma, "column": cmd_column, "table": cmd_table, "pipeline": cmd_pipeline,
    "appendix": cmd_appendix, "verify": cmd_verify, "explain": cmd_explain,
}


# ---------------------------------------------------------------------------
# rendering


def render_report(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(render(report.to_json()), indent=2, sort_keys=True) + "\n"
    if fmt == "pretty":
        return report.text.rstrip("\n") + "\n"
    lines = [f"## {report.command}", ""]
    if report.inputs:
        lines.append("Inputs: " + ", ".join(f"`{k}={v}`" for k, v in report.inputs.items()))
        lines.append("")
    if report.command in ("table", "verify", "pipeline"):
        lines += ["```", report.text.rstrip("\n"), "```", ""]
    else:
        lines += ["Result: `" + report.text + "`", ""]
        steps = report.results.get("steps", []) if isinstance(report.results, dict) else []
        for i, s in enumerate(steps, 1):
            ref = f" ({s['ref']})" if s.get("ref") else ""
            lines.append(f"{i}. **{s['op']}** [{s['kind']}]{ref}")
        if steps:
            lines.append("")
    lines.append("| verdict | ok |")
    lines.append("|---|---|")
    lines += [f"| {k} | {'yes' if v else 'NO'} |" for k, v in report.verdicts.items()]
    if report.citations:
        lines += ["", "Refs: " + ", ".join(report.citations)]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="trigonal5", description="Symbolic cohomology of trigonal genus 5 curves.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--format", choices=FORMATS, default="pretty")
        if name in ("lemma", "column", "table", "explain", "verify"):
            p.add_argument("--id", required=name in ("lemma", "column", "table", "explain"))
        if name == "appendix":
            p.add_argument("--config", type=int, required=True)
        if name == "verify":
            p.add_argument("--q", type=int)
            p.add_argument("--qs")
            p.add_argument("--all", action="store_true")
    return ap


def execute(argv: list[str] | None = None) -> tuple[int, str, str]:
    """Run a command and return ``(exit code, stdout, stderr)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (int(e.code) if e.code is not None else USAGE), "", ""
    try:
        report = COMMANDS[args.command](args)
    except UsageError as e:
        return USAGE, "", f"error: {e}\n"
    except DerivationError as e:
        return MISMATCH, "", f"check failed: {e}\n"
    return (OK if report.ok else MISMATCH), render_report(report, args.format), ""


def main(argv: list[str] | None = None) -> int:
    code, out, err = execute(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
