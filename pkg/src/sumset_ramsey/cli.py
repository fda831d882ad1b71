"""Command-line entry point.

Exit codes: 0 found / certified / passed, 1 none in domain (or a failed check),
2 resource cap reached, 3 input error.  ``--machine`` prints ``key=value`` lines
that are byte-identical across replays of the same configuration.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .analysis import analyze
from .colorings import Coloring, coloring_from_rule, load_coloring
from .constructive import (
    build_lemma23_sequence,
    build_lemma24_sequence,
    leader_russell_construct,
    leader_russell_required_size,
    order2_construct,
    prop42_construct,
    verify_epsilon_delta,
    verify_independence_124,
)
from .errors import ConstructionError, ParseError, ResourceLimitError, SumsetRamseyError
from .groups import GroupSpec, enumerate_fragment
from .regression import run_checks
from .search import certify_class, find_witness, minimal_fragment_number

EXIT_OK, EXIT_NONE, EXIT_RESOURCE, EXIT_INPUT = 0, 1, 2, 3

log = logging.getLogger("sumset_ramsey")


@dataclass
class RunConfig:
    """Everything needed to replay a run.  Serialized as ``key=value`` lines."""

    subcommand: str
    group: str | None = None
    bound: int = 0
    coloring: str | None = None
    n: int | None = None
    r: int | None = None
    node_limit: int = 10_000_000
    time_limit: float = 60.0
    output: str = "human"
    threads: int = 1
    extra: dict[str, str] = field(default_factory=dict)

    def to_text(self) -> str:
        lines = [f"subcommand={self.subcommand}"]
        for key in ("group", "bound", "coloring", "n", "r", "node_limit", "time_limit", "output", "threads"):
            value = getattr(self, key)
            if value is not None:
                lines.append(f"{key}={value}")
        lines += [f"extra.{k}={v}" for k, v in sorted(self.extra.items())]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> RunConfig:
        values: dict[str, str] = {}
        extra: dict[str, str] = {}
        for no, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ParseError(f"expected key=value, got {line!r}", line=no, token=line)
            key, value = line.split("=", 1)
            if key.startswith("extra."):
                extra[key[6:]] = value
            else:
                values[key] = value
        if "subcommand" not in values:
            raise ParseError("missing subcommand", line=1)
        cfg = cls(values.pop("subcommand"), extra=extra)
        for key, value in values.items():
            if not hasattr(cfg, key):
                raise ParseError(f"unknown config key {key!r}", token=key)
            if key in ("bound", "n", "r", "node_limit", "threads"):
                value = int(value)
            elif key == "time_limit":
                value = float(value)
            setattr(cfg, key, value)
        return cfg

    def to_argv(self) -> list[str]:
        argv = []
        if self.output == "machine":
            argv.append("--machine")
        argv += ["--node-limit", str(self.node_limit), "--time-limit", str(self.time_limit)]
        argv += ["--threads", str(self.threads), self.subcommand]
        flags = {"group": "--group", "coloring": "--coloring"}
        for key, flag in flags.items():
            if getattr(self, key) is not None:
                argv += [flag, getattr(self, key)]
        if self.subcommand in ("search", "certify", "construct", "analyze"):
            argv += ["--bound", str(self.bound)]
        if self.n is not None:
            argv += ["--size" if self.subcommand in ("search", "certify", "minimal") else "--n", str(self.n)]
        if self.r is not None:
            argv += ["--colors" if self.subcommand == "minimal" else "--r", str(self.r)]
        for key, value in sorted(self.extra.items()):
            flag = "--" + key.replace("_", "-")
            if value == "true":
                argv.append(flag)
            elif value != "false":
                argv += [flag, value]
        return argv


class _Out:
    def __init__(self, machine: bool, stream=None):
        self.machine = machine
        self.stream = stream or sys.stdout

    def kv(self, key, value):
        if self.machine:
            print(f"{key}={value}", file=self.stream)
        else:
            print(f"{key.replace('_', ' ')}: {value}", file=self.stream)

    def element(self, g, key="element"):
        self.kv(key, str(g))


def _range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise ParseError(f"bad range {text!r} (expected A..B or a comma list)", token=text) from None


def _coloring(text: str, spec: GroupSpec | None, bound: int) -> Coloring:
    path = Path(text)
    if path.is_file():
        return load_coloring(path.read_text(), spec)
    return coloring_from_rule(text, spec, bound)


def _group(text: str | None) -> GroupSpec:
    if text is None:
        raise ParseError("--group is required", token="--group")
    return GroupSpec.parse(text)


def _add_globals(p, suppress=False):
    def default(value):
        return argparse.SUPPRESS if suppress else value

    p.add_argument("--machine", action="store_true", default=default(False), help="key=value output")
    p.add_argument("--node-limit", type=int, default=default(10_000_000))
    p.add_argument("--time-limit", type=float, default=default(60.0), help="seconds per stage")
    p.add_argument("--threads", type=int, default=default(None), help="search workers (default: all CPUs)")
    p.add_argument("--save-config", metavar="FILE", default=default(None), help="write the run configuration for replay")
    p.add_argument("--config", metavar="FILE", default=default(None), help="replay a saved configuration")
    p.add_argument("-v", "--verbose", action="store_true", default=default(False))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sumset-ramsey", description="Monochromatic sumset experiments on Abelian groups.")
    _add_globals(p)
    # the same flags are accepted after the subcommand too
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    _add_globals(common, suppress=True)
    sub = p.add_subparsers(dest="subcommand", parser_class=lambda **kw: argparse.ArgumentParser(parents=[common], **kw))

    s = sub.add_parser("search", help="find X with X+X monochromatic")
    s.add_argument("--group", required=True)
    s.add_argument("--bound", type=int, default=0)
    s.add_argument("--coloring", required=True, help="rule name or colouring file")
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--no-prune", action="store_true")

    s = sub.add_parser("certify", help="certify no witness over a sweep of fragments")
    s.add_argument("--group", required=True, help="base group; with --powers it is repeated K times")
    s.add_argument("--bound", type=int, default=0)
    sweep = s.add_mutually_exclusive_group(required=True)
    sweep.add_argument("--powers", help="K values, e.g. 1..4")
    sweep.add_argument("--bounds", help="fragment bounds, e.g. 0..8")
    s.add_argument("--coloring", required=True)
    s.add_argument("--size", type=int, default=2)

    s = sub.add_parser("minimal", help="least fragment where every r-colouring has a witness")
    s.add_argument("--family", required=True, help="nat, z4sum, z2sum, ...")
    s.add_argument("--colors", type=int, required=True)
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--exclude-zero", action="store_true")

    s = sub.add_parser("construct", help="run a constructive procedure")
    s.add_argument("--method", required=True, choices=["lemma23", "lemma24", "leader-russell", "order2", "prop42"])
    s.add_argument("--group", required=True)
    s.add_argument("--bound", type=int, default=0)
    s.add_argument("--coloring", default="constant")
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--r", type=int, default=None)
    s.add_argument("--length", type=int, default=None, help="sequence length")
    s.add_argument("--no-strict", action="store_true", help="lemma23: skip the 3g condition")

    s = sub.add_parser("analyze", help="G2, G4, 2G and classification")
    s.add_argument("--group", required=True)
    s.add_argument("--bound", type=int, default=0)
    s.add_argument("--infinite-power", action="store_true", help="classify the countable direct power")

    s = sub.add_parser("verify-paper", help="run the regression suite of known instances")
    s.add_argument("--only", action="append", help="run only the named check (repeatable)")
    return p


def _config_from_args(args) -> RunConfig:
    cfg = RunConfig(
        args.subcommand,
        group=getattr(args, "group", None),
        bound=getattr(args, "bound", 0),
        coloring=getattr(args, "coloring", None),
        node_limit=args.node_limit,
        time_limit=args.time_limit,
        output="machine" if args.machine else "human",
        threads=args.threads,
    )
    if args.subcommand in ("search", "certify", "minimal"):
        cfg.n = args.size
    elif args.subcommand == "construct":
        cfg.n = args.n
    if args.subcommand == "minimal":
        cfg.r = args.colors
    elif args.subcommand == "construct":
        cfg.r = args.r
    skip = {"subcommand", "group", "bound", "coloring", "size", "n", "r", "colors", "machine", "node_limit",
            "time_limit", "threads", "save_config", "config", "verbose"}
    for key, value in sorted(vars(args).items()):
        if key in skip or value is None:
            continue
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, list):
            value = ",".join(value)
        cfg.extra[key] = str(value)
    return cfg


def cmd_search(args, out):
    spec = _group(args.group)
    c = _coloring(args.coloring, spec, args.bound)
    domain = enumerate_fragment(spec, args.bound)
    descriptor = f"{spec} bound={args.bound}"
    cert = find_witness(
        domain, c, args.size, node_limit=args.node_limit, threads=args.threads,
        prune=not args.no_prune, descriptor=descriptor, time_limit=args.time_limit,
    )
    out.kv("domain", cert.domain)
    out.kv("n", cert.n)
    out.kv("outcome", cert.outcome)
    out.kv("nodes", cert.nodes)
    if cert.found:
        out.kv("color", cert.witness.color)
        for g in cert.witness.elements:
            out.element(g)
        return EXIT_OK
    return EXIT_NONE


def cmd_certify(args, out):
    base = _group(args.group)
    if args.powers:
        sizes = _range(args.powers)

        def family(k):
            return GroupSpec(base.factors * k), args.bound
    else:
        sizes = _range(args.bounds)

        def family(b):
            return base, b

    certs = certify_class(
        family,
        lambda spec, bound: _coloring(args.coloring, spec, bound),
        args.size,
        sizes,
        node_limit=args.node_limit,
        threads=args.threads,
        time_limit=args.time_limit,
    )
    for size, cert in zip(sizes, certs):
        out.kv("certificate", f"{size} domain={cert.domain!r} n={cert.n} outcome={cert.outcome} nodes={cert.nodes}")
        if cert.found:
            for g in cert.witness.elements:
                out.element(g)
    if any(c.found for c in certs):
        out.kv("certified", "false")
        return EXIT_NONE
    out.kv("certified", "true")
    return EXIT_OK


def cmd_minimal(args, out):
    res = minimal_fragment_number(
        args.family, args.colors, args.size, args.max,
        exclude_zero=args.exclude_zero, node_limit=args.node_limit, time_limit=args.time_limit,
    )
    out.kv("family", res.family)
    out.kv("colors", res.r)
    out.kv("n", res.n)
    out.kv("value", "none" if res.value is None else res.value)
    out.kv("nodes", res.nodes)
    if res.diverges:
        out.kv("diverges", "true")
        out.kv("note", res.note)
    if res.counterexample is not None:
        out.kv("counterexample_size", res.sizes_checked[-2] if res.value is not None else res.sizes_checked[-1])
        for g, color in sorted(res.counterexample.table.items()):
            out.kv("avoid", f"{g} -> {color}")
    return EXIT_OK if res.value is not None else EXIT_NONE


def cmd_construct(args, out):
    spec = _group(args.group)
    limits = dict(node_limit=args.node_limit, time_limit=args.time_limit)
    method = args.method
    if method == "lemma23":
        seq = build_lemma23_sequence(spec, args.bound, args.length or args.n, strict=not args.no_strict, **limits)
        for line in seq.log:
            out.kv("log", line)
        for t in seq.terms:
            out.element(t, "term")
        prefix = min(len(seq), 5)
        out.kv("independent_prefix", f"{prefix}:{str(verify_independence_124(seq, prefix)).lower()}")
        return EXIT_OK
    if method == "lemma24":
        seq = build_lemma24_sequence(spec, args.bound, args.length or args.n)
        for line in seq.log:
            out.kv("log", line)
        for z in seq.terms:
            out.element(z, "term")
        n = min(2, len(seq) // 2)
        out.kv("epsilon_delta", f"{n}:{str(verify_epsilon_delta(seq, n)).lower()}")
        return EXIT_OK

    c = _coloring(args.coloring, spec, args.bound)
    if method == "leader-russell":
        r = args.r or c.num_colors
        if r is None:
            raise ParseError("--r is required for a colouring with unknown colour count", token="--r")
        need = max(leader_russell_required_size(args.n, r, i, j) for i in range(r + 1) for j in range(i + 1, r + 1))
        seq = build_lemma23_sequence(spec, args.bound, args.length or need + 4, strict=not args.no_strict, **limits)
        w = leader_russell_construct(c, r, args.n, seq, **limits)
    elif method == "order2":
        length = args.length or min(24, max(2 * args.n, sum(1 for m in spec.factors if m and m % 4 == 0)))
        zseq = build_lemma24_sequence(spec, args.bound, length)
        w = order2_construct(c, args.n, zseq, **limits)
    else:
        w = prop42_construct(c, args.n, spec, **limits)
    for line in w.provenance:
        out.kv("log", line)
    out.kv("size", len(w))
    out.kv("color", w.color)
    for g in w.elements:
        out.element(g)
    return EXIT_OK


def cmd_analyze(args, out):
    report = analyze(_group(args.group), args.bound, infinite_power=args.infinite_power)
    for key, value in report.lines():
        out.kv(key, value)
    return EXIT_OK


def cmd_verify(args, out):
    failed = 0
    for name, ok, detail in run_checks(args.only):
        out.kv("check", f"{name} {'pass' if ok else 'FAIL'} {detail}")
        failed += not ok
    out.kv("result", "pass" if not failed else f"{failed} failed")
    return EXIT_OK if not failed else EXIT_NONE


COMMANDS = {
    "search": cmd_search,
    "certify": cmd_certify,
    "minimal": cmd_minimal,
    "construct": cmd_construct,
    "analyze": cmd_analyze,
    "verify-paper": cmd_verify,
}


def run(argv=None, stdout=None) -> int:
    """Parse ``argv``, run the subcommand and return its exit code."""
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    err = sys.stderr
    if args.config:
        try:
            cfg = RunConfig.from_text(Path(args.config).read_text())
        except (OSError, ParseError) as exc:
            print(f"error: {exc}", file=err)
            return EXIT_INPUT
        return run(cfg.to_argv(), stdout)
    if args.subcommand is None:
        parser.print_usage(err)
        return EXIT_INPUT
    if args.threads is None:
        args.threads = os.cpu_count() or 1
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=err)
    if args.save_config:
        Path(args.save_config).write_text(_config_from_args(args).to_text())
    out = _Out(args.machine, stdout)
    try:
        return COMMANDS[args.subcommand](args, out)
    except ResourceLimitError as exc:
        out.kv("outcome", "resource-limit")
        out.kv("reason", str(exc))
        return EXIT_RESOURCE
    except ParseError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except ConstructionError as exc:
        out.kv("outcome", "construction-failed")
        out.kv("stage", exc.stage)
        out.kv("reason", str(exc))
        return EXIT_NONE
    except (SumsetRamseyError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT


def main():
    sys.exit(run())


__all__ = ["RunConfig", "run", "main", "build_parser"]
