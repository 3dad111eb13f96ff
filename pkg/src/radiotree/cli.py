"""Command-line front end.

Exit codes: 0 success / agreement, 1 negative mathematical finding,
2 input error, 3 resource budget exhausted.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from . import compositions as comp
from .corpus import random_trees
from .labeling import format_labeling, read_labeling, verify_radio
from .solvers import (DEFAULT_BUDGET, DEFAULT_CAP, DEFAULT_EXACT_BUDGET, BudgetExceeded,
                      CapExceeded, Status, exact_rn, search_ordering)
from .tree_core import DiameterError, TreeFormatError, format_tree, read_tree, to_dot
from .tree_metrics import bantva_lower_bound, liu_lower_bound, profile

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list[str]
    budget: int = DEFAULT_BUDGET
    cap: int = DEFAULT_CAP
    fmt: str = "text"
    seed: int = 0
    out: str | None = None

    def __post_init__(self):
        if self.budget <= 0 or self.cap <= 0:
            raise InputError("--budget and --cap must be positive")


def _fmt_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, (set, frozenset, tuple, list)):
        return ",".join(str(x) for x in sorted(v))
    return str(v)


def emit(pairs: Sequence[tuple[str, object]], fmt: str, command: str) -> str:
    if fmt == "record":
        return " ".join([f"cmd={command}"] + [f"{k}={_fmt_value(v)}" for k, v in pairs]) + "\n"
    width = max(len(k) for k, _ in pairs)
    lines = []
    for k, v in pairs:
        if isinstance(v, (set, frozenset, tuple)) and k == "centers":
            v = "{" + ", ".join(str(x) for x in sorted(v)) + "}"
        elif not isinstance(v, str):
            v = _fmt_value(v)
        lines.append(f"{k + ':':<{width + 1}} {v}")
    return "\n".join(lines) + "\n"


def _load(path: str):
    try:
        return read_tree(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except TreeFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _write(text: str, path: str | None, out) -> None:
    if path is None:
        out.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_analyze(cfg: RunConfig, out) -> int:
    tree = _load(cfg.inputs[0])
    if cfg.fmt == "dot":
        _write(to_dot(tree), cfg.out, out)
        return EXIT_OK
    try:
        prof = profile(tree)
        liu, bound = liu_lower_bound(tree, prof), bantva_lower_bound(tree, prof)
    except DiameterError as exc:
        raise InputError(str(exc)) from None
    pairs = [("p", tree.p), ("d", prof.diameter), ("centers", prof.centers),
             ("epsilon", prof.epsilon), ("L(T)", prof.total_level),
             ("w(T)", prof.weight_of_tree), ("liu_bound", liu), ("bound", bound)]
    _write(emit(pairs, cfg.fmt, "analyze"), cfg.out, out)
    return EXIT_OK


def cmd_label(cfg: RunConfig, out) -> int:
    tree = _load(cfg.inputs[0])
    try:
        prof = profile(tree)
        bound = bantva_lower_bound(tree, prof)
    except DiameterError as exc:
        raise InputError(str(exc)) from None
    res = search_ordering(tree, prof, cfg.budget)
    if res.status is Status.FOUND:
        header = f"optimal span {res.span}"
        if cfg.out is None:
            out.write(format_labeling(res.labeling, header))
        else:
            _write(format_labeling(res.labeling, header), cfg.out, out)
            out.write(header + "\n")
        return EXIT_OK
    if res.status is Status.EXHAUSTED:
        out.write(f"bound {bound} not attained: no certificate ordering exists "
                  f"({res.nodes_explored} nodes)\n")
        return EXIT_NEGATIVE
    out.write(f"budget exceeded after {res.nodes_explored} nodes; no verdict\n")
    return EXIT_BUDGET


def cmd_verify(cfg: RunConfig, out) -> int:
    if len(cfg.inputs) != 2:
        raise InputError("verify needs a tree file and a labeling file")
    tree = _load(cfg.inputs[0])
    try:
        lab = read_labeling(cfg.inputs[1], tree.p)
    except OSError as exc:
        raise InputError(f"{cfg.inputs[1]}: {exc.strerror}") from None
    except TreeFormatError as exc:
        raise InputError(f"{cfg.inputs[1]}: {exc}") from None
    verdict = verify_radio(tree, lab)
    if cfg.fmt == "record":
        pairs = [("result", "PASS" if verdict else "FAIL"), ("span", lab.span)]
        if not verdict:
            pairs += [("pair", verdict.pair), ("deficit", verdict.deficit)]
        out.write(emit(pairs, "record", "verify"))
    elif verdict:
        out.write(f"PASS span {lab.span}\n")
    else:
        u, v = verdict.pair
        out.write(f"FAIL pair ({u},{v}) deficit {verdict.deficit}\n")
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_exact(cfg: RunConfig, out) -> int:
    tree = _load(cfg.inputs[0])
    try:
        res = exact_rn(tree, cap=cfg.cap, budget=cfg.budget)
    except CapExceeded as exc:
        raise InputError(str(exc)) from None
    except BudgetExceeded as exc:
        out.write(f"{exc}\n")
        return EXIT_BUDGET
    if cfg.out is not None:
        _write(format_labeling(res.witness, f"rn {res.rn}"), cfg.out, out)
    out.write(emit([("rn", res.rn), ("nodes", res.nodes_explored)], cfg.fmt, "exact"))
    if cfg.out is None and cfg.fmt == "text":
        out.write(format_labeling(res.witness, "witness"))
    return EXIT_OK


def _compose(cfg: RunConfig, k: int | None):
    bases = [_load(p) for p in cfg.inputs[1:]]
    if not bases:
        raise InputError("no base tree given")
    try:
        return comp.compose(cfg.inputs[0], bases, k)
    except ValueError as exc:  # CompositionError or unknown family
        raise InputError(str(exc)) from None


def cmd_compose(cfg: RunConfig, out, k: int | None) -> int:
    tree, spec = _compose(cfg, k)
    text = format_tree(tree, f"{spec.family.value} k={spec.k}")
    prov = comp.format_provenance(spec)
    if cfg.out is None:
        out.write(text)
        out.write("".join(f"# prov {line}\n" for line in prov.splitlines()))
    else:
        _write(text, cfg.out, out)
        _write(prov, cfg.out + ".prov", out)
    return EXIT_OK


def cmd_theorem_check(cfg: RunConfig, out, k: int | None) -> int:
    tree, spec = _compose(cfg, k)
    report = comp.reconcile(spec, tree, cap=cfg.cap, budget=cfg.budget,
                            exact_budget=max(cfg.budget, DEFAULT_EXACT_BUDGET))
    _write(emit(report.as_pairs(), cfg.fmt, "theorem-check"), cfg.out, out)
    for note in report.notes:
        out.write(f"# {note}\n")
    if not report.bases_certified:
        out.write("# a base tree does not attain its level bound; the composition "
                  "theorems do not apply\n")
        return EXIT_NEGATIVE
    return EXIT_OK if report.all_agree else EXIT_NEGATIVE


def cmd_export_dot(cfg: RunConfig, out, labels_path: str | None) -> int:
    tree = _load(cfg.inputs[0])
    labels = None
    if labels_path:
        try:
            labels = read_labeling(labels_path, tree.p).labels
        except (OSError, TreeFormatError) as exc:
            raise InputError(f"{labels_path}: {exc}") from None
    _write(to_dot(tree, labels), cfg.out, out)
    return EXIT_OK


def cmd_corpus(cfg: RunConfig, out, count: int, p_min: int, p_max: int) -> int:
    if cfg.out is None:
        raise InputError("corpus needs --out DIR")
    if not 1 <= p_min <= p_max:
        raise InputError("need 1 <= --p-min <= --p-max")
    os.makedirs(cfg.out, exist_ok=True)
    width = len(str(count - 1))
    for i, t in enumerate(random_trees(count, p_min, p_max, cfg.seed)):
        name = os.path.join(cfg.out, f"tree_{i:0{width}d}.txt")
        _write(format_tree(t, f"seed={cfg.seed} index={i}"), name, out)
    out.write(f"wrote {count} trees to {cfg.out}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="search node limit (default %(default)s)")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="largest order the exact solver accepts (default %(default)s)")
    common.add_argument("--format", dest="fmt", choices=("text", "record", "dot"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="output path")

    ap = argparse.ArgumentParser(prog="radiotree",
                                 description="Radio numbers of trees: bounds, certificates, "
                                             "exact values and composed families.")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="centers, levels and lower bounds"
                   ).add_argument("tree")
    sub.add_parser("label", parents=[common], help="search for an optimal certificate labeling"
                   ).add_argument("tree")
    s = sub.add_parser("verify", parents=[common], help="check a labeling against a tree")
    s.add_argument("tree")
    s.add_argument("labeling")
    sub.add_parser("exact", parents=[common], help="brute-force radio number (small trees)"
                   ).add_argument("tree")
    for name, helptext in (("compose", "build a composed tree"),
                           ("theorem-check", "compare closed form against all solvers")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("family", choices=[f.value for f in comp.Family])
        s.add_argument("bases", nargs="+")
        s.add_argument("--k", type=int, default=None)
    s = sub.add_parser("export-dot", parents=[common], help="write the tree as DOT")
    s.add_argument("tree")
    s.add_argument("--labels", default=None)
    s = sub.add_parser("corpus", parents=[common], help="write seeded random trees")
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--p-min", type=int, default=4)
    s.add_argument("--p-max", type=int, default=9)
    return ap


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.command in ("compose", "theorem-check"):
        inputs = [args.family, *args.bases]
    elif args.command == "verify":
        inputs = [args.tree, args.labeling]
    elif args.command == "corpus":
        inputs = []
    else:
        inputs = [args.tree]
    try:
        cfg = RunConfig(args.command, inputs, args.budget, args.cap, args.fmt, args.seed, args.out)
        if cfg.command == "analyze":
            return cmd_analyze(cfg, out)
        if cfg.command == "label":
            return cmd_label(cfg, out)
        if cfg.command == "verify":
            return cmd_verify(cfg, out)
        if cfg.command == "exact":
            return cmd_exact(cfg, out)
        if cfg.command == "compose":
            return cmd_compose(cfg, out, args.k)
        if cfg.command == "theorem-check":
            return cmd_theorem_check(cfg, out, args.k)
        if cfg.command == "export-dot":
            return cmd_export_dot(cfg, out, args.labels)
        return cmd_corpus(cfg, out, args.count, args.p_min, args.p_max)
    except InputError as exc:
        print(f"radiotree: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
