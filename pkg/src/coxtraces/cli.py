"""Command-line interface.

Commands: count, classes, table, verify, cache.  Output is byte-stable
for fixed inputs (timing goes to stderr), so runs can be diffed.  Exit
codes: 0 success, 1 verification failure, 2 usage or parse error,
3 enumeration budget refused, 4 I/O problem.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass

from .classes import conjugacy_classes, count, count_brute_force
from .group import (DEFAULT_BUDGET, BudgetExceededError, CacheFormatError,
                    MatrixFreeSystemError, generate_group, load_group,
                    save_group)
from .partitions import closed_form_count
from .roots import Factor, SpecParseError, system_from_spec
from . import verify as verify_mod

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_IO = 4

ENV_CACHE_DIR = "COXTRACES_CACHE_DIR"
ENV_BUDGET = "COXTRACES_BUDGET"

# table rows whose brute-force cross-check is cheap enough to run inline
_TABLE_CROSSCHECK_CAP = 5000

_COLUMNS = ("system", "T", "S", "method", "|W|", "-I in W")


@dataclass
class ReportRow:
    system: str
    traces: int
    supertraces: int
    method: str
    order: int
    minus_identity: bool

    def cells(self):
        return (self.system, str(self.traces), str(self.supertraces),
                self.method, str(self.order),
                "yes" if self.minus_identity else "no")

    def as_dict(self):
        return {"system": self.system, "T": self.traces, "S": self.supertraces,
                "method": self.method, "order": self.order,
                "minus_identity": self.minus_identity}


def _emit_markdown(rows, header=_COLUMNS):
    def esc(cell: str) -> str:
        return cell.replace("|", "\\|")

    out = ["| " + " | ".join(esc(c) for c in header) + " |",
           "|" + "|".join(" --- " for _ in header) + "|"]
    for row in rows:
        out.append("| " + " | ".join(esc(c) for c in row) + " |")
    return "\n".join(out) + "\n"


def _emit_csv(rows, header):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _print_rows(rows, fmt, header, json_payload):
    if fmt == "json":
        print(json.dumps(json_payload, indent=2))
    elif fmt == "csv":
        sys.stdout.write(_emit_csv(rows, header))
    else:
        sys.stdout.write(_emit_markdown(rows, header))


def _effective_budget(args) -> int:
    budget = args.budget
    if budget is None:
        env = os.environ.get(ENV_BUDGET)
        if env is not None:
            try:
                budget = int(env)
            except ValueError:
                raise SpecParseError(
                    f"{ENV_BUDGET} must be an integer, got {env!r}")
    if budget is None:
        return DEFAULT_BUDGET
    if budget < 0:
        raise SpecParseError(f"budget must be non-negative, got {budget}")
    return budget


def _effective_cache_dir(args):
    if args.cache_dir:
        return args.cache_dir
    return os.environ.get(ENV_CACHE_DIR)


def _cache_path(cache_dir: str, label: str) -> str:
    safe = label.replace("(", "").replace(")", "").replace("+", "_")
    return os.path.join(cache_dir, f"{safe}.grp")


def _minus_identity_of(system) -> bool:
    return all(f.contains_minus_identity for f in system.factors)


# -- commands ----------------------------------------------------------------


def cmd_count(args) -> int:
    budget = _effective_budget(args)
    system = system_from_spec(args.system)
    started = time.perf_counter()
    group = None
    if args.strategy == "brute":
        cache_dir = _effective_cache_dir(args)
        if cache_dir:
            path = _cache_path(cache_dir, system.label)
            if os.path.exists(path):
                group = load_group(path)
        if group is None:
            group = generate_group(system, budget=budget, heavy=args.heavy,
                                   allow_e8=args.unsupported_e8_enumeration)
        result = count_brute_force(group)
    else:
        result = count(system, strategy=args.strategy, budget=budget,
                       heavy=args.heavy)
    elapsed = time.perf_counter() - started
    row = ReportRow(system.label, result.traces, result.supertraces,
                    result.method, system.known_order,
                    _minus_identity_of(system))
    _print_rows([row.cells()], args.format, _COLUMNS, row.as_dict())
    print(f"computed in {elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK


def cmd_classes(args) -> int:
    budget = _effective_budget(args)
    system = system_from_spec(args.system)
    started = time.perf_counter()
    group = None
    cache_dir = _effective_cache_dir(args)
    if cache_dir:
        path = _cache_path(cache_dir, system.label)
        if os.path.exists(path):
            group = load_group(path)
    if group is None:
        group = generate_group(system, budget=budget, heavy=args.heavy,
                               allow_e8=args.unsupported_e8_enumeration)
    classes = conjugacy_classes(group)
    elapsed = time.perf_counter() - started
    header = ("class", "size", "det", "char_poly", "has_plus_one", "has_minus_one")
    rows = []
    payload = []
    for i, cls in enumerate(classes):
        rows.append((str(i), str(cls.size), str(cls.det), cls.char_poly_str,
                     "yes" if cls.has_plus_one else "no",
                     "yes" if cls.has_minus_one else "no"))
        payload.append({"class": i, "size": cls.size,
                        "det": cls.det.to_int_tuple(),
                        "char_poly": cls.char_poly_str,
                        "char_poly_coeffs": [c.to_int_tuple()
                                             for c in cls.char_poly],
                        "has_plus_one": cls.has_plus_one,
                        "has_minus_one": cls.has_minus_one})
    _print_rows(rows, args.format,
                header, {"system": system.label, "classes": payload})
    print(f"{group.order} elements, {len(classes)} classes in {elapsed:.3f}s",
          file=sys.stderr)
    return EXIT_OK


def _section3_factors():
    factors = [Factor("A", 1)]
    factors += [Factor("B", n) for n in range(2, 11)]
    factors += [Factor("D", n) for n in range(4, 21, 2)]
    factors += [Factor("E", 7), Factor("E", 8), Factor("F", 4), Factor("G", 2),
                Factor("H", 3), Factor("H", 4)]
    factors += [Factor("I", n) for n in range(4, 21, 2)]
    return factors


def _section4_factors():
    factors = [Factor("A", 0)]
    factors += [Factor("A", n) for n in range(2, 10)]
    factors += [Factor("D", n) for n in range(5, 20, 2)]
    factors += [Factor("E", 6)]
    factors += [Factor("I", n) for n in range(5, 20, 2)]
    return factors


def _table_row(factor: Factor, budget: int) -> ReportRow:
    result = closed_form_count(factor)
    method = "closed_form"
    if factor.has_matrix_model and factor.order <= min(_TABLE_CROSSCHECK_CAP,
                                                       budget):
        from .roots import build_irreducible
        brute = count_brute_force(generate_group(build_irreducible(factor),
                                                 budget=budget))
        if brute.pair() != result.pair():  # cannot happen; belt and braces
            raise RuntimeError(f"closed form disagrees with brute force "
                               f"on {factor.label}")
        method = "closed_form=brute"
    return ReportRow(factor.label, result.traces, result.supertraces, method,
                     factor.order, factor.contains_minus_identity)


def cmd_table(args) -> int:
    budget = _effective_budget(args)
    started = time.perf_counter()
    sections = []
    if args.which in ("section3", "all"):
        sections.append(("section3", [_table_row(f, budget)
                                      for f in _section3_factors()]))
    if args.which in ("section4", "all"):
        sections.append(("section4", [_table_row(f, budget)
                                      for f in _section4_factors()]))
    elapsed = time.perf_counter() - started
    if args.format == "json":
        payload = {name: [row.as_dict() for row in rows]
                   for name, rows in sections}
        print(json.dumps(payload, indent=2))
    else:
        chunks = []
        for name, rows in sections:
            title = ("equal trace and supertrace counts" if name == "section3"
                     else "strictly more supertraces than traces")
            cells = [row.cells() for row in rows]
            if args.format == "csv":
                chunks.append(_emit_csv(cells, _COLUMNS))
            else:
                chunks.append(f"### {title}\n\n" + _emit_markdown(cells))
        sys.stdout.write("\n".join(chunks))
    print(f"tables computed in {elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    budget = _effective_budget(args)
    started = time.perf_counter()
    if args.scope == "theorems":
        result = verify_mod.inequality_suite(trials=args.trials, seed=args.seed,
                                             budget=budget, heavy=args.heavy)
        extra = verify_mod.multiplicativity_suite(seed=args.seed, budget=budget)
        result.lines.extend(extra.lines)
    elif args.scope == "lemma":
        result = verify_mod.lemma_suite(degree=args.degree)
    else:
        result = verify_mod.appendix_suite(budget=budget)
    for line in result.lines:
        print(line.render())
    elapsed = time.perf_counter() - started
    print(f"verify {args.scope}: {len(result.lines)} checks in {elapsed:.1f}s",
          file=sys.stderr)
    return EXIT_OK if result.ok else EXIT_VERIFY


def cmd_cache(args) -> int:
    cache_dir = _effective_cache_dir(args)
    if not cache_dir:
        print("no cache directory configured; pass --cache-dir or set "
              f"{ENV_CACHE_DIR}", file=sys.stderr)
        return EXIT_USAGE
    if args.action == "warm":
        if not args.system:
            print("cache warm needs a system spec", file=sys.stderr)
            return EXIT_USAGE
        budget = _effective_budget(args)
        system = system_from_spec(args.system)
        group = generate_group(system, budget=budget, heavy=args.heavy,
                               allow_e8=args.unsupported_e8_enumeration)
        os.makedirs(cache_dir, exist_ok=True)
        path = _cache_path(cache_dir, system.label)
        save_group(group, path)
        print(f"cached {system.label}: {group.order} elements -> {path}")
        return EXIT_OK
    if args.action == "list":
        if not os.path.isdir(cache_dir):
            print("(empty)")
            return EXIT_OK
        names = sorted(n for n in os.listdir(cache_dir) if n.endswith(".grp"))
        if not names:
            print("(empty)")
            return EXIT_OK
        for name in names:
            path = os.path.join(cache_dir, name)
            try:
                group = load_group(path)
                print(f"{group.system.label}  order={group.order}  "
                      f"bytes={os.path.getsize(path)}  version=1")
            except CacheFormatError as exc:
                print(f"{name}  UNREADABLE ({exc})")
        return EXIT_OK
    # clear
    removed = 0
    if os.path.isdir(cache_dir):
        for name in os.listdir(cache_dir):
            if name.endswith(".grp"):
                os.remove(os.path.join(cache_dir, name))
                removed += 1
    print(f"removed {removed} cached group(s)")
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxtraces",
        description="Count traces and supertraces over finite reflection groups")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_strategy=False):
        p.add_argument("--format", choices=("markdown", "csv", "json"),
                       default="markdown")
        p.add_argument("--budget", type=int, default=None,
                       help=f"enumeration budget (default {DEFAULT_BUDGET:,}, "
                            f"or {ENV_BUDGET})")
        p.add_argument("--cache-dir", default=None,
                       help=f"group cache directory (or {ENV_CACHE_DIR})")
        p.add_argument("--heavy", action="store_true",
                       help="allow enumerations past the heavy threshold")
        p.add_argument("--unsupported-e8-enumeration", action="store_true",
                       help=argparse.SUPPRESS)
        if with_strategy:
            p.add_argument("--strategy", choices=("auto", "closed", "brute"),
                           default="auto")

    p_count = sub.add_parser("count", help="trace/supertrace counts for a system")
    p_count.add_argument("system", help="e.g. 'B4+D5+I2(7)+A0'")
    common(p_count, with_strategy=True)
    p_count.set_defaults(func=cmd_count)

    p_classes = sub.add_parser("classes",
                               help="conjugacy class report for a system")
    p_classes.add_argument("system")
    common(p_classes)
    p_classes.set_defaults(func=cmd_classes)

    p_table = sub.add_parser("table",
                             help="tabulate the irreducible families in two "
                                  "fixed sections")
    p_table.add_argument("which", choices=("section3", "section4", "all"))
    common(p_table)
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run a property suite")
    p_verify.add_argument("scope", choices=("theorems", "lemma", "appendices"))
    p_verify.add_argument("--seed", type=int, default=verify_mod.DEFAULT_SEED)
    p_verify.add_argument("--trials", type=int, default=verify_mod.DEFAULT_TRIALS)
    p_verify.add_argument("--degree", type=int, default=verify_mod.DEFAULT_DEGREE)
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_cache = sub.add_parser("cache", help="manage the on-disk group cache")
    p_cache.add_argument("action", choices=("list", "clear", "warm"))
    p_cache.add_argument("system", nargs="?")
    common(p_cache)
    p_cache.set_defaults(func=cmd_cache)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceededError, MatrixFreeSystemError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CacheFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
