import sys
import json
import logging
import argparse
from dataclasses import asdict
from typing import Dict, List, Optional

from . import config
from .analysis import (
    WeightEnumerator,
    check_min_param_bounds,
    classify,
    enumerator_polynomial,
    macwilliams,
    self_dual_report,
    two_weight_check,
    weight_enumerator,
)
from .cache import SearchCache
from .codefile import emit, emit_json, emit_z2z4, parse, parse_bits, parse_ring_elem, parse_ring_vector, parse_z2z4
from .codes import GenMatrix, dual, is_self_dual, is_self_orthogonal, is_separable, separability_report, span, standard_form
from .constructions import (
    build_up,
    build_up_1,
    build_up_2,
    build_up_3,
    buildup_inputs,
    direct_sum,
    from_z2z4,
    to_z2z4,
)
from .errors import InvalidParameters, ParseError, Z2RError
from .run_logger import RunLogger
from .search import SearchSpec, classify_two_weight, enumerate_self_dual

logger = logging.getLogger("z2r")

CONSTRUCTIONS = ["direct-sum", "buildup1", "buildup2", "buildup3", "theta", "theta-inv", "sweep"]


def _read(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r") as f:
        return f.read()


def _render_result(result: Dict) -> str:
    """A search result as a code file with '#' annotation lines."""
    lines = [f"alpha={result['alpha']} beta={result['beta']}"] + result["matrix"]
    gamma, delta, kappa = result["type"]
    lines.append(f"# type ({result['alpha']},{result['beta']};{gamma},{delta};{kappa}) "
                 f"{result['selfdual_type']} separable={str(result['separable']).lower()}")
    lines.append(f"# enumerator {result['enumerator']['coefficients']}")
    return "\n".join(lines) + "\n"


class CodeCommands:
    """Argument parsing and one handler per subcommand."""

    def __init__(self):
        self.parser = argparse.ArgumentParser(
            prog="z2r", description="Linear codes over Z2 x (Z2 + uZ2)")
        self.subparsers = self.parser.add_subparsers(dest="command", required=True)
        self._register_commands()

    def _add(self, name: str, handler, help_text: str, code_input: bool = True) -> argparse.ArgumentParser:
        sub = self.subparsers.add_parser(name, help=help_text)
        if code_input:
            sub.add_argument("path", nargs="?", help="code file; stdin when omitted")
            sub.add_argument("--seed", help="code file, alternative to the positional path")
            sub.add_argument("--limit", type=int, default=None, help="largest code size to enumerate")
        sub.add_argument("--json", action="store_true", help="emit JSON")
        sub.set_defaults(handler=handler)
        return sub

    def _register_commands(self):
        self._add("std-form", self.std_form, "standard form and type")
        self._add("dual", self.dual, "generator matrix of the dual code")
        self._add("span", self.span, "list every codeword")
        self._add("wenum", self.wenum, "Lee weight enumerator")
        self._add("check", self.check, "self-duality, type, separability and structure reports")

        sub = self._add("macwilliams", self.macwilliams, "MacWilliams transform of an enumerator")
        sub.add_argument("--coeffs", help="comma separated enumerator coefficients instead of a code")
        sub.add_argument("--size", type=int, help="code size that goes with --coeffs")

        sub = self._add("construct", self.construct, "direct sums, building-up and the theta bridge",
                        code_input=False)
        sub.add_argument("kind", choices=CONSTRUCTIONS)
        sub.add_argument("path", nargs="?", help="code file; stdin when omitted")
        sub.add_argument("--seed", help="code file, alternative to the positional path")
        sub.add_argument("--limit", type=int, default=None, help="largest code size to enumerate")
        sub.add_argument("--other", help="second summand for direct-sum")
        sub.add_argument("--x", default="", help="binary vector")
        sub.add_argument("--y", default="", help="ring vector")
        sub.add_argument("--e", default="", help="binary vector (buildup3)")
        sub.add_argument("--a", default="", help="ring vector over {0,u} (buildup3)")
        sub.add_argument("--t", default="1", help="unit of R")
        sub.add_argument("--variant", type=int, default=1, help="building-up variant for sweep")

        for name, handler, help_text in (
            ("search", self.search, "exhaustive self-dual search up to equivalence"),
            ("classify-two-weight", self.classify_two_weight, "self-dual two-weight codes of length n"),
        ):
            sub = self._add(name, handler, help_text, code_input=False)
            sub.add_argument("--threads", type=int, default=config.SEARCH_THREADS)
            sub.add_argument("--cache", default=config.SEARCH_CACHE, help="JSON cache file; empty disables")
            sub.add_argument("--progress", action="store_true", help="show a progress bar on stderr")
            if name == "search":
                sub.add_argument("--alpha", type=int, required=True)
                sub.add_argument("--beta", type=int, required=True)
                sub.add_argument("--two-weight", action="store_true")
                sub.add_argument("--type", dest="type_tag", choices=["TypeI", "TypeII"])
                sub.add_argument("--separable", choices=["yes", "no"])
                sub.add_argument("--no-canonical", action="store_true")
            else:
                sub.add_argument("--n", type=int, required=True)

    def _matrix(self, args) -> GenMatrix:
        return parse(_read(args.seed or args.path))

    # --- handlers ---------------------------------------------------------

    def std_form(self, args):
        sf = standard_form(self._matrix(args))
        if args.json:
            print(json.dumps({
                "type": sf.code_type.as_list(),
                "perm_x": list(sf.perm_x),
                "perm_y": list(sf.perm_y),
                "matrix": [r.literal() for r in sf.matrix.rows],
            }))
            return
        sys.stdout.write(emit(sf.matrix))
        print(f"# type {sf.code_type}")
        print(f"# perm_x {list(sf.perm_x)} perm_y {list(sf.perm_y)}")

    def dual(self, args):
        H = dual(standard_form(self._matrix(args)))
        if args.json:
            print(json.dumps({"matrix": [r.literal() for r in H.rows]}))
            return
        sys.stdout.write(emit(H))

    def span(self, args):
        code = span(self._matrix(args), limit=args.limit)
        words = [w.literal() for w in code.sorted_words()]
        if args.json:
            print(json.dumps({"size": len(code), "words": words}))
            return
        print(f"# size {len(code)}")
        for w in words:
            print(w)

    def _print_enumerator(self, W: WeightEnumerator, as_json: bool):
        if as_json:
            print(json.dumps(W.to_json()))
            return
        print(json.dumps(list(W.coeffs)))
        print(f"# {enumerator_polynomial(W)}")

    def wenum(self, args):
        W = weight_enumerator(span(self._matrix(args), limit=args.limit))
        self._print_enumerator(W, args.json)

    def macwilliams(self, args):
        if args.coeffs:
            if args.size is None:
                raise InvalidParameters("--coeffs needs --size")
            try:
                coeffs = [int(c) for c in args.coeffs.split(",")]
            except ValueError:
                raise ParseError(1, 1, f"malformed coefficient list {args.coeffs!r}")
            W, size = WeightEnumerator(len(coeffs) - 1, coeffs), args.size
        else:
            code = span(self._matrix(args), limit=args.limit)
            W, size = weight_enumerator(code), len(code)
        self._print_enumerator(macwilliams(W, size), args.json)

    def check(self, args):
        G = self._matrix(args)
        code = span(G, limit=args.limit)
        self_dual = is_self_dual(G)
        report = {
            "self_orthogonal": is_self_orthogonal(G),
            "self_dual": self_dual,
            "type": str(code.code_type),
            "separable": is_separable(code),
        }
        if self_dual:
            structure = self_dual_report(code)
            report["selfdual_type"] = classify(code).value
            report["separability"] = separability_report(code).as_dict()
            report["bounds"] = asdict(check_min_param_bounds(code))
            report["structure"] = structure.checks
            for check in structure.violations:
                RunLogger().log_violation(check, G.alpha, G.beta, emit(G), {"type": report["type"]})
        report["two_weight"] = two_weight_check(code).to_json()
        print(json.dumps(report) if args.json else json.dumps(report, indent=2))

    def construct(self, args):
        kind = args.kind
        if kind == "theta-inv":
            H = parse_z2z4(_read(args.seed or args.path))
            sys.stdout.write(emit(from_z2z4(H)))
            return
        G = self._matrix(args)
        if kind == "theta":
            sys.stdout.write(emit_z2z4(to_z2z4(G)))
            return
        if kind == "sweep":
            self._sweep(G, args.variant)
            return

        if kind == "direct-sum":
            if not args.other:
                raise InvalidParameters("direct-sum needs --other")
            out = direct_sum(G, parse(_read(args.other)))
        elif kind == "buildup1":
            out = build_up_1(G, parse_bits(args.x), parse_ring_vector(args.y))
        elif kind == "buildup2":
            out = build_up_2(G, parse_ring_vector(args.y), parse_bits(args.x), parse_ring_elem(args.t))
        else:
            out = build_up_3(G, parse_bits(args.x), parse_ring_vector(args.y), parse_bits(args.e),
                             parse_ring_vector(args.a), parse_ring_elem(args.t))
        sys.stdout.write(emit(out))

    def _sweep(self, G: GenMatrix, variant: int):
        summary = {"variant": variant, "inputs": 0, "self_dual": 0, "separable": 0, "non_separable": 0}
        for inp in buildup_inputs(G, variant):
            out = build_up(G, inp)
            summary["inputs"] += 1
            if is_self_dual(out):
                summary["self_dual"] += 1
            else:
                logger.warning(f"Building-up variant {variant} produced a non self-dual code from {inp}")
            key = "separable" if is_separable(span(out)) else "non_separable"
            summary[key] += 1
        print(json.dumps(summary))

    def _print_results(self, lines: List[str], as_json: bool):
        for line in lines:
            if as_json:
                print(line)
            else:
                print(_render_result(json.loads(line)))

    def _run_search(self, args, spec: SearchSpec, runner):
        spec.validate()
        cache = SearchCache(args.cache) if args.cache else None
        key = spec.cache_key()
        lines = cache.get(key) if cache else None
        if lines is None:
            lines = [emit_json(r) for r in runner()]
            if cache:
                cache.put(key, lines)
        else:
            logger.info(f"Using cached results for {key}")
        self._print_results(lines, args.json)

    def search(self, args):
        separable = None if args.separable is None else args.separable == "yes"
        spec = SearchSpec(
            args.alpha, args.beta,
            type_tag=args.type_tag,
            two_weight=True if args.two_weight else None,
            separable=separable,
            canonicalize=not args.no_canonical,
            threads=args.threads,
            progress=args.progress,
        )
        self._run_search(args, spec, lambda: enumerate_self_dual(spec))

    def classify_two_weight(self, args):
        n = args.n
        if n <= 0 or n % 4:
            raise InvalidParameters(f"no self-dual two-weight codes exist when 4 does not divide n={n}")
        spec = SearchSpec(n // 2, n // 4, two_weight=True, threads=args.threads, progress=args.progress)
        self._run_search(args, spec,
                         lambda: classify_two_weight(n, threads=args.threads, progress=args.progress))


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run one subcommand and return the exit code."""
    commands = CodeCommands()
    try:
        args = commands.parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        args.handler(args)
    except ParseError as e:
        logger.debug(f"{args.command} failed to parse input: {e}")
        print(f"z2r: parse error: {e}", file=sys.stderr)
        return 2
    except (Z2RError, OSError) as e:
        logger.debug(f"{args.command} failed: {e}")
        print(f"z2r: error: {e}", file=sys.stderr)
        return 1
    return 0
