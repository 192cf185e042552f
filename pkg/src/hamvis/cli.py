"""
Command line interface.

Exit status: 0 success, 1 invalid input, 2 verification failure,
3 solver stopped before proving optimality.  Errors go to stderr as a
single line ``error <kind>: <message>``.
"""

from __future__ import annotations

import argparse
import secrets
import sys
from fractions import Fraction
from pathlib import Path

from hamvis import constructions, formats
from hamvis.conflict import SolveOptions, brute_force_mut, build_conflict_graph, export_dimacs, mut_exact
from hamvis.errors import CapExceeded, InvalidInput
from hamvis.hamming import HammingShape, format_vertex
from hamvis.turan import clique_family_to_tmv, is_valid_clique_family, make_family, tmv_to_clique_family
from hamvis.visibility import all_squares_suitable, hamming_graph, is_mv_set, is_total_mv_set, is_tmv_hamming

EXIT_OK, EXIT_INVALID, EXIT_VERIFY, EXIT_TIMEOUT = 0, 1, 2, 3


class VerificationFailed(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(f"{self.prog}: {message}")


def _emit(args, pairs, out):
    """Structured: ``key value``.  Text: keys padded, rationals with a decimal."""
    if args.format == "structured":
        out.write(formats.write_doc(pairs))
        return
    pairs = [(k, v) for k, v in pairs if v is not None]
    width = max((len(k) for k, _ in pairs), default=0)
    for key, value in pairs:
        text = formats.render(value)
        if isinstance(value, Fraction) and value.denominator != 1:
            text += f" ({float(value):.4f})"
        out.write(f"{key.ljust(width)}  {text}\n".rstrip() + "\n")


def _write_file(path, text):
    Path(path).write_text(text)


def _read_file(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from exc


def _shape_arg(text: str) -> HammingShape:
    return HammingShape.parse(text)


def cmd_solve(args, out):
    shape = args.shape
    if args.method == "brute":
        value = brute_force_mut(shape)
        _emit(args, [("shape", shape), ("value", value), ("optimal", True), ("method", "brute")], out)
        return EXIT_OK
    opts = SolveOptions(timeout=args.timeout, threads=args.threads, symmetry=args.symmetry, cap=args.cap)
    cert = mut_exact(shape, opts)
    if args.out:
        _write_file(args.out, formats.write_certificate(cert, timing=not args.no_timing))
    if args.format == "structured":
        out.write(formats.write_certificate(cert, timing=not args.no_timing))
    else:
        line = f"shape {shape} value {cert.value} optimal {formats.render(cert.optimal)} nodes {cert.nodes}"
        if not args.no_timing:
            line += f" millis {cert.millis}"
        out.write(line + "\n")
        out.write("witness " + formats.render(list(cert.witness)) + "\n")
    return EXIT_OK if cert.optimal else EXIT_TIMEOUT


def _load_set(args):
    file_shape, members = formats.read_set(_read_file(args.set))
    shape = args.shape or file_shape
    if args.shape and file_shape and args.shape != file_shape:
        raise InvalidInput(f"--shape {args.shape} does not match set file shape {file_shape}")
    return shape, members


def cmd_verify(args, out):
    if args.graph:
        if args.method not in (None, "generic"):
            raise InvalidInput("edge-list graphs support only --method generic")
        graph = formats.read_edge_list(_read_file(args.graph))
        _, members = formats.read_set(_read_file(args.set))
        if members and isinstance(members[0], tuple):
            raise InvalidInput("set for an edge-list graph must list integer vertices")
        tmv = is_total_mv_set(graph, members)
        _emit(args, [("vertices", graph.n), ("size", len(set(members))),
                     ("generic", tmv), ("mv", is_mv_set(graph, members)), ("tmv", tmv)], out)
        return EXIT_OK if tmv else EXIT_VERIFY

    shape, members = _load_set(args)
    if shape is None:
        raise InvalidInput("need --shape or a set file with a shape field")
    method = args.method or "distance2"
    verdicts = {}
    if method in ("distance2", "both"):
        verdicts["distance2"] = is_tmv_hamming(shape, members)
    if method in ("squares", "both"):
        verdicts["squares"] = all_squares_suitable(shape, members)
    mv = None
    if method in ("generic", "both"):
        graph = hamming_graph(shape)
        ids = [shape.encode(v) for v in members]
        verdicts["generic"] = is_total_mv_set(graph, ids)
        mv = is_mv_set(graph, ids)
    agree = len(set(verdicts.values())) == 1
    pairs = [("shape", shape), ("size", len(set(members)))]
    pairs += list(verdicts.items())
    pairs += [("mv", mv), ("agreement", agree if len(verdicts) > 1 else None),
              ("tmv", all(verdicts.values()))]
    _emit(args, pairs, out)
    if not agree:
        raise VerificationFailed("checkers disagree")
    return EXIT_OK if all(verdicts.values()) else EXIT_VERIFY


def cmd_construct(args, out):
    shape = args.shape
    witness = constructions.construct(shape)
    reduced = shape.reduced()
    expected = None
    if reduced.r == 3:
        expected = constructions.theorem1_value(*reduced.sizes)
    elif reduced.r <= 2:
        expected = max(reduced.sizes)
    valid = is_tmv_hamming(shape, witness)
    if args.out:
        _write_file(args.out, formats.write_set(shape, witness))
    _emit(args, [("shape", shape), ("normalized_shape", HammingShape(tuple(sorted(shape.sizes, reverse=True)))),
                 ("size", len(witness)), ("expected", expected), ("valid", valid),
                 ("vertices", witness)], out)
    return EXIT_OK if valid else EXIT_VERIFY


def cmd_random(args, out):
    if args.trials < 1:
        raise InvalidInput("--trials must be >= 1")
    seed = args.seed if args.seed is not None else secrets.randbelow(2**32)
    if args.advanced:
        if args.shape is None or args.p is None:
            raise InvalidInput("--advanced needs --shape and --p")
        p = formats.parse_fraction(args.p)
        if not 0 <= p <= 1:
            raise InvalidInput("--p must lie in [0, 1]")
        head = [("shape", args.shape), ("advanced", True), ("seed", seed), ("trials", args.trials), ("p", p),
                ("expected_sampled", args.shape.V * p)]

        def run(k):
            return constructions.random_tmv_general(args.shape, p, k)
    else:
        if args.s is None or args.r is None:
            raise InvalidInput("need --s and --r (or --advanced --shape --p)")
        if args.shape is not None or args.p is not None:
            raise InvalidInput("--shape and --p require --advanced")
        s, r = args.s, args.r
        if r < 3 or s < 2:
            raise InvalidInput("randomized construction needs r >= 3 and s >= 2")
        head = [("s", s), ("r", r), ("seed", seed), ("trials", args.trials),
                ("p", constructions.sample_probability(s, r)),
                ("expected_sampled", constructions.expected_sample_size(s, r)),
                ("expected_bad_pairs", constructions.expected_bad_pairs_bound(s, r)),
                ("lower_bound", constructions.lower_bound_balanced(s, r))]

        def run(k):
            return constructions.random_tmv(s, r, k)

    rows = []
    kept, bad = [], []
    all_valid = True
    for k in range(seed, seed + args.trials):
        rep = run(k)
        valid = is_tmv_hamming(rep.shape, rep.vertices)
        all_valid &= valid
        kept.append(rep.kept)
        bad.append(rep.bad_pairs)
        row = f"seed {k} sampled {rep.sampled} bad {rep.bad_pairs} kept {rep.kept} valid {formats.render(valid)}"
        if args.show_sets:
            row += " set " + " ".join(format_vertex(v) for v in rep.vertices)
        rows.append(row)
    tail = [("mean_kept", Fraction(sum(kept), len(kept))), ("min_kept", min(kept)), ("max_kept", max(kept)),
            ("mean_bad", Fraction(sum(bad), len(bad))), ("all_valid", all_valid)]
    _emit(args, head, out)
    for row in rows:
        out.write(f"trial {row}\n")
    _emit(args, tail, out)
    return EXIT_OK if all_valid else EXIT_VERIFY


def cmd_bounds(args, out):
    shape = args.shape
    rep = constructions.bounds(shape)
    _emit(args, [("shape", shape), ("normalized_shape", rep.normalized_shape), ("r", shape.r), ("N", shape.N),
                 ("theorem1_value", rep.theorem1_value), ("two_factor_value", rep.two_factor_value),
                 ("upper_general", rep.upper_general), ("upper_balanced", rep.upper_balanced),
                 ("lower_balanced", rep.lower_balanced)], out)
    return EXIT_OK


def cmd_export(args, out):
    text = export_dimacs(build_conflict_graph(args.shape, args.cap), complement=args.complement)
    if args.out:
        _write_file(args.out, text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_bridge(args, out):
    if args.direction == "to-cliques":
        if not args.set:
            raise InvalidInput("to-cliques needs --set")
        shape, members = _load_set(args)
        if shape is None:
            raise InvalidInput("need --shape or a set file with a shape field")
        family = tmv_to_clique_family(shape, members)
        text = formats.write_family(shape, family.members(), is_valid_clique_family(family))
    else:
        if not args.family:
            raise InvalidInput("from-cliques needs --family")
        shape, cliques = formats.read_family(_read_file(args.family))
        family = make_family(shape, cliques)
        text = formats.write_set(shape, clique_family_to_tmv(family))
        text += formats.write_doc([("tmv", is_valid_clique_family(family))])
    if args.out:
        _write_file(args.out, text)
    out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hamvis", description="Total mutual-visibility in Hamming graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("text", "structured"), default="text")
        return p

    p = add("solve", cmd_solve, "exact total mutual-visibility number")
    p.add_argument("--shape", type=_shape_arg, required=True)
    p.add_argument("--method", choices=("bb", "brute"), default="bb")
    p.add_argument("--timeout", type=float, default=None, help="seconds")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--symmetry", action="store_true", help="fix the origin into the solution")
    p.add_argument("--cap", type=int, default=5000)
    p.add_argument("--no-timing", action="store_true", help="leave out the millis field")
    p.add_argument("--out")

    p = add("verify", cmd_verify, "check that a set is a total mutual-visibility set")
    p.add_argument("--shape", type=_shape_arg)
    p.add_argument("--graph", help="edge-list file instead of a shape")
    p.add_argument("--set", required=True)
    p.add_argument("--method", choices=("distance2", "squares", "generic", "both"))

    p = add("construct", cmd_construct, "explicit optimal set for up to three factors")
    p.add_argument("--shape", type=_shape_arg, required=True)
    p.add_argument("--out")

    p = add("random", cmd_random, "randomized sampling-and-deletion construction")
    p.add_argument("--s", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--show-sets", action="store_true")
    p.add_argument("--advanced", action="store_true", help="arbitrary shape and probability, no guarantee")
    p.add_argument("--shape", type=_shape_arg)
    p.add_argument("--p")

    p = add("bounds", cmd_bounds, "closed-form values and bounds")
    p.add_argument("--shape", type=_shape_arg, required=True)

    p = add("export", cmd_export, "DIMACS export of the distance-2 conflict graph")
    p.add_argument("--shape", type=_shape_arg, required=True)
    p.add_argument("--complement", action="store_true")
    p.add_argument("--cap", type=int, default=5000)
    p.add_argument("--out")

    p = add("bridge", cmd_bridge, "convert between vertex sets and clique families")
    p.add_argument("direction", choices=("to-cliques", "from-cliques"))
    p.add_argument("--shape", type=_shape_arg)
    p.add_argument("--set")
    p.add_argument("--family")
    p.add_argument("--out")
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    except InvalidInput as exc:
        err.write(f"error invalid-input: {exc}\n")
        return EXIT_INVALID
    try:
        return args.func(args, out)
    except VerificationFailed as exc:
        err.write(f"error verification-failed: {exc}\n")
        return EXIT_VERIFY
    except CapExceeded as exc:
        err.write(f"error cap-exceeded: {exc}\n")
        return EXIT_INVALID
    except (InvalidInput, ValueError) as exc:
        err.write(f"error invalid-input: {exc}\n")
        return EXIT_INVALID


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
