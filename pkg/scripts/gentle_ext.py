# ============================================================================ #
#
#                             Copyright (c) 2023
#                               Sebastian Thiem
#
#                 Permission is hereby granted, free of charge,
#                to any person obtaining a copy of this software
#              and associated documentation files (the "Software"),
#                 to deal in the Software without restriction,
#                 including without limitation the rights to
#            use, copy, modify, merge, publish, distribute, sublicense,
#                     and/or sell copies of the Software,
#         and to permit persons to whom the Software is furnished to do so,
#                    subject to the following conditions:
#
#     The above copyright notice and this permission notice shall be included
#             in all copies or substantial portions of the Software.
#
#         THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
#               EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO
#                      THE WARRANTIES OF MERCHANTABILITY,
#             FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
#             IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE
#               LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
#              WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE,
#            ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE
#                 OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
# ============================================================================ #
#
# Description:  Command line front end for the gentle algebra Ext^1 engine.
#
#               Every verb reads a triangulation document, either a path or
#               the name of a file in the configured triangulation folder.
#               Reports go to stdout as text or JSON, diagnostics to stderr.
#
#                  quiver       derived quiver with potential
#                  validate     check a string
#                  snake        snake graph of a string
#                  crossings    classified crossings of two strings
#                  smooth       smoothing of one crossing, by index
#                  ext          Ext^1 dimensions, bases and triangles
#                  oracle-ext   Ext^1 dimensions by linear algebra
#                  check        sweep every pair of short strings
#
# ============================================================================ #
import argparse
import json
import logging
import os
import sys

from libs import extensions, oracle
from libs.errors import ConsistencyError, GentleExtError, ValidationError
from libs.settings import check_for_config_issues, load_config
from libs.snake_graph import render_text, snake_graph_of_string, to_json
from libs.strings import format_string, is_direct, is_inverse, parse_string
from libs.surface import (QuiverWithPotential, crossing_sequence_to_string,
                          derive_quiver, marked_points, read_triangulation)

logger = logging.getLogger(__name__)

VERBS = ("quiver", "validate", "snake", "crossings", "smooth", "ext",
         "oracle-ext", "check")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-t", "--triangulation", required=True,
                        help="Triangulation JSON file, or a name in the data folder")
    common.add_argument("--format", choices=("text", "json"), default=None)
    common.add_argument("--config", default=None, help="Path to config.ini")
    common.add_argument("--log-level", default=None)
    common.add_argument("--arc1", help="First string, e.g. 1>2<3")
    common.add_argument("--arc2", help="Second string")
    common.add_argument("--seq1", help="First arc as comma separated crossed edges")
    common.add_argument("--seq2", help="Second arc as comma separated crossed edges")

    parser = argparse.ArgumentParser(
        description="Ext^1 between string modules of gentle surface algebras")
    verbs = parser.add_subparsers(dest="verb", required=True)
    for verb in VERBS:
        sub = verbs.add_parser(verb, parents=[common])
        if verb in ("validate", "snake", "crossings", "smooth", "ext", "oracle-ext"):
            sub.add_argument("w1", nargs="?", help="First string")
        if verb in ("crossings", "smooth", "ext", "oracle-ext"):
            sub.add_argument("w2", nargs="?", help="Second string")
        if verb == "smooth":
            sub.add_argument("--crossing", type=int, required=True,
                             help="1-based index from the crossings listing")
        if verb == "check":
            sub.add_argument("--max-len", type=int, default=None)
            sub.add_argument("--parallel", type=int, default=None)
    return parser


def locate_triangulation(name: str, folder: str) -> str:
    """Accept a path, or a file name (with or without .json) in `folder`."""
    if os.path.isfile(name):
        return name
    for candidate in (os.path.join(folder, name), os.path.join(folder, f"{name}.json")):
        if os.path.isfile(candidate):
            return candidate
    raise ValidationError(f"No triangulation found for {name}")


def read_arc(Q: QuiverWithPotential, text: str | None, seq: str | None, which: str):
    if text is not None and seq is not None:
        raise ValidationError(f"Give either the string or the crossing sequence "
                              f"of arc {which}, not both")
    if seq is not None:
        return crossing_sequence_to_string(Q, [s.strip() for s in seq.split(",")])
    if text is None:
        raise ValidationError(f"Arc {which} is missing")
    return parse_string(Q, text)


def emit(report, fmt: str, text: str):
    if fmt == "json":
        print(json.dumps(report, indent=2))
    else:
        print(text)


# ---------------------------------------------------------------------------- #
#   Verbs
# ---------------------------------------------------------------------------- #

def run_quiver(Q, args, fmt):
    points, components = marked_points(Q.triangulation)
    report = {"vertices": list(Q.vertices),
              "arrows": [{"id": a.id, "source": a.source, "target": a.target}
                         for a in Q.arrows],
              "relations": sorted(list(r) for r in Q.relations),
              "potential": [list(c) for c in Q.cycles],
              "marked_points": points, "boundary_components": components}
    lines = [f"Vertices:  {' '.join(Q.vertices)}",
             f"Arrows:    {', '.join(a.id for a in Q.arrows)}",
             f"Potential: {' + '.join('·'.join(c) for c in Q.cycles) or '0'}",
             f"Surface:   {points} marked points on {components} boundary components"]
    emit(report, fmt, "\n".join(lines))
    return 0


def run_validate(Q, args, fmt):
    w = read_arc(Q, args.w1 or args.arc1, args.seq1, "1")
    report = {"string": format_string(w), "length": w.length,
              "vertices": list(w.vertices), "direct": is_direct(w),
              "inverse": is_inverse(w)}
    emit(report, fmt, f"{format_string(w)} is a string of length {w.length}")
    return 0


def run_snake(Q, args, fmt):
    w = read_arc(Q, args.w1 or args.arc1, args.seq1, "1")
    G = snake_graph_of_string(Q, w)
    emit({"string": format_string(w), **to_json(G)}, fmt, render_text(G))
    return 0


def _pair(Q, args):
    w1 = read_arc(Q, args.w1 or args.arc1, args.seq1, "1")
    w2 = read_arc(Q, args.w2 or args.arc2, args.seq2, "2")
    return w1, w2


def run_crossings(Q, args, fmt):
    w1, w2 = _pair(Q, args)
    crossings = extensions.enumerate_crossings(Q, w1, w2)
    lines = [f"{index}. {c.describe()}  direction {c.direction}  "
             f"{format_string(c.crosser)} over {format_string(c.crossee)}"
             for index, c in enumerate(crossings, start=1)]
    emit({"crossings": [c.to_json() for c in crossings]}, fmt,
         "\n".join(lines) or "No crossings")
    return 0


def run_smooth(Q, args, fmt):
    w1, w2 = _pair(Q, args)
    crossings = extensions.enumerate_crossings(Q, w1, w2)
    if not 1 <= args.crossing <= len(crossings):
        raise ValidationError(f"Crossing index {args.crossing} outside "
                              f"1..{len(crossings)}")
    crossing = crossings[args.crossing - 1]
    smoothing = extensions.smooth(Q, crossing)
    graphs = extensions.check_dual_route(Q, crossing, smoothing)

    names = ("w3", "w4", "w5", "w6")
    values = (smoothing.w3, smoothing.w4, smoothing.w5, smoothing.w6)
    report = {"crossing": crossing.to_json(), "smoothing": smoothing.to_json(),
              "graphs": [to_json(G) for G in graphs]}
    lines = [crossing.describe()]
    for name, value, G in zip(names, values, graphs):
        lines.append(f"{name} = {format_string(extensions.canonical(value))}")
        lines.append(render_text(G))
    emit(report, fmt, "\n".join(lines))
    return 0


def run_ext(Q, args, fmt):
    w1, w2 = _pair(Q, args)
    report = extensions.ext_report(Q, w1, w2)
    ext = report["ext"]
    lines = [f"dim Ext^1(M1, M2) = {ext['dim_MN']}",
             f"dim Ext^1(M2, M1) = {ext['dim_NM']}",
             f"Int = {ext['Int']}, k = {ext['k']}, k' = {ext['k_prime']}"]
    if extensions.is_same_arc(w1, w2):
        lines.append(f"2 * {ext['dim_MN']} = {ext['Int']} - 2 * {ext['k']}")
    else:
        lines.append(f"{ext['dim_MN']} + {ext['dim_NM']} = "
                     f"{ext['Int']} - {ext['k']} - {ext['k_prime']}")
    for key in ("MN", "NM"):
        for ses in report["ses"][key]:
            middle = " + ".join(ses["middle"]) or "0"
            lines.append(f"0 -> {ses['sub']} -> {middle} -> {ses['quotient']} -> 0"
                         f"  ({ses['crossing']})")
    for first, second in report["triangles"]:
        lines.append(first)
        lines.append(second)
    emit(report, fmt, "\n".join(lines))
    return 0


def run_oracle_ext(Q, args, fmt, config):
    w1, w2 = _pair(Q, args)
    bound = config.getint("limits", "MaxProjectivePaths")
    report = {"dim_MN": oracle.ext1_of_strings(Q, w1, w2, bound),
              "dim_NM": oracle.ext1_of_strings(Q, w2, w1, bound)}
    emit(report, fmt, f"dim Ext^1(M1, M2) = {report['dim_MN']}\n"
                      f"dim Ext^1(M2, M1) = {report['dim_NM']}")
    return 0


def run_check(Q, args, fmt, config):
    max_len = args.max_len if args.max_len is not None \
        else config.getint("sweep", "MaxLength")
    parallel = args.parallel if args.parallel is not None \
        else config.getint("sweep", "Parallel")
    bound = config.getint("limits", "MaxProjectivePaths")

    pairs, mismatches = oracle.sweep(Q, max_len, parallel, bound)
    report = {"pairs": pairs, "max_len": max_len, "mismatches": mismatches}
    lines = [f"Checked {pairs} pairs up to length {max_len}: "
             f"{len(mismatches)} mismatches"]
    lines += [json.dumps(m) for m in mismatches]
    emit(report, fmt, "\n".join(lines))
    return 2 if mismatches else 0


def start_logging(level: str):
    level = level.upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ValidationError(f"Unknown log level {level}")
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = load_config(args.config)

    try:
        start_logging(args.log_level or config["logging"]["Level"])
        if not check_for_config_issues(config, [("output", "Format"),
                                                ("data", "TriangulationFolder")]):
            raise ValidationError("Config has issues", config=args.config)
        fmt = args.format or config["output"]["Format"]

        path = locate_triangulation(args.triangulation,
                                    config["data"]["TriangulationFolder"])
        Q = derive_quiver(read_triangulation(path))

        if args.verb == "oracle-ext":
            return run_oracle_ext(Q, args, fmt, config)
        if args.verb == "check":
            return run_check(Q, args, fmt, config)
        handler = {"quiver": run_quiver, "validate": run_validate,
                   "snake": run_snake, "crossings": run_crossings,
                   "smooth": run_smooth, "ext": run_ext}[args.verb]
        return handler(Q, args, fmt)

    except ValidationError as err:
        print(json.dumps(err.diagnostic()), file=sys.stderr)
        return 1
    except (ConsistencyError, GentleExtError) as err:
        print(json.dumps(err.diagnostic()), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
