"""Command-line interface: ``elecvar <verb> ...``."""

import argparse
import sys

from . import dynamics as dy
from . import standard as st
from .errors import ElecvarError, ParseError
from .matrix import format_matrix, parse_matrix
from .medial import medial_of_network, wiring_of_medial, wiring_to_text
from .network import network_from_json, network_to_json, response, star_triangle_mutate
from .vertex_model import (model_from_text, model_of_network, model_to_text, partition_pathsum,
                           partition_product, yb_mutate)
from .verify import ACCEPTANCE, SUITES, run_suite


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as f:
        return f.read()


def _kind(text):
    s = text.lstrip()
    if s.startswith("{"):
        return "network"
    if s.startswith("strands"):
        return "model"
    return "conductances"


def cmd_respond(args):
    return format_matrix(response(network_from_json(_read(args.network)))) + "\n"


def cmd_mutate(args):
    text = _read(args.file)
    if _kind(text) == "network":
        if args.site is None:
            raise ElecvarError("network mutation needs --site (a vertex or three edge indices)")
        parts = args.site.replace(",", " ").split()
        site = parts[0] if len(parts) == 1 else tuple(int(p) for p in parts)
        return network_to_json(star_triangle_mutate(network_from_json(text), site, center=args.center))
    if args.at is None:
        raise ElecvarError("model mutation needs --at POSITION")
    return model_to_text(yb_mutate(model_from_text(text), args.at))


def cmd_medial(args):
    md = medial_of_network(network_from_json(_read(args.network)))
    wd = wiring_of_medial(md)
    if wd is not None:
        return wiring_to_text(wd)
    return "".join(f"{i} {j} {c}\n" for i, j, c in md.crossings())


def cmd_partition(args):
    text = _read(args.file)
    kind = _kind(text)
    if kind == "conductances":
        return format_matrix(st.mb_standard(st.conductances_from_text(text))) + "\n"
    model = model_of_network(network_from_json(text)) if kind == "network" else model_from_text(text)
    f = partition_pathsum if args.pathsum else partition_product
    return format_matrix(f(model)) + "\n"


def cmd_convert(args):
    m = parse_matrix(_read(args.matrix))
    out = st.mb_from_mr(m) if args.to == "mb" else st.mr_from_mb(m)
    return format_matrix(out) + "\n"


def cmd_invert(args):
    m = parse_matrix(_read(args.matrix))
    return st.conductances_to_text(st.invert_conductances(m, m.rows))


def cmd_verify(args):
    names = [n for n, _, _ in ACCEPTANCE] if args.suite == "all" else [args.suite]
    lines, ok = [], True
    for name in names:
        r = run_suite(name, seed=args.seed, samples=args.samples, size=args.size)
        lines.append(r.line())
        ok &= r.passed
    return "\n".join(lines) + "\n", 0 if ok else 1


def cmd_evolve(args):
    lat = dy.lattice_from_text(_read(args.lattice))
    return dy.lattice_to_text(dy.apply_word(lat, args.word.split()))


def build_parser():
    p = argparse.ArgumentParser(prog="elecvar", description=__doc__)
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("respond", help="response matrix of a network")
    s.add_argument("network")
    s.set_defaults(fn=cmd_respond)

    s = sub.add_parser("mutate", help="star-triangle move on a network, braid move on a model")
    s.add_argument("file")
    s.add_argument("--site", help="interior vertex, or three edge indices like '0,1,2'")
    s.add_argument("--center", help="name of the new star vertex")
    s.add_argument("--at", type=int, help="1-based position of the braid pattern")
    s.set_defaults(fn=cmd_mutate)

    s = sub.add_parser("medial", help="medial wiring diagram of a network")
    s.add_argument("network")
    s.set_defaults(fn=cmd_medial)

    s = sub.add_parser("partition", help="boundary partition function M_B")
    s.add_argument("file", help="network JSON, model file, or conductance list of a standard graph")
    s.add_argument("--pathsum", action="store_true", help="use the path enumeration")
    s.set_defaults(fn=cmd_partition)

    s = sub.add_parser("convert", help="response matrix <-> boundary partition function")
    s.add_argument("matrix")
    s.add_argument("--to", choices=("mb", "mr"), required=True)
    s.set_defaults(fn=cmd_convert)

    s = sub.add_parser("invert", help="conductances of the standard graph from M_B")
    s.add_argument("matrix")
    s.set_defaults(fn=cmd_invert)

    s = sub.add_parser("verify", help="run a property suite")
    s.add_argument("suite", choices=sorted(SUITES) + ["all"])
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int)
    s.add_argument("--size", type=int)
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("evolve", help="apply generators r_j / s_i to a lattice")
    s.add_argument("lattice")
    s.add_argument("--word", required=True, help="e.g. 'r1 s2 r1'")
    s.set_defaults(fn=cmd_evolve)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        out = args.fn(args)
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except (ElecvarError, IndexError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    code = 0
    if isinstance(out, tuple):
        out, code = out
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
