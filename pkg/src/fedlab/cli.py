"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
exceeded.  Errors are emitted as one JSON object on stderr.  All rationals
are serialized as 'p/q' strings; identical invocations produce
byte-identical output.
"""

import argparse
import json
import sys

from . import engine, fixtures, game, graphs
from .errors import FedlabError, SizeLimitExceededError
from .rational import Rat, format_rat, parse_rat

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(FedlabError):
    pass


def _emit_error(kind, message):
    sys.stderr.write(json.dumps({"error": kind, "detail": str(message)}) + "\n")


def _write_json(doc, path):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_graph(path):
    text = _read_text(path)
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graphs.from_json_dict(json.loads(text))
    return graphs.parse_edge_list(text)


def cmd_gen(args):
    family = args.family
    params = list(args.params)
    if family == "tree":
        if len(params) != 1:
            raise UsageError("gen tree takes one parameter (n) plus --seed")
        params.append(args.seed)
    g = graphs.generate(graphs.ClassTag(family, tuple(params)))
    _write_json(graphs.to_json_dict(g), args.output)
    return EXIT_OK


def cmd_gamma_f(args):
    g = _load_graph(args.graph)
    value, witness = engine.gamma_f(g)
    sys.stdout.write(f"gamma_f = {format_rat(value)}\n")
    if args.output:
        _write_json(witness.to_json_dict(), args.output)
    return EXIT_OK


def cmd_bigf(args):
    g = _load_graph(args.graph)
    value, vertex = engine.big_F(g)
    sys.stdout.write(f"F = {format_rat(value)} (attained at vertex {vertex})\n")
    if args.output:
        _, witness = engine.f_value(g, vertex)
        _write_json(
            {"vertex": vertex, "witness": witness.to_json_dict()}, args.output
        )
    return EXIT_OK


def cmd_solve_a(args):
    g = _load_graph(args.graph)
    value, cert = engine.solve_program_A(g, budget=args.budget)
    sys.stdout.write(f"program_A = {format_rat(value)}\n")
    _write_json(cert.to_json_dict(), args.output)
    return EXIT_OK


def cmd_bounds(args):
    g = _load_graph(args.graph)
    report = engine.bounds(g, include_lp_a=args.lp_a)
    for entry in report.lower:
        rel = ">" if entry.strict else ">="
        sys.stdout.write(f"lower {rel} {format_rat(entry.value)}  [{entry.kind}]\n")
    for entry in report.upper:
        rel = "<" if entry.strict else "<="
        sys.stdout.write(f"upper {rel} {format_rat(entry.value)}  [{entry.kind}]\n")
    sys.stdout.write(
        f"best: [{format_rat(report.best_lower)}, {format_rat(report.best_upper)}]\n"
    )
    if report.exact is not None:
        sys.stdout.write(f"exact = {format_rat(report.exact)}\n")
    if args.output:
        _write_json(report.to_json_dict(), args.output)
    return EXIT_OK


def cmd_closed_form(args):
    g = _load_graph(args.graph)
    cf = engine.closed_form_fed(g)
    if cf is None:
        sys.stdout.write("no closed form\n")
    elif cf.exact is not None:
        sys.stdout.write(f"exact = {format_rat(cf.exact)}  [{cf.reason}]\n")
    else:
        sys.stdout.write(f"interval = {cf.interval}  [{cf.reason}]\n")
    return EXIT_OK


def _make_defender(args, graph):
    name = args.defender.replace("_", "-")
    if name == "lp-online":
        return game.LpOnlineDefender()
    if name == "table":
        if not args.cert:
            raise UsageError("table defender needs --cert")
        doc = json.loads(_read_text(args.cert))
        cert = engine.StrategyCertificate.from_json_dict(doc, graph)
        return game.TableDefender(cert)
    if name == "connectivity-uniform":
        return game.ConnectivityUniformDefender()
    if name == "double-gamma-f":
        return game.DoubleGammaFDefender()
    if name == "kneser-canonical":
        tag = graph.tag
        if tag is None or tag.family != "kneser" or tag.params[1] != 2:
            raise UsageError("kneser-canonical needs a kneser(n, 2) graph")
        return game.KneserCanonicalDefender(tag.params[0])
    raise UsageError(f"unknown defender {args.defender!r}")


def _make_attacker(args, graph):
    name = args.attacker.replace("_", "-")
    if name == "random":
        return game.RandomAttacker(args.seed)
    if name == "greedy":
        return game.GreedyAttacker()
    if name.startswith("scripted:"):
        seq = [int(tok) for tok in name.split(":", 1)[1].split(",") if tok]
        return game.ScriptedAttacker(seq)
    if name == "ladder-sweep":
        return game.ladder_sweep(graph)
    if name == "path-sweep":
        return game.path_sweep(graph)
    if name == "cycle-sweep":
        return game.cycle_sweep(graph)
    raise UsageError(f"unknown attacker {args.attacker!r}")


def cmd_simulate(args):
    g = _load_graph(args.graph)
    defender = _make_defender(args, g)
    attacker = _make_attacker(args, g)
    total = parse_rat(args.total) if args.total else None
    initial = defender.initial_state(g, total=total)
    transcript = game.simulate(
        g,
        defender,
        attacker,
        args.rounds,
        initial,
        validate_initial=not args.allow_invalid_initial,
    )
    sys.stdout.write(transcript.outcome + "\n")
    if args.output:
        _write_json(transcript.to_json_dict(), args.output)
    return EXIT_OK


def cmd_verify(args):
    g = _load_graph(args.graph)
    doc = json.loads(_read_text(args.certificate))
    cert = engine.StrategyCertificate.from_json_dict(doc, g)
    report = game.verify_certificate(g, cert)
    for violation in report.violations:
        sys.stdout.write(f"violation: {violation}\n")
    sys.stdout.write("ok\n" if report.ok else "FAILED\n")
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_fixture(args):
    cert = fixtures.load_fixture(args.name)
    _write_json(cert.to_json_dict(), args.output)
    return EXIT_OK


_HYPERCUBE_GAMMA = {
    1: "1", 2: "2", 3: "2", 4: "4", 5: "7", 6: "12", 7: "16", 8: "32",
    9: "62", 10: "[107,120]",
}


def cmd_table(args):
    if args.which != "hypercube":
        raise UsageError("only 'table hypercube' is available")
    sys.stdout.write("d\tgamma\tfed\n")
    for d in range(1, args.max_d + 1):
        lo = Rat(1 << d, d + 1)
        hi = Rat((1 << d) + d, d + 1)
        if (d + 1) & d == 0:
            fed = format_rat(lo)
        else:
            fed = f"[{format_rat(lo)},{format_rat(hi)}]"
        gam = _HYPERCUBE_GAMMA.get(d, "?")
        sys.stdout.write(f"{d}\t{gam}\t{fed}\n")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fedlab",
        description="Exact fractional eternal domination toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph family member")
    p.add_argument("family", choices=sorted(graphs.FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    for name, func, helptext in [
        ("gamma-f", cmd_gamma_f, "minimum fractional dominating weight"),
        ("bigf", cmd_bigf, "max over vertices of the pinned LP"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("graph")
        p.add_argument("-o", "--output", default=None)
        p.set_defaults(func=func)

    p = sub.add_parser("solve-a", help="n-state strategy LP (exact)")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_solve_a)

    p = sub.add_parser("bounds", help="all bounds with witnesses")
    p.add_argument("graph")
    p.add_argument("--lp-a", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("closed-form", help="closed-form value or interval")
    p.add_argument("graph")
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("simulate", help="run the attack/defense game")
    p.add_argument("graph")
    p.add_argument("--defender", required=True)
    p.add_argument("--attacker", required=True)
    p.add_argument("--rounds", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--total", default=None, help="initial total as p/q")
    p.add_argument("--cert", default=None)
    p.add_argument("--allow-invalid-initial", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="check a strategy certificate")
    p.add_argument("certificate", help="certificate JSON path or '-' for stdin")
    p.add_argument("graph")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fixture", help="dump a built-in certificate")
    p.add_argument("name", help=", ".join(fixtures.FIXTURE_NAMES))
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_fixture)

    p = sub.add_parser("table", help="reproduce a numeric table")
    p.add_argument("which")
    p.add_argument("--max-d", type=int, default=10)
    p.set_defaults(func=cmd_table)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except SizeLimitExceededError as exc:
        _emit_error("budget-exceeded", exc)
        return EXIT_BUDGET
    except UsageError as exc:
        _emit_error("usage", exc)
        return EXIT_USAGE
    except (FedlabError, ValueError, OSError, json.JSONDecodeError) as exc:
        _emit_error("error", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
