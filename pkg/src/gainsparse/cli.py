"""Command-line front end.

Subcommands map onto the library one-to-one: check (sparsity verdicts,
single file or a directory of files), lift (write a symmetric cover as
text and DOT), construct / deconstruct (certificates), verify (replay a
certificate), dot (visualization).  Exit codes are part of the
contract: 0 success, 1 negative verdict (violation found or certificate
invalid), 2 usage or parse problem, 3 enumeration budget exceeded.
"""

import argparse
import os
import sys

from .errors import (UsageError, ParseError, CertificateError,
                     BudgetExceededError, PreconditionError,
                     InternalInvariantError)
from . import groups as G
from .graphs import parse_colored_graph, serialize_colored_graph, ColoredGraph
from .sparsity import (FAMILIES, CONE, CYLINDER, DEFAULT_BUDGET, Verdict,
                       verdict_line, check_colored_sparsity, underlying,
                       is_kl_sparse, is_kl_spanning, fundamental_circuit,
                       _run_game, _subset_violates, _minimize_witness)
from .lifts import (build_lift, cone_laman_via_lift, reduce_colors,
                    colored_graph_to_dot, lift_to_dot, lift_to_text)
from .henneberg import (CONSTRUCTIBLE, random_construct, deconstruct,
                        verify_certificate, parse_certificate,
                        serialize_certificate)


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (path, exc))


def _write(path, text):
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError("cannot write %s: %s" % (path, exc))


def _load_graph(path):
    return parse_colored_graph(_read(path))


def _odd_prime_cyclic(spec):
    return (spec.variant == G.CYCLIC and spec.moduli[0] % 2 == 1
            and G._is_prime(spec.moduli[0]))


def _lift_witness(g, family):
    """A minimal violating edge set for a graph whose lift check failed.

    The pebble run over the lift yields a circuit; its base edges are a
    set whose own lift is dependent, and stripping edges that are not
    needed for dependence leaves a minimal such set, which must itself
    break the count (were only a proper subset at fault, that subset's
    lift would already be dependent).  The result is double-checked
    against the count before being reported.
    """
    sg = build_lift(g)
    mg = sg.multigraph()
    _, accepted, rejected = _run_game(mg, 2, 3, stop_on_reject=True)
    circuit = fundamental_circuit(mg, (2, 3), accepted, rejected[0])
    keep = sorted({sg.edges[lid].base_eid for lid in circuit})
    # one ascending pass reaches a minimal dependent set: an edge kept
    # because removal broke dependence stays necessary as the set shrinks
    for eid in list(keep):
        if len(keep) == 1:
            break
        rest = [e for e in keep if e != eid]
        if not is_kl_sparse(build_lift(_induced(g, rest)).multigraph(), (2, 3)):
            keep = rest
    witness = frozenset(keep)
    if not _subset_violates(g, family, witness):
        raise InternalInvariantError(
            "projected lift circuit %r does not break the %s count"
            % (sorted(witness), family))
    return witness


def _induced(g, edge_ids):
    picked = [g.edge(e) for e in edge_ids]
    verts = sorted({v for e in picked for v in (e.tail, e.head)})
    return ColoredGraph(g.spec, verts,
                        [(e.id, e.tail, e.head, e.color) for e in picked])


def _disjoint_circuit_witness(g):
    """Cylinder witness when the colored counts pass mod p but the
    underlying graph is not (2,2)-spanning: two vertex-disjoint
    (2,2)-circuits whose union breaks the cylinder count.  Disjointness
    is forced, since inside a graph all of whose subsets meet the cone
    count a connected region carries at most one circuit."""
    umg = underlying(g)
    _, accepted, rejected = _run_game(umg, 2, 2)
    if len(rejected) < 2:
        raise InternalInvariantError(
            "spanning failed with %d rejected edges" % len(rejected))
    c1 = fundamental_circuit(umg, (2, 2), accepted, rejected[0])
    c2 = fundamental_circuit(umg, (2, 2), accepted, rejected[1])

    def span(c):
        return {v for eid in c for v in (g.edge(eid).tail, g.edge(eid).head)}

    if span(c1) & span(c2):
        raise InternalInvariantError("expected vertex-disjoint circuits")
    witness = _minimize_witness(g, CYLINDER, frozenset(c1 | c2))
    if not _subset_violates(g, CYLINDER, witness):
        raise InternalInvariantError("disjoint circuits do not break the count")
    return witness


def _check_lift(g, family):
    """Polynomial-time verdict via symmetric covers.  Only the cone and
    cylinder families have a lift characterization, and it decides
    tightness of graphs with m = 2n - 1 (for which sparse and tight
    coincide), so anything else is rejected as usage."""
    if family == CONE:
        if not _odd_prime_cyclic(g.spec):
            raise UsageError(
                "method=lift needs Z/p colors with p an odd prime, got %s" % g.spec)
        if cone_laman_via_lift(g):
            return Verdict(True, True, None)
        return Verdict(False, False, _lift_witness(g, CONE))
    if family == CYLINDER:
        if g.spec.variant != G.FREE1:
            raise UsageError("family cylinder expects Z colors, got %s" % g.spec)
        if g.m != 2 * g.n - 1:
            raise PreconditionError(
                "method=lift decides tightness and needs m = 2n - 1; "
                "got n=%d m=%d (use --method brute)" % (g.n, g.m))
        reduced, _ = reduce_colors(g)
        if not cone_laman_via_lift(reduced):
            witness = _lift_witness(reduced, CONE)
            if not _subset_violates(g, CYLINDER, witness):
                raise InternalInvariantError(
                    "reduced witness does not break the cylinder count")
            return Verdict(False, False, witness)
        if is_kl_spanning(underlying(g), (2, 2)):
            return Verdict(True, True, None)
        return Verdict(False, False, _disjoint_circuit_witness(g))
    raise UsageError(
        "method=lift supports families cone and cylinder, not %s" % family)


def _check_one(g, family, method, budget):
    if method == "lift":
        return _check_lift(g, family)
    return check_colored_sparsity(g, family, budget=budget)


def _cmd_check(args):
    if os.path.isdir(args.file):
        names = sorted(f for f in os.listdir(args.file) if not f.startswith("."))
        if not names:
            raise UsageError("no files in %s" % args.file)
        status = 0
        for name in names:
            g = _load_graph(os.path.join(args.file, name))
            v = _check_one(g, args.family, args.method, args.budget)
            print("%s: %s" % (name, verdict_line(v)))
            if not v.sparse:
                status = 1
        return status
    v = _check_one(_load_graph(args.file), args.family, args.method, args.budget)
    print(verdict_line(v))
    return 0 if v.sparse else 1


def _cmd_lift(args):
    sg = build_lift(_load_graph(args.file))
    _write(args.out + ".txt", lift_to_text(sg))
    _write(args.out + ".dot", lift_to_dot(sg))
    return 0


def _cmd_construct(args):
    cert = random_construct(args.family, args.steps, args.seed)
    _write(args.out, serialize_certificate(cert))
    return 0


def _cmd_deconstruct(args):
    cert = deconstruct(_load_graph(args.file), args.family)
    _write(args.out, serialize_certificate(cert))
    return 0


def _cmd_verify(args):
    try:
        g = verify_certificate(parse_certificate(_read(args.certificate)))
    except CertificateError as exc:
        print("invalid certificate: %s" % exc, file=sys.stderr)
        return 1
    print("valid: replays to n=%d m=%d" % (g.n, g.m))
    return 0


def _cmd_dot(args):
    g = _load_graph(args.file)
    if args.lift:
        _write(args.out, lift_to_dot(build_lift(g)))
    else:
        _write(args.out, colored_graph_to_dot(g))
    return 0


def _parser():
    ap = argparse.ArgumentParser(
        prog="gainsparse",
        description="Recognize, lift, construct and deconstruct "
                    "group-colored sparse graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="sparsity verdict for a graph file, "
                                     "or every file in a directory")
    p.add_argument("file", help="colored graph file, or a directory of them")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--method", choices=("brute", "lift"), default="brute")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="edge cap for brute subgraph enumeration "
                        "(default %(default)s)")
    p.set_defaults(run=_cmd_check)

    p = sub.add_parser("lift", help="write a symmetric cover as text and DOT")
    p.add_argument("file", help="colored graph file (finite group colors)")
    p.add_argument("out", help="output prefix; writes OUT.txt and OUT.dot")
    p.set_defaults(run=_cmd_lift)

    p = sub.add_parser("construct", help="random certificate for a family")
    p.add_argument("--family", required=True, choices=sorted(CONSTRUCTIBLE))
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("out", help="certificate file to write")
    p.set_defaults(run=_cmd_construct)

    p = sub.add_parser("deconstruct", help="strip a tight graph to a base "
                                           "and emit the certificate")
    p.add_argument("file", help="colored graph file")
    p.add_argument("--family", required=True, choices=sorted(CONSTRUCTIBLE))
    p.add_argument("out", help="certificate file to write")
    p.set_defaults(run=_cmd_deconstruct)

    p = sub.add_parser("verify", help="replay a certificate, checking "
                                      "every prefix")
    p.add_argument("certificate", help="certificate file")
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("dot", help="write a DOT rendering of a graph "
                                   "or its lift")
    p.add_argument("file", help="colored graph file")
    p.add_argument("out", help="DOT file to write")
    p.add_argument("--lift", action="store_true",
                   help="render the symmetric cover instead of the base")
    p.set_defaults(run=_cmd_dot)
    return ap


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        return args.run(args)
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print("error: %s (try --method lift)" % exc, file=sys.stderr)
        return 3
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
