"""Command-line front end: one process, one command, deterministic output.

Usage: ordcut VERB ARGS... [--json] [--seed INT] [--box INT]

Exit codes: 0 success, 1 syntax error, 2 domain error.
"""

import json
import sys

from .errors import DomainError, ParseError
from . import cuts
from . import dsl
from . import hahnomega
from . import lexgroups
from . import ordsets
from .hahnomega import OmegaGroup
from .lexgroups import ConvexSubgroup

_ORDER_NAMES = {-1: "less", 0: "equal", 1: "greater"}


class _Usage(Exception):
    pass


def _parse_flags(argv):
    args = []
    flags = {"json": False, "seed": 0, "box": 6}
    i = 0
    while i < len(argv):
        a = argv[i]
        if a == "--json":
            flags["json"] = True
        elif a in ("--seed", "--box") or a.startswith(("--seed=", "--box=")):
            if "=" in a:
                name, _, raw = a.partition("=")
            else:
                name = a
                i += 1
                if i >= len(argv):
                    raise _Usage("missing value for %s" % name)
                raw = argv[i]
            try:
                flags[name[2:]] = int(raw)
            except ValueError:
                raise _Usage("non-integer value for %s" % name)
        elif a.startswith("--"):
            raise _Usage("unknown flag %s" % a)
        else:
            args.append(a)
        i += 1
    return args, flags


def _need(args, count, usage):
    if len(args) != count:
        raise _Usage("expected: %s" % usage)


def _level(text):
    try:
        return int(text)
    except ValueError:
        raise _Usage("expected a level integer, got %r" % text)


def _inv_text(sub):
    if sub.index is None:
        return "zero"
    return "tail(%d)" % sub.index


def _is_omega(group):
    return isinstance(group, OmegaGroup)


def _run_classify(args, flags):
    _need(args, 2, "classify GROUP CUT")
    g = dsl.parse_group(args[0])
    if _is_omega(g):
        return {"type": hahnomega.omega_classify(dsl.parse_oanchor(args[1], g))}
    return {"type": cuts.classify(dsl.parse_cut(args[1], g))}


def _run_invariance(args, flags):
    _need(args, 2, "invariance GROUP CUT")
    g = dsl.parse_group(args[0])
    if _is_omega(g):
        a = dsl.parse_oanchor(args[1], g)
        return {"invariance": _inv_text(hahnomega.omega_invariance(a)),
                "index_cut": str(hahnomega.index_cut(a))}
    return {"invariance_level": cuts.invariance(dsl.parse_cut(args[1], g)).level}


def _run_member(args, flags):
    _need(args, 3, "member GROUP CUT ELEMENT")
    g = dsl.parse_group(args[0])
    if _is_omega(g):
        a = dsl.parse_oanchor(args[1], g)
        x = dsl.parse_oelement(args[2], g)
        return {"side": hahnomega.omega_member(a, x)}
    c = dsl.parse_cut(args[1], g)
    x = dsl.parse_element(args[2], g)
    return {"side": cuts.member(c, x)}


def _run_compare(args, flags):
    _need(args, 3, "compare GROUP A B")
    g = dsl.parse_group(args[0])
    if _is_omega(g):
        x = dsl.parse_oelement(args[1], g)
        y = dsl.parse_oelement(args[2], g)
        return {"order": _ORDER_NAMES[hahnomega.omega_compare(x, y)]}
    try:
        c1 = dsl.parse_cut(args[1], g)
        c2 = dsl.parse_cut(args[2], g)
        return {"order": _ORDER_NAMES[cuts.compare_cuts(c1, c2)]}
    except ParseError:
        x = dsl.parse_element(args[1], g)
        y = dsl.parse_element(args[2], g)
        return {"order": _ORDER_NAMES[lexgroups.lex_compare(x, y)]}


def _run_translate(args, flags):
    _need(args, 3, "translate GROUP CUT ELEMENT")
    g = dsl.parse_group(args[0])
    if _is_omega(g):
        a = dsl.parse_oanchor(args[1], g)
        x = dsl.parse_oelement(args[2], g)
        return {"result_anchor":
                dsl.print_oanchor(hahnomega.omega_translate(a, x))}
    c = dsl.parse_cut(args[1], g)
    x = dsl.parse_element(args[2], g)
    return {"result_cut": dsl.print_cut(cuts.translate(c, x))}


def _run_project(args, flags):
    _need(args, 3, "project GROUP CUT LEVEL")
    g = dsl.parse_group(args[0])
    c = dsl.parse_cut(args[1], g)
    theta = ConvexSubgroup(g, _level(args[2]))
    out = cuts.quotient_image(c, theta)
    return {"result_group": dsl.print_group(out.group),
            "result_cut": dsl.print_cut(out)}


def _run_trace(args, flags):
    _need(args, 3, "trace GROUP CUT LEVEL")
    g = dsl.parse_group(args[0])
    c = dsl.parse_cut(args[1], g)
    theta = ConvexSubgroup(g, _level(args[2]))
    out = cuts.trace(c, theta)
    return {"result_group": dsl.print_group(out.group),
            "result_cut": dsl.print_cut(out)}


def _run_transport(args, flags):
    _need(args, 4, "transport GROUP CUT LEVEL1 LEVEL2")
    g = dsl.parse_group(args[0])
    c = dsl.parse_cut(args[1], g)
    t1 = ConvexSubgroup(g, _level(args[2]))
    t2 = ConvexSubgroup(g, _level(args[3]))
    out = cuts.transport(c, t1, t2)
    return {"result_group": dsl.print_group(out.group),
            "result_cut": dsl.print_cut(out),
            "invariance_level": cuts.invariance(out).level}


def _run_bounds(args, flags):
    _need(args, 3, "bounds GROUP CUT ELEMENT")
    g = dsl.parse_group(args[0])
    c = dsl.parse_cut(args[1], g)
    x = dsl.parse_element(args[2], g)
    pm, fm, pp, fp = cuts.interval_bounds(c, x)
    return {"psi_minus": pm.level, "phi_minus": fm.level,
            "psi_plus": pp.level, "phi_plus": fp.level}


def _run_push(args, flags):
    _need(args, 3, "push GROUP MORPHISM CUT")
    g = dsl.parse_group(args[0])
    m = dsl.parse_morphism(args[1], g)
    c = dsl.parse_cut(args[2], g)
    return {"result_group": dsl.print_group(m.cod),
            "lower": dsl.print_cut(cuts.push_lower(m, c)),
            "upper": dsl.print_cut(cuts.push_upper(m, c))}


def _run_pull(args, flags):
    _need(args, 3, "pull GROUP MORPHISM CUT")
    g = dsl.parse_group(args[0])
    m = dsl.parse_morphism(args[1], g)
    c = dsl.parse_cut(args[2], m.cod)
    out = cuts.pull(m, c)
    return {"result_group": dsl.print_group(m.dom),
            "result_cut": dsl.print_cut(out),
            "invariance_level": cuts.invariance(out).level}


def _run_skeleton(args, flags):
    _need(args, 1, "skeleton GROUP")
    g = dsl.parse_group(args[0])
    if _is_omega(g):
        return {"size": "omega", "factors": dsl.print_factor(g.factor)}
    chain, factors = lexgroups.skeleton(g)
    return {"size": chain.size,
            "factors": ",".join(dsl.print_factor(k) for k in factors)}


def _run_embed(args, flags):
    _need(args, 2, "embed GROUP ELEMENT")
    g = dsl.parse_group(args[0])
    x = dsl.parse_element(args[1], g)
    hull, m = lexgroups.divisible_hull(g)
    image = lexgroups.hahn_embed(m.apply(x))
    return {"image": "[%s]" % ",".join(dsl.print_scalar(c) for c in image)}


def _run_convex_subgroups(args, flags):
    _need(args, 1, "convex-subgroups GROUP")
    g = dsl.parse_group(args[0])
    subs = lexgroups.convex_subgroups(g)
    return {"levels": ",".join(str(s.level) for s in subs),
            "principal": ",".join(str(s.level) for s in subs
                                  if lexgroups.is_principal(s))}


def _run_discreteness(args, flags):
    _need(args, 1, "discreteness GROUP")
    g = dsl.parse_group(args[0])
    disc, disc_ord, least = lexgroups.discreteness(g)
    return {"discrete": "true" if disc else "false",
            "discretely_ordered": "true" if disc_ord else "false",
            "min_positive": dsl.print_element(least) if least else "none"}


def _run_hull(args, flags):
    _need(args, 1, "hull GROUP")
    g = dsl.parse_group(args[0])
    hull, _ = lexgroups.divisible_hull(g)
    return {"result_group": dsl.print_group(hull)}


def _run_orders(args, flags):
    _need(args, 1, "orders SIZE")
    n = _level(args[0])
    if n < 0:
        raise DomainError("chain size must be nonnegative")
    chain = ordsets.FiniteChain(n)
    segs = ordsets.all_segments(chain)
    bounds = []
    for s in segs:
        lo, hi = ordsets.cut_bounds(s)
        bounds.append("(%s,%s)" % ("-" if lo is None else lo,
                                   "-" if hi is None else hi))
    return {"count": len(segs),
            "cutoffs": ",".join(str(s.cutoff) for s in segs),
            "bounds": ",".join(bounds)}


_VERBS = {
    "classify": _run_classify,
    "invariance": _run_invariance,
    "member": _run_member,
    "compare": _run_compare,
    "translate": _run_translate,
    "project": _run_project,
    "trace": _run_trace,
    "transport": _run_transport,
    "bounds": _run_bounds,
    "push": _run_push,
    "pull": _run_pull,
    "skeleton": _run_skeleton,
    "embed": _run_embed,
    "convex-subgroups": _run_convex_subgroups,
    "discreteness": _run_discreteness,
    "hull": _run_hull,
    "orders": _run_orders,
}


def main(argv=None, out=None, err=None):
    if argv is None:
        argv = sys.argv[1:]
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args, flags = _parse_flags(argv)
        if not args:
            raise _Usage("expected: VERB GROUP ARGS... "
                         "[--json] [--seed INT] [--box INT]")
        verb, rest = args[0], args[1:]
        if verb not in _VERBS:
            raise _Usage("unknown verb %r" % verb)
        result = _VERBS[verb](rest, flags)
    except (_Usage, ParseError) as e:
        print("syntax error: %s" % e, file=err)
        return 1
    except DomainError as e:
        msg = str(e)
        if e.payload is not None:
            msg += " (witness: %s)" % dsl.print_element(e.payload)
        print("domain error: %s" % msg, file=err)
        return 2
    if flags["json"]:
        print(json.dumps(result), file=out)
    else:
        for key, value in result.items():
            print("%s: %s" % (key, value), file=out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
