"""Command-line entry point: ``hwweights <command> <type> [options]``.

Exit codes: 0 success, 1 parse or input error, 2 disagreement or failed
check, 3 cap exceeded, 4 character formula hypothesis fails, 5 minmax
hypothesis violated.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__, _exact, config
from .errors import CapExceeded, HypothesisFailure, InternalInconsistency, InvalidInput
from .hwmodule import (HWModuleDescriptor, ParabolicVerma, Simple, Verma, formulas_agree,
                       integrability_set, simply_regular, weight_set)
from .rootsys import RootSystem, Weight, root_system

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DISAGREE = 2
EXIT_CAP = 3
EXIT_WCF = 4
EXIT_MINMAX = 5


class _ParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ParseError(message)


# -- parsing ----------------------------------------------------------------------

def parse_lambda(R: RootSystem, text: str) -> Weight:
    parts = [p for p in text.split(",")]
    if len(parts) != R.rank:
        raise InvalidInput(f"{R.name} has rank {R.rank}; got {len(parts)} coordinates in {text!r}")
    try:
        return R.weight(_exact.parse_rational(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"cannot parse lambda {text!r}: {exc}") from None


def parse_index_list(R: RootSystem, text: str) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        idx = [int(t) for t in text.split(",")]
    except ValueError:
        raise InvalidInput(f"cannot parse index list {text!r}") from None
    return R.check_subset(idx)


def parse_class(lam: Weight, text: str) -> HWModuleDescriptor:
    t = text.strip().lower()
    if t == "verma":
        return Verma(lam)
    if t == "simple":
        return Simple(lam)
    if t.startswith("pverma"):
        rest = t[len("pverma"):]
        if rest and not rest.startswith(":"):
            raise InvalidInput(f"module class {text!r}: use pverma:J with J like 1,3")
        return ParabolicVerma(lam, parse_index_list(lam.system, rest[1:]))
    raise InvalidInput(f"unknown module class {text!r}; use verma, simple or pverma:J")


def _fix_negative_values(argv: Sequence[str]) -> list[str]:
    # "--lambda -1/2" would otherwise be read as an unknown option
    out = list(argv)
    for i in range(len(out) - 1):
        if out[i] in ("--lambda", "-l") and out[i + 1].startswith("-"):
            out[i] = f"{out[i]}={out[i + 1]}" if out[i] == "--lambda" else f"--lambda={out[i + 1]}"
            out[i + 1] = None
    return [a for a in out if a is not None]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hwweights", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"hwweights {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(sp, depth_default, needs_lambda=True, with_class=True):
        sp.add_argument("type", help="root system, e.g. A2, B3, G2, A1xA1")
        if needs_lambda:
            sp.add_argument("--lambda", "-l", dest="lam", required=True,
                            help="highest weight in the fundamental basis, e.g. 2,-3/2")
        if with_class:
            sp.add_argument("--class", dest="cls", default="simple",
                            help="verma | simple | pverma:J (J like 1,3)")
        sp.add_argument("--depth", type=int, default=depth_default)
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--output", "-o", default=None, help="write the report here")

    sp = sub.add_parser("roots", help="Cartan matrix and positive roots")
    common(sp, 0, needs_lambda=False, with_class=False)

    sp = sub.add_parser("weights", help="truncated weight set by formulas A, B, C")
    common(sp, 5)
    sp.add_argument("--formulas", default="A,B,C", help="subset of A,B,C")

    sp = sub.add_parser("hull", help="V- and H-representation of the convex hull")
    common(sp, 5)
    sp.add_argument("--off", default=None, help="also write an OFF file (rank 2 or 3)")
    sp.add_argument("--box", type=int, default=3, help="clipping box for --off")

    sp = sub.add_parser("faces", help="faces of the hull with (w, J) labels")
    common(sp, 5)
    sp.add_argument("--no-certify", action="store_true", help="skip LP certificates")

    sp = sub.add_parser("character", help="truncated character of L(lambda)")
    common(sp, 5, with_class=False)
    sp.add_argument("--check-oracle", action="store_true",
                    help="compare against Gram-matrix ranks")

    sp = sub.add_parser("verify", help="seeded property sweep")
    common(sp, 5, needs_lambda=False, with_class=False)
    sp.add_argument("--samples", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("minmax", help="hull, stabilizer and parabolic equivalences")
    common(sp, 0, with_class=False)
    sp.add_argument("--jprime", action="append", default=None,
                    help="target J' (repeatable; empty string for the empty set)")
    return p


# -- commands ---------------------------------------------------------------------

def _header(args, R: RootSystem) -> dict:
    job = {"command": args.command, "type": R.name}
    for key in ("lam", "cls", "formulas", "samples", "seed", "jprime", "check_oracle", "box"):
        if hasattr(args, key) and getattr(args, key) is not None:
            job["lambda" if key == "lam" else "class" if key == "cls" else key] = getattr(args, key)
    return {"tool": "hwweights", "version": __version__, "job": job, "depth": args.depth}


def _cmd_roots(args, R):
    rep = _header(args, R)
    rep["system"] = R.to_json()
    text = [f"{R.name}: rank {R.rank}, {len(R.positive_roots)} positive roots",
            "cartan: " + "; ".join(" ".join(str(x) for x in row) for row in R.cartan)]
    text += [" ".join(str(x) for x in b) for b in R.positive_roots]
    return EXIT_OK, rep, text


def _cmd_weights(args, R):
    lam = parse_lambda(R, args.lam)
    m = parse_class(lam, args.cls)
    which = [f.strip().upper() for f in args.formulas.split(",") if f.strip()]
    if not which or any(f not in "ABC" for f in which):
        raise InvalidInput(f"--formulas must list A, B or C, got {args.formulas!r}")
    r = formulas_agree(m, args.depth, which)
    rep = _header(args, R)
    rep["result"] = r.to_json()
    first = r.sets[which[0]]
    text = [f"{m} depth {args.depth}: {len(first)} weights; formulas {','.join(which)} "
            + ("agree" if r.agree else "DISAGREE")]
    for k in first.sorted_offsets():
        text.append(f"  offset {list(k)}  weight {lam.minus_root_offset(k)}")
    for key, offs in r.differences().items():
        text.append(f"  differ {key}: {[list(o) for o in offs]}")
    return (EXIT_OK if r.agree else EXIT_DISAGREE), rep, text


def _cmd_hull(args, R):
    from .geometry import contains
    from .polyhedron import (canonical_hull, extremal_rays_at_vertex, hull_h_rep, off_dump,
                             weyl_stabilizer_is)
    lam = parse_lambda(R, args.lam)
    m = parse_class(lam, args.cls)
    p = canonical_hull(m)
    h = hull_h_rep(m)
    st = weyl_stabilizer_is(m)
    rays = extremal_rays_at_vertex(m, lam)
    sample = weight_set(m, args.depth, "B")
    inside = all(contains(h, w.root_coords()) for w in sample.weights())
    rep = _header(args, R)
    rep["coordinates"] = "simple roots"
    rep["module"] = m.to_json()
    rep["integrability_set"] = sorted(integrability_set(m))
    rep["v_rep"] = p.to_json()
    rep["h_rep"] = h.to_json()
    rep["stabilizer"] = st.to_json()
    rep["extremal_rays_at_lambda"] = [list(r) for r in rays]
    rep["extremal_rays_asserted"] = simply_regular(lam)
    rep["weights_inside_hull"] = {"checked": len(sample), "all_inside": inside}
    if args.off:
        with open(args.off, "w") as fh:
            fh.write(off_dump(m, args.box))
        rep["off_file"] = args.off
    text = [f"{m}: {len(p.vertices)} vertices, {len(p.rays)} extreme rays, "
            f"{len(h.inequalities)} facets (simple-root coordinates)"]
    text += ["  vertex " + " ".join(_exact.fmt(x) for x in v) for v in p.vertices]
    text += ["  ray    " + " ".join(str(x) for x in r) for r in p.rays]
    text += [f"  {' '.join(_exact.fmt(a) for a in q.normal)} . x <= {_exact.fmt(q.offset)}"
             for q in h.inequalities]
    text += [f"  {' '.join(_exact.fmt(a) for a in q.normal)} . x == {_exact.fmt(q.offset)}"
             for q in h.equalities]
    text.append(f"stabilizer: J = {sorted(st.J)}, order {len(st.elements)}, "
                f"parabolic {st.is_parabolic}")
    text.append(f"unbounded edges at lambda: {[list(r) for r in rays]}")
    text.append(f"weights to depth {args.depth} inside hull: {inside}")
    return (EXIT_OK if inside else EXIT_DISAGREE), rep, text


def _cmd_faces(args, R):
    from .polyhedron import faces, geometric_face_count
    lam = parse_lambda(R, args.lam)
    m = parse_class(lam, args.cls)
    fl = faces(m, args.depth, certify=not args.no_certify)
    geo = geometric_face_count(m)
    rep = _header(args, R)
    rep["module"] = m.to_json()
    rep["faces"] = [f.to_json() for f in fl]
    rep["face_count"] = len(fl)
    rep["geometric_face_count"] = geo
    rep["counts_match"] = len(fl) == geo
    text = [f"{m}: {len(fl)} faces from (w, J) labels, {geo} from the H-representation"]
    for f in fl:
        labels = ", ".join(f"({w.word_string()}, {sorted(J)})" for w, J in f.labels)
        text.append(f"  dim {f.dimension}: {len(f.realization.vertices)} vertices, "
                    f"{len(f.realization.rays)} rays; labels {labels}")
    return (EXIT_OK if len(fl) == geo else EXIT_DISAGREE), rep, text


def _cmd_character(args, R):
    from .character import wcf_character
    from .oracle import oracle_weight_support
    lam = parse_lambda(R, args.lam)
    ch = wcf_character(lam, args.depth)
    rep = _header(args, R)
    rep["character"] = ch.to_json()
    code = EXIT_OK
    text = [f"ch L({lam}) to depth {args.depth}: total {ch.total()}"]
    for k in sorted(ch.coefficients, key=lambda k: (sum(k), k)):
        text.append(f"  offset {list(k)}  weight {lam.minus_root_offset(k)}  mult {ch[k]}")
    if args.check_oracle:
        orc = oracle_weight_support(lam, args.depth)
        agree = orc.entries == ch.coefficients
        rep["oracle"] = {"agree": agree, "multiplicities": orc.to_json()}
        text.append(f"oracle (Gram ranks): {'agrees' if agree else 'DISAGREES'}")
        if not agree:
            code = EXIT_DISAGREE
    return code, rep, text


def _cmd_verify(args, R):
    from .verify import run_sweep
    if args.samples < 0:
        raise InvalidInput("--samples must be nonnegative")
    sweep = run_sweep(R, args.samples, args.seed, args.depth)
    rep = _header(args, R)
    rep["sweep"] = sweep.to_json()
    width = max((len(p) for p in sweep.checked), default=8)
    text = [f"{R.name}: {args.samples} samples, seed {args.seed}, depth {args.depth}"]
    for p in sorted(sweep.checked):
        text.append(f"  {p:<{width}}  {sweep.passed[p]:>4}/{sweep.checked[p]:<4}")
    for f in sweep.failures:
        text.append(f"FAIL {f.prop}: hwweights {f.reproducer}  {f.detail}")
    text.append("all properties pass" if sweep.ok else f"{len(sweep.failures)} failures")
    if not sweep.ok:
        first = sweep.failures[0]
        print(f"reproducer: hwweights {first.reproducer}", file=sys.stderr)
    return (EXIT_OK if sweep.ok else EXIT_DISAGREE), rep, text


def _cmd_minmax(args, R):
    from .polyhedron import minmax_equivalences
    from .weyl import j_lambda
    lam = parse_lambda(R, args.lam)
    targets = None
    if args.jprime is not None:
        targets = [parse_index_list(R, t) for t in args.jprime]
    rows = minmax_equivalences(lam, targets)
    ok = all(r.equivalent for r in rows)
    rep = _header(args, R)
    rep["J_lambda"] = sorted(j_lambda(lam))
    rep["simply_regular"] = simply_regular(lam)
    rep["rows"] = [r.to_json() for r in rows]
    rep["equivalences_hold"] = ok
    rep["statement_4"] = "not machine-checked"
    text = [f"minmax for {lam} in {R.name}: J_lambda = {sorted(j_lambda(lam))}, "
            f"simply-regular {simply_regular(lam)}"]
    for r in rows:
        text.append(f"  J'={sorted(r.target)!s:<10} {r.descriptor.label():<12} "
                    f"hull={int(r.hull_equal)} stab={int(r.stabilizer_equal)} "
                    f"parabolic={int(r.largest_parabolic_equal)} "
                    f"{'ok' if r.equivalent else 'NOT EQUIVALENT'}")
    text.append("statement (4) not machine-checked")
    return (EXIT_OK if ok else EXIT_DISAGREE), rep, text


COMMANDS = {
    "roots": _cmd_roots,
    "weights": _cmd_weights,
    "hull": _cmd_hull,
    "faces": _cmd_faces,
    "character": _cmd_character,
    "verify": _cmd_verify,
    "minmax": _cmd_minmax,
}


def _emit(args, rep: dict, text: list[str]) -> None:
    if args.format == "json":
        out = json.dumps(rep, indent=2, sort_keys=True) + "\n"
    else:
        out = "\n".join([f"hwweights {__version__} | depth {args.depth}"] + text) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_fix_negative_values(argv))
    except _ParseError as exc:
        print(f"hwweights: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.depth < 0:
            raise InvalidInput("--depth must be nonnegative")
        R = root_system(args.type)
        code, rep, text = COMMANDS[args.command](args, R)
    except CapExceeded as exc:
        print(f"hwweights: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except HypothesisFailure as exc:
        print(f"hwweights: hypothesis fails: {exc}", file=sys.stderr)
        return EXIT_MINMAX if args.command == "minmax" else EXIT_WCF
    except InternalInconsistency as exc:
        print(f"hwweights: internal check failed: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except (InvalidInput, ValueError) as exc:
        print(f"hwweights: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    _emit(args, rep, text)
    return code


if __name__ == "__main__":
    sys.exit(main())
