"""Command-line interface.

Exit status: 0 success, 1 a verification ran and failed, 2 input error,
3 degenerate parameters.  Diagnostics go to stderr as one line of the form
``error: <kind>: <message>``.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import linalg
from .combinatorics import Bipartition, partition
from .diagram import DiagramError, Morphism, parse_dsl, parse_word
from .ring import SYMBOLIC, DegenerateParameterError, DomainError, ParamProfile, Specialized

SCHEMA_VERSION = 1


class InputError(ValueError):
    pass


class CheckFailed(Exception):
    pass


# ------------------------------------------------------------- helpers

def _fraction(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}") from exc


def _partition_arg(s: Optional[str]):
    if s is None or s.strip() in ("", "()", "0", "-"):
        return ()
    try:
        return partition(int(x) for x in s.replace(" ", ",").split(",") if x)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _bipartition(args) -> Bipartition:
    return Bipartition(_partition_arg(args.up), _partition_arg(args.down))


def _domain(args, symbolic_default: bool):
    if args.symbolic:
        if args.q is not None or args.t is not None:
            raise InputError("--symbolic cannot be combined with --q/--t")
        return SYMBOLIC
    if symbolic_default and args.q is None and args.t is None:
        return SYMBOLIC
    q0 = args.q if args.q is not None else Fraction(2)
    t0 = args.t if args.t is not None else Fraction(3)
    return Specialized(ParamProfile(q0, t0, args.guard))


def _specialized(args):
    dom = _domain(args, symbolic_default=False)
    if dom is SYMBOLIC:
        raise DomainError(f"{args.command} needs a rational parameter point")
    return dom


def _read_source(args, allow_empty: bool = False) -> Optional[str]:
    given = [s for s in (args.file, args.inline) if s is not None]
    if args.stdin:
        given.append("-")
    if len(given) > 1:
        raise InputError("give exactly one of --file, --inline, --stdin")
    if not given:
        if allow_empty:
            return None
        raise InputError("no input: give --file, --inline or --stdin")
    if args.stdin:
        return sys.stdin.read()
    if args.file is not None:
        try:
            with open(args.file, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc.strerror}") from exc
    return args.inline.replace(";", "\n")


def _ints(s: str) -> List[int]:
    try:
        return [int(x) for x in s.replace(",", " ").split()]
    except ValueError as exc:
        raise InputError(f"expected integers, got {s!r}") from exc


def _fmt_scalar(dom, x) -> str:
    return dom.fmt(x)


def _domain_json(dom):
    if dom is SYMBOLIC:
        return {"kind": "symbolic"}
    p = dom.profile
    return {"kind": "specialized", "q": str(p.q0), "t": str(p.t0), "guard": p.guard}


def _matrix_text(m) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in m)


# ---------------------------------------------------------- subcommands

def cmd_homfly(args):
    from .diagram import from_braid
    from .skein import homfly
    dom = _domain(args, symbolic_default=True)
    picked = [x for x in (args.braid, args.pd) if x is not None]
    text = _read_source(args, allow_empty=bool(picked))
    if len(picked) + (text is not None) != 1:
        raise InputError("give exactly one of --braid, --pd, --file, --inline, --stdin")
    if args.braid is not None:
        gens = _ints(args.braid)
        if any(g == 0 for g in gens):
            raise InputError("braid generators are nonzero integers")
        strands = args.strands if args.strands is not None else max([abs(g) for g in gens] + [0]) + 1
        if any(abs(g) >= strands for g in gens):
            raise InputError(f"generator out of range for {strands} strands")
        link = from_braid(gens, strands)
    elif args.pd is not None:
        link = args.pd
    else:
        link = parse_dsl(text)
    value = homfly(link, dom)
    return {"value": dom.to_json(value), "text": dom.fmt(value)}, dom.fmt(value)


def cmd_nf(args):
    from .skein import normal_form
    dom = _domain(args, symbolic_default=True)
    d = parse_dsl(_read_source(args))
    nf = normal_form(Morphism.from_diagram(d, dom))
    lines = []
    for m, c in nf.items():
        pairs = " ".join(f"{s['side'][0].upper()}{s['index']}->{t['side'][0].upper()}{t['index']}"
                         for s, t in m.describe())
        lines.append(f"({dom.fmt(c)}) [{pairs}]")
    return {"expansion": nf.to_json()}, "\n".join(lines) or "0"


def cmd_dim(args):
    from .skein import dim_hom
    a, b = parse_word(args.src), parse_word(args.dst)
    d = dim_hom(a, b)
    return {"from": a, "to": b, "dim": d}, str(d)


def cmd_gram(args):
    from .skein import gram_matrix
    dom = _specialized(args)
    a, b = parse_word(args.src), parse_word(args.dst)
    g = gram_matrix(a, b, dom)
    r = linalg.rank(g) if g else 0
    text = f"rank {r} of {len(g)}" + ("\n" + _matrix_text(g) if g else "")
    return {"from": a, "to": b, "rank": r, "size": len(g), "matrix": linalg.to_json(g)}, text


def cmd_hecke(args):
    from .hecke import HeckeElement, jm_L, young_idempotent
    modes = [x is not None for x in (args.word, args.idempotent, args.jm)]
    if sum(modes) != 1:
        raise InputError("give exactly one of --word, --idempotent, --jm")
    if args.idempotent is not None:
        lam = _partition_arg(args.idempotent)
        dom = _specialized(args)
        if args.max_len is not None and sum(lam) > args.max_len:
            raise InputError("partition larger than --max-len")
        h = young_idempotent(lam, dom)
    else:
        dom = _domain(args, symbolic_default=True)
        if args.r is None:
            raise InputError("--r is required")
        if args.jm is not None:
            if not 1 <= args.jm <= args.r:
                raise InputError("--jm index out of range")
            from .hecke import embed
            h = embed(jm_L(args.jm, dom), args.r) if args.jm < args.r else jm_L(args.r, dom)
        else:
            word = _ints(args.word)
            try:
                h = HeckeElement.word(word, args.r, dom)
            except ValueError as exc:
                raise InputError(str(exc)) from exc
    return {"element": h.to_json(), "text": repr(h)}, repr(h)


def cmd_jm_spec(args):
    from .jmspec import candidate_colors, jm_matrices, simultaneous_spaces, spectrum
    from .skein import enumerate_matchings
    dom = _specialized(args)
    a = parse_word(args.word)
    limit = args.max_len if args.max_len is not None else 4
    if len(a) > limit:
        raise InputError(f"word longer than --max-len {limit}")
    mats = jm_matrices(a, a, dom)
    dim = len(enumerate_matchings(a, a))
    values = [v for _, v in candidate_colors(len(a), dom)]
    spectra = [sorted(spectrum(m, values).items()) for m in mats]
    spaces = simultaneous_spaces(mats, values, dim)
    ranks = sorted(((k, len(v)) for k, v in spaces.items()), key=lambda kv: [str(x) for x in kv[0]])
    out = {
        "word": a,
        "dim": dim,
        "spectra": [{"position": i + 1, "eigenvalues": [[str(v), k] for v, k in sp]}
                    for i, sp in enumerate(spectra)],
        "idempotents": [{"colors": [str(x) for x in k], "rank": n} for k, n in ranks],
    }
    lines = [f"dim {dim}"]
    for i, sp in enumerate(spectra):
        lines.append(f"X{i + 1}: " + ", ".join(f"{v}^{k}" for v, k in sp))
    for k, n in ranks:
        lines.append("(" + ", ".join(str(x) for x in k) + f") rank {n}")
    return out, "\n".join(lines)


def cmd_k0(args):
    from .repcalc import k0_class
    lam = _bipartition(args)
    c = k0_class(lam)
    return {"bipartition": lam.to_json(), "class": c.to_json()}, repr(c)


def cmd_character(args):
    from .repcalc import character_coeffs
    dom = _domain(args, symbolic_default=True)
    lam = _bipartition(args)
    a = parse_word(args.word)
    limit = args.max_len if args.max_len is not None else 8
    if len(a) > limit:
        raise InputError(f"word longer than --max-len {limit}")
    coeffs = character_coeffs(lam, a, dom)
    rows = sorted(([(letter, str(c)) for letter, c in key], n) for key, n in coeffs.items())
    out = {"bipartition": lam.to_json(), "word": a,
           "terms": [{"colored_word": [list(x) for x in k], "count": n} for k, n in rows]}
    lines = [f"{n} " + " ".join(f"{letter}[{c}]" for letter, c in k) for k, n in rows]
    return out, "\n".join(lines) or "0"


def cmd_branch(args):
    from .repcalc import edges_from
    dom = _domain(args, symbolic_default=True)
    lam = _bipartition(args)
    edges = edges_from(lam)
    lines = [f"{e.src} -> {e.dst} [{e.color}]" for e in edges]
    return {"bipartition": lam.to_json(), "edges": [e.to_json(dom) for e in edges]}, "\n".join(lines)


def cmd_blocks(args):
    from .repcalc import blocks
    dom = _domain(args, symbolic_default=True)
    size = args.max_size if args.max_size is not None else (args.max_len if args.max_len is not None else 3)
    groups = blocks(size, dom)
    lines = [" ".join(str(lam) for lam in g) for g in groups]
    return {"max_size": size, "blocks": [[lam.to_json() for lam in g] for g in groups]}, "\n".join(lines)


def cmd_semisimple(args):
    from .repcalc import is_semisimple
    if args.symbolic:
        raise InputError("semisimple needs --q and --t")
    q0 = args.q if args.q is not None else Fraction(2)
    t0 = args.t if args.t is not None else Fraction(3)
    ok, reason = is_semisimple(q0, t0, args.guard)
    return ({"q": str(q0), "t": str(t0), "semisimple": ok, "reason": reason},
            f"{'true' if ok else 'false'}: {reason}")


def cmd_oracle_check(args):
    from .glnrep import OracleConfig, oracle_check
    if args.symbolic or args.t is not None:
        raise InputError("oracle-check fixes t = q^n; give only --q and --n")
    q0 = args.q if args.q is not None else Fraction(2)
    try:
        cfg = OracleConfig(args.n, q0)
    except ValueError as exc:
        raise DegenerateParameterError(str(exc)) from exc
    d = parse_dsl(_read_source(args))
    ok = oracle_check(Morphism.from_diagram(d, cfg.domain), cfg)
    out = {"n": cfg.n, "q": str(cfg.q0), "t": str(cfg.t0), "agrees": ok}
    if not ok:
        raise CheckFailed(out)
    return out, "ok"


COMMANDS = {
    "homfly": cmd_homfly, "nf": cmd_nf, "dim": cmd_dim, "gram": cmd_gram, "hecke": cmd_hecke,
    "jm-spec": cmd_jm_spec, "k0": cmd_k0, "character": cmd_character, "branch": cmd_branch,
    "blocks": cmd_blocks, "semisimple": cmd_semisimple, "oracle-check": cmd_oracle_check,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--q", type=_fraction, help="rational value of q")
    common.add_argument("--t", type=_fraction, help="rational value of t")
    common.add_argument("--symbolic", action="store_true", help="work over Z[z, t^-1, t] fractions")
    common.add_argument("--guard", type=int, default=12, help="genericity guard bound")
    common.add_argument("--max-len", type=int, help="size cap for enumerative commands")
    common.add_argument("--json", action="store_true", help="emit JSON")

    source = _Parser(add_help=False)
    source.add_argument("--file", help="diagram file")
    source.add_argument("--inline", help="diagram text, ';' separates lines")
    source.add_argument("--stdin", action="store_true", help="read the diagram from stdin")

    bip = _Parser(add_help=False)
    bip.add_argument("--up", default="", help="partition on the up side, e.g. 2,1")
    bip.add_argument("--down", default="", help="partition on the down side")

    p = _Parser(prog="oskein", description="Oriented skein category toolkit")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("homfly", parents=[common, source], help="HOMFLY-PT polynomial")
    s.add_argument("--braid", help="braid word, e.g. '1 -2 1'")
    s.add_argument("--strands", type=int)
    s.add_argument("--pd", help="PD code, e.g. 'X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]'")

    sub.add_parser("nf", parents=[common, source], help="normal form in the canonical-lift basis")

    for name, helptext in (("dim", "dimension of a Hom space"), ("gram", "Gram matrix and its rank")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--from", dest="src", required=True)
        s.add_argument("--to", dest="dst", required=True)

    s = sub.add_parser("hecke", parents=[common], help="Hecke algebra elements")
    s.add_argument("--r", type=int)
    s.add_argument("--word", help="product of generators S_i, e.g. '1 2 1'")
    s.add_argument("--idempotent", help="Young idempotent of a partition, e.g. 2,1")
    s.add_argument("--jm", type=int, help="Jucys-Murphy element L_k")

    s = sub.add_parser("jm-spec", parents=[common], help="Jucys-Murphy spectra on End(a)")
    s.add_argument("--word", required=True)

    sub.add_parser("k0", parents=[common, bip], help="Grothendieck class of a standard module")

    s = sub.add_parser("character", parents=[common, bip], help="colored path character")
    s.add_argument("--word", required=True)

    sub.add_parser("branch", parents=[common, bip], help="bipartition graph edges at a vertex")

    s = sub.add_parser("blocks", parents=[common], help="bipartitions grouped by weight")
    s.add_argument("--max-size", type=int)

    sub.add_parser("semisimple", parents=[common], help="semisimplicity at (q, t)")

    s = sub.add_parser("oracle-check", parents=[common, source], help="compare with the GL(n) representation")
    s.add_argument("--n", type=int, default=2)
    return p


def _emit(payload, as_json: bool, command: str, dom=None, text: str = ""):
    if as_json:
        body = {"schema_version": SCHEMA_VERSION, "command": command}
        body.update(payload)
        sys.stdout.write(json.dumps(body, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text + "\n")


def run(argv: Optional[List[str]] = None) -> int:
    as_json = False
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        as_json = args.json if args.command else False
        if not args.command:
            raise InputError("missing subcommand; choose one of " + ", ".join(COMMANDS))
        payload, text = COMMANDS[args.command](args)
        _emit(payload, as_json, args.command, text=text)
        return 0
    except CheckFailed as exc:
        _emit(exc.args[0], as_json, "oracle-check", text="mismatch")
        return 1
    except DegenerateParameterError as exc:
        sys.stderr.write(f"error: degenerate: {exc}\n")
        return 3
    except (InputError, DiagramError, DomainError, ValueError, KeyError) as exc:
        sys.stderr.write(f"error: input: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
