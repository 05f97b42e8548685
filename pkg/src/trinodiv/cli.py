"""Command-line front end: parse inputs, run the pipeline, emit reports.

Subcommands: analyze (invariants, class, curve), ppdiv (full divisor),
eval (divisor evaluation at a degree), verify (graded-dimension check),
render (SVG figure).  Rationals are serialized as exact "p/q" strings and
matrices as row-major integer arrays, so JSON output loses no precision.
Exit codes: 0 success, 1 invalid input, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .downgrade import BadOverride
from .exactla import IntMatrix
from .figures import UnsupportedRank, render_figure
from .oracle import verify_equality
from .ppdivisor import PPDivisor, compute_ppdivisor, evaluate
from .trinomial import (
    Classification,
    EmptyBlock,
    GcdInvariants,
    LinearTerm,
    TrinomialInput,
    ZeroExponent,
    classify,
    gcd_invariants,
    validate,
)

INPUT_ERRORS = (
    ZeroExponent,
    LinearTerm,
    EmptyBlock,
    BadOverride,
    UnsupportedRank,
    ValueError,
    OSError,
)


class ParseError(ValueError):
    """Malformed trinomial expression; carries the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class BlockMismatch(ValueError):
    """A term mixes variables from different blocks, or blocks are missing."""


class DuplicateVariable(ValueError):
    """The same variable occurs twice in the expression."""


def parse_trinomial_expression(s: str) -> TrinomialInput:
    """Parse e.g. "T01^3+T11^5+T21*T22" into exponent tuples.

    Grammar: expr := term '+' term '+' term; term := factor ('*' factor)*;
    factor := 'T' digit+ ('^' integer)?.  A variable's first digit names its
    block, the remaining digits its index inside the block; exponents
    default to 1.
    """
    tokens = _tokenize(s)
    terms = [[]]
    for tok in tokens:
        if tok.kind == "plus":
            terms.append([])
        else:
            terms[-1].append(tok)
    if len(terms) != 3:
        pos = len(s)
        raise ParseError(f"expected exactly 3 terms joined by '+', got {len(terms)}", pos)
    seen = {}
    blocks: dict[int, dict[int, int]] = {0: {}, 1: {}, 2: {}}
    term_blocks = []
    for term in terms:
        factors = _split_term(term, s)
        term_block = None
        for var_tok, exponent in factors:
            block, index = var_tok.block, var_tok.index
            if (block, index) in seen:
                raise DuplicateVariable(f"variable T{block}{index} appears twice")
            seen[(block, index)] = True
            if term_block is None:
                term_block = block
            elif term_block != block:
                raise BlockMismatch(
                    f"term mixes blocks {term_block} and {block} (variable T{block}{index})"
                )
            blocks[block][index] = exponent
        term_blocks.append(term_block)
    if sorted(term_blocks) != [0, 1, 2]:
        raise BlockMismatch(f"the three terms must cover blocks 0, 1, 2 exactly; got {term_blocks}")
    tuples = []
    for i in range(3):
        ordered = [blocks[i][j] for j in sorted(blocks[i])]
        tuples.append(tuple(ordered))
    return validate(*tuples)


class _Token:
    __slots__ = ("kind", "pos", "block", "index", "value")

    def __init__(self, kind, pos, block=None, index=None, value=None):
        self.kind = kind
        self.pos = pos
        self.block = block
        self.index = index
        self.value = value


def _tokenize(s: str) -> list[_Token]:
    out = []
    i = 0
    n = len(s)
    while i < n:
        ch = s[i]
        if ch.isspace():
            i += 1
        elif ch == "+":
            out.append(_Token("plus", i))
            i += 1
        elif ch == "*":
            out.append(_Token("star", i))
            i += 1
        elif ch == "^":
            i += 1
            j = i
            if j < n and s[j] == "-":
                j += 1
            while j < n and s[j].isdigit():
                j += 1
            if j == i or not s[i:j].lstrip("-").isdigit():
                raise ParseError("expected an integer exponent after '^'", i)
            out.append(_Token("caret", i - 1, value=int(s[i:j])))
            i = j
        elif ch in ("T", "t"):
            j = i + 1
            while j < n and s[j].isdigit():
                j += 1
            digits = s[i + 1 : j]
            if len(digits) < 2:
                raise ParseError("variable needs a block digit and an index, like T01", i)
            block = int(digits[0])
            if block not in (0, 1, 2):
                raise ParseError(f"block digit must be 0, 1 or 2, got {digits[0]}", i + 1)
            index = int(digits[1:])
            if index < 1:
                raise ParseError("variable index must be at least 1", i + 2)
            out.append(_Token("var", i, block=block, index=index))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    if not out:
        raise ParseError("empty expression", 0)
    return out


def _split_term(term: list[_Token], src: str):
    """Turn a token run into (variable, exponent) pairs, checking shape."""
    if not term:
        raise ParseError("empty term", 0)
    factors = []
    i = 0
    expect_var = True
    while i < len(term):
        tok = term[i]
        if expect_var:
            if tok.kind != "var":
                raise ParseError("expected a variable like T01", tok.pos)
            exponent = 1
            if i + 1 < len(term) and term[i + 1].kind == "caret":
                exponent = term[i + 1].value
                i += 1
            factors.append((tok, exponent))
            expect_var = False
        else:
            if tok.kind != "star":
                raise ParseError("expected '*' between factors", tok.pos)
            expect_var = True
        i += 1
    if expect_var:
        raise ParseError("term ends with a dangling '*'", term[-1].pos)
    return factors


def format_trinomial(t: TrinomialInput) -> str:
    """Canonical expression string; parse(format(t)) == t."""
    parts = []
    for i, block in enumerate(t.blocks):
        factors = []
        for j, e in enumerate(block, start=1):
            factors.append(f"T{i}{j}" + (f"^{e}" if e != 1 else ""))
        parts.append("*".join(factors))
    return "+".join(parts)


def _qstr(x) -> str:
    return str(Fraction(x))


def _point_json(p) -> dict:
    return {
        "zero_index": p.zero_index,
        "entries": [{"root_order": e.root_order, "exponent": e.exponent} for e in p.entries],
    }


def invariants_json(g: GcdInvariants) -> dict:
    return {
        "d0": g.d0,
        "d1": g.d1,
        "d2": g.d2,
        "d": g.d,
        "d01": g.d01,
        "d02": g.d02,
        "d12": g.d12,
        "dtilde": g.dtilde,
    }


def classification_json(c: Classification) -> dict:
    return {
        "tag": c.tag.value,
        "s": c.s,
        "s_pair": list(c.s_pair) if c.s_pair else None,
        "genus": c.genus,
        "pham_brieskorn": c.pham_brieskorn,
    }


def divisor_json(dv: PPDivisor) -> dict:
    terms = []
    for i, (poly, sup) in enumerate(dv.terms):
        terms.append(
            {
                "vertices": [[_qstr(c) for c in v] for v in poly.vertices],
                "equals_tail": dv.coefficient_equals_tail(i),
                "support": {
                    "vanishing_coordinate": sup.vanishing_coordinate,
                    "cardinality": sup.cardinality,
                    "points": [_point_json(p) for p in sup.points],
                    "p1_model": [p.display() for p in sup.p1_model] if sup.p1_model else None,
                },
            }
        )
    return {
        "lattice_rank": dv.lattice_rank,
        "tail_rays": [list(r) for r in dv.tail.rays],
        "terms": terms,
    }


def analysis_document(t: TrinomialInput) -> dict:
    g = gcd_invariants(t)
    cls = classify(g, t)
    return {
        "input": {"l0": list(t.l0), "l1": list(t.l1), "l2": list(t.l2)},
        "invariants": invariants_json(g),
        "classification": classification_json(cls),
        "curve": {
            "weights": [g.d12, g.d02, g.d01],
            "exponents": [g.dtilde // g.d12, g.dtilde // g.d02, g.dtilde // g.d01],
            "genus": cls.genus,
        },
    }


def ppdiv_document(t: TrinomialInput, dv: PPDivisor) -> dict:
    doc = analysis_document(t)
    doc["divisor"] = divisor_json(dv)
    return doc


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _poly_text(poly, rank: int) -> str:
    if rank == 1:
        v = poly.vertices[0][0]
        return f"[{v}, +inf)"
    vs = ", ".join("(" + ", ".join(str(c) for c in v) + ")" for v in poly.vertices)
    if len(poly.vertices) == 1:
        return f"({vs} + sigma)"
    return f"(conv{{{vs}}} + sigma)"


def _support_text(sup) -> str:
    if sup.p1_model is not None:
        return "{" + ", ".join(p.display() for p in sup.p1_model) + "}"
    return "{" + ", ".join(p.display() for p in sup.points) + "}"


def divisor_text(dv: PPDivisor) -> list[str]:
    pieces = []
    for i, (poly, _) in enumerate(dv.terms):
        star = " (= sigma)" if dv.coefficient_equals_tail(i) else ""
        pieces.append(f"{_poly_text(poly, dv.lattice_rank)}·D{i}{star}")
    lines = ["D = " + " + ".join(pieces)]
    rays = ", ".join("(" + ", ".join(str(c) for c in r) + ")" for r in dv.tail.rays)
    lines.append(f"sigma = cone({rays})")
    for i, (_, sup) in enumerate(dv.terms):
        lines.append(f"D{i} = {_support_text(sup)}  [{sup.cardinality} point(s) on the curve]")
    c = dv.curve
    lines.append(
        f"curve: w0^{c.equation_exponents[0]} + w1^{c.equation_exponents[1]} "
        f"+ w2^{c.equation_exponents[2]} = 0 in P{c.weights}, genus {c.genus}"
    )
    return lines


def analysis_text(t: TrinomialInput) -> list[str]:
    g = gcd_invariants(t)
    cls = classify(g, t)
    lines = [f"trinomial: {format_trinomial(t)}"]
    lines.append(
        f"invariants: d0={g.d0} d1={g.d1} d2={g.d2} d={g.d} "
        f"d01={g.d01} d02={g.d02} d12={g.d12} dtilde={g.dtilde}"
    )
    tagline = f"class: {cls.tag.value}"
    if cls.s is not None:
        tagline += f" (s={cls.s}, blocks {cls.s_pair})"
    if cls.pham_brieskorn:
        tagline += " [surface case]"
    lines.append(tagline)
    lines.append(
        f"curve: P({g.d12}, {g.d02}, {g.d01}), exponents "
        f"({g.dtilde // g.d12}, {g.dtilde // g.d02}, {g.dtilde // g.d01}), genus {cls.genus}"
    )
    return lines


def _load_matrix(path: str) -> IntMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ValueError(f"{path}: expected a JSON array of integer rows")
    return IntMatrix.from_rows(data)


def _load_input(args) -> TrinomialInput:
    if args.input is not None:
        with open(args.input, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        try:
            return validate(data["l0"], data["l1"], data["l2"])
        except KeyError as exc:
            raise ValueError(f"{args.input}: missing field {exc}") from exc
    if args.expression is not None:
        return parse_trinomial_expression(args.expression)
    raise ValueError("provide a trinomial expression or --input FILE")


def _overrides(args):
    f = _load_matrix(args.basis) if args.basis else None
    s = _load_matrix(args.section) if args.section else None
    return f, s


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trinodiv",
        description="Polyhedral divisor of the torus action on a trinomial hypersurface.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("expression", nargs="?", help="trinomial such as T01^3+T11^5+T21*T22")
        p.add_argument("--input", help="JSON file with fields l0, l1, l2")
        p.add_argument("--basis", help="JSON row-major integer matrix overriding the kernel basis F")
        p.add_argument("--section", help="JSON row-major integer matrix overriding the section S")
        p.add_argument("--format", choices=("json", "text"), default="text")

    p_analyze = sub.add_parser("analyze", help="invariants, classification, genus, curve")
    common(p_analyze)
    p_ppdiv = sub.add_parser("ppdiv", help="full polyhedral divisor")
    common(p_ppdiv)
    p_eval = sub.add_parser("eval", help="evaluate the divisor at a degree vector")
    common(p_eval)
    p_eval.add_argument("-u", required=True, help="comma-separated integer degree, e.g. 15,0")
    p_verify = sub.add_parser("verify", help="graded dimensions vs divisor sections")
    common(p_verify)
    p_verify.add_argument("--bound", type=int, default=12)
    p_render = sub.add_parser("render", help="SVG figure of the polyhedra")
    common(p_render)
    p_render.add_argument("-o", "--output", required=True)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        t = _load_input(args)
        f_override, s_override = _overrides(args)
        if args.command == "analyze":
            if args.format == "json":
                sys.stdout.write(_dumps(analysis_document(t)))
            else:
                sys.stdout.write("\n".join(analysis_text(t)) + "\n")
            return 0
        dv = compute_ppdivisor(t, f_override, s_override)
        if args.command == "ppdiv":
            if args.format == "json":
                sys.stdout.write(_dumps(ppdiv_document(t, dv)))
            else:
                sys.stdout.write("\n".join(analysis_text(t) + divisor_text(dv)) + "\n")
            return 0
        if args.command == "eval":
            u = tuple(int(x) for x in args.u.split(","))
            ev = evaluate(dv, u)
            doc = {
                "u": list(u),
                "coefficients": [_qstr(c) for c in ev.coefficients],
                "degree": _qstr(ev.degree),
                "floor_degree": ev.floor_degree,
            }
            if args.format == "json":
                sys.stdout.write(_dumps(doc))
            else:
                sys.stdout.write(
                    f"u = {u}: coefficients "
                    + ", ".join(_qstr(c) for c in ev.coefficients)
                    + f"; degree {_qstr(ev.degree)}; floor degree {ev.floor_degree}\n"
                )
            return 0
        if args.command == "verify":
            report = verify_equality(t, f_override, s_override, bound=args.bound)
            doc = {
                "bound": report.bound,
                "checked": report.checked,
                "mismatches": [
                    {"m": list(m), "graded_dimension": h, "section_dimension": s}
                    for m, h, s in report.mismatches
                ],
                "skipped": [{"m": list(m), "floor_degree": fd} for m, fd in report.skipped],
                "passed": report.passed,
            }
            if args.format == "json":
                sys.stdout.write(_dumps(doc))
            else:
                sys.stdout.write(
                    f"checked {report.checked} degrees up to |m| <= {report.bound}: "
                    f"{len(report.mismatches)} mismatch(es), {len(report.skipped)} skipped\n"
                )
                for m, h, s in report.mismatches:
                    sys.stdout.write(f"  mismatch at {m}: ring {h} vs sections {s}\n")
            return 0 if report.passed else 2
        if args.command == "render":
            render_figure(dv, args.output)
            sys.stdout.write(f"wrote {args.output}\n")
            return 0
        raise AssertionError(f"unhandled command {args.command}")
    except INPUT_ERRORS as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
