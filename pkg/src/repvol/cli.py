"""Command line interface.

Subcommands mirror the library: ``seifert`` for invariants and volume
spectra, ``cs`` for the symbolic form identities, ``graph`` for JSJ
specs, ``covers`` for elevation arithmetic, ``cases`` for worked
families.  Exit codes: 0 success, 1 domain error (one line on stderr),
2 usage error.  All output is computed before anything is printed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import covers as covers_mod
from . import ehn, jsj, liecs, seifert
from .exact import ExactVolume, render_volume


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _emit(lines: Sequence[str]) -> None:
    for line in lines:
        print(line)


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


# ---------------------------------------------------------------- seifert


def _witness_lines(witnesses) -> list[str]:
    lines = []
    for w in witnesses:
        n_values = ",".join(str(x) for x in w.n_values)
        z_values = ",".join(str(z) for z in w.z_values)
        lines.append(f"n=({n_values}) n={w.n} zeta={w.zeta} z=({z_values})")
    return lines


def _witness_payload(witnesses) -> list[dict]:
    return [
        {
            "n_values": list(w.n_values),
            "n": w.n,
            "zeta": str(w.zeta),
            "z_values": [str(z) for z in w.z_values],
            "coeff": str(w.coeff),
        }
        for w in witnesses
    ]


def _cmd_seifert(args: argparse.Namespace) -> int:
    inv = seifert.parse_seifert(args.notation)
    if args.action == "info":
        payload = {
            "notation": seifert.format_seifert(inv),
            "euler": str(seifert.euler_number(inv)),
            "chi": str(seifert.orbifold_chi(inv)),
            "geometry": seifert.classify_geometry(inv).value,
        }
        if args.json:
            _emit_json(payload)
        else:
            _emit(f"{key} {value}" for key, value in payload.items())
        return 0

    if args.action == "volumes":
        if args.witnesses is not None:
            found = ehn.witnesses_for(inv, args.witnesses)
            if args.json:
                _emit_json({"witnesses": _witness_payload(found)})
            else:
                _emit(_witness_lines(found))
            return 0
        spectrum = ehn.volume_set(inv)
        oracle_note = None
        if args.oracle:
            brute = ehn.volume_set_bruteforce(inv)
            if brute != spectrum:
                raise RuntimeError(
                    "oracle disagreement: brute-force window differs from enumeration"
                )
            oracle_note = f"oracle agreement: {len(spectrum)} values"
        if args.json:
            payload = {"coefficients": [str(c) for c in spectrum]}
            if args.decimal:
                payload["decimals"] = [
                    f"{ExactVolume(c).to_float():.12g}" for c in spectrum
                ]
            if oracle_note:
                payload["oracle"] = "agree"
            _emit_json(payload)
        else:
            lines = [render_volume(ExactVolume(c), decimal=args.decimal) for c in spectrum]
            if oracle_note:
                lines.append(oracle_note)
            _emit(lines)
        return 0

    if args.action == "sv":
        maximum = ehn.seifert_volume_max(inv)
        chi = seifert.orbifold_chi(inv)
        closed_form = chi * chi / abs(seifert.euler_number(inv))
        if args.json:
            _emit_json(
                {"coefficient": str(maximum), "closed_form": str(closed_form)}
            )
        else:
            _emit(
                [
                    f"max (enumeration) {render_volume(ExactVolume(maximum), decimal=args.decimal)}",
                    f"max (closed form) {render_volume(ExactVolume(closed_form), decimal=args.decimal)}",
                ]
            )
        return 0

    if args.action == "foliation":
        slopes = [Fraction(b, a) for a, b in inv.pairs]
        exists = ehn.foliation_exists(inv.genus, slopes)
        if args.json:
            _emit_json({"exists": exists})
        else:
            print("yes" if exists else "no")
        return 0

    if args.action == "witnesses":
        found = ehn.witnesses_for(inv, args.coeff)
        if args.json:
            _emit_json({"witnesses": _witness_payload(found)})
        else:
            _emit(_witness_lines(found))
        return 0

    raise AssertionError(f"unhandled seifert action {args.action}")


# ---------------------------------------------------------------- cs


def _verify_iso_sl2r() -> list[str]:
    spec = liecs.iso_sl2r_algebra()
    gram = liecs.iso_sl2r_gram()
    form = liecs.cs_three_form(spec, gram)
    names = spec.basis
    target = liecs.ExteriorForm.monomial(spec.dim, (0, 1, 2), Fraction(2, 3))
    primitive = liecs.exactness_split(spec, form, target)
    if primitive is None:
        raise RuntimeError("3-form minus its volume part is not exact")
    stated = liecs.ExteriorForm.monomial(spec.dim, (1, 3), Fraction(1, 3)) + (
        liecs.ExteriorForm.monomial(spec.dim, (2, 3), Fraction(-1, 3))
    )
    if liecs.d(spec, stated) != form - target:
        raise RuntimeError("stated primitive does not verify")
    return [
        f"T = {liecs.format_form(spec, form)}",
        f"volume part = {liecs.format_form(spec, target)}",
        f"primitive = {liecs.format_form(spec, primitive)}",
        f"stated primitive = {liecs.format_form(spec, stated)} (verifies)",
        "OK",
    ]


def _verify_psl2c() -> list[str]:
    spec = liecs.sl2c_algebra()
    gram = liecs.sl2c_gram()
    form = liecs.cs_three_form(spec, gram)
    expected = liecs.ExteriorForm.monomial(
        spec.dim, (0, 1, 2), liecs.PiScalar.of(1, pi_power=-2)
    )
    if form != expected:
        raise RuntimeError(
            f"3-form is {liecs.format_form(spec, form)}, "
            f"expected {liecs.format_form(spec, expected)}"
        )
    return [f"T = {liecs.format_form(spec, form)}", "OK"]


def _cmd_cs(args: argparse.Namespace) -> int:
    if args.action == "verify":
        if args.algebra == "iso-sl2r":
            _emit(_verify_iso_sl2r())
        else:
            _emit(_verify_psl2c())
        return 0
    if args.action == "jacobi":
        with open(args.file, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
        spec = liecs.algebra_from_json(doc)
        violation = liecs.validate_jacobi(spec)
        if violation is None:
            print("ok")
            return 0
        print(f"violation at ({', '.join(violation.triple)})")
        print("error: jacobi identity fails", file=sys.stderr)
        return 1
    raise AssertionError(f"unhandled cs action {args.action}")


# ---------------------------------------------------------------- graph


def _load_graph_file(path: str) -> jsj.GraphDocument:
    with open(path, "r", encoding="utf-8") as handle:
        return jsj.load_graph_document(json.load(handle))


def _cmd_graph(args: argparse.Namespace) -> int:
    if args.action == "validate":
        document = _load_graph_file(args.file)
        problems = []
        for name, case_spec, _ in document.cases:
            for problem in jsj.validate_spec(case_spec):
                problems.append(
                    problem if name == "default" else f"{name}: {problem}"
                )
        if not problems:
            print("ok")
            return 0
        _emit(problems)
        print(f"error: invalid spec: {len(problems)} problem(s)", file=sys.stderr)
        return 1

    if args.action == "additivity":
        document = _load_graph_file(args.file)
        results = []
        for name, case_spec, assignments in document.cases:
            total = jsj.additivity_sum(case_spec, assignments)
            results.append((name, total))
        if args.json:
            _emit_json(
                {name: render_volume(total, decimal=args.decimal) for name, total in results}
            )
        elif len(results) == 1 and results[0][0] == "default":
            print(render_volume(results[0][1], decimal=args.decimal))
        else:
            _emit(
                f"{name}: {render_volume(total, decimal=args.decimal)}"
                for name, total in results
            )
        return 0

    if args.action == "rw":
        with open(args.file, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
        vertices = [str(v) for v in doc["vertices"]]
        edges = [
            (str(u), str(v), Fraction(str(ratio))) for u, v, ratio in doc["edges"]
        ]
        result = jsj.rw_consistency(vertices, edges)
        if result.consistent:
            print("consistent")
            return 0
        steps = " ".join(f"{u}->{v}[{r}]" for u, v, r in result.witness_cycle)
        print(f"inconsistent: cycle {steps} product {result.product}")
        print("error: edge ratios are inconsistent", file=sys.stderr)
        return 1

    raise AssertionError(f"unhandled graph action {args.action}")


# ---------------------------------------------------------------- covers


def _cmd_covers(args: argparse.Namespace) -> int:
    if args.action == "merge":
        counts = covers_mod.merge_copy_counts(args.degrees, args.m)
        payload = {
            "common_degree": counts.common_degree,
            "copies": list(counts.copies),
            "per_torus_elevations": counts.per_torus_elevations,
        }
    elif args.action == "colored":
        counts = covers_mod.colored_merge_counts(args.k, args.l)
        payload = {
            "common_degree": counts.common_degree,
            "central_positive": counts.central_positive,
            "central_negative": counts.central_negative,
            "corridor_copies": list(counts.corridor_copies),
            "matched_elevations": list(counts.matched_elevations),
        }
    elif args.action == "elevations":
        datum = covers_mod.TorusCoverDatum(args.torus, args.curve)
        payload = {"elevations": covers_mod.elevation_count(datum)}
    elif args.action == "intersection":
        value = covers_mod.cover_intersection(
            args.number, args.deg_f, args.deg_s, args.deg_torus
        )
        payload = {"intersection": value}
    else:
        raise AssertionError(f"unhandled covers action {args.action}")
    if args.json:
        _emit_json(payload)
    else:
        width = max(len(key) for key in payload)
        for key, value in payload.items():
            if isinstance(value, list):
                value = ",".join(str(x) for x in value)
            print(f"{key.ljust(width)}  {value}")
    return 0


# ---------------------------------------------------------------- cases


def _cmd_cases(args: argparse.Namespace) -> int:
    result = jsj.motegi_case(args.p1, args.q1, args.p2, args.q2)
    if args.json:
        _emit_json(
            {
                "h1_order": result.h1_order,
                "nontrivial": result.nontrivial,
                "sv": str(result.sv_coeff),
            }
        )
    else:
        answer = "yes" if result.nontrivial else "no"
        print(
            f"H1 order {result.h1_order}; nontrivial graph manifold: {answer}; "
            f"SV = {result.sv_coeff}"
        )
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repvol",
        description="Exact volume data for Seifert and graph manifolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_seifert = sub.add_parser("seifert", help="Seifert invariants and volume spectra")
    s_sub = p_seifert.add_subparsers(dest="action", required=True)
    for action in ("info", "volumes", "sv", "foliation", "witnesses"):
        p = s_sub.add_parser(action)
        p.add_argument("notation", help='Seifert notation, e.g. "(1; 1/2, 1/2)"')
        p.add_argument("--json", action="store_true")
        if action == "witnesses":
            p.add_argument("coeff", type=_fraction_arg, help="coefficient of 4*pi^2")
        if action in ("volumes", "sv"):
            p.add_argument("--decimal", action="store_true")
        if action == "volumes":
            p.add_argument("--oracle", action="store_true")
            p.add_argument("--witnesses", type=_fraction_arg, metavar="COEFF")
        p.set_defaults(handler=_cmd_seifert)

    p_cs = sub.add_parser("cs", help="symbolic 3-form identities")
    cs_sub = p_cs.add_subparsers(dest="action", required=True)
    p_verify = cs_sub.add_parser("verify")
    p_verify.add_argument("algebra", choices=("iso-sl2r", "psl2c"))
    p_verify.set_defaults(handler=_cmd_cs)
    p_jacobi = cs_sub.add_parser("jacobi")
    p_jacobi.add_argument("file", help="JSON structure-constant table")
    p_jacobi.set_defaults(handler=_cmd_cs)

    p_graph = sub.add_parser("graph", help="JSJ graph specs")
    g_sub = p_graph.add_subparsers(dest="action", required=True)
    for action in ("validate", "additivity", "rw"):
        p = g_sub.add_parser(action)
        p.add_argument("file", help="JSON file")
        if action == "additivity":
            p.add_argument("--json", action="store_true")
            p.add_argument("--decimal", action="store_true")
        p.set_defaults(handler=_cmd_graph)

    p_covers = sub.add_parser("covers", help="elevation and merging arithmetic")
    c_sub = p_covers.add_subparsers(dest="action", required=True)
    p_merge = c_sub.add_parser("merge")
    p_merge.add_argument("--degrees", type=_int_list, required=True)
    p_merge.add_argument("--m", type=int, required=True)
    p_colored = c_sub.add_parser("colored")
    p_colored.add_argument("--k", type=_int_list, required=True)
    p_colored.add_argument("--l", type=_int_list, required=True)
    p_elev = c_sub.add_parser("elevations")
    p_elev.add_argument("--torus", type=int, required=True, help="torus cover degree")
    p_elev.add_argument("--curve", type=int, required=True, help="curve cover degree")
    p_inter = c_sub.add_parser("intersection")
    p_inter.add_argument("--number", type=int, required=True, help="intersection number downstairs")
    p_inter.add_argument("--deg-f", type=int, required=True)
    p_inter.add_argument("--deg-s", type=int, required=True)
    p_inter.add_argument("--deg-torus", type=int, required=True)
    for p in (p_merge, p_colored, p_elev, p_inter):
        p.add_argument("--json", action="store_true")
        p.set_defaults(handler=_cmd_covers)

    p_cases = sub.add_parser("cases", help="worked families")
    case_sub = p_cases.add_subparsers(dest="action", required=True)
    p_motegi = case_sub.add_parser("motegi")
    for name in ("p1", "q1", "p2", "q2"):
        p_motegi.add_argument(name, type=int)
    p_motegi.add_argument("--json", action="store_true")
    p_motegi.set_defaults(handler=_cmd_cases)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
