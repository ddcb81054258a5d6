"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 bad input.
"""

import argparse
import json
import sys
from math import comb

from . import builder, hfcore, oracle
from .errors import FatPointsError, NotFullReduction, NotStrictlyDecreasing
from .geometry import ProjLine, format_rational
from .scheme import FatPointScheme, gms_hilbert, reduction_vector

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


def _load_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


def _load_scheme(path):
    data = _load_json(path)
    if "scheme" in data:
        data = data["scheme"]
    try:
        return FatPointScheme.from_json(data)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad scheme file {path}: {exc}") from exc


def _load_lines(path):
    data = _load_json(path)
    if isinstance(data, dict):
        data = data.get("lines", data.get("arrangement", {}).get("lines"))
    try:
        return [ProjLine.from_json(l) for l in data]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad lines file {path}: {exc}") from exc


def _delta(args):
    if args.delta is None:
        raise InputError("--delta is required")
    return hfcore.parse_delta(args.delta)


def _table(rows):
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(str(c).rjust(w) for c, w in zip(r, widths)) for r in rows)


def cmd_validate(args):
    d = _delta(args)
    conj = hfcore.conjugate(d)
    report = {"delta": d.to_json(), "valid": True, "alpha": d.alpha, "sigma": d.sigma,
              "conjugate": list(conj.parts), "diagram": hfcore.render_dot_diagram(d)}
    human = (f"valid: {d}\nalpha = {d.alpha}, sigma = {d.sigma}\n"
             f"conjugate: {hfcore.format_delta(conj)}\n{report['diagram']}")
    return EXIT_OK, report, human


def cmd_conjugate(args):
    d = _delta(args)
    conj = hfcore.conjugate(d)
    return EXIT_OK, {"delta": d.to_json(), "conjugate": list(conj.parts)}, \
        hfcore.format_delta(conj)


def cmd_bounds(args):
    d = _delta(args)
    total, dmax, r = hfcore.degree_split(d)
    lo, hi = builder.double_bounds(d)
    report = {"delta": d.to_json(), "total": total, "max_doubles": dmax, "remainder": r,
              "predicted_doubles": builder.predicted_double_count(d),
              "lower_bound": lo, "upper_bound": hi,
              "all_doubles": builder.all_doubles_criterion(d),
              "arithmetic_staircase": builder.cor313_criterion(d)}
    human = "\n".join(f"{k}: {v}" for k, v in report.items() if k != "delta")
    return EXIT_OK, report, f"delta: {d}\n{human}"


def cmd_construct(args):
    d = _delta(args)
    Z, trace = builder.construct(d, seed=args.seed, stop_at=args.stop_at)
    got = oracle.delta_hf(Z.scheme)
    verdict = "PASS" if got == d else "FAIL"
    report = {"delta": d.to_json(), "seed": args.seed, "stop_at": args.stop_at,
              "scheme": Z.scheme.to_json(), "arrangement": Z.arrangement.to_json(),
              "double_pairs": [list(p) for p in Z.pairs()],
              "trace": trace.to_json(), "oracle_delta": got.to_json(), "verdict": verdict}
    lines = [f"delta: {d}", f"{Z.doubles} double points, {Z.reduced} reduced points"]
    for s in trace.steps:
        merges = ", ".join(f"2P_{{{m.i},{m.j}}}" for m in s.merges) or "-"
        lines.append(f"STEP {s.n}: h_n={list(s.h_n)} s_n={s.s_n} t_n={s.t_n} merges: {merges}")
    lines.append(f"oracle delta: {got}  {verdict}")
    return (EXIT_OK if verdict == "PASS" else EXIT_FAIL), report, "\n".join(lines)


def cmd_hilbert(args):
    Z = _load_scheme(args.scheme)
    if not Z:
        raise InputError("scheme is empty")
    up_to = "auto" if args.max_degree is None else args.max_degree
    H = oracle.hilbert_function(Z, up_to)
    if up_to == "auto":
        delta = hfcore.first_difference(H).to_json()
    else:
        delta = [b - a for a, b in zip((0,) + H.values, H.values)]
    report = {"hilbert": list(H.values), "stable_value": H.stable_value, "delta": delta}
    shown = list(H.values) + ([H.stable_value] if up_to == "auto" else [])
    human = f"H: {', '.join(map(str, shown))}, ...\nstable: {H.stable_value}\n" \
            f"delta: {', '.join(map(str, delta))}"
    return EXIT_OK, report, human


def cmd_reduce(args):
    Z = _load_scheme(args.scheme)
    lines = _load_lines(args.lines)
    d = reduction_vector(Z, lines)
    report = {"reduction_vector": list(d.entries), "full": d.full}
    human = [f"reduction vector: {list(d.entries)} ({'full' if d.full else 'not full'})"]
    try:
        H = gms_hilbert(d)
        report["gms_hilbert"] = list(H.values)
        report["stable_value"] = H.stable_value
        human.append(f"H: {', '.join(map(str, H.values))}, ... (stable {H.stable_value})")
    except NotFullReduction:
        report["gms_note"] = "skipped: the lines do not totally reduce the scheme"
        human.append("closed-form Hilbert function skipped: not a full reduction")
    except NotStrictlyDecreasing:
        report["gms_note"] = "NotStrictlyDecreasing: closed form does not apply"
        human.append("closed-form Hilbert function refused: NotStrictlyDecreasing")
    return EXIT_OK, report, "\n".join(human)


def cmd_star(args):
    t, seed, variant = args.t, args.seed, args.variant
    if t < 1 or (variant == "near-star" and t < 3):
        raise InputError(f"t = {t} too small for variant {variant}")
    extra = {}
    if variant == "plain":
        Z = builder.star_scheme(t, seed).scheme
        expected = list(hfcore.star_delta(t).values)
    elif variant == "plus-point-on":
        Z = builder.star_plus_point_scheme(t, seed, on_line=True).scheme
        expected = list(hfcore.star_plus_point_delta(t).values)
    else:
        if variant == "plus-point-off":
            Z = builder.star_plus_point_scheme(t, seed, on_line=False).scheme
        else:
            Z = builder.near_star_scheme(t, seed)
        expected = list(hfcore.star_delta(t).values)
        expected[t + 1] += 1
    got = oracle.delta_hf(Z).to_json()
    ok = got == expected
    if variant == "near-star":
        dims = {t + 2: oracle.ideal_dimension(Z, t + 2),
                2 * t - 1: oracle.ideal_dimension(Z, 2 * t - 1)}
        want = {t + 2: 2, 2 * t - 1: comb(t, 2) - 1}
        extra = {"ideal_dimensions": {str(k): v for k, v in dims.items()},
                 "expected_ideal_dimensions": {str(k): v for k, v in want.items()}}
        ok = ok and dims == want
    verdict = "MATCH" if ok else "MISMATCH"
    report = {"t": t, "seed": seed, "variant": variant, "scheme": Z.to_json(),
              "delta": got, "expected_delta": expected, "verdict": verdict, **extra}
    human = [f"star t={t} ({variant}), {len(Z)} points, seed {seed}",
             f"oracle delta:   {', '.join(map(str, got))}",
             f"expected delta: {', '.join(map(str, expected))}"]
    for k, v in extra.get("ideal_dimensions", {}).items():
        human.append(f"dim (I)_{k} = {v} (expected {extra['expected_ideal_dimensions'][k]})")
    human.append(verdict)
    return (EXIT_OK if ok else EXIT_FAIL), report, "\n".join(human)


def cmd_asymptotic(args):
    ts = [t for t in range(args.t_min, args.t_max + 1, args.step) if t not in (2, 5) and t >= 1]
    rows = builder.asymptotic_table(ts)
    report = {"rows": [{"t": t, "s": s, "ratio": format_rational(q), "ratio_float": float(q)}
                       for t, s, q in rows]}
    csv = ["t,s,ratio,ratio_float"] + [f"{t},{s},{format_rational(q)},{float(q):.6f}"
                                       for t, s, q in rows]
    return EXIT_OK, report, "\n".join(csv)


COMMANDS = {
    "validate": cmd_validate,
    "conjugate": cmd_conjugate,
    "bounds": cmd_bounds,
    "construct": cmd_construct,
    "hilbert": cmd_hilbert,
    "reduce": cmd_reduce,
    "star": cmd_star,
    "asymptotic": cmd_asymptotic,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["human", "json"], default="human")
    common.add_argument("--out", dest="out_path", help="write output to this file")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="fatpoints",
                                description="Double and reduced point schemes with a given "
                                            "Hilbert function.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("validate", "conjugate", "bounds"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--delta", required=True, help="e.g. 1,2,3,4,2")
    sp = sub.add_parser("construct", parents=[common])
    sp.add_argument("--delta", required=True)
    sp.add_argument("--stop-at", type=int, default=None)
    sp = sub.add_parser("hilbert", parents=[common])
    sp.add_argument("--scheme", required=True, help="scheme JSON file, or - for stdin")
    sp.add_argument("--max-degree", type=int, default=None)
    sp = sub.add_parser("reduce", parents=[common])
    sp.add_argument("--scheme", required=True)
    sp.add_argument("--lines", required=True, help="JSON list of lines or arrangement")
    sp = sub.add_parser("star", parents=[common])
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--variant", default="plain",
                    choices=["plain", "plus-point-on", "plus-point-off", "near-star"])
    sp = sub.add_parser("asymptotic", parents=[common])
    sp.add_argument("--t-min", type=int, default=1)
    sp.add_argument("--t-max", type=int, default=50)
    sp.add_argument("--step", type=int, default=1)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "stop_at", None) is not None and args.stop_at < 1:
        print("error: --stop-at must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        code, report, human = COMMANDS[args.command](args)
    except (InputError, FatPointsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = _dump(report) if args.output == "json" else human
    if args.out_path:
        with open(args.out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
