"""Command-line front end.

Exit codes: 0 = affirmative/success, 1 = negative verdict, 2 = bad input,
3 = inconclusive (bound exhausted / unknown).  All rationals print as
p/q; nothing is ever rounded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction as QQ

from . import jsonio
from .descent import (NotFoundUpTo, adc_descend, is_adc_empirical,
                      non_adc_certificate_check, non_adc_certificate_search,
                      represents_integrally, witness_search)
from .errors import AdcError, EnumerationBudgetExceeded, SearchExhausted
from .euclid import (EuclideanClass, classify_euclidean_diagonal_z,
                     euclidean_step_form, euclideanity_search, is_euclidean)
from .fixtures import load_fixture
from .forms import (Maximality, bilinear, diagonal_form, discriminant,
                    discriminant_degree, evaluate, maximality_special_z)
from .localglobal import (real_place_verdict, sum_three_squares,
                          sign_universal_check_290, three_squares_predicate,
                          zp_represents_diagonal)
from .rings import Integers

OK, NEGATIVE, USAGE, INCONCLUSIVE = 0, 1, 2, 3


def _load_form(args):
    sources = [s for s in (args.form, args.fixture, args.file) if s]
    if len(sources) != 1:
        raise AdcError("supply exactly one of --form / --fixture / --file")
    if args.fixture:
        return load_fixture(args.fixture)
    if args.file:
        with open(args.file) as fh:
            return jsonio.form_from_json(json.load(fh))
    text = args.form
    if text.startswith("diag:"):
        coeffs = [int(v) for v in text[len("diag:"):].split(",")]
        return diagonal_form(Integers(), coeffs)
    return jsonio.form_from_json(json.loads(text))


def _parse_d(ring, text):
    if ring.kind == "FqT":
        return jsonio.element_from_json(ring, json.loads(text)
                                        if text.startswith("[") else
                                        [int(v) for v in text.split(",")])
    return jsonio.element_from_json(ring, text)


def _parse_vector(ring, text):
    return jsonio.vector_from_json(ring, json.loads(text))


def _emit(args, lines, payload, code):
    if args.json:
        payload = dict(payload)
        payload["exit_code"] = code
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)
    return code


def _trace_json(trace):
    steps = []
    for s in trace.steps:
        steps.append({
            "t": jsonio.element_to_json(s.t),
            "xprime": [jsonio.element_to_json(e) for e in s.xprime],
            "y": [jsonio.element_to_json(e) for e in s.y],
            "z": jsonio.vector_to_json(s.z),
            "a": jsonio.element_to_json(s.a),
            "b": jsonio.element_to_json(s.b),
            "T": jsonio.element_to_json(s.T),
            "X": [jsonio.element_to_json(e) for e in s.X],
        })
    out = {"steps": steps}
    if trace.succeeded:
        out["outcome"] = {"status": "success",
                          "vector": [jsonio.element_to_json(e) for e in trace.final]}
    else:
        out["outcome"] = {"status": "stalled", "reason": trace.stalled}
    return out


# -- handlers -----------------------------------------------------------------


def _cmd_eval(args):
    q = _load_form(args)
    x = _parse_vector(q.ring, args.x)
    val = evaluate(q, x)
    return _emit(args, [f"q(x) = {val!r}"], {"value": jsonio.fraction_to_json(val)}, OK)


def _cmd_bilinear(args):
    q = _load_form(args)
    x = _parse_vector(q.ring, args.x)
    y = _parse_vector(q.ring, args.y)
    val = bilinear(q, x, y)
    return _emit(args, [f"x.y = {val!r}"], {"value": jsonio.fraction_to_json(val)}, OK)


def _cmd_disc(args):
    q = _load_form(args)
    d = discriminant(q)
    payload = {"discriminant": jsonio.fraction_to_json(d)}
    lines = [f"disc = {d!r}"]
    if q.ring.kind == "FqT":
        payload["degree"] = discriminant_degree(q)
        lines.append(f"degree = {payload['degree']}")
    return _emit(args, lines, payload, OK)


def _cmd_is_euclidean(args):
    q = _load_form(args)
    verdict = is_euclidean(q)
    code = {EuclideanClass.EUCLIDEAN: OK,
            EuclideanClass.BOUNDARY_EUCLIDEAN: NEGATIVE,
            EuclideanClass.NOT_EUCLIDEAN: NEGATIVE,
            EuclideanClass.UNKNOWN: INCONCLUSIVE}[verdict]
    return _emit(args, [verdict.value], {"verdict": verdict.value}, code)


def _cmd_euclideanity(args):
    q = _load_form(args)
    report = euclideanity_search(q, args.denoms)
    kind = "exact" if report.value_kind == "exact" else f"lower bound at denominators <= {report.denom_bound}"
    lines = [f"E = {report.value} ({kind})", f"witness x = {report.witness!r}"]
    payload = {"kind": report.value_kind, "value": str(report.value),
               "witness": jsonio.vector_to_json(report.witness)}
    if report.denom_bound is not None:
        payload["denom_bound"] = report.denom_bound
    return _emit(args, lines, payload, OK if report.value_kind == "exact" else INCONCLUSIVE)


def _cmd_step(args):
    q = _load_form(args)
    x = _parse_vector(q.ring, args.x)
    y = euclidean_step_form(q, x)
    return _emit(args, [f"y = ({', '.join(repr(e) for e in y)})"],
                 {"y": [jsonio.element_to_json(e) for e in y]}, OK)


def _cmd_descend(args):
    q = _load_form(args)
    d = _parse_d(q.ring, args.d)
    w = witness_search(q, d, args.t_bound)
    if isinstance(w, NotFoundUpTo):
        return _emit(args, [f"no witness with t bound {w.bound}"],
                     {"status": "not_found_up_to", "bound": w.bound}, INCONCLUSIVE)
    trace = adc_descend(q, w)
    payload = {"witness": {"t": jsonio.element_to_json(w.t),
                           "xprime": [jsonio.element_to_json(e) for e in w.xprime]}}
    if args.trace:
        payload["trace"] = _trace_json(trace)
    if trace.succeeded:
        vec = ", ".join(repr(e) for e in trace.final)
        payload["vector"] = [jsonio.element_to_json(e) for e in trace.final]
        payload["steps"] = len(trace.steps)
        return _emit(args, [f"q(y) = {d!r} at y = ({vec}) after {len(trace.steps)} step(s)"],
                     payload, OK)
    payload["stalled"] = trace.stalled
    return _emit(args, [f"stalled: {trace.stalled}"], payload, INCONCLUSIVE)


def _cmd_witness(args):
    q = _load_form(args)
    d = _parse_d(q.ring, args.d)
    w = witness_search(q, d, args.t_bound)
    if isinstance(w, NotFoundUpTo):
        return _emit(args, [f"no witness with t bound {w.bound}"],
                     {"status": "not_found_up_to", "bound": w.bound}, INCONCLUSIVE)
    lines = [f"t = {w.t!r}", f"x' = ({', '.join(repr(e) for e in w.xprime)})"]
    return _emit(args, lines, {"t": jsonio.element_to_json(w.t),
                               "xprime": [jsonio.element_to_json(e) for e in w.xprime]}, OK)


def _cmd_represents(args):
    q = _load_form(args)
    d = _parse_d(q.ring, args.d)
    res = represents_integrally(q, d, box_bound=args.box_bound)
    if res.status == "yes":
        vec = ", ".join(repr(e) for e in res.vector)
        return _emit(args, [f"yes: q({vec}) = {d!r}"],
                     {"status": "yes", "vector": [jsonio.element_to_json(e) for e in res.vector]}, OK)
    if res.status == "no":
        return _emit(args, ["no"], {"status": "no"}, NEGATIVE)
    return _emit(args, [f"not represented within bound {res.bound}"],
                 {"status": "no_up_to", "bound": res.bound}, INCONCLUSIVE)


def _cmd_certify(args):
    q = _load_form(args)
    ok = non_adc_certificate_check(q, args.a, args.b)
    if ok:
        wit = represents_integrally(q, args.a * args.a * args.b)
        payload = {"a": args.a, "b": args.b,
                   "witness_a2b": [jsonio.element_to_json(e) for e in wit.vector]}
        return _emit(args, [f"({args.a}, {args.b}) certifies: represents {args.a ** 2 * args.b}, not {args.b}"],
                     payload, OK)
    return _emit(args, [f"({args.a}, {args.b}) is not a certificate"], {"certificate": False}, NEGATIVE)


def _cmd_certify_search(args):
    q = _load_form(args)
    res = non_adc_certificate_search(q, args.a_bound, args.b_bound)
    if isinstance(res, NotFoundUpTo):
        return _emit(args, [f"no certificate with a <= {args.a_bound}, b <= {args.b_bound}"],
                     {"status": "not_found_up_to", "bound": res.bound}, INCONCLUSIVE)
    a, b = res
    return _emit(args, [f"certificate (a, b) = ({a}, {b})"], {"a": a, "b": b}, OK)


def _parse_range(text):
    lo, _, hi = text.partition(":")
    return range(int(lo), int(hi) + 1)


def _cmd_audit_adc(args):
    q = _load_form(args)
    report = is_adc_empirical(q, _parse_range(args.d_range), args.t_bound)
    lines = [f"checked {report.checked}, rationally represented {report.witnessed}",
             f"violations: {list(report.violations)}"]
    payload = {"checked": report.checked, "witnessed": report.witnessed,
               "violations": [str(v) for v in report.violations],
               "inconclusive": [str(v) for v in report.inconclusive]}
    return _emit(args, lines, payload, OK if report.clean else NEGATIVE)


def _strip_fours(n):
    a = 0
    while n % 4 == 0 and n > 0:
        n //= 4
        a += 1
    return a, n


def _cmd_three_squares(args):
    n = args.n
    if not three_squares_predicate(n):
        a, rest = _strip_fours(n) if n > 0 else (0, n)
        k = (rest - 7) // 8
        return _emit(args, [f"impossible: {n} = 4^{a}(8*{k}+7)"],
                     {"status": "impossible", "a": a, "k": k}, NEGATIVE)
    vec = sum_three_squares(n, t_bound=args.t_bound)
    a, b, c = vec
    return _emit(args, [f"{n} = {a}^2 + {b}^2 + {c}^2"],
                 {"status": "ok", "vector": list(vec)}, OK)


def _cmd_local(args):
    q = _load_form(args)
    d = int(args.d)
    rows = [real_place_verdict(q, d)]
    if args.p:
        rows.append(zp_represents_diagonal(q, d, args.p))
    lines = [f"{v.place:8} {v.represents:14} {v.evidence}" for v in rows]
    payload = {"verdicts": [{"place": v.place, "represents": v.represents,
                             "evidence": str(v.evidence)} for v in rows]}
    worst = max(rows, key=lambda v: {"yes": 0, "no": 1, "inconclusive": 2}[v.represents])
    code = {"yes": OK, "no": NEGATIVE, "inconclusive": INCONCLUSIVE}[worst.represents]
    return _emit(args, lines, payload, code)


def _cmd_check_290(args):
    q = _load_form(args)
    ok = sign_universal_check_290(q)
    return _emit(args, ["represents 1..290" if ok else "fails in 1..290"],
                 {"passes": ok}, OK if ok else NEGATIVE)


def _cmd_classify_diagonal(args):
    tuples = classify_euclidean_diagonal_z()
    lines = [",".join(str(a) for a in t) for t in tuples]
    return _emit(args, lines, {"coefficients": [list(t) for t in tuples]}, OK)


def _cmd_maximality(args):
    q = _load_form(args)
    verdict = maximality_special_z(q)
    code = {Maximality.MAXIMAL: OK, Maximality.NOT_MAXIMAL: NEGATIVE,
            Maximality.UNKNOWN: INCONCLUSIVE}[verdict]
    return _emit(args, [verdict.value], {"verdict": verdict.value}, code)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adcforms",
        description="Exact computations with Euclidean quadratic forms")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, form=True, **flags):
        p = sub.add_parser(name)
        p.set_defaults(handler=handler)
        p.add_argument("--json", action="store_true")
        p.add_argument("--seed", type=int, default=0,
                       help="reserved for randomized sweeps; output is deterministic")
        if form:
            p.add_argument("--form")
            p.add_argument("--fixture")
            p.add_argument("--file")
        for flag, kw in flags.items():
            p.add_argument(flag, **kw)
        return p

    add("eval", _cmd_eval, **{"--x": dict(required=True)})
    add("bilinear", _cmd_bilinear, **{"--x": dict(required=True), "--y": dict(required=True)})
    add("disc", _cmd_disc)
    add("is-euclidean", _cmd_is_euclidean)
    add("euclideanity", _cmd_euclideanity, **{"--denoms": dict(type=int, default=2)})
    add("step", _cmd_step, **{"--x": dict(required=True)})
    add("descend", _cmd_descend, **{"--d": dict(required=True),
                                    "--t-bound": dict(type=int, default=16),
                                    "--trace": dict(action="store_true")})
    add("witness", _cmd_witness, **{"--d": dict(required=True),
                                    "--t-bound": dict(type=int, default=16)})
    add("represents", _cmd_represents, **{"--d": dict(required=True),
                                          "--box-bound": dict(type=int, default=None)})
    add("certify", _cmd_certify, **{"--a": dict(type=int, required=True),
                                    "--b": dict(type=int, required=True)})
    add("certify-search", _cmd_certify_search, **{"--a-bound": dict(type=int, default=5),
                                                  "--b-bound": dict(type=int, default=20)})
    add("audit-adc", _cmd_audit_adc, **{"--d-range": dict(required=True),
                                        "--t-bound": dict(type=int, default=10)})
    p3 = add("three-squares", _cmd_three_squares, form=False,
             **{"--t-bound": dict(type=int, default=32)})
    p3.add_argument("n", type=int)
    add("local", _cmd_local, **{"--d": dict(required=True), "--p": dict(type=int)})
    add("check-290", _cmd_check_290)
    add("classify-diagonal", _cmd_classify_diagonal, form=False)
    add("maximality", _cmd_maximality)
    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.handler(args)
    except SearchExhausted as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return INCONCLUSIVE
    except EnumerationBudgetExceeded as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return INCONCLUSIVE
    except (AdcError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
