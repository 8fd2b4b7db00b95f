"""Command-line front end.

Every command prints a short human-readable report, a delimiter line, and a
canonical JSON section (sorted keys). Exit codes: 0 success, 1 usage error,
2 invalid data, 3 oracle or fixture mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Sequence

from .descent import (
    DescentResult,
    _lift_char,
    brute_force_descent,
    descent_set,
    first_occurrence_param,
    phi_sgn,
)
from .errors import DescentError, SessionError
from .field_model import FieldModel, hilbert_symbol
from .fixtures import (
    random_cuspidal,
    random_mixed_universe,
    so5_unipotent,
    so7_cases,
    top_normalized,
    unipotent_params,
)
from .lparam import LParameter, SimpleParam, all_characters
from .quadratic_spaces import (
    OrbitChoice,
    QSpace,
    descent_space,
    from_diagonal,
    is_realizable,
    witt_index,
)
from .rootnum import E_block, E_pair, chi_star, eps_block_pair
from .session import Session, load_session
from .spectral import (
    first_occurrence_rep,
    make_repr,
    multiplicity,
    spectral_all_orbits,
    spectral_decomposition,
    wavefront_p1,
)

DELIMITER = "--- structured ---"
EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        raise UsageError(message)


class Report:
    def __init__(self, command: str):
        self.command = command
        self.lines: list[str] = []
        self.data: dict[str, Any] = {}
        self.exit_code = EXIT_OK

    def say(self, line: str = "") -> None:
        self.lines.append(line)

    def render(self) -> str:
        payload = {"command": self.command, "status": "ok" if self.exit_code == 0 else
                   ("mismatch" if self.exit_code == EXIT_MISMATCH else "error")}
        payload.update(self.data)
        body = json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
        return "\n".join([*self.lines, DELIMITER, body]) + "\n"


# -- helpers ------------------------------------------------------------------

def _session(args) -> Session:
    if not args.session:
        raise UsageError("this command needs --session FILE")
    return load_session(args.session)


def _field(args) -> FieldModel:
    if getattr(args, "p", None) is not None:
        return FieldModel.qp(args.p)
    return _session(args).field


def _descent_dict(r: DescentResult) -> dict:
    return r.as_dict()


def _describe(rep: Report, r: DescentResult, title: str) -> None:
    rep.say(f"{title}: ell0 = {r.ell0}")
    for c in r.classes:
        extra = " (class splits under c)" if c.c_splits else ""
        rep.say(f"  {c.param}{extra}")
    if r.exhausted_universe:
        rep.say("  note: the universe is too small to decide this; result is relative to it")
    if r.conventional:
        rep.say("  note: trivial character, the conventional top index")


def _block_arg(s: Session, text: str) -> SimpleParam:
    label, _, b = text.rpartition(":")
    if not label or not b.isdigit():
        raise UsageError(f"a block is written LABEL:b, got {text!r}")
    return SimpleParam(s.universe[label], int(b))


# -- commands -------------------------------------------------------------------

def cmd_hilbert(args, rep: Report) -> None:
    f = _field(args)
    a, b = f.cls(args.a), f.cls(args.b)
    v = hilbert_symbol(a, b)
    rep.say(f"({a.name}, {b.name}) = {v:+d}")
    rep.data["result"] = {"a": a.name, "b": b.name, "value": v}


def cmd_qspace(args, rep: Report) -> None:
    f = _field(args)
    if args.diag:
        V = from_diagonal([f.cls(x) for x in args.diag.split(",")])
    elif args.space:
        dim, disc, hasse = args.space
        V = QSpace(int(dim), f.cls(disc), int(hasse))
    else:
        raise UsageError("give --diag a,b,... or --space DIM DISC HASSE")
    out: dict[str, Any] = {"space": V.as_dict(), "realizable": is_realizable(V)}
    rep.say(f"space {V}: {'realizable' if out['realizable'] else 'not realizable'}")
    if out["realizable"] and V.dim > 0:
        w = witt_index(V)
        out["witt_index"], out["anisotropic_dim"] = w.witt, w.aniso_dim
        rep.say(f"  Witt index {w.witt}, anisotropic kernel of dim {w.aniso_dim}")
    if args.orbit:
        ell, d = args.orbit
        W = descent_space(V, OrbitChoice(int(ell), f.cls(d)))
        out["descent_space"] = W.as_dict()
        rep.say(f"  complement of the orbit (ell={ell}, disc={d}): {W}")
    rep.data["result"] = out


def cmd_epsilon(args, rep: Report) -> None:
    s = _session(args)
    x, y = _block_arg(s, args.left), _block_arg(s, args.right)
    eps = eps_block_pair(x, y, s.universe)
    out = {"left": [x.rho.label, x.b], "right": [y.rho.label, y.b], "epsilon": eps}
    rep.say(f"epsilon({x} x {y}) = {eps:+d}")
    if {x.block_type.value, y.block_type.value} == {"orthogonal", "symplectic"}:
        out["E"] = E_block(x, y, s.universe)
        rep.say(f"normalized E = {out['E']:+d}")
    rep.data["result"] = out


def cmd_chi_star(args, rep: Report) -> None:
    s = _session(args)
    phi, vphi = s.param(args.param), s.param(args.other)
    fast = chi_star(phi, vphi, s.universe, "fast")
    slow = chi_star(phi, vphi, s.universe, "slow")
    agree = fast == slow
    rep.say(f"chi*_phi  = {fast[0]}")
    rep.say(f"chi*_vphi = {fast[1]}")
    rep.say(f"E(phi, vphi) = {E_pair(phi, vphi, s.universe):+d}")
    rep.say(f"closed form and block product {'agree' if agree else 'DISAGREE'}")
    rep.data["result"] = {"chi_star_phi": fast[0].as_list(), "chi_star_other": fast[1].as_list(),
                          "E": E_pair(phi, vphi, s.universe), "paths_agree": agree}
    if not agree:
        rep.exit_code = EXIT_MISMATCH


def _oracle_diff(rep: Report, s: Session, phi: LParameter, chi, max_dim) -> None:
    theo = first_occurrence_param(phi, chi, s.universe)
    brute = brute_force_descent(phi, chi, s.universe, max_dim)
    agree = (theo.ell0, theo.params()) == (brute.ell0, brute.params())
    rep.say(f"oracle (exhaustive search): {'agree' if agree else 'MISMATCH'}")
    rep.data["oracle"] = {"agree": agree, "brute_force": brute.as_dict()}
    if not agree:
        _describe(rep, brute, "  exhaustive search")
        rep.exit_code = EXIT_MISMATCH


def cmd_descend(args, rep: Report) -> None:
    s = _session(args)
    phi = s.param(args.param)
    chi = s.char(args.char, args.param)
    base = first_occurrence_param(phi, chi, s.universe)
    r = base if args.ell is None else descent_set(phi, chi, args.ell, s.universe)
    rep.say(f"phi = {phi}")
    rep.say(f"chi = {chi}")
    sg = phi_sgn(*_lift_char(phi, chi))
    rep.say(f"phi_sgn = {sg}")
    _describe(rep, r, "descent" if args.ell is None else f"descent at ell = {args.ell}")
    rep.data["result"] = _descent_dict(r)
    rep.data["ell0"] = base.ell0
    rep.data["phi_sgn"] = sg.as_list()
    if args.oracle:
        _oracle_diff(rep, s, phi, chi, args.max_dim)


def cmd_first_occurrence(args, rep: Report) -> None:
    s = _session(args)
    if args.rep:
        pi = s.rep(args.rep)
        occ = first_occurrence_rep(pi, s.universe)
        rep.say(f"pi on {pi.space}: ell0 = {occ.ell0} (orbit index {occ.orbit_ell})")
        rep.data["result"] = occ.as_dict()
        return
    if not (args.param and args.char):
        raise UsageError("give --rep NAME, or --param NAME --char NAME")
    phi, chi = s.param(args.param), s.char(args.char, args.param)
    r = first_occurrence_param(phi, chi, s.universe)
    _describe(rep, r, "first occurrence")
    rep.data["result"] = r.as_dict()
    if args.oracle:
        _oracle_diff(rep, s, phi, chi, args.max_dim)


def cmd_spectral(args, rep: Report) -> None:
    s = _session(args)
    pi = s.rep(args.rep)
    if args.all_orbits:
        decs = spectral_all_orbits(pi, s.universe)
    elif args.disc_O is not None:
        decs = [spectral_decomposition(pi, s.field.cls(args.disc_O), s.universe)]
    else:
        raise UsageError("give --disc-O CLASS or --all-orbits")
    occ = first_occurrence_rep(pi, s.universe)
    rep.say(f"pi on {pi.space}, parameter {pi.param}; ell0 = {occ.ell0}")
    for d in decs:
        tag = "?" if d.orbit is None else d.orbit.disc_O.name
        rep.say(f"orbit disc {tag}: {d.reason}" + (f", target {d.target}" if d.target else ""))
        for x in d.summands:
            norm = "" if x.normalizer_a is None else f", normalizer {x.normalizer_a.name}"
            rep.say(f"  {x.param} with {x.char} on {x.space}{norm}")
        for msg in d.discrepancies:
            rep.say(f"  discrepancy: {msg}")
    rep.data["result"] = {"ell0": occ.ell0, "orbits": [d.as_dict() for d in decs]}


def cmd_multiplicity(args, rep: Report) -> None:
    s = _session(args)
    pi, sigma = s.rep(args.rep), s.rep(args.other)
    m = multiplicity(pi, sigma, s.universe)
    rep.say(f"m({args.rep}, {args.other}) = {m}")
    rep.data["result"] = {"multiplicity": m}


def cmd_wavefront(args, rep: Report) -> None:
    s = _session(args)
    pi = s.rep(args.rep)
    w = wavefront_p1(pi, s.universe, conjectural=args.conjectural)
    rep.say(f"p1 = {w['p1']} (conjectural)")
    if w["partition"]:
        rep.say(f"partition {w['partition']}")
    rep.data["result"] = w


def cmd_check_oracle(args, rep: Report) -> None:
    s = _session(args)
    total = bad = 0
    rows = []
    for name in sorted(s.params):
        phi = s.params[name]
        if phi.dim % 2 or not phi.good_parity():
            continue
        for chi in all_characters(phi, "S"):
            theo = first_occurrence_param(phi, chi, s.universe)
            brute = brute_force_descent(phi, chi, s.universe, args.max_dim)
            ok = (theo.ell0, theo.params()) == (brute.ell0, brute.params())
            total += 1
            bad += not ok
            rows.append({"param": name, "char": chi.as_list(), "ell0": theo.ell0, "agree": ok})
    rep.say(f"checked {total} (parameter, character) pairs: {total - bad} agree, {bad} differ")
    rep.data["result"] = {"checked": total, "mismatches": bad, "rows": rows,
                          "oracle_pairs": len(s.universe.oracle.items())}
    if bad:
        rep.exit_code = EXIT_MISMATCH


def _fixture_so7(rep: Report) -> bool:
    U, cases = so7_cases()
    ok_all = True
    rows = []
    for c in cases:
        pi = make_repr(c.param, c.char, disc=U.field.one)
        occ = first_occurrence_rep(pi, U)
        w = wavefront_p1(pi, U, conjectural=True)
        ok = (occ.ell0 >= c.ell0) if c.ell0_is_lower_bound else (occ.ell0 == c.ell0)
        if c.partition is not None:
            ok &= w["partition"] == list(c.partition)
        ok_all &= ok
        bound = ">=" if c.ell0_is_lower_bound else "="
        rep.say(f"{c.label:<18} hasse {pi.space.hasse:+d}  ell0 {occ.ell0} "
                f"(expected {bound} {c.ell0})  partition {w['partition']}  "
                f"{'ok' if ok else 'FAIL'}")
        rows.append({"case": c.label, "ell0": occ.ell0, "expected": c.ell0,
                     "lower_bound": c.ell0_is_lower_bound, "partition": w["partition"],
                     "ok": ok})
    rep.data["so7"] = rows
    return ok_all


def _fixture_so5(rep: Report) -> bool:
    U, phi, chi = so5_unipotent()
    r = first_occurrence_param(phi, chi, U)
    b = brute_force_descent(phi, chi, U)
    ok = r.ell0 == 1 and [str(p) for p in r.params()] == ["chi_1[1] + chi_u[1]"]
    ok &= (b.ell0, b.params()) == (r.ell0, r.params())
    rep.say(f"SO(5) unipotent {phi}, {chi}: ell0 {r.ell0}, descent "
            f"{[str(p) for p in r.params()]}  {'ok' if ok else 'FAIL'}")
    rep.data["so5_unipotent"] = {"result": r.as_dict(), "ok": ok}
    return ok


def _fixture_unipotent(rep: Report) -> bool:
    ok_all, n = True, 0
    for p in (5, 2):
        U, params = unipotent_params(p, 14)
        for phi in params:
            for chi in all_characters(phi, "S"):
                if not top_normalized(phi, chi):
                    continue
                n += 1
                r = first_occurrence_param(phi, chi, U)
                ok_all &= r.params() == [phi_sgn(phi, chi)]
    rep.say(f"unipotent parameters (dim <= 14, p = 5, 2): {n} normalized cases, "
            f"descent = phi_sgn {'in all' if ok_all else 'NOT in all'}")
    rep.data["unipotent"] = {"cases": n, "ok": ok_all}
    return ok_all


def _fixture_cuspidal(rep: Report) -> bool:
    import random

    rng = random.Random(20240101)
    n = bad = 0
    while n < 100:
        U = random_mixed_universe(rng)
        c = random_cuspidal(rng, U)
        if c is None:
            continue
        n += 1
        r = first_occurrence_param(c.param, c.char, U)
        bad += (r.ell0, r.params()) != (c.expected_ell0, [c.expected_sgn])
    rep.say(f"cuspidal shapes: {n} random cases, {bad} differ from the closed formula")
    rep.data["cuspidal"] = {"cases": n, "mismatches": bad}
    return bad == 0


FIXTURES: dict[str, Callable[[Report], bool]] = {
    "so7": _fixture_so7,
    "so5-unipotent": _fixture_so5,
    "unipotent": _fixture_unipotent,
    "cuspidal": _fixture_cuspidal,
}


def cmd_fixtures(args, rep: Report) -> None:
    names = sorted(FIXTURES) if args.name == "all" else [args.name]
    ok = True
    for name in names:
        ok &= FIXTURES[name](rep)
    if not ok:
        rep.exit_code = EXIT_MISMATCH


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--session", help="session file (JSON)")
    common.add_argument("--max-dim", type=int, default=None,
                        help="dimension bound for the exhaustive search")
    p = _Parser(prog="lpdescent", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version="lpdescent 0.1.0")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn, helptext: str):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.set_defaults(func=fn)
        return sp

    sp = add("hilbert", cmd_hilbert, "Hilbert symbol of two square classes")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--p", type=int, help="use Q_p instead of a session field")

    sp = add("qspace", cmd_qspace, "invariants, Witt index and orbit complements")
    sp.add_argument("--p", type=int)
    sp.add_argument("--diag", help="comma-separated diagonal entries")
    sp.add_argument("--space", nargs=3, metavar=("DIM", "DISC", "HASSE"))
    sp.add_argument("--orbit", nargs=2, metavar=("ELL", "DISC_O"))

    sp = add("epsilon", cmd_epsilon, "root number of a pair of blocks")
    sp.add_argument("--left", required=True, metavar="LABEL:b")
    sp.add_argument("--right", required=True, metavar="LABEL:b")

    sp = add("chi-star", cmd_chi_star, "distinguished characters of a parameter pair")
    sp.add_argument("--param", required=True)
    sp.add_argument("--other", required=True)

    sp = add("descend", cmd_descend, "descent of a parameter with a character")
    sp.add_argument("--param", required=True)
    sp.add_argument("--char", required=True)
    sp.add_argument("--ell", type=int)
    sp.add_argument("--oracle", action="store_true", help="diff against exhaustive search")

    sp = add("first-occurrence", cmd_first_occurrence, "first occurrence index")
    sp.add_argument("--param")
    sp.add_argument("--char")
    sp.add_argument("--rep")
    sp.add_argument("--oracle", action="store_true")

    sp = add("spectral", cmd_spectral, "spectral decomposition of the descent")
    sp.add_argument("--rep", required=True)
    sp.add_argument("--disc-O", dest="disc_O")
    sp.add_argument("--all-orbits", action="store_true")

    sp = add("multiplicity", cmd_multiplicity, "multiplicity of a relevant pair")
    sp.add_argument("--rep", required=True)
    sp.add_argument("--other", required=True)

    sp = add("wavefront", cmd_wavefront, "largest part of the wave-front partition")
    sp.add_argument("--rep", required=True)
    sp.add_argument("--conjectural", action="store_true",
                    help="acknowledge that the output rests on a conjecture")

    add("check-oracle", cmd_check_oracle,
        "compare the closed-form descent with exhaustive search on every session parameter")

    sp = add("fixtures", cmd_fixtures, "run the built-in worked examples")
    sp.add_argument("name", choices=[*sorted(FIXTURES), "all"])
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        rep = Report("usage")
        rep.exit_code = EXIT_USAGE
        rep.say(f"usage error: {exc}")
        rep.data.update({"code": "E_USAGE", "message": str(exc)})
        out.write(rep.render())
        return EXIT_USAGE
    rep = Report(args.command)
    try:
        args.func(args, rep)
    except UsageError as exc:
        rep = Report(args.command)
        rep.exit_code = EXIT_USAGE
        rep.say(f"usage error: {exc}")
        rep.data.update({"code": "E_USAGE", "message": str(exc)})
    except DescentError as exc:
        rep = Report(args.command)
        rep.exit_code = EXIT_DATA
        rep.say(f"error [{exc.code}]: {exc}")
        rep.data.update({"code": exc.code, "message": str(exc)})
    out.write(rep.render())
    return rep.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
