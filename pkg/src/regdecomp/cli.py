"""Command-line entry point: ``regdecomp <session-file> [options]``.

Exit codes: 0 success, 1 negative mathematical verdict, 2 input error,
3 computation budget (or search cap) exceeded.
"""

from __future__ import annotations

import argparse
import itertools
import os
import sys
import time
from typing import List, Optional

from . import report as rp
from .errors import (
    ArtinReesCapExceeded,
    BudgetExceededError,
    ContainmentBoundExceeded,
    RegdecompError,
    SessionError,
)
from .groebner import set_budget
from .ideals import Ideal
from .lab import (
    DEFAULT_CCAP,
    DEFAULT_HMAX,
    artin_rees_constant,
    decompose_power,
    power_sweep,
    power_vectors,
    sweep,
)
from .monomial import MonomialIdeal, MonomialPrime
from .regseq import (
    NotRegularSequenceError,
    PowerVector,
    RegularSequence,
    colon_identity_check,
    is_permutable_regular_sequence,
    is_regular_sequence,
)
from .ring import Polynomial
from .session import Command, Ref, SessionInput, format_command, parse_session

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

ALLOWED_PARAMS = {
    "check-regseq": {"bound"},
    "decompose": {"n"},
    "sweep": {"total"},
    "power-sweep": {"n"},
    "artin-rees": {"P", "hmax", "ccap"},
    "colon-check": {"n", "i", "total"},
}


class _Negative(Exception):
    """Carries the payload of a negative verdict up to :func:`run`."""

    def __init__(self, payload):
        super().__init__()
        self.payload = payload


def _int_param(cmd: Command, name: str, default=None):
    value = cmd.param(name, default)
    if value is None:
        raise SessionError(f"{cmd.name} needs parameter {name}")
    if not isinstance(value, int):
        raise SessionError(f"parameter {name} must be an integer")
    return value


def _polys(session: SessionInput, value, kinds) -> List[Polynomial]:
    if isinstance(value, Ref):
        b = session.binding(value.name)
        if b.kind not in kinds:
            raise SessionError(f"{value.name!r} is a {b.kind}; expected {' or '.join(kinds)}")
        value = b.value
    if isinstance(value, Polynomial):
        return [value]
    if isinstance(value, tuple) and all(isinstance(v, Polynomial) for v in value):
        return list(value)
    raise SessionError("expected polynomials")


def _sequence(session, cmd) -> RegularSequence:
    xs = _polys(session, cmd.target, ("seq",))
    try:
        return RegularSequence.validate(xs)
    except NotRegularSequenceError as exc:
        raise _Negative({"kind": cmd.name, "sequence": [str(x) for x in xs],
                         "regular": rp.regularity_json(exc.verdict)}) from None


def _permutable(session, cmd) -> RegularSequence:
    xs = _sequence(session, cmd)
    if not xs.permutable:
        raise _Negative({"kind": cmd.name, "sequence": [str(x) for x in xs.elements],
                         "regular": rp.regularity_json(is_regular_sequence(xs.elements)),
                         "permutable": rp.permutability_json(xs.permutation_verdict)})
    return xs


def _power_vector(cmd, t) -> PowerVector:
    n = cmd.param("n")
    if isinstance(n, int):
        n = (n,)
    if not isinstance(n, tuple) or not all(isinstance(k, int) for k in n):
        raise SessionError(f"{cmd.name} needs n=(n1,...,nt) with integer entries")
    if len(n) != t:
        raise SessionError(f"n has {len(n)} entries but the sequence has {t}")
    return PowerVector(n)


def _check_regseq(session, cmd, opts):
    xs = _polys(session, cmd.target, ("seq",))
    reg = is_regular_sequence(xs)
    payload = {"kind": cmd.name, "sequence": [str(x) for x in xs],
               "regular": rp.regularity_json(reg), "permutable": None}
    if not reg:
        return payload, EXIT_NEGATIVE
    perm = is_permutable_regular_sequence(xs, _int_param(cmd, "bound", 6))
    payload["permutable"] = rp.permutability_json(perm)
    return payload, EXIT_OK if perm else EXIT_NEGATIVE


def _decompose(session, cmd, opts):
    xs = _permutable(session, cmd)
    row = decompose_power(xs, _power_vector(cmd, xs.t))
    return {"kind": cmd.name, "sequence": [str(x) for x in xs.elements],
            "rows": [rp.row_json(row)]}, EXIT_OK


def _sweep(session, cmd, opts):
    xs = _permutable(session, cmd)
    rep = sweep(xs, _int_param(cmd, "total"), workers=opts["workers"])
    return rp.sweep_json(rep, cmd.name), EXIT_OK


def _power_sweep(session, cmd, opts):
    gens = _polys(session, cmd.target, ("ideal", "seq"))
    try:
        I = MonomialIdeal.of(session.ring, gens)
    except ValueError as exc:
        raise SessionError(f"power-sweep needs a monomial ideal: {exc}") from None
    rep = power_sweep(I, _int_param(cmd, "n"), workers=opts["workers"])
    return rp.sweep_json(rep, cmd.name), EXIT_OK


def _artin_rees(session, cmd, opts):
    (x,) = _polys(session, cmd.target, ("let",))
    gens = cmd.param("P")
    if gens is None:
        raise SessionError("artin-rees needs P=(...)")
    gens = _polys(session, gens if isinstance(gens, tuple) else (gens,), ("ideal",))
    ring = session.ring
    if all(g.is_monomial() and sum(g.terms[0][1]) == 1 and g.terms[0][0] == ring.field.one
           for g in gens):
        P = MonomialPrime(ring, tuple(g.terms[0][1].index(1) for g in gens))
    else:
        P = Ideal(ring, gens)
    rep = artin_rees_constant(x, P, _int_param(cmd, "hmax", opts["hmax"]),
                              _int_param(cmd, "ccap", DEFAULT_CCAP))
    return rp.artin_rees_json(rep), EXIT_OK


def _colon_check(session, cmd, opts):
    xs = _permutable(session, cmd)
    if cmd.param("n") is not None:
        vectors = [_power_vector(cmd, xs.t)]
    else:
        vectors = list(power_vectors(xs.t, _int_param(cmd, "total")))
    i = cmd.param("i")
    indices = [i] if i is not None else list(range(1, xs.t + 1))
    if not all(isinstance(k, int) and 1 <= k <= xs.t for k in indices):
        raise SessionError(f"i must be an integer in 1..{xs.t}")
    checks = [{"n": list(n.entries), "i": k, "holds": colon_identity_check(xs, n, k)}
              for n, k in itertools.product(vectors, indices)]
    failures = sum(not c["holds"] for c in checks)
    payload = {"kind": cmd.name, "sequence": [str(x) for x in xs.elements],
               "checks": checks, "failures": failures, "all_hold": failures == 0}
    return payload, EXIT_OK if failures == 0 else EXIT_NEGATIVE


HANDLERS = {
    "check-regseq": _check_regseq,
    "decompose": _decompose,
    "sweep": _sweep,
    "power-sweep": _power_sweep,
    "artin-rees": _artin_rees,
    "colon-check": _colon_check,
}


def _error_payload(exc) -> dict:
    payload = {"kind": "error", "error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ArtinReesCapExceeded):
        payload["h"] = exc.h
    return payload


def run(session: SessionInput, hmax: int = DEFAULT_HMAX, workers: int = 1) -> rp.ReportDocument:
    """Execute the session's command and wrap the outcome in a report."""
    cmd = session.command
    start = time.perf_counter()
    opts = {"hmax": hmax, "workers": workers}
    try:
        unknown = {p.name for p in cmd.params} - ALLOWED_PARAMS[cmd.name]
        if unknown:
            raise SessionError(f"{cmd.name} does not take parameter(s) {', '.join(sorted(unknown))}")
        payload, code = HANDLERS[cmd.name](session, cmd, opts)
    except _Negative as neg:
        payload, code = neg.payload, EXIT_NEGATIVE
    except (BudgetExceededError, ArtinReesCapExceeded, ContainmentBoundExceeded) as exc:
        payload, code = _error_payload(exc), EXIT_BUDGET
    except (RegdecompError, ValueError, IndexError, KeyError) as exc:
        payload, code = _error_payload(exc), EXIT_INPUT
    return rp.ReportDocument(format_command(cmd), payload, code, time.perf_counter() - start)


def _budget_from(args) -> Optional[int]:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("REGDECOMP_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise SessionError(f"REGDECOMP_BUDGET={env!r} is not an integer") from None
    return None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regdecomp",
        description="Primary decompositions of powers of regular sequences and uniform-bound experiments.")
    parser.add_argument("session", help="session file, or - for stdin")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--out", help="write the report here instead of stdout")
    parser.add_argument("--budget", type=int, help="max S-pairs per Groebner basis (env REGDECOMP_BUDGET)")
    parser.add_argument("--hmax", type=int, default=DEFAULT_HMAX, help="default h_max for artin-rees")
    parser.add_argument("--threads", type=int, default=1, help="worker processes for sweeps")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        budget = _budget_from(args)
        if budget is not None:
            set_budget(budget)
        if args.session == "-":
            text = sys.stdin.read()
        else:
            with open(args.session, encoding="utf-8") as fh:
                text = fh.read()
        session = parse_session(text)
    except (OSError, RegdecompError, ValueError) as exc:
        doc = rp.ReportDocument("", _error_payload(exc), EXIT_INPUT)
    else:
        doc = run(session, hmax=args.hmax, workers=max(1, args.threads))
    if doc.exit_code in (EXIT_INPUT, EXIT_BUDGET):
        print(f"regdecomp: {doc.payload.get('message', '')}", file=sys.stderr)
    text = rp.emit(doc, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return doc.exit_code


if __name__ == "__main__":
    sys.exit(main())
