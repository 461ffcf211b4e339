"""``tourlab`` command line: one subcommand per library operation.

Exit codes: 0 success, 1 domain error (bad input, capacity, structure),
2 usage error, 3 a verification failure or a broken internal identity.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Callable, Sequence

from . import __version__
from .blowup import blowup_det_formula, transitive_blowup
from .classify import BlowupCertificate, classify, six_profile
from .core import Tournament, format_trn, parse_trn, read_trn, to_bits, write_trn
from .diamonds import diamond_census
from .errors import InvariantViolation
from .linalg import determinant, format_matrix, parse_matrix, pfaffian
from .lnfamily import ln_det, make_ln, q_value
from .patterns import psi
from .switching import switch, switching_equivalent_labeled
from .verify import CLAIMS, ClaimConfig, census, default_threads, run_claim

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class _Failure(Exception):
    """Raised by a command to exit 3 after printing its report."""


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _vertex_set(values: Sequence[int]) -> str:
    return " ".join(str(v) for v in sorted(values)) or "-"


def _emit_trn(t: Tournament, out: str | None) -> str:
    if out:
        write_trn(out, t)
        return f"wrote {out}"
    return format_trn(t).rstrip("\n")


def _certificate_dict(cert: BlowupCertificate) -> dict:
    return {
        "base": cert.base_kind,
        "switch_set": sorted(cert.switch_set),
        "parts": [list(p) for p in cert.parts],
    }


def _certificate_lines(cert: BlowupCertificate) -> list[str]:
    lines = [f"base: {cert.base_kind}", f"switch: {_vertex_set(cert.switch_set)}"]
    lines += [f"part {k}: {' '.join(map(str, p))}" for k, p in enumerate(cert.parts, 1)]
    return lines


# -- commands ----------------------------------------------------------------
# Each returns (human text, json-able payload).


def cmd_det(a):
    d = determinant(read_trn(a.file))
    return str(d), {"det": d}


def cmd_pfaffian(a):
    p = pfaffian(read_trn(a.file))
    return str(p), {"pfaffian": p}


def cmd_diamonds(a):
    c = diamond_census(read_trn(a.file))
    lines = [f"delta: {c.delta}"]
    if a.witnesses:
        lines += [" ".join(map(str, sorted(w))) for w in c.witnesses]
    return "\n".join(lines), {"delta": c.delta, "witnesses": [sorted(w) for w in c.witnesses]}


def cmd_psi(a):
    p = psi(read_trn(a.file), a.vertex, a.set)
    return str(p), {"alphas": list(p.alphas), "blocks": [list(b) for b in p.blocks]}


def cmd_switch(a):
    t = switch(read_trn(a.file), a.set)
    return _emit_trn(t, a.out), {"n": t.n, "bits": to_bits(t)}


def cmd_switch_equiv(a):
    w = switching_equivalent_labeled(read_trn(a.first), read_trn(a.second))
    if w is None:
        return "not switching equivalent", {"equivalent": False, "switch_set": None}
    return f"W: {_vertex_set(w)}", {"equivalent": True, "switch_set": sorted(w)}


def cmd_blowup(a):
    t = transitive_blowup(read_trn(a.base), a.counts)
    return _emit_trn(t, a.out), {"n": t.n, "bits": to_bits(t)}


def cmd_blowup_det(a):
    base = read_trn(a.base)
    value = blowup_det_formula(base, a.counts)
    payload = {"det": value}
    if a.check:
        direct = determinant(transitive_blowup(base, a.counts))
        payload["direct"] = direct
        if direct != value:
            raise InvariantViolation(f"formula {value} != direct {direct}")
    return str(value), payload


def cmd_ln(a):
    t = make_ln(a.n)
    return _emit_trn(t, a.out), {"n": t.n, "bits": to_bits(t)}


def cmd_ln_det(a):
    d = ln_det(a.n)
    return str(d), {"n": a.n, "det": d}


def cmd_q(a):
    q = q_value(a.m)
    return str(q), {"m": a.m, "q": q}


def cmd_classify(a):
    res = classify(read_trn(a.file))
    lines = [f"level: {res.level}", f"witness: {_vertex_set(res.witness_subset)}"]
    payload = {"level": res.level, "witness": sorted(res.witness_subset)}
    if a.certificate:
        if res.certificate is None:
            lines.append("certificate: none")
            payload["certificate"] = None
        else:
            lines.append("certificate:")
            lines += ["  " + s for s in _certificate_lines(res.certificate)]
            payload["certificate"] = _certificate_dict(res.certificate)
    return "\n".join(lines), payload


def cmd_six_profile(a):
    d, det = six_profile(read_trn(a.file))
    return f"delta: {d}\ndet: {det}", {"delta": d, "det": det}


def cmd_verify(a):
    ids = list(CLAIMS) if a.all else a.claims
    if not ids:
        raise argparse.ArgumentTypeError("name at least one claim or pass --all")
    unknown = [c for c in ids if c not in CLAIMS]
    if unknown:
        raise ValueError(f"unknown claim id(s): {', '.join(unknown)}")
    cfg = ClaimConfig(seed=a.seed, samples=a.samples, exhaustive_max=a.exhaustive_max,
                      threads=a.threads)
    lines, payload, failed = [], [], False
    for cid in ids:
        rep = run_claim(cid, cfg)
        d = rep.to_dict()
        if not rep.passed:
            failed = True
            path = Path(a.counterexample_dir) / f"{cid}.counterexample.trn"
            write_trn(path, rep.counterexample)
            d["counterexample_path"] = str(path)
        payload.append(d)
        head = f"PASS ({rep.count} tournaments)" if rep.passed else f"FAIL ({rep.detail})"
        prefix = f"{cid}: " if len(ids) > 1 else ""
        lines.append(prefix + head)
        if not rep.passed:
            lines.append(f"  counterexample: {d['counterexample_path']}")
        elif a.verbose and rep.detail:
            lines.append(f"  {rep.detail}")
    text = "\n".join(lines)
    if failed:
        raise _Failure(text, payload)
    return text, payload


def cmd_census(a):
    c = census(a.n, samples=a.samples, seed=a.seed, threads=a.threads)
    kind = "exhaustive" if c.exhaustive else f"sampled, seed {c.seed}"
    lines = [f"n = {c.n}, {c.population} tournaments ({kind})", "det  delta  level  count"]
    lines += [f"{d:<4d} {dl:<6d} {lv:<6d} {cnt}" for d, dl, lv, cnt in c.rows()]
    payload = {
        "n": c.n, "population": c.population, "exhaustive": c.exhaustive, "seed": c.seed,
        "table": [{"det": d, "delta": dl, "level": lv, "count": cnt} for d, dl, lv, cnt in c.rows()],
    }
    return "\n".join(lines), payload


def cmd_convert(a):
    text = Path(a.file).read_text()
    first = text.strip().splitlines()[0].split() if text.strip() else []
    source = "trn" if len(first) == 1 else "matrix"
    t = parse_trn(text) if source == "trn" else parse_matrix(text)
    target = a.to or ("matrix" if source == "trn" else "trn")
    body = format_trn(t) if target == "trn" else format_matrix(t)
    if a.out:
        Path(a.out).write_text(body)
        return f"wrote {a.out}", {"from": source, "to": target, "path": a.out}
    return body.rstrip("\n"), {"from": source, "to": target, "text": body}


# -- parser ------------------------------------------------------------------


def _globals(parser: argparse.ArgumentParser, suppress: bool) -> None:
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument("--seed", type=int, help="PRNG seed for sampled runs", **kw)
    parser.add_argument("--threads", type=int,
                        help="worker processes (default: $TOURLAB_THREADS or 1)", **kw)
    parser.add_argument("--json", action="store_true", help="machine-readable output", **kw)
    parser.add_argument("--timing", action="store_true", help="report wall time on stderr", **kw)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tourlab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"tourlab {__version__}")
    _globals(p, suppress=False)
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")
    common = argparse.ArgumentParser(add_help=False)
    _globals(common, suppress=True)

    def add(name: str, fn: Callable, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(func=fn)
        return sp

    sp = add("det", cmd_det, "determinant of the skew-adjacency matrix")
    sp.add_argument("file")
    sp = add("pfaffian", cmd_pfaffian, "Pfaffian (even order)")
    sp.add_argument("file")
    sp = add("diamonds", cmd_diamonds, "diamond count")
    sp.add_argument("file")
    sp.add_argument("--witnesses", action="store_true", help="list every diamond 4-set")
    sp = add("psi", cmd_psi, "run pattern of a vertex against a transitive set")
    sp.add_argument("file")
    sp.add_argument("--vertex", type=int, required=True)
    sp.add_argument("--set", type=_int_list, required=True)
    sp = add("switch", cmd_switch, "reverse arcs between a set and its complement")
    sp.add_argument("file")
    sp.add_argument("--set", type=_int_list, required=True)
    sp.add_argument("--out")
    sp = add("switch-equiv", cmd_switch_equiv, "find W with switch(A, W) = B")
    sp.add_argument("first")
    sp.add_argument("second")
    sp = add("blowup", cmd_blowup, "transitive blowup of a base tournament")
    sp.add_argument("base")
    sp.add_argument("--counts", type=_int_list, required=True)
    sp.add_argument("--out")
    sp = add("blowup-det", cmd_blowup_det, "blowup determinant without building it")
    sp.add_argument("base")
    sp.add_argument("--counts", type=_int_list, required=True)
    sp.add_argument("--check", action="store_true", help="also build it and compare")
    sp = add("ln", cmd_ln, "the L_n tournament")
    sp.add_argument("n", type=int)
    sp.add_argument("--out")
    sp = add("ln-det", cmd_ln_det, "det(L_n), checked three ways")
    sp.add_argument("n", type=int)
    sp = add("q", cmd_q, "the Q_m determinant, checked two ways")
    sp.add_argument("m", type=int)
    sp = add("classify", cmd_classify, "least k with T in D_k")
    sp.add_argument("file")
    sp.add_argument("--certificate", action="store_true", help="print the blowup certificate")
    sp = add("six-profile", cmd_six_profile, "(delta, det) of a 6-tournament")
    sp.add_argument("file")
    sp = add("verify", cmd_verify, "replay claims over their populations")
    sp.add_argument("claims", nargs="*", metavar="CLAIM")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--list", action="store_true", help="list claim ids and exit")
    sp.add_argument("--samples", type=int, default=ClaimConfig.samples)
    sp.add_argument("--exhaustive-max", type=int, default=ClaimConfig.exhaustive_max)
    sp.add_argument("--counterexample-dir", default=".")
    sp.add_argument("-v", "--verbose", action="store_true")
    sp = add("census", cmd_census, "(det, delta, level) frequencies")
    sp.add_argument("n", type=int)
    sp.add_argument("--samples", type=int, default=100_000)
    sp = add("convert", cmd_convert, "translate between .trn and matrix text")
    sp.add_argument("file")
    sp.add_argument("--to", choices=["trn", "matrix"])
    sp.add_argument("--out")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is None:
        args.seed = ClaimConfig.seed
    if args.threads is None:
        args.threads = default_threads()
    if args.threads < 1:
        parser.error("--threads must be positive")
    if args.verb == "verify" and args.list:
        for cid, claim in CLAIMS.items():
            print(f"{cid:18s} {claim.statement}")
        return EXIT_OK
    start = time.perf_counter()
    code = EXIT_OK
    try:
        text, payload = args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except _Failure as exc:
        text, payload = exc.args
        code = EXIT_VERIFY
    except InvariantViolation as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)
    if args.timing:
        print(f"time: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
