"""Command-line front end for the gapped structure library.

Subcommands compute per-position arrays (bounded, positional, alpha), single
longest structures (longest), periodicity tables (analyze), brute-force
reference arrays with optional diffing (oracle), and timing tables (bench).

Words arrive as raw text or FASTA; FASTA records are processed independently
and each output block is prefixed by its record id.  Array output is TSV
with header pos/value/witness (witness -1 when absent) or JSON with the
same fields; both are deterministic for a fixed input.

Exit codes: 0 success, 1 usage error, 2 input error, 3 oracle mismatch.
"""

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from .alphagap import alpha_arrays, alpha_ratio, longest_alpha
from .boundedgap import longest_bounded, lpf_bounded, lprf_bounded
from .errors import GappedError, InputError, ParamError
from .oracles import oracle_compute
from .periodicity import (boundary_squares, centered_squares, compute_runs,
                          local_periods)
from .positionalgap import lpf_positional, lprf_positional, prev_factor_links
from .textcore import build_index

KINDS = ("repeat", "palindrome")
ANALYZE_WHAT = ("runs", "sc", "lp", "boundary", "L")
ORACLE_PROBLEMS = ("1a", "1b", "2a", "2b", "3a", "3b",
                   "runs", "sc", "lp", "boundary", "L")
BENCH_FAMILIES = ("random", "fibonacci", "adversarial")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    """Resolved flags for one invocation; fields unused by the subcommand
    stay None."""

    input: str = None
    format: str = "raw"
    kind: str = None
    problem: str = None
    g: int = None
    G: int = None
    gap_file: str = None
    alpha: str = None
    output: str = "tsv"
    witnesses: bool = True
    seed: int = 0
    out: str = None
    mode: str = "shortest-end"
    check: bool = False
    family: str = None
    sizes: str = None
    what: str = None


def _read_text(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _records(cfg):
    """Input as a list of (record id or None, word string)."""
    data = _read_text(cfg.input)
    if cfg.format == "raw":
        word = "".join(data.split())
        if not word:
            raise InputError(f"{cfg.input}: empty word")
        return [(None, word)]
    recs = []
    rid, parts = None, []
    for line in data.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith(">"):
            if rid is not None:
                recs.append((rid, "".join(parts)))
            rid = line[1:].split()[0] if line[1:].split() else ""
            parts = []
        elif rid is None:
            raise InputError(f"{cfg.input}: sequence before first FASTA header")
        else:
            parts.append(line.casefold())
    if rid is not None:
        recs.append((rid, "".join(parts)))
    if not recs:
        raise InputError(f"{cfg.input}: no FASTA records")
    for rid, word in recs:
        if not word:
            raise InputError(f"{cfg.input}: record {rid!r} is empty")
    return recs


def _parse_gap_file(path, n):
    vals = _read_text(path).split()
    try:
        gap = [int(v) for v in vals]
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None
    if len(gap) != n:
        raise InputError(f"{path}: {len(gap)} entries for a word of length {n}")
    for v in gap:
        if not 1 <= v <= n:
            raise InputError(f"{path}: gap bound {v} outside [1, {n}]")
    return gap


def _parse_alpha(text):
    try:
        frac = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad alpha {text!r}: {exc}") from None
    try:
        alpha_ratio(frac)
    except ParamError as exc:
        raise UsageError(str(exc)) from None
    return frac


def _emit(cfg, text):
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _array_output(cfg, blocks):
    """blocks: list of (record id, values, witnesses)."""
    if cfg.output == "json":
        objs = []
        for rid, values, wits in blocks:
            rows = [{"pos": i + 1, "value": v, "witness": wits[i]}
                    for i, v in enumerate(values)]
            objs.append({"id": rid, "rows": rows})
        payload = objs[0] if len(objs) == 1 and objs[0]["id"] is None else objs
        return json.dumps(payload, indent=None, separators=(",", ":")) + "\n"
    lines = []
    for rid, values, wits in blocks:
        if rid is not None:
            lines.append(f">{rid}")
        if cfg.witnesses:
            lines.append("pos\tvalue\twitness")
            lines.extend(f"{i + 1}\t{v}\t{wits[i]}" for i, v in enumerate(values))
        else:
            lines.append("pos\tvalue")
            lines.extend(f"{i + 1}\t{v}" for i, v in enumerate(values))
    return "\n".join(lines) + "\n"


def _for_records(cfg, fn):
    blocks = []
    for rid, word in _records(cfg):
        values, wits = fn(word)
        blocks.append((rid, values, wits))
    _emit(cfg, _array_output(cfg, blocks))
    return 0


def _cmd_bounded(cfg):
    def fn(word):
        idx = build_index(word)
        try:
            if cfg.kind == "palindrome":
                res = lprf_bounded(idx, cfg.g, cfg.G)
            else:
                res = lpf_bounded(idx, None, cfg.g, cfg.G)
        except ParamError as exc:
            raise UsageError(str(exc)) from None
        return res.values, res.B

    return _for_records(cfg, fn)


def _cmd_positional(cfg):
    def fn(word):
        idx = build_index(word)
        gap = _parse_gap_file(cfg.gap_file, idx.n)
        if cfg.kind == "palindrome":
            return lprf_positional(idx, gap)
        return lpf_positional(idx, gap)

    return _for_records(cfg, fn)


def _cmd_alpha(cfg):
    alpha = _parse_alpha(cfg.alpha)

    def fn(word):
        idx = build_index(word)
        try:
            return alpha_arrays(idx, idx.text, alpha, cfg.kind)
        except ParamError as exc:
            raise UsageError(str(exc)) from None

    return _for_records(cfg, fn)


def _cmd_longest(cfg):
    if (cfg.alpha is None) == (cfg.G is None):
        raise UsageError("longest needs either --alpha or --g/--G")
    alpha = _parse_alpha(cfg.alpha) if cfg.alpha is not None else None
    blocks = []
    for rid, word in _records(cfg):
        idx = build_index(word)
        try:
            if alpha is not None:
                st = longest_alpha(idx, None, idx.text, alpha, cfg.kind)
            else:
                st = longest_bounded(idx, cfg.g, cfg.G, cfg.kind)
        except ParamError as exc:
            raise UsageError(str(exc)) from None
        blocks.append((rid, st))
    if cfg.output == "json":
        objs = []
        for rid, st in blocks:
            body = None if st is None else {
                "kind": st.kind, "left": st.left, "arm": st.arm, "gap": st.gap}
            objs.append({"id": rid, "structure": body})
        payload = objs[0] if len(objs) == 1 and objs[0]["id"] is None else objs
        _emit(cfg, json.dumps(payload, separators=(",", ":")) + "\n")
        return 0
    lines = []
    for rid, st in blocks:
        if rid is not None:
            lines.append(f">{rid}")
        lines.append("kind\tleft\tarm\tgap")
        if st is not None:
            lines.append(f"{st.kind}\t{st.left}\t{st.arm}\t{st.gap}")
    _emit(cfg, "\n".join(lines) + "\n")
    return 0


def _analyze_column(cfg, word):
    idx = build_index(word)
    if cfg.what == "sc":
        return centered_squares(idx)
    if cfg.what == "lp":
        return local_periods(idx)
    if cfg.what == "boundary":
        return boundary_squares(idx, mode=cfg.mode)
    return prev_factor_links(idx)


def _cmd_analyze(cfg):
    blocks = []
    for rid, word in _records(cfg):
        if cfg.what == "runs":
            runs = sorted((r.start, r.end, r.period) for r in compute_runs(build_index(word)))
            blocks.append((rid, runs))
        else:
            blocks.append((rid, _analyze_column(cfg, word)))
    if cfg.output == "json":
        objs = []
        for rid, payload in blocks:
            key = "runs" if cfg.what == "runs" else "values"
            body = [list(r) for r in payload] if cfg.what == "runs" else payload
            objs.append({"id": rid, key: body})
        payload = objs[0] if len(objs) == 1 and objs[0]["id"] is None else objs
        _emit(cfg, json.dumps(payload, separators=(",", ":")) + "\n")
        return 0
    lines = []
    for rid, payload in blocks:
        if rid is not None:
            lines.append(f">{rid}")
        if cfg.what == "runs":
            lines.append("start\tend\tperiod")
            lines.extend(f"{s}\t{e}\t{p}" for s, e, p in payload)
        else:
            lines.append("pos\tvalue")
            lines.extend(f"{i + 1}\t{v}" for i, v in enumerate(payload))
    _emit(cfg, "\n".join(lines) + "\n")
    return 0


def _oracle_params(cfg, idx):
    if cfg.problem in ("1a", "1b"):
        if cfg.G is None:
            raise UsageError(f"problem {cfg.problem} needs --g and --G")
        return {"g": cfg.g, "G": cfg.G}
    if cfg.problem in ("2a", "2b"):
        if cfg.gap_file is None:
            raise UsageError(f"problem {cfg.problem} needs --gap-file")
        return {"gap": _parse_gap_file(cfg.gap_file, idx.n)}
    if cfg.problem in ("3a", "3b"):
        if cfg.alpha is None:
            raise UsageError(f"problem {cfg.problem} needs --alpha")
        return {"alpha": _parse_alpha(cfg.alpha)}
    if cfg.problem == "boundary":
        return {"mode": cfg.mode}
    return {}


def _fast_for_problem(cfg, idx, params):
    if cfg.problem == "1a":
        res = lprf_bounded(idx, params["g"], params["G"])
        return res.values, res.B
    if cfg.problem == "1b":
        res = lpf_bounded(idx, None, params["g"], params["G"])
        return res.values, res.B
    if cfg.problem == "2a":
        return lprf_positional(idx, params["gap"])
    if cfg.problem == "2b":
        return lpf_positional(idx, params["gap"])
    if cfg.problem == "3a":
        return alpha_arrays(idx, idx.text, params["alpha"], "palindrome")
    if cfg.problem == "3b":
        return alpha_arrays(idx, idx.text, params["alpha"], "repeat")
    if cfg.problem == "runs":
        return sorted((r.start, r.end, r.period) for r in compute_runs(idx))
    if cfg.problem == "sc":
        return centered_squares(idx)
    if cfg.problem == "lp":
        return local_periods(idx)
    if cfg.problem == "boundary":
        return boundary_squares(idx, mode=params["mode"])
    return prev_factor_links(idx)


def _cmd_oracle(cfg):
    status = 0
    blocks = []
    oracle_id = {"boundary": "boundary-squares"}.get(cfg.problem, cfg.problem)
    for rid, word in _records(cfg):
        idx = build_index(word)
        params = _oracle_params(cfg, idx)
        try:
            ref = oracle_compute(oracle_id, word, params)
            if cfg.check:
                got = _fast_for_problem(cfg, idx, params)
                if cfg.problem == "runs":
                    ref = sorted(ref)
                if got != ref:
                    label = rid if rid is not None else cfg.input
                    print(f"mismatch: problem {cfg.problem} on {label}",
                          file=sys.stderr)
                    status = 3
        except ParamError as exc:
            raise UsageError(str(exc)) from None
        blocks.append((rid, ref))
    if cfg.problem in ("1a", "1b", "2a", "2b", "3a", "3b"):
        _emit(cfg, _array_output(cfg, [(rid, v, b) for rid, (v, b) in blocks]))
        return status
    lines = []
    for rid, payload in blocks:
        if rid is not None:
            lines.append(f">{rid}")
        if cfg.problem == "runs":
            lines.append("start\tend\tperiod")
            lines.extend(f"{s}\t{e}\t{p}" for s, e, p in payload)
        else:
            lines.append("pos\tvalue")
            lines.extend(f"{i + 1}\t{v}" for i, v in enumerate(payload))
    _emit(cfg, "\n".join(lines) + "\n")
    return status


def _gen_word(family, n, seed):
    if family == "random":
        rng = random.Random(seed)
        return "".join(rng.choice("ab") for _ in range(n))
    if family == "fibonacci":
        a, b = "a", "ab"
        while len(b) < n:
            a, b = b, b + a
        return b[:n]
    return ("aab" * (n // 3 + 1))[:n]


def _cmd_bench(cfg):
    sizes = []
    for part in (cfg.sizes or "16384,65536").split(","):
        try:
            sizes.append(int(part))
        except ValueError as exc:
            raise UsageError(f"bad size {part!r}") from None
    lines = ["family\tn\top\tseconds"]
    for n in sizes:
        word = _gen_word(cfg.family, n, cfg.seed)
        t0 = time.perf_counter()
        idx = build_index(word)
        lines.append(f"{cfg.family}\t{n}\tbuild_index\t{time.perf_counter() - t0:.6f}")
        gap = [1] * n
        ops = (
            ("lprf_bounded", lambda: lprf_bounded(idx, 0, max(1, n // 4))),
            ("lpf_bounded", lambda: lpf_bounded(idx, None, 0, max(1, n // 4))),
            ("lprf_positional", lambda: lprf_positional(idx, gap)),
            ("lpf_positional", lambda: lpf_positional(idx, gap)),
            ("longest_alpha_repeat", lambda: longest_alpha(idx, None, idx.text, 2, "repeat")),
            ("longest_alpha_palindrome",
             lambda: longest_alpha(idx, None, idx.text, 2, "palindrome")),
        )
        for name, op in ops:
            t0 = time.perf_counter()
            op()
            lines.append(f"{cfg.family}\t{n}\t{name}\t{time.perf_counter() - t0:.6f}")
    _emit(cfg, "\n".join(lines) + "\n")
    return 0


def _add_io_flags(sp, need_input=True):
    if need_input:
        sp.add_argument("--input", required=True, help="word file, - for stdin")
        sp.add_argument("--format", choices=("raw", "fasta"), default="raw")
    sp.add_argument("--output", choices=("tsv", "json"), default="tsv")
    sp.add_argument("--out", default=None, help="write here instead of stdout")


def build_parser():
    top = _Parser(prog="gapped", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("bounded", help="arrays for gap in [g, G)")
    sp.add_argument("--kind", choices=KINDS, required=True)
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--G", type=int, required=True)
    sp.add_argument("--no-witnesses", action="store_true")
    _add_io_flags(sp)

    sp = sub.add_parser("positional", help="arrays for per-position gap bounds")
    sp.add_argument("--kind", choices=KINDS, required=True)
    sp.add_argument("--gap-file", required=True)
    sp.add_argument("--no-witnesses", action="store_true")
    _add_io_flags(sp)

    sp = sub.add_parser("alpha", help="arrays for |uv| <= alpha |u|")
    sp.add_argument("--kind", choices=KINDS, required=True)
    sp.add_argument("--alpha", required=True, help="integer or p/q")
    sp.add_argument("--no-witnesses", action="store_true")
    _add_io_flags(sp)

    sp = sub.add_parser("longest", help="one longest structure")
    sp.add_argument("--kind", choices=KINDS, required=True)
    sp.add_argument("--g", type=int, default=None)
    sp.add_argument("--G", type=int, default=None)
    sp.add_argument("--alpha", default=None)
    _add_io_flags(sp)

    sp = sub.add_parser("analyze", help="periodicity tables")
    sp.add_argument("--what", choices=ANALYZE_WHAT, required=True)
    sp.add_argument("--mode", default="shortest-end",
                    choices=("shortest-end", "longest-end",
                             "shortest-start", "longest-start"))
    _add_io_flags(sp)

    sp = sub.add_parser("oracle", help="brute-force arrays, optional diff")
    sp.add_argument("--problem", choices=ORACLE_PROBLEMS, required=True)
    sp.add_argument("--g", type=int, default=0)
    sp.add_argument("--G", type=int, default=None)
    sp.add_argument("--gap-file", default=None)
    sp.add_argument("--alpha", default=None)
    sp.add_argument("--mode", default="shortest-end")
    sp.add_argument("--check", action="store_true",
                    help="recompute with the fast path, exit 3 on any diff")
    sp.add_argument("--no-witnesses", action="store_true")
    _add_io_flags(sp)

    sp = sub.add_parser("bench", help="timing table on generated words")
    sp.add_argument("--family", choices=BENCH_FAMILIES, required=True)
    sp.add_argument("--sizes", default=None, help="comma-separated lengths")
    sp.add_argument("--seed", type=int, default=0)
    _add_io_flags(sp, need_input=False)
    return top


def _config(args):
    return RunConfig(
        input=getattr(args, "input", None),
        format=getattr(args, "format", "raw"),
        kind=getattr(args, "kind", None),
        problem=getattr(args, "problem", None),
        g=getattr(args, "g", None),
        G=getattr(args, "G", None),
        gap_file=getattr(args, "gap_file", None),
        alpha=getattr(args, "alpha", None),
        output=getattr(args, "output", "tsv"),
        witnesses=not getattr(args, "no_witnesses", False),
        seed=getattr(args, "seed", 0),
        out=getattr(args, "out", None),
        mode=getattr(args, "mode", "shortest-end"),
        check=getattr(args, "check", False),
        family=getattr(args, "family", None),
        sizes=getattr(args, "sizes", None),
        what=getattr(args, "what", None),
    )


_HANDLERS = {
    "bounded": _cmd_bounded,
    "positional": _cmd_positional,
    "alpha": _cmd_alpha,
    "longest": _cmd_longest,
    "analyze": _cmd_analyze,
    "oracle": _cmd_oracle,
    "bench": _cmd_bench,
}


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return _HANDLERS[args.cmd](_config(args))
    except UsageError as exc:
        print(f"gapped: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"gapped: {exc}", file=sys.stderr)
        return 2
    except GappedError as exc:
        print(f"gapped: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
