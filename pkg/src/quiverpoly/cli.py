"""Command line front end.

Input is a JSON object, given as a file path or inline with ``--json``:

    {"ranks": [[1], [1, 3], [1, 2, 3], [0, 1, 1, 1]]}   rows[j][i] = r_ij
    {"lace": [[0, 1, 1], [1, 3, 2]]}                      triples i, j, s_ij
    {"lace": [[0, 1, 1], [1, 3, 2]], "n": 3}              explicit arrow count

Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import tableaux as tab
from .engine import Formula, compute, polynomial_hash, verify_all
from .errors import NotOccurring, QuiverError
from .peelfs import enumerate_factor_sequences, enumerate_peelables, quiver_constants
from .pipedreams import enumerate_rp, render as render_dream
from .quivercore import RankArray, codim, lace_from_rank, minimal_lacings, rank_from_lace, zelevinsky

FORMULAS = {
    "ratio": [Formula.RATIO],
    "pipe": [Formula.PIPE],
    "component": [Formula.COMPONENT_SCHUBERT, Formula.COMPONENT_STANLEY],
    "tableau": [Formula.TABLEAU_PEEL, Formula.TABLEAU_FS],
    "all": list(Formula),
}
ALIAS_LIMIT = 7


class InputError(Exception):
    pass


@dataclass
class JobConfig:
    command: str
    source: str | None
    inline: str | None
    formula: str = "ratio"
    fmt: str = "text"
    double: bool = False
    buch_shift: int = 0


def load_ranks(data) -> RankArray:
    if not isinstance(data, dict):
        raise InputError("input must be a JSON object")
    if "ranks" in data:
        rows = data["ranks"]
        if not isinstance(rows, list) or any(not isinstance(row, list) or len(row) != j + 1 for j, row in enumerate(rows)):
            raise InputError("'ranks' must be a triangular list: row j has j+1 entries")
        if len(rows) < 2:
            raise InputError("need at least two vertices")
        return RankArray.from_rows(rows)
    if "lace" in data:
        triples = data["lace"]
        try:
            s = {(int(i), int(j)): int(c) for i, j, c in triples}
        except (TypeError, ValueError) as exc:
            raise InputError("'lace' must be a list of [i, j, count] triples") from exc
        for (i, j), c in s.items():
            if i < 0 or j < i:
                raise InputError(f"bad lace index ({i},{j})")
            if c < 0:
                raise NotOccurring(f"negative lace count s_{i},{j} = {c}", (i, j))
        n = int(data.get("n", max(j for _, j in s)))
        if n < 1:
            raise InputError("need at least one arrow")
        return rank_from_lace(s, n)
    raise InputError("input needs a 'ranks' or 'lace' key")


def _read_input(cfg: JobConfig) -> RankArray:
    if (cfg.source is None) == (cfg.inline is None):
        raise InputError("give exactly one of an input file or --json")
    try:
        if cfg.inline is not None:
            data = json.loads(cfg.inline)
        else:
            with open(cfg.source, encoding="utf-8") as fh:
                data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {cfg.source}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return load_ranks(data)


def _poly_text(p, r: RankArray) -> str:
    return p.render(aliases=r.n <= ALIAS_LIMIT)


def _lacing_json(w) -> list:
    return [sorted([list(c) for c in pp.ones]) for pp in w]


def _lacing_text(w) -> str:
    return "  ".join(str(pp) for pp in w)


def _run(cfg: JobConfig, out) -> int:
    r = _read_input(cfg)
    cmd = cfg.command
    payload: dict = {"dims": list(r.dims), "codim": codim(r)}
    lines: list[str] = [f"dims {' '.join(map(str, r.dims))}  d(r) = {codim(r)}"]
    status = 0

    if cmd == "compute":
        payload["results"] = {}
        for f in FORMULAS[cfg.formula]:
            res = compute(r, f, cfg.double)
            payload["results"][f.value] = {
                "polynomial": res.value.to_json(),
                "hash": polynomial_hash(res.value),
                "witnesses": len(res.witnesses),
            }
            lines.append(f"{f.value}: {_poly_text(res.value, r)}")
    elif cmd == "laces":
        ws = minimal_lacings(r)
        payload["lace_array"] = [[i, j, c] for (i, j), c in sorted(lace_from_rank(r).items())]
        payload["lacings"] = [_lacing_json(w) for w in ws]
        lines.append(f"|W(r)| = {len(ws)}")
        lines.extend(_lacing_text(w) for w in ws)
    elif cmd == "zelevinsky":
        z = zelevinsky(r)
        payload.update(v=list(z.v.oneline), length=z.v.length(), D_hom=sorted(map(list, z.D_hom)))
        lines.append(f"v(r) = {z.v}")
        lines.append(f"length {z.v.length()}, |D_Hom| = {len(z.D_hom)}")
    elif cmd == "pipedreams":
        z = zelevinsky(r)
        dreams = enumerate_rp(z.v)
        payload["pipedreams"] = [sorted(map(list, D)) for D in dreams]
        lines.append(f"|RP(v(r))| = {len(dreams)}")
        for D in dreams:
            lines.append(render_dream(D, z.d, z.D_hom))
            lines.append("")
    elif cmd == "peelables":
        z = zelevinsky(r)
        peel = enumerate_peelables(z.D_r)
        payload["peelables"] = [[list(row) for row in Q] for Q in peel]
        lines.append(f"|Peel(D_r)| = {len(peel)}")
        for Q in peel:
            lines.append(tab.render(Q))
            lines.append("")
    elif cmd == "factorseq":
        seqs = enumerate_factor_sequences(r)
        payload["factor_sequences"] = [[[list(row) for row in W] for W in seq] for seq in seqs]
        lines.append(f"{len(seqs)} factor sequences")
        for seq in seqs:
            lines.append(" | ".join("/".join("".join(map(str, row)) for row in W) or "()" for W in seq))
    elif cmd == "constants":
        consts = quiver_constants(r)
        payload["constants"] = [[[list(lam) for lam in key], c] for key, c in consts.items()]
        for key, c in consts.items():
            lines.append(f"{c}  " + " ".join(str(list(lam)) for lam in key))
    elif cmd == "verify":
        report = verify_all(r, double=cfg.double, buch_shift=cfg.buch_shift)
        payload.update(report.to_json())
        for name, ok in report.checks.items():
            lines.append(f"[{'pass' if ok else 'FAIL'}] {name}")
        for name, value in report.counts.items():
            lines.append(f"{name}: {value}")
        status = 0 if report.ok else 1

    if cfg.fmt == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines).rstrip("\n") + "\n")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quiverpoly", description="Quiver polynomials by four formulas.")
    sub = parser.add_subparsers(dest="command", required=True)
    commands = ["compute", "laces", "pipedreams", "peelables", "factorseq", "constants", "zelevinsky", "verify"]
    for name in commands:
        p = sub.add_parser(name)
        p.add_argument("input", nargs="?", help="JSON file with 'ranks' or 'lace'")
        p.add_argument("--json", dest="inline", help="inline JSON instead of a file")
        p.add_argument("--format", dest="fmt", choices=["text", "json"], default="text")
        if name in ("compute", "verify"):
            p.add_argument("--double", action="store_true", help="keep the y alphabets free")
        if name == "compute":
            p.add_argument("--formula", choices=sorted(FORMULAS), default="ratio")
        if name == "verify":
            p.add_argument("--buch-shift", type=int, default=0, metavar="M",
                           help="also compare tableau constants of M + r with r (informational)")
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    cfg = JobConfig(
        command=args.command,
        source=args.input,
        inline=args.inline,
        formula=getattr(args, "formula", "ratio"),
        fmt=args.fmt,
        double=getattr(args, "double", False),
        buch_shift=getattr(args, "buch_shift", 0),
    )
    try:
        return _run(cfg, out)
    except NotOccurring as exc:
        sys.stderr.write(f"error: {exc} at (i,j) = {exc.cell}\n")
        return 2
    except (InputError, QuiverError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
