"""Command-line front end.

Subcommands enumerate walks, print or export the highest-weight vectors and
the recursion elements, run the verification battery, and emit norm, matrix,
and decomposition reports.  Exit status: 0 on success, 1 when a verification
assertion fails, 2 on usage errors.

Flag grammar::

    qtensor <command> --n <int> --r <int> [--shape a,b,c] [--q0 num[/den]]
            [--output text|json] [--out <path>]

The environment variable QTENSOR_THREADS caps parallelism for the
verification command (0 = auto).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import dualcheck, psiphi, tensorspace
from .coeff import ScalarField
from .combinatorics import Partition, enumerate_walks, partitions_in

__all__ = ["CliConfig", "run_cli", "export_json", "main"]

COMMANDS = ("walks", "vectors", "psi", "verify", "norms", "specht", "decompose", "invariants")


@dataclass
class CliConfig:
    command: str
    n: int
    r: int
    shape: Partition | None = None
    q0: Fraction | None = None
    output: str = "text"
    out_path: str | None = None

    @property
    def field(self) -> ScalarField:
        return ScalarField(self.q0)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # keep control of the exit status instead of argparse's sys.exit
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="qtensor", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--n", type=int, required=True, help="alphabet size")
        p.add_argument("--r", type=int, default=0, help="tensor degree")
        p.add_argument("--shape", type=str, default=None, help="partition, e.g. 2,1")
        p.add_argument("--q0", type=str, default=None, help="rational specialization, e.g. 3/2")
        p.add_argument("--output", choices=("text", "json"), default="text")
        p.add_argument("--out", dest="out_path", type=str, default=None)
    return parser


def _parse_config(argv: list[str]) -> CliConfig:
    ns = _build_parser().parse_args(argv)
    shape = Partition.from_string(ns.shape) if ns.shape else None
    q0 = None
    if ns.q0 is not None:
        try:
            q0 = Fraction(ns.q0)
        except (ValueError, ZeroDivisionError) as exc:
            raise _UsageError(f"bad --q0 value {ns.q0!r}: {exc}") from None
        if q0 in (0, 1, -1):
            raise _UsageError(f"--q0 {q0} is excluded (zero or a root of unity)")
    if ns.n is None or ns.n < 1:
        raise _UsageError("--n must be a positive integer")
    if ns.r < 0:
        raise _UsageError("--r must be nonnegative")
    return CliConfig(
        command=ns.command, n=ns.n, r=ns.r, shape=shape,
        q0=q0, output=ns.output, out_path=ns.out_path,
    )


def export_json(payload, path: str | None) -> str:
    """Serialize deterministically; write to the path when given.  The byte
    stream is identical across runs for identical inputs."""
    text = json.dumps(payload, separators=(",", ":")) + "\n"
    if path is not None:
        try:
            with open(path, "w", encoding="utf-8", newline="") as handle:
                handle.write(text)
        except OSError as exc:
            raise RuntimeError(f"cannot write {path}: {exc}") from exc
    return text


def _emit(cfg: CliConfig, text_lines: list[str], json_payload) -> None:
    if cfg.output == "json":
        out = export_json(json_payload, cfg.out_path)
        if cfg.out_path is None:
            sys.stdout.write(out)
    else:
        body = "\n".join(text_lines) + "\n"
        if cfg.out_path is not None:
            with open(cfg.out_path, "w", encoding="utf-8", newline="") as handle:
                handle.write(body)
        else:
            sys.stdout.write(body)


def _thread_map():
    raw = os.environ.get("QTENSOR_THREADS", "1")
    try:
        k = int(raw)
    except ValueError:
        raise _UsageError(f"QTENSOR_THREADS must be an integer, got {raw!r}") from None
    if k < 0:
        raise _UsageError("QTENSOR_THREADS must be >= 0")
    if k == 0:
        k = os.cpu_count() or 1
    if k == 1:
        return map, None
    pool = ThreadPoolExecutor(max_workers=k)
    return pool.map, pool


def _cmd_walks(cfg: CliConfig) -> int:
    walks = enumerate_walks(cfg.n, cfg.r, cfg.shape)
    rows = [list(w.rows) for w in walks]
    _emit(cfg, [json.dumps(row, separators=(",", ":")) for row in rows], rows)
    return 0


def _cmd_vectors(cfg: CliConfig) -> int:
    field = cfg.field
    walks = enumerate_walks(cfg.n, cfg.r, cfg.shape)
    records = [psiphi.build_c_pi(w, field, cfg.n) for w in walks]
    payload = [tensorspace.vector_to_json_dict(rec.vector) for rec in records]
    lines = [
        f"walk {rec.walk} -> shape {rec.weight}: {tensorspace.format_vector(rec.vector)}"
        for rec in records
    ]
    _emit(cfg, lines, payload)
    return 0


def _cmd_psi(cfg: CliConfig) -> int:
    if cfg.shape is None:
        raise _UsageError("psi needs --shape")
    field = cfg.field
    lines = []
    payload = []
    for j in range(1, cfg.n):
        try:
            el = psiphi.psi(j, cfg.shape, field)
            lines.append(f"psi_{j}[{cfg.shape}] = {el}")
            payload.append({
                "j": j,
                "terms": [
                    {"word": list(w), "coeff": field.render(c)}
                    for w, c in sorted(el.terms.items())
                ],
            })
        except psiphi.PsiUndefinedError:
            lines.append(f"psi_{j}[{cfg.shape}] undefined (vanishing coroot pairing)")
            payload.append({"j": j, "undefined": True})
    _emit(cfg, lines, payload)
    return 0


def _cmd_verify(cfg: CliConfig) -> int:
    map_fn, pool = _thread_map()
    try:
        report = dualcheck.verify_suite(cfg.n, cfg.r, cfg.field, map_fn=map_fn)
    finally:
        if pool is not None:
            pool.shutdown()
    lines = [
        f"[{'PASS' if c.ok else 'FAIL'}] {c.name}" + (f" ({c.detail})" if c.detail else "")
        for c in report.checks
    ]
    lines.append(f"verify n={cfg.n} r={cfg.r}: {'all checks passed' if report.ok else 'FAILURES PRESENT'}")
    _emit(cfg, lines, report.to_json_dict())
    return 0 if report.ok else 1


def _cmd_norms(cfg: CliConfig) -> int:
    field = cfg.field
    records = dualcheck.maximal_basis(cfg.n, cfg.r, field)
    if cfg.shape is not None:
        records = [rec for rec in records if rec.weight == cfg.shape]
    ok = True
    lines = []
    payload = []
    for rec in records:
        predicted = dualcheck.norm_predict(rec.walk, field)
        computed = tensorspace.bilinear(rec.vector, rec.vector)
        match = predicted == computed
        ok = ok and match
        lines.append(
            f"walk {rec.walk}: norm {field.render(computed)} "
            f"({'matches' if match else 'DISAGREES WITH'} closed form)")
        payload.append({
            "walk": list(rec.walk.rows),
            "predicted": field.render(predicted),
            "computed": field.render(computed),
            "match": match,
        })
    _emit(cfg, lines, payload)
    return 0 if ok else 1


def _cmd_specht(cfg: CliConfig) -> int:
    field = cfg.field
    shapes = [cfg.shape] if cfg.shape is not None else list(partitions_in(cfg.n, cfg.r))
    lines = []
    payload = []
    status = 0
    for lam in shapes:
        try:
            data = dualcheck.specht_matrices(lam, cfg.n, cfg.r, field)
        except dualcheck.SpechtConsistencyError as exc:
            lines.append(f"shape {lam}: FAIL ({exc})")
            status = 1
            continue
        size = len(data.basis)
        lines.append(f"shape {lam}: {size}x{size} matrices for {len(data.t_matrices)} generators")
        for i, mat in enumerate(data.t_matrices, start=1):
            for row_idx, row in enumerate(mat):
                rendered = ", ".join(field.render(c) for c in row)
                lines.append(f"  T_{i} row {row_idx}: [{rendered}]")
        payload.append({
            "shape": list(lam.parts),
            "size": size,
            "gram_diagonal": [field.render(c) for c in data.gram_diagonal],
            "t_matrices": [
                [[field.render(c) for c in row] for row in mat]
                for mat in data.t_matrices
            ],
        })
    _emit(cfg, lines, payload)
    return status


def _cmd_decompose(cfg: CliConfig) -> int:
    report = dualcheck.decomposition_report(cfg.n, cfg.r, cfg.field)
    lines = [f"tensor power {cfg.n}^{cfg.r} = {report.total}"]
    for row in report.rows:
        lines.append(
            f"  shape {row.shape}: dim {row.weyl_dim} x multiplicity {row.f} "
            f"({row.walks} walks, maximal={row.all_maximal}, orthogonal={row.gram_diagonal})")
    lines.append(f"identity: {'holds' if report.identity_ok else 'FAILS'}")
    _emit(cfg, lines, report.to_json_dict())
    return 0 if report.identity_ok else 1


def _cmd_invariants(cfg: CliConfig) -> int:
    records = dualcheck.invariants_basis(cfg.n, cfg.r, cfg.field)
    lines = [f"{len(records)} invariant vector(s) in degree {cfg.r} over {cfg.n} letters"]
    for rec in records:
        lines.append(f"walk {rec.walk}: {tensorspace.format_vector(rec.vector)}")
    payload = [tensorspace.vector_to_json_dict(rec.vector) for rec in records]
    _emit(cfg, lines, payload)
    return 0


_DISPATCH = {
    "walks": _cmd_walks,
    "vectors": _cmd_vectors,
    "psi": _cmd_psi,
    "verify": _cmd_verify,
    "norms": _cmd_norms,
    "specht": _cmd_specht,
    "decompose": _cmd_decompose,
    "invariants": _cmd_invariants,
}


def run_cli(argv: list[str]) -> int:
    try:
        cfg = _parse_config(argv)
        return _DISPATCH[cfg.command](cfg)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(__doc__, file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
