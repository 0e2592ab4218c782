"""Command-line front end.

Subcommands:

* enumerate    -- run the pipeline for one length (optionally one shard)
* postprocess  -- closure census over pair files: counts, classes, closure
* verify       -- recheck every pair in a file with exact arithmetic
* oracle       -- print the brute-force normalized pairs for a small length
* counts       -- print the census CSV for pair files without writing files
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import core, oracle, pipeline, postprocess


def _add_enumerate(sub):
    p = sub.add_parser("enumerate", help="enumerate normalized pairs of one length")
    p.add_argument("--n", type=int, required=True, help="sequence length")
    p.add_argument("--out", type=Path, default=Path("runs"), help="artifact directory")
    p.add_argument("--shards", type=int, default=1, help="total shard count")
    p.add_argument("--shard-index", type=int, default=1, help="1-based shard to run")
    p.add_argument("--dft-pre", type=int, default=2**14, help="half-filter sample count")
    p.add_argument("--dft-stage1", type=int, default=2**7, help="join-filter sample count")
    p.add_argument("--epsilon", type=float, default=1e-3, help="spectral bound slack")
    p.add_argument("--workers", type=int, default=1, help="worker processes")


def _add_inputs(p):
    p.add_argument(
        "--in",
        dest="inputs",
        type=Path,
        nargs="+",
        required=True,
        metavar="PAIRS",
        help="pair files produced by enumerate (shards may be mixed in)",
    )


def _read_by_length(paths):
    by_length = {}
    for path in paths:
        for a, b in pipeline.read_pairs(path):
            by_length.setdefault(len(a), set()).add((a, b))
    return by_length


def _cmd_enumerate(args):
    cfg = pipeline.RunConfig(
        n=args.n,
        out_dir=args.out,
        shards=args.shards,
        shard_index=args.shard_index,
        dft_pre=args.dft_pre,
        dft_stage1=args.dft_stage1,
        epsilon=args.epsilon,
        workers=args.workers,
    )
    pipeline.enumerate_pairs(cfg)
    sys.stdout.write(cfg.path_report().read_text())
    return 0


def _cmd_postprocess(args):
    by_length = _read_by_length(args.inputs)
    args.out.mkdir(parents=True, exist_ok=True)
    rows = []
    for n in sorted(by_length):
        omegas = postprocess.build_omegas(n, sorted(by_length[n]))
        rows.append((n,) + omegas.counts)
        pipeline.write_pairs(
            args.out / f"pairs_all_n{n}.txt", n, sorted(omegas.all_pairs)
        )
        pipeline.write_pairs(
            args.out / f"reps_n{n}.txt", n, list(omegas.representatives)
        )
        failing = [p for p in omegas.representatives if not postprocess.crossover_check(p)]
        passing = len(omegas.representatives) - len(failing)
        print(f"crossover n={n}: {passing}/{len(omegas.representatives)} classes pass")
        for pair in failing:
            print(f"  violates: {pipeline.pair_line(n, pair)}")
    csv_text = "n,seqs,all,inequiv\n" + "".join(
        ",".join(str(v) for v in row) + "\n" for row in rows
    )
    (args.out / "counts.csv").write_text(csv_text)
    sys.stdout.write(csv_text)
    return 0


def _cmd_verify(args):
    bad = 0
    for path in args.inputs:
        for lineno, line in enumerate(path.read_text().splitlines(), start=1):
            try:
                pair = pipeline.parse_pair_line(line)
            except ValueError as exc:
                print(f"{path}:{lineno}: unreadable: {exc}")
                bad += 1
                continue
            if not core.is_golay_pair(pair):
                print(f"{path}:{lineno}: correlation condition fails: {line}")
                bad += 1
    total = sum(len(p.read_text().splitlines()) for p in args.inputs)
    print(f"verified {total - bad}/{total} pairs")
    return 1 if bad else 0


def _cmd_oracle(args):
    for a, b in sorted(oracle.normalized_pairs(args.n)):
        print(pipeline.pair_line(args.n, (a, b)))
    return 0


def _cmd_counts(args):
    by_length = _read_by_length(args.inputs)
    rows = postprocess.census_rows({n: sorted(ps) for n, ps in by_length.items()})
    sys.stdout.write(
        "n,seqs,all,inequiv\n"
        + "".join(",".join(str(v) for v in row) + "\n" for row in rows)
    )
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="cgolay",
        description="enumerate and classify quaternary complementary pairs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    _add_enumerate(sub)

    p = sub.add_parser("postprocess", help="closure census over pair files")
    _add_inputs(p)
    p.add_argument("--out", type=Path, required=True, help="census output directory")

    p = sub.add_parser("verify", help="recheck pair files exactly")
    p.add_argument(
        "--pairs", dest="inputs", type=Path, nargs="+", required=True, metavar="PAIRS"
    )

    p = sub.add_parser("oracle", help="brute-force normalized pairs (small lengths)")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("counts", help="census CSV for pair files")
    _add_inputs(p)

    args = parser.parse_args(argv)
    handler = {
        "enumerate": _cmd_enumerate,
        "postprocess": _cmd_postprocess,
        "verify": _cmd_verify,
        "oracle": _cmd_oracle,
        "counts": _cmd_counts,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
