"""Batch command-line front-end.

Subcommands:
  run       extract the 182-metric matrix from a corpus
  registry  print the metric catalog
  rank      ANOVA feature ranking over an emitted matrix

``run`` processes documents in batches across worker processes; all
metric computation is pure and every per-document random draw is seeded
from the run seed plus the document content, so output bytes are
identical for any worker count. Per-document failures go to an errors
sidecar and the run continues (exit 2 on partial failure, 1 on fatal).
"""

from __future__ import annotations

import argparse
import csv
import glob
import json
import os
import re
import shlex
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .annotators import BasicAnnotator, CommandAnnotator
from .config import MetricParams
from .doc import ingest_conllu
from .engine import DocumentResult, Engine
from .errors import MetrixError
from .lexicons import load_bundle
from .ranking import rank_features
from .registry import CODES, category_counts, list_metrics, registry_json
from .stats import fmt_sig, round_sig

_NEWDOC_ID = re.compile(r"#\s*newdoc(?:\s+id\s*=\s*(.+))?\s*$")


@dataclass(frozen=True)
class Task:
    index: int
    source_id: str
    kind: str          # "conllu" | "raw"
    payload: str


@dataclass(frozen=True)
class WorkerConfig:
    lexicon_dir: str | None
    embeddings: str | None
    params: MetricParams
    seed: int
    annotator_cmd: str | None


_WORKER_ENGINE: Engine | None = None
_WORKER_ANNOTATOR = None


def _build_engine(config: WorkerConfig) -> Engine:
    from .cohesion import HashedTfEmbedding, MatrixEmbedding

    bundle = load_bundle(config.lexicon_dir)
    provider = (MatrixEmbedding(config.embeddings) if config.embeddings
                else HashedTfEmbedding(config.params.embedding_dim))
    return Engine(lexicons=bundle, provider=provider, params=config.params,
                  seed=config.seed)


def _init_worker(config: WorkerConfig) -> None:
    global _WORKER_ENGINE, _WORKER_ANNOTATOR
    _WORKER_ENGINE = _build_engine(config)
    _WORKER_ANNOTATOR = (CommandAnnotator(shlex.split(config.annotator_cmd))
                         if config.annotator_cmd else BasicAnnotator())


def _run_task(engine: Engine, annotator, task: Task):
    if task.kind == "conllu":
        doc = ingest_conllu(task.payload, source_id=task.source_id,
                            stopwords=engine.lexicons.stopwords)
        return engine.compute(doc)
    return engine.compute_text(task.payload, annotator, source_id=task.source_id)


def _process_batch(batch: list[Task]) -> list[tuple[int, str, object]]:
    out = []
    for task in batch:
        try:
            result = _run_task(_WORKER_ENGINE, _WORKER_ANNOTATOR, task)
            out.append((task.index, "ok", result))
        except MetrixError as exc:
            out.append((task.index, "error",
                        {"source_id": task.source_id,
                         "error": type(exc).__name__, "detail": str(exc)}))
    return out


# ---------------------------------------------------------------------------
# corpus reading

def split_conllu_documents(text: str, fallback_id: str) -> list[tuple[str, str]]:
    """Split a CoNLL-U stream on ``# newdoc`` markers.

    Without markers the whole stream is one document named after the
    file; with markers, unnamed documents get ``file#k`` ids.
    """
    lines = text.splitlines()
    starts = [(i, _NEWDOC_ID.match(line.strip())) for i, line in enumerate(lines)
              if _NEWDOC_ID.match(line.strip())]
    if not starts:
        return [(fallback_id, text)]
    docs = []
    for k, (start, match) in enumerate(starts):
        end = starts[k + 1][0] if k + 1 < len(starts) else len(lines)
        doc_id = (match.group(1) or "").strip() or f"{fallback_id}#{k}"
        docs.append((doc_id, "\n".join(lines[start + 1:end]) + "\n"))
    return docs


def collect_tasks(patterns: list[str], input_format: str) -> list[Task]:
    paths: list[str] = []
    for pattern in patterns:
        hits = sorted(glob.glob(pattern, recursive=True))
        paths.extend(hits if hits else ([pattern] if os.path.exists(pattern) else []))
    tasks: list[Task] = []
    for path in paths:
        text = Path(path).read_text(encoding="utf-8")
        name = Path(path).name
        if input_format == "conllu":
            for doc_id, payload in split_conllu_documents(text, name):
                tasks.append(Task(len(tasks), doc_id, "conllu", payload))
        else:
            tasks.append(Task(len(tasks), name, "raw", text))
    return tasks


# ---------------------------------------------------------------------------
# serialization

def _csv_text(results: list[DocumentResult]) -> str:
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["source_id", *CODES, "coverage"])
    for r in results:
        writer.writerow([r.source_id,
                         *(fmt_sig(r.metrics[c]) for c in CODES),
                         fmt_sig(r.coverage)])
    return buf.getvalue()


def _jsonl_text(results: list[DocumentResult]) -> str:
    lines = []
    for r in results:
        lines.append(json.dumps({
            "source_id": r.source_id,
            "coverage": round_sig(r.coverage),
            "metrics": {c: round_sig(r.metrics[c]) for c in CODES},
        }, ensure_ascii=False))
    return "".join(line + "\n" for line in lines)


def _grouped_text(results: list[DocumentResult]) -> str:
    lines = []
    for r in results:
        grouped = {cat: {c: round_sig(v) for c, v in codes.items()}
                   for cat, codes in r.grouped().items()}
        lines.append(json.dumps({
            "source_id": r.source_id,
            "coverage": round_sig(r.coverage),
            "groups": grouped,
        }, ensure_ascii=False))
    return "".join(line + "\n" for line in lines)


# ---------------------------------------------------------------------------
# subcommands

def cmd_run(args) -> int:
    import dataclasses
    from concurrent.futures.process import BrokenProcessPool

    try:
        params = MetricParams.from_json(args.config) if args.config else MetricParams()
    except (OSError, ValueError) as exc:
        print(f"fatal: bad config: {exc}", file=sys.stderr)
        return 1
    config = WorkerConfig(lexicon_dir=args.lexicons, embeddings=args.embeddings,
                          params=params, seed=args.seed,
                          annotator_cmd=args.annotator_cmd)
    try:
        # validates lexicons and the embeddings file before any processing
        _init_worker(config)
        provider_name = _WORKER_ENGINE.provider.name
        tasks = collect_tasks(args.input, args.format)
    except (MetrixError, OSError, ValueError) as exc:
        print(f"fatal: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1

    try:
        if args.workers <= 1:
            outcomes = _process_batch(tasks)
        else:
            batches = [tasks[i:i + args.batch_size]
                       for i in range(0, len(tasks), args.batch_size)]
            outcomes = []
            with ProcessPoolExecutor(max_workers=args.workers,
                                     initializer=_init_worker,
                                     initargs=(config,)) as pool:
                for chunk in pool.map(_process_batch, batches):
                    outcomes.extend(chunk)
    except (MetrixError, BrokenProcessPool) as exc:
        print(f"fatal: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1

    outcomes.sort(key=lambda item: item[0])
    results = [payload for _, status, payload in outcomes if status == "ok"]
    failures = [payload for _, status, payload in outcomes if status == "error"]

    render = {"csv": _csv_text, "jsonl": _jsonl_text, "grouped-json": _grouped_text}[args.emit]
    out_path = Path(args.out)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(render(results), encoding="utf-8")

    # run manifest: provider identity and settings, next to the matrix
    meta = {
        "provider": provider_name,
        "seed": args.seed,
        "format": args.format,
        "emit": args.emit,
        "documents": len(results),
        "failures": len(failures),
        "params": dataclasses.asdict(params),
    }
    Path(str(out_path) + ".meta.json").write_text(
        json.dumps(meta, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")

    if failures:
        sidecar = Path(str(out_path) + ".errors.jsonl")
        sidecar.write_text("".join(json.dumps(f, ensure_ascii=False) + "\n"
                                   for f in failures), encoding="utf-8")
        print(f"{len(failures)} document(s) failed; see {sidecar}", file=sys.stderr)
        return 2
    return 0


def cmd_registry(args) -> int:
    if args.json:
        if args.category:
            payload = {
                "category": args.category,
                "metrics": [{"code": d.code, "category": d.category,
                             "description": d.description, "unit": d.unit}
                            for d in list_metrics(args.category)],
            }
            print(json.dumps(payload, ensure_ascii=False, indent=2))
        else:
            print(registry_json())
        return 0
    descriptors = list_metrics(args.category)
    counts = category_counts()
    if args.category is None:
        print(f"{len(descriptors)} metrics in {len(counts)} categories")
        for category, count in counts.items():
            print(f"  {category}: {count}")
        print()
    for d in descriptors:
        print(f"{d.code}\t{d.category}\t{d.description}")
    return 0


def _read_matrix(path: str) -> tuple[list[str], list[str], np.ndarray]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = list(reader)
    codes = [c for c in header if c in set(CODES)]
    ix = [header.index(c) for c in codes]
    id_ix = header.index("source_id") if "source_id" in header else None
    ids = [row[id_ix] if id_ix is not None else str(k) for k, row in enumerate(rows)]
    matrix = np.array([[float(row[i]) for i in ix] for row in rows], dtype=float)
    return ids, codes, matrix


def _read_labels(path: str) -> dict[str, str] | list[str]:
    """Two-column csv (source_id,label) -> dict; single column -> row-ordered list."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [row for row in csv.reader(fh) if row]
    if rows and len(rows[0]) >= 2:
        start = 1 if rows[0][0] in ("source_id", "id") else 0
        return {row[0]: row[1] for row in rows[start:]}
    start = 1 if rows and rows[0][0] == "label" else 0
    return [row[0] for row in rows[start:]]


def cmd_rank(args) -> int:
    ids, codes, matrix = _read_matrix(args.matrix)
    labels_raw = _read_labels(args.labels)
    if isinstance(labels_raw, dict):
        missing = [i for i in ids if i not in labels_raw]
        if missing:
            print(f"fatal: no label for {missing[:5]}...", file=sys.stderr)
            return 1
        labels = [labels_raw[i] for i in ids]
    else:
        if len(labels_raw) != len(ids):
            print(f"fatal: {len(labels_raw)} labels for {len(ids)} rows", file=sys.stderr)
            return 1
        labels = labels_raw

    try:
        ranked, notes = rank_features(matrix, codes, labels, alpha=args.alpha)
    except MetrixError as exc:
        print(f"fatal: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    for note in notes:
        print(note, file=sys.stderr)
    lines = ["rank\tcode\tF\tp"]
    lines += [f"{r.rank}\t{r.code}\t{fmt_sig(r.f_statistic)}\t{fmt_sig(r.p_value)}"
              for r in ranked]
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metrix",
        description="Linguistic metric extraction for Spanish documents.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="compute the metric matrix for a corpus")
    run.add_argument("--input", action="append", required=True,
                     help="input file or glob; repeatable")
    run.add_argument("--format", choices=("conllu", "raw"), default="conllu")
    run.add_argument("--annotator-cmd", default=None,
                     help="external annotator command for raw input "
                          "(text on stdin, CoNLL-U on stdout); defaults to "
                          "the built-in rule-based annotator")
    run.add_argument("--workers", type=int, default=1)
    run.add_argument("--batch-size", type=int, default=16)
    run.add_argument("--out", required=True)
    run.add_argument("--emit", choices=("csv", "jsonl", "grouped-json"), default="csv")
    run.add_argument("--lexicons", default=None,
                     help="lexicon directory (default: $METRIX_DATA_DIR or packaged seed)")
    run.add_argument("--embeddings", default=None,
                     help="float32 embedding matrix file with <file>.vocab.tsv sidecar")
    run.add_argument("--seed", type=int, default=42)
    run.add_argument("--config", default=None, help="JSON file with threshold overrides")
    run.set_defaults(func=cmd_run)

    reg = sub.add_parser("registry", help="print the metric catalog")
    reg.add_argument("--json", action="store_true")
    reg.add_argument("--category", default=None)
    reg.set_defaults(func=cmd_registry)

    rank = sub.add_parser("rank", help="ANOVA feature ranking")
    rank.add_argument("--matrix", required=True, help="csv matrix from `metrix run`")
    rank.add_argument("--labels", required=True,
                      help="csv with source_id,label rows or one label per row")
    rank.add_argument("--alpha", type=float, default=0.05)
    rank.add_argument("--out", default=None)
    rank.set_defaults(func=cmd_rank)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "run" and (args.workers < 1 or args.batch_size < 1):
        print("fatal: workers and batch-size must be >= 1", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except MetrixError as exc:
        print(f"fatal: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
