"""Analyzer facade: the script-friendly entry point to the metric engine.

One Analyzer loads lexicons once and is reusable across calls. Values
are rounded to six significant digits, exactly like the batch CLI
serializes them, so a script pipeline and a CLI run over the same texts
and seed agree bit-for-bit after parsing.
"""

from __future__ import annotations

import shlex
from concurrent.futures import ProcessPoolExecutor

from metrix.annotators import BasicAnnotator, CommandAnnotator
from metrix.config import MetricParams
from metrix.engine import Engine
from metrix.errors import MetrixError
from metrix.lexicons import load_bundle
from metrix.stats import round_sig

_WORKER: "Analyzer | None" = None


def _init_worker(lexicon_dir, seed, annotator_cmd, params):
    global _WORKER
    _WORKER = Analyzer(lexicon_dir=lexicon_dir, seed=seed,
                       annotator_cmd=annotator_cmd, params=params)


def _worker_batch(batch):
    return [_WORKER._one(text) for text in batch]


class Analyzer:
    """Compute the full 182-metric inventory for lists of raw texts.

    Texts are annotated with the built-in rule-based annotator unless an
    external annotator command (text on stdin, CoNLL-U on stdout) or a
    custom annotator object is supplied.
    """

    def __init__(self, lexicon_dir: str | None = None, seed: int = 42,
                 annotator_cmd: str | None = None, annotator=None,
                 params: MetricParams = MetricParams()):
        self._config = (lexicon_dir, seed, annotator_cmd, params)
        self._engine = Engine(lexicons=load_bundle(lexicon_dir),
                              params=params, seed=seed)
        if annotator is not None:
            self._annotator = annotator
            self._picklable = False
        elif annotator_cmd:
            self._annotator = CommandAnnotator(shlex.split(annotator_cmd))
            self._picklable = True
        else:
            self._annotator = BasicAnnotator()
            self._picklable = True

    def _one(self, text: str) -> dict:
        try:
            result = self._engine.compute_text(text, self._annotator)
        except MetrixError as exc:
            return {"error": type(exc).__name__, "detail": str(exc)}
        return {code: round_sig(value) for code, value in result.metrics.items()}

    def _run(self, texts: list[str], workers: int, batch_size: int) -> list[dict]:
        if workers < 1 or batch_size < 1:
            raise ValueError("workers and batch_size must be >= 1")
        if not texts:
            return []
        if workers == 1 or len(texts) <= batch_size or not self._picklable:
            return [self._one(t) for t in texts]
        batches = [texts[i:i + batch_size] for i in range(0, len(texts), batch_size)]
        out: list[dict] = []
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                                 initargs=self._config) as pool:
            for chunk in pool.map(_worker_batch, batches):
                out.extend(chunk)
        return out

    def compute_metrics(self, texts: list[str], workers: int = 1,
                        batch_size: int = 1) -> list[dict]:
        """One code->value mapping per text, in input order.

        A text that cannot be processed yields an error object
        (``{"error": ..., "detail": ...}``) in its slot instead.
        """
        return self._run(texts, workers, batch_size)

    def compute_grouped_metrics(self, texts: list[str], workers: int = 1,
                                batch_size: int = 1) -> list[dict]:
        """Like compute_metrics, grouped as category -> (code -> value)."""
        from metrix.registry import group_by_category

        out = []
        for flat in self._run(texts, workers, batch_size):
            if "error" in flat and "DESWC" not in flat:
                out.append(flat)
            else:
                out.append(group_by_category(flat))
        return out
