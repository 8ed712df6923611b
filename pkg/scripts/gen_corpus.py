#!/usr/bin/env python3
"""Generate a synthetic CoNLL-U corpus for benchmarks and smoke runs.

Example:
    python scripts/gen_corpus.py --docs 100 --seed 1 --out corpus.conllu
    python scripts/gen_corpus.py --docs 25 --long --id-prefix complex --out complex.conllu
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from metrix.synth import synth_corpus


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--docs", type=int, default=100)
    parser.add_argument("--sentences", type=int, default=None,
                        help="sentences per document (default: random 4-9)")
    parser.add_argument("--long", action="store_true",
                        help="favor long sentences with subordination")
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--id-prefix", default="doc")
    parser.add_argument("--out", required=True)
    args = parser.parse_args()

    text = synth_corpus(args.seed, args.docs, n_sentences=args.sentences,
                        long=args.long, id_prefix=args.id_prefix)
    Path(args.out).write_text(text, encoding="utf-8")
    print(f"wrote {args.docs} documents to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
