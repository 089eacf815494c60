"""Command-line entry point: ``evo-mt <subcommand>``.

Exit codes: 0 success, 1 resource or I/O failure, 2 bad input (including an
empty corpus).
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .chunker import chunk, load_grammar
from .errors import EmptyCorpus, EvoMTError, IoFailure
from .evolution import EaConfig, evolve, format_trace
from .lexicon import load_lexicon
from .pipeline import translate_text
from .ppmi import build_model, load_model, save_model
from .tagger import TaggedToken, load_taglex, parse_tagged, tag_tokens
from .tokenizer import split_sentences, tokenize

DATA_DIR = Path(__file__).parent / "data"
RESOURCE_FILES = {
    "lexicon": "lexicon.tsv",
    "model": "model.txt",
    "taglex": "taglex.tsv",
    "grammar": "grammar.txt",
}
EXIT_OK, EXIT_RESOURCE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def resource_path(kind: str, explicit: str | None) -> Path:
    """Flag value, else ``$EVO_MT_HOME/<file>`` when present, else the bundled file."""
    if explicit:
        return Path(explicit)
    home = os.environ.get("EVO_MT_HOME")
    if home:
        candidate = Path(home) / RESOURCE_FILES[kind]
        if candidate.exists():
            return candidate
    return DATA_DIR / RESOURCE_FILES[kind]


def _read_input(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise IoFailure(f"cannot read {path}: {exc}") from exc


def _positional_or_stdin(values: list[str]) -> list[str]:
    if values:
        return [" ".join(values)]
    return [line for line in sys.stdin.read().splitlines() if line.strip()]


def _ea_config(args) -> EaConfig:
    try:
        return EaConfig(children_per_generation=args.children,
                        max_generations=args.max_generations,
                        seed=args.seed,
                        anchor_trailing_sign=not args.no_anchor)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


# -- subcommands ---------------------------------------------------------------

def cmd_build_model(args) -> int:
    text = _read_input(args.corpus)
    sentences = [s for line in text.splitlines() for s in split_sentences(line)]
    model = build_model(sentences, window=args.window)
    save_model(model, args.out)
    print(f"tokens {model.total_tokens} pairs {model.total_pairs}")
    return EXIT_OK


def cmd_translate(args) -> int:
    lex = load_lexicon(resource_path("lexicon", args.lexicon))
    model = load_model(resource_path("model", args.model))
    taglex = load_taglex(resource_path("taglex", args.taglex))
    grammar = load_grammar(resource_path("grammar", args.grammar))
    config = _ea_config(args)
    text = _read_input(args.input)

    out = sys.stdout
    for line in text.splitlines():
        if not line.strip():
            continue
        for result in translate_text(lex, model, taglex, grammar, config, line, jobs=args.jobs):
            if args.format == "json-lines":
                out.write(json.dumps(result.to_dict(), ensure_ascii=False) + "\n")
                continue
            if args.trace and result.report is not None:
                out.write(format_trace(result.report))
            out.write(result.rendered + "\n")
    return EXIT_OK


def cmd_tag(args) -> int:
    taglex = load_taglex(resource_path("taglex", args.taglex))
    for line in _positional_or_stdin(args.words):
        tagged = tag_tokens(taglex, [(t.text, None) for t in tokenize(line)])
        print(" ".join(map(str, tagged)))
    return EXIT_OK


def _parse_tagged_or_fail(line: str) -> list[TaggedToken]:
    try:
        return parse_tagged(line)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_chunk(args) -> int:
    grammar = load_grammar(resource_path("grammar", args.grammar))
    for line in _positional_or_stdin(args.tagged):
        for item in chunk(grammar, _parse_tagged_or_fail(line)):
            print(str(item))
    return EXIT_OK


def cmd_evolve(args) -> int:
    config = _ea_config(args)
    target = args.target.split()
    for line in _positional_or_stdin(args.tagged):
        tagged = _parse_tagged_or_fail(line)
        report = evolve(tagged, target, config)
        if args.trace:
            sys.stdout.write(format_trace(report))
        final = [tagged[k] for k in report.best.order]
        print(" ".join(map(str, final)))
        print(f"fitness {report.best.fitness} generations {report.generations_run} "
              f"terminated {report.terminated_by.value}")
    return EXIT_OK


# -- argument parsing ------------------------------------------------------------

def _add_ea_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0, help="64-bit RNG seed (default 0)")
    p.add_argument("--children", type=int, default=100, help="children per generation")
    p.add_argument("--max-generations", type=int, default=1000)
    p.add_argument("--no-anchor", action="store_true",
                   help="let a sentence-final sign move during reordering")
    p.add_argument("--trace", action="store_true",
                   help="print 'gen <k> best <fitness> order <indices>' lines")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="evo-mt", description="Sinhala to English translation "
                                     "with PPMI sense selection and evolutionary reordering.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-model", help="count co-occurrences of an English corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--window", type=int, default=None,
                   help="co-occurrence window in tokens (default: whole sentence)")
    p.set_defaults(func=cmd_build_model)

    p = sub.add_parser("translate", help="translate Sinhala text")
    p.add_argument("--in", dest="input", default=None, help="input file (default stdin)")
    for kind in RESOURCE_FILES:
        p.add_argument(f"--{kind}", default=None)
    p.add_argument("--format", choices=("text", "json-lines"), default="text")
    p.add_argument("--jobs", type=int, default=1, help="sentences translated in parallel")
    _add_ea_flags(p)
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("tag", help="POS-tag English words")
    p.add_argument("--taglex", default=None)
    p.add_argument("words", nargs="*")
    p.set_defaults(func=cmd_tag)

    p = sub.add_parser("chunk", help="chunk word/TAG input")
    p.add_argument("--grammar", default=None)
    p.add_argument("tagged", nargs="*")
    p.set_defaults(func=cmd_chunk)

    p = sub.add_parser("evolve", help="reorder word/TAG input toward a target tag list")
    p.add_argument("--target", required=True, help='space-separated tags, e.g. "PRP VB NN"')
    p.add_argument("tagged", nargs="*")
    _add_ea_flags(p)
    p.set_defaults(func=cmd_evolve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except EmptyCorpus as exc:
        print(f"evo-mt: empty corpus: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InputError as exc:
        print(f"evo-mt: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EvoMTError as exc:
        print(f"evo-mt: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
