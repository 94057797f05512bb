"""Command-line entry point.

Subcommands are thin shells over the library: ingest (validate a corpus
file), stats (print corpus statistics JSON), generate (batch puzzle
files), serve (run the HTTP service), play (terminal game).

Exit codes: 0 success, 1 operational failure (bad corpus, failed
generation), 2 usage errors and quitting/EOF mid-game.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import os
import re
import sys
from pathlib import Path

from . import corpus as corpus_mod
from .authored import generate_authored
from .colon import generate_colon
from .errors import CorpusError, CorpusTooSmall, GenerationExhausted, PubgamesError
from .game import (
    is_completed,
    new_game_state,
    reveal,
    share_text,
    submit_authored_guess,
    submit_colon_guess,
)
from .rng import derive_seed, seed_from_hex, seed_to_hex
from .stats import corpus_stats

_HEX16_RE = re.compile(r"^[0-9a-f]{16}$")

ENV_CORPUS = "PUBGAMES_CORPUS"
ENV_PORT = "PUBGAMES_PORT"
ENV_RESULTS = "PUBGAMES_RESULTS"
ENV_STATIC = "PUBGAMES_STATIC"


def _dump_json(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


def _read_corpus_file(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise PubgamesError(f"cannot read corpus file: {exc}") from None


def _load_corpus(path: str):
    return corpus_mod.load_corpus(_read_corpus_file(path))


# --- subcommands ---------------------------------------------------------------

def cmd_ingest(args) -> int:
    data = _read_corpus_file(args.corpus)
    if args.strict:
        problems = corpus_mod.validate_corpus(data)
        if problems:
            for problem in problems:
                print(f"error: {problem}", file=sys.stderr)
            print(f"{len(problems)} problem(s) found", file=sys.stderr)
            return 1
        snapshot = corpus_mod.load_corpus(data)
    else:
        try:
            snapshot = corpus_mod.load_corpus(data)
        except CorpusError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    print(f"{len(snapshot.papers)} papers loaded")
    return 0


def cmd_stats(args) -> int:
    snapshot = _load_corpus(args.corpus)
    sys.stdout.write(_dump_json(corpus_stats(snapshot).to_jsonable()))
    return 0


def _seeds_for(game: str, seed_spec: str, count: int) -> list[int]:
    if _HEX16_RE.match(seed_spec):
        if count != 1:
            raise PubgamesError("--count > 1 needs a tag seed, not a literal hex seed")
        return [seed_from_hex(seed_spec)]
    return [derive_seed(f"{game}:{seed_spec}:{i}") for i in range(count)]


def cmd_generate(args) -> int:
    snapshot = _load_corpus(args.corpus)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    generate = generate_colon if args.game == "colon" else generate_authored

    failures = 0
    for seed in _seeds_for(args.game, args.seed, args.count):
        try:
            puzzle = generate(snapshot, seed)
        except (CorpusTooSmall, GenerationExhausted) as exc:
            print(f"error: seed {seed_to_hex(seed)}: {exc}", file=sys.stderr)
            failures += 1
            continue
        path = out_dir / f"{args.game}-{seed_to_hex(seed)}.json"
        path.write_text(_dump_json(puzzle.to_jsonable()), encoding="utf-8")
        print(path)
    return 1 if failures else 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    corpus_path = args.corpus or os.environ.get(ENV_CORPUS)
    if not corpus_path:
        print(f"error: no corpus file (use --corpus or {ENV_CORPUS})", file=sys.stderr)
        return 1
    try:
        snapshot = _load_corpus(corpus_path)
    except (PubgamesError, CorpusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    port = args.port if args.port is not None else int(os.environ.get(ENV_PORT, "8000"))
    results = args.results or os.environ.get(ENV_RESULTS) or "results.jsonl"
    static = args.static or os.environ.get(ENV_STATIC)

    app = create_app(snapshot, results_path=results, static_dir=static)
    print(
        f"serving {len(snapshot.papers)} papers on {args.host}:{port} "
        f"(results -> {results})",
        file=sys.stderr,
    )
    uvicorn.run(app, host=args.host, port=port, log_level="warning")
    return 0


# --- terminal play ----------------------------------------------------------------

def _resolve_play_seed(game: str, seed_spec: str | None) -> int:
    if seed_spec is None:
        today = _dt.datetime.now(_dt.timezone.utc).date().isoformat()
        return derive_seed(f"{game}:{today}")
    if _HEX16_RE.match(seed_spec):
        return seed_from_hex(seed_spec)
    return derive_seed(f"{game}:{seed_spec}")


def _prompt_numbers(prompt: str, how_many: int) -> list[int] | None:
    """Read 1-based numbers from stdin; None means quit/EOF."""
    while True:
        try:
            raw = input(prompt)
        except EOFError:
            return None
        raw = raw.strip()
        if raw.lower() in ("q", "quit"):
            return None
        parts = raw.split()
        if len(parts) == how_many and all(p.isdigit() for p in parts):
            return [int(p) - 1 for p in parts]
        print(f"enter {how_many} number(s), or q to quit")


def _finish_game(state, puzzle, snapshot) -> int:
    print("\nSolved! The papers were:")
    revealed = reveal(puzzle, snapshot)
    if revealed["game"] == "colon":
        for record in revealed["papers"]:
            print(f"  {record['title']} ({record['year']}, {record['venue']})")
            link = record.get("doi") or record.get("url")
            if link:
                print(f"    {link}")
    else:
        for group in revealed["groups"]:
            print(f"  {group['author']}:")
            for record in group["papers"]:
                print(f"    {record['title']} ({record['year']}, {record['venue']})")
    print()
    print(share_text(state))
    return 0


def _play_colon(snapshot, seed: int) -> int:
    puzzle = generate_colon(snapshot, seed)
    state = new_game_state("colon", seed)
    print(f"Colon puzzle {seed_to_hex(seed)}: reconnect the four split titles.")
    locked_items: set[int] = set()
    while not is_completed(state):
        print("\nPrefixes:")
        for i, item in enumerate(puzzle.items):
            mark = "*" if i in locked_items else " "
            print(f" {mark}{i + 1}. {item.prefix}")
        print("Suffixes:")
        solved_slots = {slot for _, slot in state.solved}
        for slot, item_idx in enumerate(puzzle.display_perm):
            mark = "*" if slot in solved_slots else " "
            print(f" {mark}{slot + 1}. {puzzle.items[item_idx].suffix}")
        answer = _prompt_numbers("pair (prefix suffix)> ", 2)
        if answer is None:
            print("bye", file=sys.stderr)
            return 2
        verdict = submit_colon_guess(state, puzzle, answer[0], answer[1])
        if verdict.kind == "Correct":
            locked_items.add(answer[0])
            print("correct!")
        elif verdict.kind == "Incorrect":
            print(f"wrong pairing ({state.mistakes} mistake(s) so far)")
        else:
            print(f"rejected: {verdict.reason}")
    return _finish_game(state, puzzle, snapshot)


def _play_authored(snapshot, seed: int) -> int:
    puzzle = generate_authored(snapshot, seed)
    state = new_game_state("authored", seed)
    print(f"Authored puzzle {seed_to_hex(seed)}: find three triples sharing an author.")
    venues: list[str] | None = None
    years: list[int] | None = None
    solved_cells: dict[int, str] = {}
    while not is_completed(state):
        print("\nGrid:")
        for pos, pid in enumerate(puzzle.grid_order):
            title = snapshot.paper(pid).title
            extra = ""
            if venues:
                extra += f" [{venues[pos]}"
                extra += f" {years[pos]}]" if years else "]"
            owner = solved_cells.get(pos)
            tag = f" <- {owner}" if owner else ""
            print(f"  {pos + 1}. {title}{extra}{tag}")
        answer = _prompt_numbers("three cells> ", 3)
        if answer is None:
            print("bye", file=sys.stderr)
            return 2
        verdict = submit_authored_guess(state, puzzle, snapshot, answer)
        if verdict.kind == "Correct":
            print(f"correct: {verdict.author}")
            for cell in answer:
                solved_cells[cell] = verdict.author
        elif verdict.kind == "Incorrect":
            print(f"wrong triple ({state.mistakes} mistake(s) so far)")
            if verdict.newly_revealed and "venues" in verdict.newly_revealed:
                venues = verdict.newly_revealed["venues"]
                print("hint unlocked: venues now shown")
            if verdict.newly_revealed and "years" in verdict.newly_revealed:
                years = verdict.newly_revealed["years"]
                print("hint unlocked: years now shown")
        else:
            print(f"rejected: {verdict.reason}")
    return _finish_game(state, puzzle, snapshot)


def cmd_play(args) -> int:
    snapshot = _load_corpus(args.corpus)
    seed = _resolve_play_seed(args.game, args.seed)
    if args.game == "colon":
        return _play_colon(snapshot, seed)
    return _play_authored(snapshot, seed)


# --- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pubgames",
        description="Puzzle games over publication metadata: Colon and Authored.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="validate and index a corpus file")
    p_ingest.add_argument("--corpus", required=True, help="corpus CSV path")
    p_ingest.add_argument("--strict", action="store_true",
                          help="report every problem instead of stopping at the first")
    p_ingest.set_defaults(func=cmd_ingest)

    p_stats = sub.add_parser("stats", help="print corpus statistics JSON")
    p_stats.add_argument("--corpus", required=True)
    p_stats.set_defaults(func=cmd_stats)

    p_gen = sub.add_parser("generate", help="write puzzle JSON files")
    p_gen.add_argument("--corpus", required=True)
    p_gen.add_argument("--game", required=True, choices=["colon", "authored"])
    p_gen.add_argument("--seed", required=True,
                       help="16 lowercase hex digits, or a tag expanded as <game>:<tag>:<i>")
    p_gen.add_argument("--count", type=int, default=1)
    p_gen.add_argument("--out", required=True, help="output directory")
    p_gen.set_defaults(func=cmd_generate)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--corpus", help=f"corpus CSV path (or {ENV_CORPUS})")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, help=f"listen port (or {ENV_PORT}, default 8000)")
    p_serve.add_argument("--results", help=f"results JSONL path (or {ENV_RESULTS})")
    p_serve.add_argument("--static", help=f"web client directory (or {ENV_STATIC})")
    p_serve.set_defaults(func=cmd_serve)

    p_play = sub.add_parser("play", help="play a game in the terminal")
    p_play.add_argument("--corpus", required=True)
    p_play.add_argument("--game", required=True, choices=["colon", "authored"])
    p_play.add_argument("--seed", help="16 hex digits or a tag; default: today's daily seed")
    p_play.set_defaults(func=cmd_play)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PubgamesError, CorpusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
