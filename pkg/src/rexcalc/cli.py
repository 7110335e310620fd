"""Command-line front end: graph export, morphism evaluation, verification.

Exit codes: 0 all verdicts as expected, 1 unexpected mathematical
verdict, 2 usage error, 3 resource budget exceeded.  The environment
variable REXCALC_BUDGET caps the number of distinct morphism matrices a
search may intern.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import fpc
from .braidmor import ConflatedMorphisms, path_morphism
from .bsbimod import BSElement, from_tensor
from .polyring import parse_polynomial
from .rexgraph import (
    CONFLATED,
    EXPANDED,
    ConflatedGraph,
    Path,
    RexGraph,
    build_conflated,
    build_rex_graph,
    source_sink,
    to_dot,
)
from .symgroup import Word, is_reduced, word_to_perm

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

SHAPE_DISPLAY = {
    fpc.DOT: "*",
    fpc.LINE2: "*->*",
    fpc.LINE3: "*->*->*",
    fpc.CYCLE8: "Zam",
}


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation parameters shared by the subcommands."""

    rank: int
    word: Word
    max_len: int | None
    output_format: str
    budget: int | None


class UsageError(ValueError):
    pass


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text or text in ("e", "-"):
        return ()
    if "," in text:
        parts = text.split(",")
    else:
        parts = list(text)
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"cannot parse word {text!r}")


def word_label(word: Word) -> str:
    if not word:
        return "e"
    return "".join(map(str, word)) if all(l <= 9 for l in word) else ",".join(map(str, word))


def _resolve_config(args, require_reduced=True) -> RunConfig:
    word = parse_word(args.word)
    rank = args.rank if args.rank else (max(word) + 1 if word else 2)
    if any(not 1 <= l <= rank - 1 for l in word):
        raise UsageError(f"letters of {word_label(word)} out of range for rank {rank}")
    if require_reduced and not is_reduced(word, rank):
        raise UsageError(f"word {word_label(word)} is not reduced")
    return RunConfig(
        rank=rank,
        word=word,
        max_len=getattr(args, "max_len", None),
        output_format=getattr(args, "format", "text"),
        budget=getattr(args, "budget", None),
    )


def _alias_vertices(conf: ConflatedGraph) -> dict[str, Word]:
    aliases: dict[str, Word] = {}
    s, t = source_sink(conf)
    aliases["s"] = s.representative
    aliases["t"] = t.representative
    middle = [c for c in conf.clouds if c not in (s, t)]
    if len(middle) == 1:
        aliases["c"] = middle[0].representative
    return aliases


def parse_path_spec(spec: str, rex: RexGraph, conf: ConflatedGraph) -> Path:
    """A path is comma- or arrow-separated vertices; s/t/c name conflated clouds."""
    raw = [tok.strip() for tok in spec.replace("->", ",").split(",") if tok.strip()]
    if not raw:
        raise UsageError("empty path spec")
    has_alias = any(tok.isalpha() for tok in raw)
    if has_alias:
        aliases = _alias_vertices(conf)
        vertices = []
        for tok in raw:
            if tok.isalpha():
                if tok not in aliases:
                    raise UsageError(f"alias {tok!r} undefined for this element")
                vertices.append(aliases[tok])
            else:
                vertices.append(conf.cloud(parse_word(tok)).representative)
        return Path(CONFLATED, tuple(vertices))
    vertices = [parse_word(tok) for tok in raw]
    if all(v in rex.adjacency for v in vertices):
        return Path(EXPANDED, tuple(vertices))
    return Path(CONFLATED, tuple(conf.cloud(v).representative for v in vertices))


def parse_element_spec(spec: str, word: Word, rank: int) -> BSElement:
    slots = [parse_polynomial(tok.strip() or "1", rank) for tok in spec.split(",")]
    if len(slots) != len(word) + 1:
        raise UsageError(
            f"element needs {len(word) + 1} slot polynomials for {word_label(word)}, got {len(slots)}"
        )
    return from_tensor(word, slots, rank)


def _emit(payload, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_graph(args) -> int:
    cfg = _resolve_config(args)
    rex = build_rex_graph(word_to_perm(cfg.word, cfg.rank))
    conf = build_conflated(rex)
    graph = conf if args.conflated else rex
    if cfg.output_format == "dot":
        print(to_dot(graph))
        return EXIT_OK
    if args.conflated:
        payload = {
            "element": word_label(cfg.word),
            "vertices": [[list(w) for w in c.members] for c in conf.clouds],
            "edges": [
                {
                    "source": list(e.source.representative),
                    "target": list(e.target.representative),
                }
                for e in conf.edges
            ],
        }
        lines = [f"conflated graph of {word_label(cfg.word)} (rank {cfg.rank})"]
        lines += [f"  cloud {c}: {{{', '.join(word_label(w) for w in c.members)}}}" for c in conf.clouds]
        lines += [
            f"  {word_label(e.source.representative)} -> {word_label(e.target.representative)}"
            for e in conf.edges
        ]
    else:
        payload = {
            "element": word_label(cfg.word),
            "vertices": [list(w) for w in rex.words],
            "edges": [
                {"source": list(u), "target": list(v), "kind": m.kind}
                for u, v, m in rex.edges
            ],
        }
        lines = [f"expanded graph of {word_label(cfg.word)} (rank {cfg.rank})"]
        lines += [f"  {word_label(w)}" for w in rex.words]
        lines += [f"  {word_label(u)} -- {word_label(v)} [{m.kind}]" for u, v, m in rex.edges]
    _emit(payload, cfg.output_format, lines)
    return EXIT_OK


def cmd_eval(args) -> int:
    cfg = _resolve_config(args)
    rex = build_rex_graph(word_to_perm(cfg.word, cfg.rank))
    conf = build_conflated(rex)
    path = parse_path_spec(args.path, rex, conf)
    element = parse_element_spec(args.element, cfg.word, cfg.rank)
    if path.kind == EXPANDED:
        if path.start != cfg.word:
            raise UsageError("expanded path must start at the element word")
        matrix = path_morphism(path, cfg.rank)
    else:
        if cfg.word != path.start:
            raise UsageError(
                "conflated paths act on elements over the starting cloud representative, "
                f"here {word_label(path.start)}"
            )
        matrix = ConflatedMorphisms(rex, conf).path_matrix(path.vertices)
    image = matrix.apply(element)
    payload = {
        "path": [list(v) for v in path.vertices],
        "element": element.to_json(),
        "image": image.to_json(),
    }
    _emit(payload, cfg.output_format, [f"image: {image}", f"over word {word_label(image.word)}"])
    return EXIT_OK


def _verdict_lines(v: fpc.FpcVerdict) -> list[str]:
    if v.holds:
        return [f"{word_label(v.element)}: all compared paths agree (bound {v.bound})"]
    w = v.counterexample
    return [
        f"{word_label(v.element)}: COUNTEREXAMPLE (bound {v.bound})",
        f"  path a: {' -> '.join(word_label(x) for x in w.path_a)}",
        f"  path b: {' -> '.join(word_label(x) for x in w.path_b)}",
        f"  witness basis mask: {w.witness_mask}",
        f"  image a: {w.image_a}",
        f"  image b: {w.image_b}",
    ]


def cmd_verify(args) -> int:
    fmt = args.format
    budget = args.budget
    suite = args.suite
    if suite == "zam":
        n = args.rank or 3
        if n not in (3, 4):
            raise UsageError("the zam suite runs at rank 3 or 4")
        report = fpc.check_zam_identities(n)
        dud = fpc.check_dud_udu_all(n)
        payload = {**report.to_json(), "dud_equals_udu_all_pairs": dud}
        _emit(
            payload,
            fmt,
            [f"rank {n}: {k} = {v}" for k, v in payload.items() if k != "rank"],
        )
        return EXIT_OK if report.all_hold and dud else EXIT_UNEXPECTED
    if suite == "lemmas":
        report = fpc.check_equivalence_lemmas()
        _emit(
            report.to_json(),
            fmt,
            [f"{name}: {ok}" for name, ok in report.results.items()],
        )
        return EXIT_OK if report.all_hold else EXIT_UNEXPECTED
    if suite == "fpc-s4":
        sweep = fpc.check_s4_sweep(max_len=args.max_len, budget=budget)
        lines = []
        for r in sweep.rows:
            status = "holds" if r.verdict.holds else "counterexample"
            mark = "" if r.as_expected else "  UNEXPECTED"
            lines.append(
                f"{word_label(r.label):>8}  {SHAPE_DISPLAY.get(r.shape, r.shape):>9}  {status}{mark}"
            )
        lines.append(f"all as expected: {sweep.all_expected}")
        _emit(sweep.to_json(), fmt, lines)
        return EXIT_OK if sweep.all_expected else EXIT_UNEXPECTED
    if suite == "family":
        if args.word:
            # exploratory mode: run the bounded comparison on a given element
            word = parse_word(args.word)
            rank = args.rank or max(word) + 1
            if not is_reduced(word, rank):
                raise UsageError(f"word {word_label(word)} is not reduced")
            rex = build_rex_graph(word_to_perm(word, rank))
            conf = build_conflated(rex)
            bound = args.max_len or fpc.sweep_max_len(len(conf.clouds))
            verdict = fpc.check_fpc(word, bound, rank=rank, budget=budget)
            _emit(verdict.to_json(), fmt, _verdict_lines(verdict))
            return EXIT_OK
        n = args.rank or 4
        report = fpc.check_family(n)
        lines = [
            f"element {word_label(report.word)} (rank {n}), line of {len(report.line)} clouds",
            f"  path a: {' -> '.join(word_label(x) for x in report.path_a)}",
            f"  path b: {' -> '.join(word_label(x) for x in report.path_b)}",
            f"  morphisms differ: {report.morphisms_differ}",
        ]
        payload = report.to_json()
        if n == 4:
            img_long, img_short = fpc.family_extra_pair(4)
            extra = img_long != img_short
            payload["extra_pair_differs"] = extra
            lines.append(f"  source-start pair separates on 1 (x) x2 (x) 1 ...: {extra}")
            ok = report.morphisms_differ and extra
        else:
            ok = report.morphisms_differ
        _emit(payload, fmt, lines)
        return EXIT_OK if ok else EXIT_UNEXPECTED
    if suite == "refined":
        n = args.rank or 3
        if n not in (3, 4):
            raise UsageError("the refined suite runs at rank 3 or 4")
        bound = args.max_len or 10
        verdict = fpc.check_refined_conjecture(n, bound, budget=budget)
        lines = _verdict_lines(verdict)
        if not verdict.holds:
            lines.insert(0, "UNEXPECTED: refined conjecture violated; please report this run")
        _emit(verdict.to_json(), fmt, lines)
        return EXIT_OK if verdict.holds else EXIT_UNEXPECTED
    raise UsageError(f"unknown suite {suite!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rexcalc",
        description="exact reduced-expression-graph and Bott-Samelson morphism computations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_graph = sub.add_parser("graph", help="print the expanded or conflated graph")
    p_graph.add_argument("word", help="reduced word, e.g. 12321 or 1,2,3,2,1")
    p_graph.add_argument("--rank", type=int, default=None, help="rank n (default: max letter + 1)")
    mode = p_graph.add_mutually_exclusive_group()
    mode.add_argument("--expanded", action="store_true", default=True)
    mode.add_argument("--conflated", action="store_true", default=False)
    p_graph.add_argument("--format", choices=("dot", "json", "text"), default="text")
    p_graph.set_defaults(func=cmd_graph)

    p_eval = sub.add_parser("eval", help="apply a path morphism to an element")
    p_eval.add_argument("word", help="word of the domain bimodule")
    p_eval.add_argument("--rank", type=int, default=None)
    p_eval.add_argument("--path", required=True, help="vertex sequence, words or s/t/c aliases")
    p_eval.add_argument("--element", required=True, help="comma-separated slot polynomials")
    p_eval.add_argument("--format", choices=("json", "text"), default="json")
    p_eval.set_defaults(func=cmd_eval)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=("fpc-s4", "zam", "lemmas", "family", "refined"))
    p_verify.add_argument("--rank", type=int, default=None)
    p_verify.add_argument("--max-len", type=int, default=None, dest="max_len")
    p_verify.add_argument("--budget", type=int, default=None, help="max distinct matrices")
    p_verify.add_argument("--word", default=None, help="explicit element for the family suite")
    p_verify.add_argument("--format", choices=("json", "text"), default="text")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except fpc.BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
