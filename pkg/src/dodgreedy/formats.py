"""Line-oriented text formats for elections, graphs, artifacts, and batches.

All formatters are deterministic (sorted, no timestamps) so that identical
inputs serialize byte-identically; every parser reports 1-based line
numbers on failure.
"""

from __future__ import annotations

import json
import warnings

from .batch import AnswerVector, Query, QueryBatch
from .elections import Election
from .errors import ParseError
from .graphs import Graph
from .reductions import PART_LABELS, ReductionArtifact


def _content_lines(text: str, comment: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(comment, 1)[0].strip() if comment in raw else raw.strip()
        if line:
            out.append((lineno, line))
    return out


def parse_election(text: str) -> Election:
    """Parse the election format: a candidate-name line, then one ranking
    per voter (most preferred first). `#` starts a comment."""
    lines = _content_lines(text, "#")
    if not lines:
        raise ParseError("line 1: missing candidate line")
    first_no, header = lines[0]
    names = header.split()
    if len(set(names)) != len(names):
        raise ParseError(f"line {first_no}: duplicate candidate name")
    if not lines[1:]:
        raise ParseError(f"line {first_no}: election has no voters")
    rankings = []
    for lineno, line in lines[1:]:
        ranking = line.split()
        if sorted(ranking) != sorted(names):
            raise ParseError(
                f"line {lineno}: ranking is not a permutation of the candidates"
            )
        rankings.append(ranking)
    return Election.from_names(names, rankings)


def format_election(e: Election) -> str:
    lines = [" ".join(c.name for c in e.candidates)]
    for voter in e.voters:
        lines.append(" ".join(e.name_of(c) for c in voter.ranking))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the graph format: header `p <n> <m>`, then `m` edge lines
    `e <u> <v>` with 1-based endpoints. `c` lines are comments."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    edge_lines = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if header is not None:
                raise ParseError(f"line {lineno}: repeated header")
            if len(fields) != 3:
                raise ParseError(f"line {lineno}: header must be `p <n> <m>`")
            try:
                n, m = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(f"line {lineno}: header must be `p <n> <m>`") from None
            if n < 0 or m < 0:
                raise ParseError(f"line {lineno}: header counts must be nonnegative")
            header = (n, m)
        elif fields[0] == "e":
            if header is None:
                raise ParseError(f"line {lineno}: edge before header")
            if len(fields) != 3:
                raise ParseError(f"line {lineno}: edge must be `e <u> <v>`")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(f"line {lineno}: edge must be `e <u> <v>`") from None
            n = header[0]
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"line {lineno}: vertex out of range 1..{n}")
            if u == v:
                raise ParseError(f"line {lineno}: self-loop at vertex {u}")
            edge_lines += 1
            edge = (u - 1, v - 1) if u < v else (v - 1, u - 1)
            if edge in edges:
                warnings.warn(f"line {lineno}: duplicate edge {u} {v} collapsed")
            else:
                edges.append(edge)
        else:
            raise ParseError(f"line {lineno}: unknown directive {fields[0]!r}")
    if header is None:
        raise ParseError("line 1: missing `p <n> <m>` header")
    if edge_lines != header[1]:
        raise ParseError(f"header declared {header[1]} edges, found {edge_lines}")
    return Graph(header[0], edges)


def format_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.num_edges}"]
    for u, v in sorted(g.edges):
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def format_partmap(artifact: ReductionArtifact) -> str:
    """Sidecar part map: 1-based inclusive vertex ranges plus joined pairs."""
    lines = []
    for label, span in artifact.parts:
        lines.append(f"part {label} {span.start + 1}..{span.stop}")
    for pair in sorted(tuple(sorted(p)) for p in artifact.joins):
        lines.append(f"join {pair[0]} {pair[1]}")
    return "\n".join(lines) + "\n"


def parse_partmap(text: str) -> tuple[dict[str, range], frozenset[frozenset[str]]]:
    parts: dict[str, range] = {}
    joins: set[frozenset[str]] = set()
    for lineno, line in _content_lines(text, "#"):
        fields = line.split()
        if fields[0] == "part" and len(fields) == 3 and ".." in fields[2]:
            lo_text, _, hi_text = fields[2].partition("..")
            try:
                lo, hi = int(lo_text), int(hi_text)
            except ValueError:
                raise ParseError(f"line {lineno}: bad range {fields[2]!r}") from None
            if fields[1] in parts:
                raise ParseError(f"line {lineno}: repeated part {fields[1]}")
            parts[fields[1]] = range(lo - 1, hi)
        elif fields[0] == "join" and len(fields) == 3:
            joins.add(frozenset(fields[1:]))
        else:
            raise ParseError(f"line {lineno}: unknown part-map line")
    missing = [label for label in PART_LABELS if label not in parts]
    if missing:
        raise ParseError(f"part map is missing {', '.join(missing)}")
    return parts, frozenset(joins)


def _payload_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def format_batch(batch: QueryBatch) -> str:
    lines = [f"q {q.kind} {_payload_json(q.payload)}" for q in batch.queries]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_batch(text: str) -> QueryBatch:
    queries = []
    for lineno, line in _content_lines(text, "#"):
        fields = line.split(maxsplit=2)
        if len(fields) != 3 or fields[0] != "q":
            raise ParseError(f"line {lineno}: expected `q <kind> <payload>`")
        try:
            payload = json.loads(fields[2])
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {lineno}: bad payload: {exc}") from None
        try:
            queries.append(Query(fields[1], payload))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return QueryBatch(tuple(queries))


def format_answers(av: AnswerVector) -> str:
    lines = []
    for answer, error in zip(av.answers, av.errors):
        if answer is None:
            lines.append(f"a ? {error}")
        else:
            lines.append(f"a {int(answer)}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_answers(text: str) -> AnswerVector:
    answers: list[bool | None] = []
    errors: list[str | None] = []
    for lineno, line in _content_lines(text, "#"):
        fields = line.split(maxsplit=2)
        if len(fields) < 2 or fields[0] != "a":
            raise ParseError(f"line {lineno}: expected `a <0|1>`")
        if fields[1] == "0":
            answers.append(False)
            errors.append(None)
        elif fields[1] == "1":
            answers.append(True)
            errors.append(None)
        elif fields[1] == "?":
            answers.append(None)
            errors.append(fields[2] if len(fields) > 2 else "unknown error")
        else:
            raise ParseError(f"line {lineno}: expected `a <0|1>`")
    return AnswerVector(tuple(answers), tuple(errors))
