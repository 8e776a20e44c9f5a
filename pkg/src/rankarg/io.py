"""Framework input and output in the two community text formats.

APX: one fact per statement, ``arg(name).`` and ``att(a,b).``, with ``%``
line comments. TGF: node ids one per line, a ``#`` separator line, then
edges as id pairs. Both parsers reject attacks on undeclared arguments and
report line numbers on syntax errors.

A third small format carries ranking measures over the compact generic
world space: one line per world, a state digit string (0 = premise false,
1 = claim, 2 = premise only, positional in argument order) followed by the
rank, with ``inf`` for impossibility.
"""

from __future__ import annotations

import re

from .framework import ArgumentationFramework
from .generic import GenericSpace
from .ranking import TOP, Rank, RankingMeasure


class ParseError(ValueError):
    """Malformed input document."""


_NAME = r"[A-Za-z0-9_]+"
_ARG_RE = re.compile(rf"^arg\(\s*({_NAME})\s*\)\.$")
_ATT_RE = re.compile(rf"^att\(\s*({_NAME})\s*,\s*({_NAME})\s*\)\.$")


def parse_apx(text: str) -> ArgumentationFramework:
    arguments: list[str] = []
    declared: set[str] = set()
    attacks: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        # Several statements may share a line.
        for statement in re.findall(r"[^.]+\.", line):
            statement = statement.strip()
            m = _ARG_RE.match(statement)
            if m:
                name = m.group(1)
                if name not in declared:
                    declared.add(name)
                    arguments.append(name)
                continue
            m = _ATT_RE.match(statement)
            if m:
                a, b = m.groups()
                for name in (a, b):
                    if name not in declared:
                        raise ParseError(
                            f"line {lineno}: attack uses undeclared argument {name!r}"
                        )
                attacks.append((a, b))
                continue
            raise ParseError(f"line {lineno}: cannot parse statement {statement!r}")
        if not re.fullmatch(r"(\s*[^.]+\.)+\s*", line):
            raise ParseError(f"line {lineno}: cannot parse {line!r}")
    return ArgumentationFramework(arguments, attacks)


def serialize_apx(framework: ArgumentationFramework) -> str:
    lines = [f"arg({a})." for a in framework.arguments]
    index = framework.index
    for a, b in sorted(framework.attacks, key=lambda p: (index[p[0]], index[p[1]])):
        lines.append(f"att({a},{b}).")
    return "\n".join(lines) + "\n"


def parse_tgf(text: str) -> ArgumentationFramework:
    arguments: list[str] = []
    declared: set[str] = set()
    attacks: list[tuple[str, str]] = []
    seen_separator = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if seen_separator:
                raise ParseError(f"line {lineno}: repeated separator")
            seen_separator = True
            continue
        if not seen_separator:
            name = line.split()[0]
            if name not in declared:
                declared.add(name)
                arguments.append(name)
        else:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: edge needs exactly two node ids")
            a, b = parts
            for name in (a, b):
                if name not in declared:
                    raise ParseError(f"line {lineno}: unknown node {name!r}")
            attacks.append((a, b))
    if not seen_separator:
        raise ParseError("missing '#' separator line")
    return ArgumentationFramework(arguments, attacks)


def serialize_tgf(framework: ArgumentationFramework) -> str:
    lines = list(framework.arguments)
    lines.append("#")
    index = framework.index
    for a, b in sorted(framework.attacks, key=lambda p: (index[p[0]], index[p[1]])):
        lines.append(f"{a} {b}")
    return "\n".join(lines) + "\n"


FORMAT_PARSERS = {"apx": parse_apx, "tgf": parse_tgf}
FORMAT_SERIALIZERS = {"apx": serialize_apx, "tgf": serialize_tgf}


def parse_measure(text: str, space: GenericSpace) -> RankingMeasure:
    """Read a rank per compact world; every world must occur exactly once."""
    n = len(space.framework.arguments)
    ranks: dict[tuple[int, ...], Rank] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'STATES RANK'")
        states, rank_text = parts
        if len(states) != n or any(c not in "012" for c in states):
            raise ParseError(
                f"line {lineno}: state vector must be {n} digits from 0/1/2"
            )
        world = tuple(int(c) for c in states)
        if world in ranks:
            raise ParseError(f"line {lineno}: duplicate world {states}")
        if rank_text == "inf":
            ranks[world] = TOP
        elif rank_text.isdigit():
            ranks[world] = int(rank_text)
        else:
            raise ParseError(f"line {lineno}: rank must be a nonnegative integer or 'inf'")
    missing = len(space) - len(ranks)
    if missing:
        raise ParseError(f"measure file leaves {missing} world(s) unranked")
    return RankingMeasure(space, [ranks[w] for w in space.worlds])


def serialize_measure(measure: RankingMeasure) -> str:
    space = measure.space
    if not isinstance(space, GenericSpace):
        raise ValueError("only compact generic-space measures are serialized")
    lines = []
    for world, rank in zip(space.worlds, measure.ranks):
        states = "".join(str(s) for s in world)
        lines.append(f"{states} {'inf' if rank == TOP else int(rank)}")
    return "\n".join(lines) + "\n"
