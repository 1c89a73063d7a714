"""Text format for ideals.

A file holds an optional ``vars`` line followed either by generators or
by one constructor directive.  ``#`` starts a comment.

Generators are monomials such as ``x1^2*x3`` or exponent vectors such as
``[2, 0, 1]``, separated by commas or newlines; ``0`` alone is the zero
ideal and ``1`` the unit ideal.  Without a ``vars`` line the variables are
``x1..xN`` with ``N`` the largest index used.

Directives (vertices and families are 1-based)::

    edge_ideal cycle 5
    edge_ideal path 4
    edge_ideal complete 4
    edge_ideal graph 5: 1-2, 2-3, 3-4
    graphic_matroid graph 7: 1-2, 2-3, 3-4, 1-4, 2-5, 5-6, 6-7, 5-7
    transversal 4: {1,2} {2,3,4}
    veronese 4 3: 1 1 2 2
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InputError
from .graphs import SimpleGraph, edge_ideal
from .monomial import MonomialIdeal, format_monomial
from .polymatroid import graphic_matroid_ideal, transversal_ideal, veronese_type_ideal

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_DEFAULT_NAME = re.compile(r"x([1-9][0-9]*)")
DIRECTIVES = ("edge_ideal", "graphic_matroid", "transversal", "veronese")


@dataclass(frozen=True)
class ParsedIdeal:
    """An ideal with its variable names and, for directives, how it was built."""

    ideal: MonomialIdeal
    names: tuple
    construction: dict = field(default_factory=dict, compare=False, hash=False)


def default_names(n: int) -> tuple:
    return tuple(f"x{i + 1}" for i in range(n))


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def _split_items(line: str, lineno: int):
    """Yield ``(text, column)`` for comma-separated items, brackets kept whole."""
    depth = 0
    start = 0
    for pos, ch in enumerate(line + ","):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise InputError("unbalanced ']'", lineno, pos + 1)
        elif ch == "," and depth == 0:
            chunk = line[start:pos]
            stripped = chunk.strip()
            if stripped:
                yield stripped, start + len(chunk) - len(chunk.lstrip()) + 1
            elif pos < len(line):
                raise InputError("empty generator", lineno, pos + 1)
            start = pos + 1
    if depth:
        raise InputError("unbalanced '['", lineno, len(line))


def _parse_int(text: str, lineno: int, col: int) -> int:
    t = text.strip()
    if not re.fullmatch(r"[+-]?[0-9]+", t):
        raise InputError(f"expected an integer, got {t!r}", lineno, col)
    return int(t)


def _parse_vector(item: str, lineno: int, col: int) -> list:
    inner = item[1:-1] if item.endswith("]") else None
    if inner is None:
        raise InputError("exponent vector must end with ']'", lineno, col + len(item) - 1)
    parts = [p for p in re.split(r"[,\s]+", inner.strip()) if p]
    if not parts:
        raise InputError("empty exponent vector", lineno, col)
    vec = [_parse_int(p, lineno, col) for p in parts]
    if any(x < 0 for x in vec):
        raise InputError("exponents must be non-negative", lineno, col)
    return vec


def _parse_monomial(item: str, lineno: int, col: int, index: dict | None) -> dict:
    """``{name: exponent}``; `index` restricts names when a vars line exists."""
    out = {}
    if item == "1":
        return out
    pos = 0
    while True:
        while pos < len(item) and item[pos] == " ":
            pos += 1
        m = _NAME.match(item, pos)
        if not m:
            raise InputError(f"expected a variable name at {item[pos:pos + 8]!r}", lineno, col + pos)
        name = m.group(0)
        if index is not None and name not in index:
            raise InputError(f"unknown variable {name!r}", lineno, col + pos)
        if index is None and not _DEFAULT_NAME.fullmatch(name):
            raise InputError(f"unknown variable {name!r} (declare it on a vars line)", lineno, col + pos)
        pos = m.end()
        exp = 1
        if pos < len(item) and item[pos] == "^":
            e = re.compile(r"[+-]?[0-9]+").match(item, pos + 1)
            if not e:
                raise InputError("expected an exponent after '^'", lineno, col + pos + 1)
            exp = int(e.group(0))
            if exp <= 0:
                raise InputError(f"exponent must be positive, got {exp}", lineno, col + pos + 1)
            pos = e.end()
        out[name] = out.get(name, 0) + exp
        while pos < len(item) and item[pos] == " ":
            pos += 1
        if pos == len(item):
            return out
        if item[pos] != "*":
            raise InputError(f"unexpected character {item[pos]!r}", lineno, col + pos)
        pos += 1


def parse_graph(text: str, lineno: int = 1, col: int = 1) -> SimpleGraph:
    """``cycle N``, ``path N``, ``complete N`` or ``graph N: 1-2, 2-3``."""
    t = text.strip()
    m = re.fullmatch(r"(cycle|path|complete)\s+([0-9]+)", t)
    if m:
        kind, n = m.group(1), int(m.group(2))
        return getattr(SimpleGraph, kind)(n)
    m = re.fullmatch(r"graph\s+([0-9]+)\s*:(.*)", t)
    if not m:
        raise InputError(f"cannot read graph {t!r}; expected cycle N, path N, complete N or graph N: i-j, ...",
                         lineno, col)
    n = int(m.group(1))
    edges = []
    for part in m.group(2).split(","):
        part = part.strip()
        if not part:
            continue
        e = re.fullmatch(r"([0-9]+)\s*-\s*([0-9]+)", part)
        if not e:
            raise InputError(f"bad edge {part!r}; expected i-j", lineno, col)
        a, b = int(e.group(1)), int(e.group(2))
        if not (1 <= a <= n and 1 <= b <= n):
            raise InputError(f"edge {part} has a vertex outside 1..{n}", lineno, col)
        edges.append((a - 1, b - 1))
    return SimpleGraph(n, edges)


def _parse_directive(word: str, rest: str, lineno: int) -> tuple:
    """Returns ``(ideal, construction)``."""
    if word in ("edge_ideal", "graphic_matroid"):
        G = parse_graph(rest, lineno, len(word) + 2)
        info = {"kind": word, "graph_vertices": G.n, "graph_edges": [[a + 1, b + 1] for a, b in G.edges]}
        I = edge_ideal(G) if word == "edge_ideal" else graphic_matroid_ideal(G)
        return I, info
    if word == "transversal":
        m = re.fullmatch(r"([0-9]+)\s*:(.*)", rest.strip())
        if not m:
            raise InputError("expected 'transversal N: {i,j} {k,...}'", lineno, len(word) + 2)
        n = int(m.group(1))
        body = m.group(2)
        if re.sub(r"\{[^{}]*\}", "", body).strip():
            raise InputError("families must be written as {i,j,...}", lineno, len(word) + 2)
        families = []
        for fam in re.findall(r"\{([^{}]*)\}", body):
            idx = [_parse_int(x, lineno, len(word) + 2) for x in fam.split(",") if x.strip()]
            if not idx:
                raise InputError("empty family", lineno, len(word) + 2)
            if any(i < 1 or i > n for i in idx):
                raise InputError(f"family index outside 1..{n}", lineno, len(word) + 2)
            families.append(sorted(set(i - 1 for i in idx)))
        if not families:
            raise InputError("at least one family is required", lineno, len(word) + 2)
        info = {"kind": word, "families": [[i + 1 for i in F] for F in families]}
        return transversal_ideal(families, n), info
    if word == "veronese":
        m = re.fullmatch(r"([0-9]+)\s+([0-9]+)\s*:(.*)", rest.strip())
        if not m:
            raise InputError("expected 'veronese N D: c1 ... cN'", lineno, len(word) + 2)
        n, d = int(m.group(1)), int(m.group(2))
        bounds = [_parse_int(x, lineno, len(word) + 2) for x in m.group(3).split()]
        info = {"kind": word, "degree": d, "bounds": bounds}
        return veronese_type_ideal(n, d, bounds), info
    raise InputError(f"unknown directive {word!r}", lineno, 1)


def parse_ideal_text(text: str) -> ParsedIdeal:
    """Parse the text format into an ideal, its names and its construction."""
    names = None
    items = []  # (kind, payload, lineno, col)
    directive = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).rstrip()
        if not line.strip():
            continue
        stripped = line.lstrip()
        offset = len(line) - len(stripped)
        word = stripped.split(None, 1)[0]
        if word == "vars":
            if names is not None:
                raise InputError("duplicate vars line", lineno, offset + 1)
            if items or directive:
                raise InputError("the vars line must come first", lineno, offset + 1)
            declared = stripped[4:].replace(",", " ").split()
            for nm in declared:
                if not _NAME.fullmatch(nm):
                    raise InputError(f"invalid variable name {nm!r}", lineno, offset + 1)
            if len(set(declared)) != len(declared):
                raise InputError("repeated variable name", lineno, offset + 1)
            names = tuple(declared)
            continue
        if word in DIRECTIVES:
            if directive or items:
                raise InputError("a directive cannot be combined with other generators", lineno, offset + 1)
            try:
                directive = _parse_directive(word, stripped[len(word):], lineno)
            except InputError as exc:
                if exc.line is None:
                    raise InputError(str(exc), lineno, offset + 1) from None
                raise
            continue
        if directive:
            raise InputError("a directive cannot be combined with other generators", lineno, offset + 1)
        for item, col in _split_items(line, lineno):
            if item.startswith("["):
                items.append(("vec", _parse_vector(item, lineno, col), lineno, col))
            elif item == "0":
                items.append(("zero", None, lineno, col))
            else:
                index = {nm: i for i, nm in enumerate(names)} if names is not None else None
                items.append(("mono", _parse_monomial(item, lineno, col, index), lineno, col))

    if directive:
        ideal, info = directive
        if names is not None and len(names) != ideal.n:
            raise InputError(f"vars line names {len(names)} variables, directive builds {ideal.n}")
        return ParsedIdeal(ideal, names or default_names(ideal.n), info)

    if names is None:
        n = 0
        for kind, payload, lineno, col in items:
            if kind == "vec":
                n = max(n, len(payload))
            elif kind == "mono":
                n = max([n] + [int(nm[1:]) for nm in payload])
        names = default_names(n)
    n = len(names)
    index = {nm: i for i, nm in enumerate(names)}
    gens = []
    if any(k == "zero" for k, *_ in items):
        if len(items) > 1:
            _, _, lineno, col = next(it for it in items if it[0] == "zero")
            raise InputError("'0' must be the only generator", lineno, col)
        return ParsedIdeal(MonomialIdeal.zero(n), names, {"kind": "explicit"})
    if not items:
        raise InputError("no generators given (write 0 for the zero ideal)")
    for kind, payload, lineno, col in items:
        if kind == "vec":
            if len(payload) != n:
                raise InputError(f"exponent vector has length {len(payload)}, expected {n}", lineno, col)
            gens.append(payload)
        else:
            u = [0] * n
            for nm, e in payload.items():
                u[index[nm]] += e
            gens.append(u)
    return ParsedIdeal(MonomialIdeal(n, gens), names, {"kind": "explicit"})


def parse_ideal(text: str) -> MonomialIdeal:
    return parse_ideal_text(text).ideal


def format_ideal(I: MonomialIdeal, names: Sequence[str] | None = None) -> str:
    """Canonical text: a vars line, then one generator per line."""
    names = tuple(names) if names is not None else default_names(I.n)
    if len(names) != I.n:
        raise InputError(f"{len(names)} names for {I.n} variables")
    lines = ["vars " + " ".join(names)] if names else ["vars"]
    if I.is_zero:
        lines.append("0")
    else:
        lines.extend(format_monomial(u, names) for u in I.generators)
    return "\n".join(lines) + "\n"
