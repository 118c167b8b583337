"""Bracket-word notation for products of group elements.

Grammar (whitespace between tokens is ignored)::

    word    := item* [ '=' '1' ]
    item    := symbol | literal | '[' word ']' [ '^' int ]
    symbol  := 'i' | 'a' | 'a2'          (a2 is a*a)
    literal := cycle+                    e.g. (1 3)(2 4)

Juxtaposition is the group product, rightmost factor applied first.
At top level every item is one entry of a vector and ``[w]^n`` stands for
``n`` consecutive copies of ``w``; nested inside brackets, ``^n`` is
simply a power.
"""
from __future__ import annotations

import re
from typing import Mapping

from .groups import GroupError, GroupTable, parse_permutation


class WordError(ValueError):
    pass


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<lit>(?:\([\d\s,]*\)\s*)+)|(?P<sym>[A-Za-z][A-Za-z0-9]*)"
    r"|(?P<open>\[)|(?P<close>\])|(?P<pow>\^\s*-?\d+)|(?P<eq>=\s*1\s*$))"
)


def _tokenize(word: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    word = word.rstrip()
    while pos < len(word):
        m = _TOKEN_RE.match(word, pos)
        if not m or m.end() == pos:
            raise WordError(f"cannot parse {word[pos:]!r}")
        pos = m.end()
        kind = m.lastgroup
        out.append((kind, m.group(kind).strip()))
    return out


def _items(tokens, pos, group, binding, depth):
    """Parse items until a closing bracket; return (list of (element, copies), pos)."""
    items = []
    while pos < len(tokens):
        kind, text = tokens[pos]
        if kind == "close":
            if depth == 0:
                raise WordError("unbalanced brackets: unexpected ']'")
            return items, pos
        if kind == "eq":
            if depth != 0 or pos != len(tokens) - 1:
                raise WordError("'=1' only allowed at the end of a word")
            pos += 1
            continue
        if kind == "pow":
            raise WordError("exponent without a bracket group")
        if kind == "sym":
            items.append((_symbol(text, group, binding), 1))
            pos += 1
        elif kind == "lit":
            try:
                items.append((group.element(parse_permutation(text, group.degree)), 1))
            except GroupError as exc:
                raise WordError(str(exc)) from None
            pos += 1
        else:  # open
            inner, pos = _items(tokens, pos + 1, group, binding, depth + 1)
            if pos >= len(tokens) or tokens[pos][0] != "close":
                raise WordError("unbalanced brackets: missing ']'")
            pos += 1
            value = group.product(x for x, n in inner for _ in range(n))
            copies = 1
            if pos < len(tokens) and tokens[pos][0] == "pow":
                copies = int(tokens[pos][1].lstrip("^").strip())
                pos += 1
            if copies < 0:
                value, copies = group.inv[value], -copies
            items.append((value, copies))
    if depth != 0:
        raise WordError("unbalanced brackets: missing ']'")
    return items, pos


def _symbol(name: str, group: GroupTable, binding: Mapping[str, int]) -> int:
    if name in binding:
        return binding[name]
    if name == "a2" and "a" in binding:
        return group.power(binding["a"], 2)
    raise WordError(f"unknown token {name!r}")


def _parse(group, word, binding):
    tokens = _tokenize(word)
    items, pos = _items(tokens, 0, group, binding, 0)
    if pos != len(tokens):
        raise WordError("unbalanced brackets: unexpected ']'")
    return items


def parse_vector(group: GroupTable, word: str, binding: Mapping[str, int]) -> list[int]:
    """Entries of the vector spelled by ``word`` (top-level items, copies expanded)."""
    return [x for x, n in _parse(group, word, binding) for _ in range(n)]


def evaluate_word(group: GroupTable, word: str, binding: Mapping[str, int]) -> int:
    """Element index of the full product spelled by ``word``."""
    return group.product(parse_vector(group, word, binding))


def render_vector(group: GroupTable, entries) -> str:
    """Cycle-notation word, grouping consecutive equal entries as ``[x]^n``."""
    parts = []
    n = 0
    entries = list(entries)
    while n < len(entries):
        m = n
        while m < len(entries) and entries[m] == entries[n]:
            m += 1
        text = f"[{group.elements[entries[n]].render()}]"
        parts.append(text if m - n == 1 else f"{text}^{m - n}")
        n = m
    return "".join(parts)


def shortest_words(group: GroupTable, binding: Mapping[str, int]) -> dict[int, str]:
    """Breadth-first shortest spelling of every reachable element in the symbols
    ``i``, ``a``, ``a2`` (in that preference order)."""
    gens = [(name, _symbol(name, group, binding)) for name in ("i", "a", "a2")]
    words = {group.identity_index: ""}
    frontier = [group.identity_index]
    while frontier:
        nxt = []
        for x in frontier:
            for name, g in gens:
                y = group.mul[x][g]
                if y not in words:
                    words[y] = (words[x] + " " + name).strip()
                    nxt.append(y)
        frontier = nxt
    return words


def render_symbolic(group: GroupTable, entries, binding: Mapping[str, int]) -> str | None:
    """Same grouping as :func:`render_vector` but with ``i``/``a`` words, or
    ``None`` if some entry is not reachable from the binding."""
    words = shortest_words(group, binding)
    if any(x not in words for x in entries):
        return None
    parts = []
    entries = list(entries)
    n = 0
    while n < len(entries):
        m = n
        while m < len(entries) and entries[m] == entries[n]:
            m += 1
        text = f"[{words[entries[n]] or '1'}]"
        parts.append(text if m - n == 1 else f"{text}^{m - n}")
        n = m
    return "".join(parts)
