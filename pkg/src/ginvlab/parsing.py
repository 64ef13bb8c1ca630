"""Element expressions: a tiny grammar and its canonical renderer.

Grammar:
    expr := term { "+" term }
    term := integer [ word ] | word
    word := atom { atom }        atom := generator label | "1"

Juxtaposed atoms multiply left to right; "1" is the ring unity; a bare
integer is a coefficient on the unity (so "3" works in Z/n and "0" is
zero everywhere).  Whitespace separates atoms but is otherwise free.
The renderer emits one canonical form per element and round-trips
through the parser.
"""

from __future__ import annotations

import re

from .errors import ParseError, UnknownGenerator

LABEL_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\+)|(\s+)")


def _tokenize(text: str):
    """Yield (kind, value, position); kind in {'int', 'label', 'plus'}."""
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), pos))
        elif m.group(2) is not None:
            out.append(("label", m.group(2), pos))
        elif m.group(3) is not None:
            out.append(("plus", "+", pos))
        pos = m.end()
    return out


def parse_element(ring, text: str):
    """Evaluate an element expression in the given ring."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression", 0)
    labels = ring.generator_labels()

    terms: list[list] = [[]]
    for tok in tokens:
        if tok[0] == "plus":
            if not terms[-1]:
                raise ParseError("expected a term before '+'", tok[2])
            terms.append([])
        else:
            terms[-1].append(tok)
    if not terms[-1]:
        last = tokens[-1]
        raise ParseError("expected a term after '+'", last[2] + 1)

    total = ring.zero()
    for term in terms:
        coeff = 1
        rest = term
        if term[0][0] == "int":
            coeff = term[0][1]
            rest = term[1:]
        value = ring.one()
        for kind, val, pos in rest:
            if kind == "int":
                if val != 1:
                    raise ParseError(f"unexpected integer {val} inside a word", pos)
                continue  # multiplying by unity
            if val not in labels:
                raise UnknownGenerator(f"unknown generator {val!r}", pos)
            value = value * ring.from_index(labels[val])
        total = total + ring.from_index(ring.scale_index(coeff % ring.char, value.index))
    return total


def render_elem(e) -> str:
    """Canonical text form; parse_element(ring, render_elem(e)) == e."""
    ring = e.ring
    if ring.kind == "zmod":
        return str(e.index)
    if e.index == 0:
        return "0"
    if ring.kind == "matrix":
        grid = e.payload
        parts = []
        for r in range(ring.k):
            for c in range(ring.k):
                v = grid[r][c]
                if v == 0:
                    continue
                label = f"e{r + 1}{c + 1}"
                parts.append(label if v == 1 else f"{v} {label}")
        return " + ".join(parts)
    if ring.kind == "table":
        coeffs = e.payload
        parts = []
        for m, v in enumerate(coeffs):
            if v == 0:
                continue
            label = ring.labels[m]
            if label == "1":
                parts.append(str(v))
            else:
                parts.append(label if v == 1 else f"{v} {label}")
        return " + ".join(parts)
    raise ValueError(f"cannot render elements of ring kind {ring.kind!r}")
