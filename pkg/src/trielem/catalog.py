"""Named lattices and the expression grammar that combines them.

Catalog names: U, A<n> (n >= 1), D<n> (n >= 4), E6, E7, E8, E6*(3), K3.
Root lattices use the negated Cartan matrix, so they are even and negative
definite; K3 is U+U+U+E8+E8.  Expressions look like ``U(3)+A2^4``: ``(m)``
rescales by m, ``^k`` repeats a summand, ``+`` (or a circled plus) joins
direct summands.
"""

from __future__ import annotations

import re

from .errors import ParseError, UnknownName
from .lattice import Lattice
from .linalg import Matrix, rational_inverse


def _cartan(n, edges):
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
    for i, j in edges:
        c[i][j] = c[j][i] = -1
    return c


def _negated(rows):
    return [[-x for x in row] for row in rows]


def _gram_a(n):
    return _negated(_cartan(n, [(i, i + 1) for i in range(n - 1)]))


def _gram_d(n):
    edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    return _negated(_cartan(n, edges))


def _gram_e(l):
    edges = [(i, i + 1) for i in range(l - 2)] + [(2, l - 1)]
    return _negated(_cartan(l, edges))


def _block_diag(blocks):
    total = sum(len(b) for b in blocks)
    rows = [[0] * total for _ in range(total)]
    at = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                rows[at + i][at + j] = x
        at += len(b)
    return rows


_GRAM_U = [[0, 1], [1, 0]]


def _base_gram(token: str):
    """Rows for a base name; rational for E6* (the dual of E6)."""
    if token == "U":
        return _GRAM_U
    if token == "K3":
        return _block_diag([_GRAM_U, _GRAM_U, _GRAM_U, _gram_e(8), _gram_e(8)])
    if token in ("E6", "E7", "E8"):
        return _gram_e(int(token[1]))
    if token == "E6*":
        return [list(row) for row in rational_inverse(Matrix(_gram_e(6))).entries]
    if token[0] == "A":
        n = int(token[1:])
        if n < 1:
            raise UnknownName(f"{token}: A-series needs n >= 1")
        return _gram_a(n)
    if token[0] == "D":
        n = int(token[1:])
        if n < 4:
            raise UnknownName(f"{token}: D-series needs n >= 4")
        return _gram_d(n)
    raise UnknownName(f"unknown lattice name: {token!r}")


def build(name: str) -> Lattice:
    """Construct a catalog lattice by its exact name."""
    if name == "E6*(3)":
        gram = Matrix(_base_gram("E6*")).scaled(3)
        return Lattice(gram.to_int(), "E6*(3)")
    if name == "E6*":
        raise UnknownName("E6* is only cataloged with its integral scale, E6*(3)")
    if not _BASE_RE.fullmatch(name):
        raise UnknownName(f"unknown lattice name: {name!r}")
    return Lattice(Matrix(_base_gram(name)), name)


_BASE_RE = re.compile(r"K3|E6\*|E[678]|A[0-9]+|D[0-9]+|U")
_INT_RE = re.compile(r"-?[0-9]+")


def parse_expr(text: str) -> Lattice:
    """Parse a direct-sum expression into a lattice.

    Grammar: ``expr := atom ('+' atom)*``, ``atom := base suffix*``,
    ``suffix := '(' int ')' | '^' posint``.  Whitespace is ignored, scales
    apply innermost-first, and ``X^k`` is the k-fold direct sum.  Raises
    ParseError (with the character offset) or UnknownName.
    """
    src = text.replace("⊕", "+")
    pos = 0
    end = len(src)

    def skip_ws():
        nonlocal pos
        while pos < end and src[pos].isspace():
            pos += 1

    blocks: list[list] = []
    labels: list[str] = []
    while True:
        skip_ws()
        match = _BASE_RE.match(src, pos)
        if not match:
            raise ParseError("expected a lattice name", pos)
        token = match.group(0)
        start = pos
        pos = match.end()
        gram = Matrix(_base_gram(token))
        label = token
        while True:
            skip_ws()
            if pos < end and src[pos] == "(":
                pos += 1
                skip_ws()
                mi = _INT_RE.match(src, pos)
                if not mi:
                    raise ParseError("expected an integer scale", pos)
                scale = int(mi.group(0))
                pos = mi.end()
                skip_ws()
                if pos >= end or src[pos] != ")":
                    raise ParseError("expected ')'", pos)
                pos += 1
                if scale == 0:
                    raise ParseError("scale factor must be nonzero", start)
                gram = gram.scaled(scale)
                label += f"({scale})"
            elif pos < end and src[pos] == "^":
                pos += 1
                skip_ws()
                mi = _INT_RE.match(src, pos)
                if not mi or int(mi.group(0)) < 1:
                    raise ParseError("expected a positive repeat count", pos)
                k = int(mi.group(0))
                pos = mi.end()
                rows = [list(r) for r in gram.entries]
                gram = Matrix(_block_diag([rows] * k))
                label += f"^{k}"
            else:
                break
        if not gram.is_integral:
            raise ParseError(
                f"{label} has a non-integer Gram matrix; scale it by a multiple of 3",
                start,
            )
        blocks.append([list(r) for r in gram.to_int().entries])
        labels.append(label)
        skip_ws()
        if pos < end and src[pos] == "+":
            pos += 1
            continue
        break
    skip_ws()
    if pos != end:
        raise ParseError("unexpected trailing input", pos)
    return Lattice(Matrix(_block_diag(blocks)), "+".join(labels))
