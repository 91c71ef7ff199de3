"""The ``qgg`` v1 text format for gain graphs, and the companion theta format.

    qgg 1
    # comment
    n 4
    e 0 1 0 1 0 0        # edge 0 -> 1 with gain i

Vertices are 0-based, each edge line has ``u < v`` and the gain of the
orientation ``u -> v`` as four coefficients written as integers or ``p/q``.
Gains must be exact units.  In lenient mode decimal coefficients are also
accepted, and the gain only has to be within 1e-12 of unit norm; such files
can feed the floating-point adjoint rank only.

A switching function is stored in the same style:

    theta 1
    t 0 1 0 0 0
    t 1 0 0 1 0
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .gain_graph import GainGraph, as_switching
from .qlinalg import QMatrix
from .quaternion import (ZERO, conjugate, format_quaternion, norm_squared,
                         parse_quaternion)

LENIENT_TOLERANCE = 1e-12


class QggError(ValueError):
    def __init__(self, message: str, line: int = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class QggFile:
    n: int
    edges: tuple  # ((u, v, Quaternion), ...) sorted by (u, v)
    exact: bool = True  # every gain is exactly unit

    def to_gain_graph(self) -> GainGraph:
        if not self.exact:
            raise QggError("gains are not exact units; only the adjoint rank accepts this file")
        return GainGraph(self.n, self.edges)

    def adjacency(self) -> QMatrix:
        n = self.n
        out = [ZERO] * (n * n)
        for u, v, q in self.edges:
            out[u * n + v] = q
            out[v * n + u] = conjugate(q)
        return QMatrix(n, n, out)

    @classmethod
    def from_gain_graph(cls, g: GainGraph) -> "QggFile":
        return cls(g.n, tuple((u, v, q) for (u, v), q in g.gains.items()))


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_qgg(text: str, lenient: bool = False) -> QggFile:
    n = None
    edges = {}
    exact = True
    header_seen = False
    last = 0
    for lineno, tok in _lines(text):
        last = lineno
        if not header_seen:
            if tok != ["qgg", "1"]:
                raise QggError("expected header 'qgg 1'", lineno)
            header_seen = True
            continue
        kind = tok[0]
        if kind == "n":
            if n is not None:
                raise QggError("vertex count given twice", lineno)
            if len(tok) != 2 or not tok[1].isdigit():
                raise QggError("expected 'n <N>'", lineno)
            n = int(tok[1])
        elif kind == "e":
            if n is None:
                raise QggError("edge before vertex count", lineno)
            if len(tok) != 7:
                raise QggError("expected 'e <u> <v> <a0> <a1> <a2> <a3>'", lineno)
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise QggError("vertex indices must be integers", lineno) from None
            if not 0 <= u < v < n:
                raise QggError(f"need 0 <= u < v < {n}, got {u} {v}", lineno)
            if (u, v) in edges:
                raise QggError(f"duplicate edge {u} {v}", lineno)
            try:
                q = parse_quaternion(" ".join(tok[3:]), allow_decimal=lenient)
            except ValueError as exc:
                raise QggError(str(exc), lineno) from None
            if any("." in t or "e" in t.lower() for t in tok[3:]):
                exact = False  # decimals feed the adjoint rank only
            ns = norm_squared(q)
            if ns != 1:
                if not lenient or abs(float(ns) - 1.0) > LENIENT_TOLERANCE:
                    raise QggError(f"gain {format_quaternion(q)} is not a unit", lineno)
                exact = False
            edges[(u, v)] = q
        else:
            raise QggError(f"unknown record {kind!r}", lineno)
    if not header_seen:
        raise QggError("empty file; expected header 'qgg 1'", last or 1)
    if n is None:
        raise QggError("missing vertex count line", last)
    return QggFile(n, tuple((u, v, q) for (u, v), q in sorted(edges.items())), exact)


def format_qgg(doc: Union[QggFile, GainGraph]) -> str:
    if isinstance(doc, GainGraph):
        doc = QggFile.from_gain_graph(doc)
    lines = ["qgg 1", f"n {doc.n}"]
    lines += [f"e {u} {v} {format_quaternion(q)}" for u, v, q in doc.edges]
    return "\n".join(lines) + "\n"


def read_qgg(path, lenient: bool = False) -> QggFile:
    return parse_qgg(Path(path).read_text(encoding="utf-8"), lenient=lenient)


def parse_theta(text: str, n: int) -> tuple:
    values = {}
    header_seen = False
    for lineno, tok in _lines(text):
        if not header_seen:
            if tok != ["theta", "1"]:
                raise QggError("expected header 'theta 1'", lineno)
            header_seen = True
            continue
        if tok[0] != "t" or len(tok) != 6:
            raise QggError("expected 't <v> <a0> <a1> <a2> <a3>'", lineno)
        try:
            v = int(tok[1])
            q = parse_quaternion(" ".join(tok[2:]))
        except ValueError as exc:
            raise QggError(str(exc), lineno) from None
        if not 0 <= v < n:
            raise QggError(f"vertex {v} out of range for n={n}", lineno)
        if v in values:
            raise QggError(f"vertex {v} given twice", lineno)
        if norm_squared(q) != 1:
            raise QggError(f"theta value {format_quaternion(q)} is not a unit", lineno)
        values[v] = q
    if not header_seen:
        raise QggError("empty file; expected header 'theta 1'")
    missing = [v for v in range(n) if v not in values]
    if missing:
        raise QggError(f"theta undefined on vertices {missing}")
    return as_switching(values, n)


def format_theta(theta) -> str:
    lines = ["theta 1"] + [f"t {v} {format_quaternion(q)}" for v, q in enumerate(theta)]
    return "\n".join(lines) + "\n"

