"""Reading codes and complexes from text files.

Grammar, shared by both formats: UTF-8, one vertex set per line as a
binary word ("1100") or a brace set ("{1,2}"), '#' starts a comment,
and the first non-comment line may declare "n=<int>".  Without the
declaration, n is inferred from the binary word length (all words must
agree) or from the largest brace element.
"""

from __future__ import annotations

from pathlib import Path

from .complexes import Code, SimplicialComplex, VertexSet, _infer_ambient
from .errors import InputError


def _content_lines(text: str) -> tuple[int | None, list[str]]:
    declared: int | None = None
    lines: list[str] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if declared is None and not lines and line.lower().startswith("n="):
            try:
                declared = int(line[2:])
            except ValueError:
                raise InputError(f"bad ambient declaration {line!r}") from None
            continue
        lines.append(line)
    return declared, lines


def parse_vertex_sets(text: str) -> tuple[int, list[VertexSet]]:
    """Parse a file body into (n, vertex sets)."""
    declared, lines = _content_lines(text)
    n = declared if declared is not None else _infer_ambient(lines)
    return n, [VertexSet.parse(line, n) for line in lines]


def read_code(path: str | Path) -> Code:
    """A code file: one codeword per line."""
    n, words = parse_vertex_sets(Path(path).read_text(encoding="utf-8"))
    return Code(n, frozenset(words))


def read_complex(path: str | Path) -> SimplicialComplex:
    """A complex file: one facet per line (non-maximal lines are absorbed)."""
    n, faces = parse_vertex_sets(Path(path).read_text(encoding="utf-8"))
    if not faces:
        return SimplicialComplex.irrelevant(n)
    return SimplicialComplex.from_faces(n, faces)
