"""Codes, simplicial complexes, restriction, minimal nonfaces, cliques.

Vertices are named 1..n.  A set of vertices is stored as an int bit
pattern where bit ``i`` set means vertex ``i + 1`` is present, so the
binary string ``"1100"`` (leftmost character = vertex 1) denotes {1, 2}.
Complexes store only their maximal faces; membership is a subset query
against the facets, never a full enumeration of 2^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GuardError, InputError, VoidComplexError

# Ambient vertex cap.  Everything downstream of the subset sweep is
# Theta(2^n * poly), so constructions above this limit are refused
# outright instead of hanging.  Adjustable via set_ambient_cap().
_AMBIENT_CAP = 24


def ambient_cap() -> int:
    return _AMBIENT_CAP


def set_ambient_cap(limit: int) -> None:
    """Raise or lower the hard cap on ambient vertex counts."""
    global _AMBIENT_CAP
    if limit < 1:
        raise InputError(f"ambient cap must be positive, got {limit}")
    _AMBIENT_CAP = limit


def _check_ambient(n: int) -> None:
    if not 1 <= n <= _AMBIENT_CAP:
        raise GuardError(
            f"ambient vertex count n={n} outside the allowed range "
            f"1..{_AMBIENT_CAP}; raise the cap explicitly if you mean it"
        )


@dataclass(frozen=True, order=False)
class VertexSet:
    """A subset of {1..n} as a fixed-width bit pattern."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        _check_ambient(self.n)
        if self.bits < 0 or self.bits >> self.n:
            raise InputError(
                f"bit pattern {self.bits:#x} has vertices outside 1..{self.n}"
            )

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls((1 << n) - 1, n)

    @classmethod
    def of(cls, vertices: Iterable[int], n: int) -> "VertexSet":
        """Build from 1-based vertex labels."""
        bits = 0
        for v in vertices:
            if not 1 <= v <= n:
                raise InputError(f"vertex {v} outside 1..{n}")
            bits |= 1 << (v - 1)
        return cls(bits, n)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "VertexSet":
        """Parse ``"1100"`` (binary, leftmost = vertex 1) or ``"{1,2}"``."""
        text = text.strip()
        if text.startswith("{"):
            if not text.endswith("}"):
                raise InputError(f"unterminated brace set: {text!r}")
            inner = text[1:-1].strip()
            if inner:
                try:
                    vertices = [int(part) for part in inner.split(",")]
                except ValueError:
                    raise InputError(f"bad brace set: {text!r}") from None
            else:
                vertices = []
            if n is None:
                if not vertices:
                    raise InputError(
                        "cannot infer the ambient size from '{}'; declare n"
                    )
                n = max(vertices)
            return cls.of(vertices, n)
        if text and set(text) <= {"0", "1"}:
            if n is not None and len(text) != n:
                raise InputError(
                    f"binary word {text!r} has length {len(text)}, expected {n}"
                )
            width = len(text)
            bits = 0
            for i, ch in enumerate(text):
                if ch == "1":
                    bits |= 1 << i
            return cls(bits, n if n is not None else width)
        raise InputError(f"cannot parse vertex set from {text!r}")

    def cardinality(self) -> int:
        return self.bits.bit_count()

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, vertex: int) -> bool:
        return 1 <= vertex <= self.n and bool(self.bits >> (vertex - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        """Yield 1-based vertex labels in increasing order."""
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length()
            bits ^= low

    def __le__(self, other: "VertexSet") -> bool:
        self._check_same_ambient(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "VertexSet") -> bool:
        return self <= other and self.bits != other.bits

    def issubset(self, other: "VertexSet") -> bool:
        return self <= other

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_same_ambient(other)
        return VertexSet(self.bits & other.bits, self.n)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_same_ambient(other)
        return VertexSet(self.bits | other.bits, self.n)

    def _check_same_ambient(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise InputError(
                f"ambient sizes differ: {self.n} vs {other.n}"
            )

    def vertices(self) -> tuple[int, ...]:
        return tuple(self)

    def binary(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.n))

    def braces(self) -> str:
        return "{" + ",".join(str(v) for v in self) + "}"

    def __repr__(self) -> str:
        return f"VertexSet({self.binary()!r})"


@dataclass(frozen=True)
class Code:
    """A finite set of codewords on n neurons."""

    n: int
    words: frozenset[VertexSet]

    def __post_init__(self) -> None:
        _check_ambient(self.n)
        for w in self.words:
            if w.n != self.n:
                raise InputError(
                    f"codeword on {w.n} neurons in a code on {self.n}"
                )

    @classmethod
    def of(cls, word_texts: Iterable[str], n: int | None = None) -> "Code":
        """Build from binary strings or brace sets; duplicates collapse."""
        texts = list(word_texts)
        if n is None:
            n = _infer_ambient(texts)
        words = frozenset(VertexSet.parse(t, n) for t in texts)
        return cls(n, words)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: VertexSet) -> bool:
        return word in self.words


def _infer_ambient(texts: list[str]) -> int:
    """Infer n from binary word lengths (must agree) or brace maxima."""
    binary_lengths = set()
    brace_max = 0
    saw_any = False
    for t in texts:
        t = t.strip()
        saw_any = True
        if t.startswith("{"):
            parsed = [p for p in t.strip("{}").split(",") if p.strip()]
            try:
                labels = [int(p) for p in parsed]
            except ValueError:
                raise InputError(f"bad brace set: {t!r}") from None
            if labels:
                brace_max = max(brace_max, max(labels))
        else:
            binary_lengths.add(len(t))
    if len(binary_lengths) > 1:
        raise InputError(
            f"binary words of different lengths {sorted(binary_lengths)}; "
            "declare n explicitly"
        )
    if binary_lengths:
        n = binary_lengths.pop()
        if brace_max > n:
            raise InputError(
                f"brace set mentions vertex {brace_max} but binary words "
                f"fix n={n}"
            )
        return n
    if brace_max:
        return brace_max
    if not saw_any:
        raise InputError("no codewords given and no n declared")
    raise InputError("cannot infer the ambient size; declare n")


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed face family on {1..n}, stored by its facets.

    The facets never include the empty set; the irrelevant complex {0}
    has no facets but ``contains_empty_face`` True, while the void
    complex (no faces at all) has the flag False.
    """

    n: int
    facets: frozenset[VertexSet]
    contains_empty_face: bool = True

    def __post_init__(self) -> None:
        _check_ambient(self.n)
        for f in self.facets:
            if f.n != self.n:
                raise InputError(f"facet on {f.n} vertices in ambient {self.n}")
            if not f:
                raise InputError("facets must be nonempty; use from_faces()")
        if self.facets and not self.contains_empty_face:
            raise InputError("a complex with faces always contains the empty face")

    @classmethod
    def from_faces(
        cls, n: int, faces: Iterable[VertexSet] | Iterable[int]
    ) -> "SimplicialComplex":
        """Downward closure of the given faces; facets are the maximal ones."""
        bit_faces = sorted(
            {f.bits if isinstance(f, VertexSet) else int(f) for f in faces},
            key=lambda b: (b.bit_count(), b),
            reverse=True,
        )
        maximal: list[int] = []
        for b in bit_faces:
            if not any(b & ~m == 0 for m in maximal):
                maximal.append(b)
        if not bit_faces:
            return cls(n, frozenset(), contains_empty_face=False)
        if maximal == [0]:
            return cls.irrelevant(n)
        return cls(n, frozenset(VertexSet(b, n) for b in maximal if b))

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, frozenset(), contains_empty_face=False)

    @classmethod
    def irrelevant(cls, n: int) -> "SimplicialComplex":
        return cls(n, frozenset(), contains_empty_face=True)

    @classmethod
    def full_simplex(cls, n: int) -> "SimplicialComplex":
        return cls(n, frozenset({VertexSet.full(n)}))

    @property
    def is_void(self) -> bool:
        return not self.facets and not self.contains_empty_face

    def __contains__(self, face: VertexSet) -> bool:
        if face.n != self.n:
            raise InputError(f"face on {face.n} vertices in ambient {self.n}")
        if not face:
            return self.contains_empty_face
        return any(face.bits & ~f.bits == 0 for f in self.facets)

    def dimension(self) -> int:
        """Max face dimension; -1 for the irrelevant complex."""
        if self.is_void:
            raise VoidComplexError("the void complex has no dimension")
        return max((len(f) for f in self.facets), default=0) - 1

    def faces(self) -> Iterator[VertexSet]:
        """All faces, the empty one included.  Enumerates; small n only."""
        for b in self._face_bits():
            yield VertexSet(b, self.n)

    def _face_bits(self) -> set[int]:
        if self.is_void:
            return set()
        seen = {0}
        for f in self.facets:
            sub = f.bits
            while sub:
                seen.add(sub)
                sub = (sub - 1) & f.bits
        return seen


def complex_of_code(code: Code) -> SimplicialComplex:
    """Smallest simplicial complex containing every codeword."""
    return SimplicialComplex.from_faces(code.n, code.words)


def restrict(d: SimplicialComplex, s: VertexSet) -> SimplicialComplex:
    """Induced subcomplex on s: the faces of d contained in s."""
    if s.n != d.n:
        raise InputError(f"restriction set on {s.n} vertices, complex on {d.n}")
    if not d.facets:
        return d  # void and irrelevant complexes restrict to themselves
    return SimplicialComplex.from_faces(
        d.n, (VertexSet(f.bits & s.bits, d.n) for f in d.facets)
    )


def minimal_nonfaces(d: SimplicialComplex) -> frozenset[VertexSet]:
    """Nonfaces all of whose proper subsets are faces.

    These are the exponent sets of the minimal generators of the
    Stanley-Reisner ideal of d.
    """
    if d.is_void:
        raise VoidComplexError(
            "void complex has no Stanley-Reisner presentation in this tool"
        )
    face_bits = d._face_bits()
    found: set[int] = set()
    for v in range(d.n):
        if (1 << v) not in face_bits:
            found.add(1 << v)
    for face in face_bits:
        for v in range(d.n):
            vb = 1 << v
            if face & vb:
                continue
            cand = face | vb
            if cand in face_bits or cand in found:
                continue
            if all(
                cand ^ (1 << u) in face_bits
                for u in range(d.n)
                if cand >> u & 1
            ):
                found.add(cand)
    return frozenset(VertexSet(b, d.n) for b in found)


def is_clique_complex(d: SimplicialComplex) -> bool:
    """True iff every minimal nonface is a vertex or an edge."""
    return all(len(s) <= 2 for s in minimal_nonfaces(d))


def clique_complex(n: int, edges: Iterable[VertexSet]) -> SimplicialComplex:
    """Complex whose faces are the cliques of the graph on {1..n}."""
    adjacency = [0] * (n + 1)
    for e in edges:
        pair = e.vertices()
        if len(pair) != 2:
            raise InputError(f"edge must have exactly two vertices, got {e!r}")
        u, v = pair
        adjacency[u] |= 1 << (v - 1)
        adjacency[v] |= 1 << (u - 1)
    cliques = _maximal_cliques(n, adjacency)
    return SimplicialComplex.from_faces(n, cliques)


def _maximal_cliques(n: int, adjacency: list[int]) -> list[int]:
    """Bron-Kerbosch with pivoting on bit-pattern vertex sets."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        best = 0
        best_deg = -1
        pool = pivot_pool
        while pool:
            low = pool & -pool
            v = low.bit_length()
            deg = (adjacency[v] & p).bit_count()
            if deg > best_deg:
                best, best_deg = v, deg
            pool ^= low
        candidates = p & ~adjacency[best]
        while candidates:
            low = candidates & -candidates
            v = low.bit_length()
            nv = adjacency[v]
            expand(r | low, p & nv, x & nv)
            p &= ~low
            x |= low
            candidates ^= low

    expand(0, (1 << n) - 1, 0)
    return out


def face_count_by_dimension(d: SimplicialComplex) -> list[int]:
    """Counts [c_-1, c_0, ..., c_dim] of faces by dimension."""
    if d.is_void:
        raise VoidComplexError("the void complex has no faces to count")
    counts = [0] * (d.dimension() + 2)
    for b in d._face_bits():
        counts[b.bit_count()] += 1
    return counts
