"""Constructors for the recurring example families.

The cross-polytopes, their cones, complete bipartite clique complexes,
and hollow simplices are the fixtures every golden test is written
against; the vertex numbering below is pinned so that gradings come out
as exact bit patterns (pairs (1,2), (3,4), ... and the cone point last).
"""

from __future__ import annotations

import itertools
import random

from .complexes import Code, SimplicialComplex, VertexSet, clique_complex
from .errors import InputError

_L26_WORDS = (
    "0000", "1000", "0100", "0010", "0001", "1100", "1010",
    "1001", "0110", "0101", "0011", "1110", "1011", "0111",
)


def cross_polytope(i: int) -> SimplicialComplex:
    """Clique complex on 2(i+1) vertices missing only the i+1 pair edges.

    Vertex 2k+1 is never adjacent to vertex 2k+2; the facets pick one
    vertex from each pair.  Index 0 gives two isolated vertices, 1 the
    square, 2 the octahedron.
    """
    if i < 0:
        raise InputError(f"cross-polytope index must be >= 0, got {i}")
    n = 2 * (i + 1)
    facets = []
    for choice in itertools.product((0, 1), repeat=i + 1):
        bits = 0
        for k, pick in enumerate(choice):
            bits |= 1 << (2 * k + pick)
        facets.append(bits)
    return SimplicialComplex.from_faces(n, facets)


def cone(d: SimplicialComplex) -> SimplicialComplex:
    """Join a fresh top-numbered vertex to every face of d."""
    n = d.n + 1
    apex = 1 << d.n
    if d.is_void:
        return SimplicialComplex.void(n)
    if not d.facets:
        return SimplicialComplex.from_faces(n, [apex])
    return SimplicialComplex.from_faces(n, (f.bits | apex for f in d.facets))


def cone_of_cross_polytope(i: int) -> SimplicialComplex:
    return cone(cross_polytope(i))


def complete_bipartite_clique(r: int) -> SimplicialComplex:
    """Clique complex of K_{r,r} with sides {1..r} and {r+1..2r}."""
    if r < 1:
        raise InputError(f"side size must be >= 1, got {r}")
    n = 2 * r
    edges = [
        VertexSet.of((u, v), n)
        for u in range(1, r + 1)
        for v in range(r + 1, n + 1)
    ]
    return clique_complex(n, edges)


def hollow_simplex(m: int) -> SimplicialComplex:
    """Every proper subset of {1..m} is a face; the whole set is not."""
    if m < 2:
        raise InputError(f"a hollow simplex needs >= 2 vertices, got {m}")
    full = (1 << m) - 1
    return SimplicialComplex.from_faces(m, (full ^ (1 << v) for v in range(m)))


def full_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex.full_simplex(n)


def code_l26() -> Code:
    """The 14-word code on 4 neurons whose complex misses one triangle."""
    return Code.of(_L26_WORDS, n=4)


def random_complex(n: int, density: float, seed: int) -> SimplicialComplex:
    """Downward closure of a random face sample; all vertices always faces.

    Each subset with two or more vertices joins the sample with the
    given probability, independently, so density 0 leaves n isolated
    vertices and density 1 fills the whole simplex.  Enumerates 2^n
    candidates; intended for small n.
    """
    if not 0.0 <= density <= 1.0:
        raise InputError(f"density must lie in [0, 1], got {density}")
    rng = random.Random(seed)
    faces = [1 << v for v in range(n)]
    for bits in range(1, 1 << n):
        if bits.bit_count() >= 2 and rng.random() < density:
            faces.append(bits)
    return SimplicialComplex.from_faces(n, faces)
