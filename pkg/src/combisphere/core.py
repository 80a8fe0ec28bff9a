"""Pure simplicial complexes: facet-level data model and primitive operations.

Vertex labels are positive integers.  A complex is stored by its facet set in
canonical order (each facet strictly increasing, facets sorted
lexicographically), so equal complexes serialize to identical bytes.  All
values are immutable; every operation returns a fresh ``Complex``.

The empty complex exists only as the boundary of a closed pseudomanifold.  No
constructor accepts an empty facet list and no other operation returns one.
"""

from __future__ import annotations

import itertools
from typing import Iterable, NamedTuple

from .errors import (
    DuplicateVertexInFacet,
    EmptyInput,
    FreshVertexCollision,
    InvalidVertexLabel,
    LinkNotStandardSphere,
    MovePreconditionFailed,
    NonPure,
    NonPureResult,
    NotClosedPseudomanifold,
    NotProperSubcomplex,
    RidgeInThreeFacets,
    SigmaAlreadyFace,
    VertexNotPresent,
    VertexSetsOverlap,
)


class Simplex(tuple):
    """A face: strictly increasing tuple of positive integer vertex labels."""

    __slots__ = ()

    def __new__(cls, vertices: Iterable[int]) -> "Simplex":
        vs = list(vertices)
        for v in vs:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InvalidVertexLabel(
                    f"vertex labels must be positive integers, got {v!r}"
                )
        vs.sort()
        for a, b in zip(vs, vs[1:]):
            if a == b:
                raise DuplicateVertexInFacet(f"duplicate vertex {a} in facet {vs}")
        return tuple.__new__(cls, vs)

    @classmethod
    def _raw(cls, sorted_vertices: tuple[int, ...]) -> "Simplex":
        # caller guarantees a strictly increasing tuple of valid labels
        return tuple.__new__(cls, sorted_vertices)

    @property
    def dim(self) -> int:
        return len(self) - 1

    def __repr__(self) -> str:
        return f"Simplex({tuple(self)})"


class Complex:
    """A pure simplicial complex, identified with its facet set."""

    __slots__ = ("_facets", "_fsets", "_fset_family", "_vertices", "_faces", "_hash")

    def __init__(self, facets: tuple[Simplex, ...], *, _canonical: bool = False):
        if not _canonical:
            raise TypeError("use from_facets() or the module operations")
        self._facets = facets
        self._fsets = tuple(frozenset(f) for f in facets)
        self._fset_family = frozenset(self._fsets)
        self._vertices: tuple[int, ...] | None = None
        self._faces: dict[int, frozenset[frozenset[int]]] = {}
        self._hash: int | None = None

    # -- construction ---------------------------------------------------------

    @classmethod
    def _from_simplices(cls, simplices: Iterable[Simplex]) -> "Complex":
        facets = tuple(sorted(set(simplices)))
        if facets and any(len(f) != len(facets[0]) for f in facets):
            raise NonPure("facets of differing dimension")
        return cls(facets, _canonical=True)

    @classmethod
    def _from_vertex_sets(cls, vertex_sets: Iterable[Iterable[int]]) -> "Complex":
        return cls._from_simplices(
            Simplex._raw(tuple(sorted(vs))) for vs in vertex_sets
        )

    # -- basic queries ----------------------------------------------------------

    @property
    def facets(self) -> tuple[Simplex, ...]:
        return self._facets

    @property
    def is_empty(self) -> bool:
        return not self._facets

    @property
    def dim(self) -> int:
        return len(self._facets[0]) - 1 if self._facets else -1

    @property
    def n_facets(self) -> int:
        return len(self._facets)

    @property
    def vertices(self) -> tuple[int, ...]:
        if self._vertices is None:
            seen: set[int] = set()
            for f in self._fsets:
                seen |= f
            self._vertices = tuple(sorted(seen))
        return self._vertices

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def faces_of_size(self, k: int) -> frozenset[frozenset[int]]:
        """All faces with exactly k vertices, as frozensets."""
        if k < 0 or k > self.dim + 1:
            return frozenset()
        if k not in self._faces:
            out: set[frozenset[int]] = set()
            for f in self._facets:
                out.update(frozenset(c) for c in itertools.combinations(f, k))
            self._faces[k] = frozenset(out)
        return self._faces[k]

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.faces_of_size(k)) for k in range(1, self.dim + 2))

    def has_face(self, face: Iterable[int]) -> bool:
        fs = frozenset(face)
        return any(fs <= f for f in self._fsets)

    # -- value semantics -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self._fset_family == other._fset_family

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._fset_family)
        return self._hash

    def __repr__(self) -> str:
        if self.is_empty:
            return "Complex(empty)"
        return f"Complex(dim={self.dim}, facets={len(self._facets)})"


class PseudomanifoldReport(NamedTuple):
    is_pseudomanifold: bool
    closed: bool


class DualGraph:
    """Facet-adjacency graph: nodes are facets, edges join facets sharing a ridge."""

    __slots__ = ("nodes", "edges", "ridge_index", "_adj")

    def __init__(self, nodes, edges, ridge_index, adj):
        self.nodes: tuple[Simplex, ...] = nodes
        self.edges: tuple[tuple[Simplex, Simplex], ...] = edges
        self.ridge_index: dict[Simplex, tuple[Simplex, ...]] = ridge_index
        self._adj: dict[Simplex, tuple[Simplex, ...]] = adj

    def neighbors(self, facet: Simplex) -> tuple[Simplex, ...]:
        return self._adj[facet]

    def degree(self, facet: Simplex) -> int:
        return len(self._adj[facet])

    def max_ridge_multiplicity(self) -> int:
        if not self.ridge_index:
            return 0
        return max(len(owners) for owners in self.ridge_index.values())

    def is_connected(self) -> bool:
        if not self.nodes:
            return False
        seen = {self.nodes[0]}
        frontier = [self.nodes[0]]
        while frontier:
            nxt = []
            for f in frontier:
                for g in self._adj[f]:
                    if g not in seen:
                        seen.add(g)
                        nxt.append(g)
            frontier = nxt
        return len(seen) == len(self.nodes)

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == len(self.nodes) - 1


# ---------------------------------------------------------------------------
# construction and primitive operations
# ---------------------------------------------------------------------------


def from_facets(facet_list: Iterable[Iterable[int]]) -> Complex:
    """Build a pure complex from a facet list.

    Validates labels (positive integers, no duplicates inside a facet) and
    purity; duplicate facets collapse.  The facet order of the input is
    irrelevant: the result is canonical.
    """
    facets = [Simplex(f) for f in facet_list]
    if not facets:
        raise EmptyInput("a complex needs at least one facet")
    return Complex._from_simplices(facets)


def link(X: Complex, v: int) -> Complex:
    """The link of vertex v: facets are sigma minus v over facets containing v."""
    if v not in X.vertex_set:
        raise VertexNotPresent(f"vertex {v} not in the complex")
    if X.dim == 0:
        raise NonPureResult("link of a vertex in a 0-complex is empty")
    return Complex._from_vertex_sets(fs - {v} for fs in X._fsets if v in fs)


def anti_star(X: Complex, v: int) -> Complex:
    """All faces avoiding v.  Must be pure of full dimension to be a Complex."""
    if v not in X.vertex_set:
        raise VertexNotPresent(f"vertex {v} not in the complex")
    keep = [f for f, fs in zip(X.facets, X._fsets) if v not in fs]
    if not keep:
        raise NonPureResult(
            f"every facet contains {v}; the anti-star drops a dimension"
        )
    keep_sets = [frozenset(f) for f in keep]
    for fs in X._fsets:
        if v in fs:
            rest = fs - {v}
            if not any(rest <= ks for ks in keep_sets):
                raise NonPureResult(
                    f"face {tuple(sorted(rest))} is maximal in the anti-star "
                    f"but has dimension {len(rest) - 1} < {X.dim}"
                )
    return Complex._from_simplices(keep)


def join(X: Complex, Y: Complex) -> Complex:
    """Simplicial join: facets are unions of facet pairs.  Vertex sets must be disjoint."""
    if X.is_empty or Y.is_empty:
        raise EmptyInput("join factors must be nonempty")
    overlap = X.vertex_set & Y.vertex_set
    if overlap:
        raise VertexSetsOverlap(f"factors share vertices {sorted(overlap)}")
    return Complex._from_vertex_sets(
        a | b for a in X._fsets for b in Y._fsets
    )


def complement(X: Complex, Y: Complex) -> Complex:
    """Facets of X that are not facets of Y; Y must be a proper facet subset."""
    if Y.is_empty or X.is_empty:
        raise NotProperSubcomplex("complement needs nonempty complexes")
    if Y.dim != X.dim:
        raise NotProperSubcomplex(
            f"dimension mismatch: {Y.dim} != {X.dim}"
        )
    if not Y._fset_family <= X._fset_family:
        raise NotProperSubcomplex("some facet of the second complex is not a facet of the first")
    if Y._fset_family == X._fset_family:
        raise NotProperSubcomplex("the complexes are equal; the complement is empty")
    return Complex._from_simplices(
        f for f, fs in zip(X.facets, X._fsets) if fs not in Y._fset_family
    )


def _ridge_map(X: Complex) -> dict[frozenset[int], list[int]]:
    """Ridge -> indices of owning facets."""
    ridges: dict[frozenset[int], list[int]] = {}
    for i, fs in enumerate(X._fsets):
        for v in X.facets[i]:
            r = fs - {v}
            ridges.setdefault(r, []).append(i)
    return ridges


def boundary(X: Complex) -> Complex:
    """Ridges lying in exactly one facet.  May be empty (closed input)."""
    if X.dim < 1:
        raise NonPure("boundary requires dimension >= 1")
    ridges = _ridge_map(X)
    for r, owners in ridges.items():
        if len(owners) > 2:
            raise RidgeInThreeFacets(
                f"ridge {tuple(sorted(r))} lies in {len(owners)} facets"
            )
    out = [r for r, owners in ridges.items() if len(owners) == 1]
    if not out:
        return Complex((), _canonical=True)
    return Complex._from_vertex_sets(out)


def dual_graph(X: Complex) -> DualGraph:
    """Facet adjacency along shared ridges, with the ridge index."""
    ridges = _ridge_map(X)
    adj: dict[Simplex, set[Simplex]] = {f: set() for f in X.facets}
    edges: set[tuple[Simplex, Simplex]] = set()
    ridge_index: dict[Simplex, tuple[Simplex, ...]] = {}
    for r, owners in sorted(ridges.items(), key=lambda kv: tuple(sorted(kv[0]))):
        owner_facets = tuple(X.facets[i] for i in owners)
        ridge_index[Simplex._raw(tuple(sorted(r)))] = owner_facets
        for a, b in itertools.combinations(owner_facets, 2):
            lo, hi = (a, b) if a <= b else (b, a)
            edges.add((lo, hi))
            adj[a].add(b)
            adj[b].add(a)
    return DualGraph(
        X.facets,
        tuple(sorted(edges)),
        ridge_index,
        {f: tuple(sorted(adj[f])) for f in X.facets},
    )


def pseudomanifold_check(X: Complex) -> PseudomanifoldReport:
    """Every ridge in at most two facets and the dual graph connected; closed
    when every ridge is in exactly two."""
    if X.is_empty:
        return PseudomanifoldReport(False, False)
    ridges = _ridge_map(X)
    counts = [len(owners) for owners in ridges.values()]
    if any(c > 2 for c in counts):
        return PseudomanifoldReport(False, False)
    # connectivity over ridge-sharing, without building the full graph
    adj: dict[int, list[int]] = {i: [] for i in range(len(X.facets))}
    for owners in ridges.values():
        if len(owners) == 2:
            a, b = owners
            adj[a].append(b)
            adj[b].append(a)
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for j in adj[i]:
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
        frontier = nxt
    is_pm = len(seen) == len(X.facets)
    return PseudomanifoldReport(is_pm, is_pm and all(c == 2 for c in counts))


def euler_characteristic(X: Complex) -> int:
    return sum((-1) ** j * fj for j, fj in enumerate(X.f_vector))


def is_subcomplex(A: Complex, X: Complex) -> bool:
    """True when every facet of A is a face of X."""
    if A.is_empty:
        return True
    return all(any(a <= f for f in X._fsets) for a in A._fsets)


def one_point_suspension(X: Complex, u: int, v: int) -> Complex:
    """Cone the anti-star of u with u and cone all of X with a fresh vertex v.

    Requires X to be a pseudomanifold without boundary; u a vertex, v fresh.
    The result is one dimension higher, on vertex_set(X) plus v, and contains
    every subcomplex of X through u's side unchanged.
    """
    report = pseudomanifold_check(X)
    if not (report.is_pseudomanifold and report.closed):
        raise NotClosedPseudomanifold(
            "one-point suspension needs a pseudomanifold without boundary"
        )
    if u not in X.vertex_set:
        raise VertexNotPresent(f"vertex {u} not in the complex")
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise InvalidVertexLabel(f"vertex labels must be positive integers, got {v!r}")
    if v in X.vertex_set:
        raise FreshVertexCollision(f"vertex {v} is already present")
    ast = anti_star(X, u)
    new_facets = [fs | {u} for fs in ast._fsets]
    new_facets.extend(fs | {v} for fs in X._fsets)
    return Complex._from_vertex_sets(new_facets)


def bistellar_move(X: Complex, v: int, sigma: Iterable[int]) -> Complex:
    """Remove the star of v and fill with sigma; the inverse of a vertex split.

    Requires link(X, v) to equal the boundary of sigma and sigma itself not to
    be a face.  The result is a closed pseudomanifold on vertex_set(X) minus v.
    """
    sig = Simplex(sigma)
    report = pseudomanifold_check(X)
    if not (report.is_pseudomanifold and report.closed):
        raise NotClosedPseudomanifold("bistellar moves need a closed pseudomanifold")
    if v not in X.vertex_set:
        raise VertexNotPresent(f"vertex {v} not in the complex")
    sig_set = frozenset(sig)
    link_facets = {fs - {v} for fs in X._fsets if v in fs}
    sigma_boundary = {sig_set - {x} for x in sig}
    if link_facets != sigma_boundary:
        raise LinkNotStandardSphere(
            f"link of {v} is not the boundary of {tuple(sig)}"
        )
    if X.has_face(sig_set):
        raise SigmaAlreadyFace(f"{tuple(sig)} is already a face")
    keep = [f for f, fs in zip(X.facets, X._fsets) if v not in fs]
    keep.append(sig)
    return Complex._from_simplices(keep)


def generalized_bistellar_move(
    X: Complex, a_face: Iterable[int], b_face: Iterable[int]
) -> Complex:
    """Exchange the star of face A for the complementary configuration on B.

    Requires A a face whose link is exactly the boundary of B, B not a face,
    and |A| + |B| = dim + 2.  With |B| = 1 this subdivides the facet A with a
    fresh vertex; with |A| = 1 it is the vertex collapse of bistellar_move.
    The move is an involution: applying (B, A) afterwards restores X.
    """
    A = Simplex(a_face)
    B = Simplex(b_face)
    report = pseudomanifold_check(X)
    if not (report.is_pseudomanifold and report.closed):
        raise MovePreconditionFailed("moves need a closed pseudomanifold")
    if len(A) + len(B) != X.dim + 2:
        raise MovePreconditionFailed(
            f"|A| + |B| = {len(A) + len(B)} != dim + 2 = {X.dim + 2}"
        )
    a_set, b_set = frozenset(A), frozenset(B)
    if not X.has_face(a_set):
        raise MovePreconditionFailed(f"{tuple(A)} is not a face")
    if X.has_face(b_set):
        raise MovePreconditionFailed(f"{tuple(B)} is already a face")
    cofacets = [fs for fs in X._fsets if a_set <= fs]
    actual_link = {fs - a_set for fs in cofacets}
    expected_link = {b_set - {b} for b in B}
    if actual_link != expected_link or len(cofacets) != len(B):
        raise MovePreconditionFailed(
            f"link of {tuple(A)} is not the boundary of {tuple(B)}"
        )
    new_facets = [fs for fs in X._fsets if not a_set <= fs]
    new_facets.extend((a_set - {a}) | b_set for a in A)
    return Complex._from_vertex_sets(new_facets)
