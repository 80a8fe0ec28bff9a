"""Completions: extend a sphere or ball to a sphere on the same vertex set.

Every operation returns a CompletionResult whose sphere contains the input as
a subcomplex and uses exactly the input's vertices.  Sphere completions raise
the dimension by one; ball completions keep it.  Inputs are re-certified by
default (trust=True skips); a refuted input raises, an unresolved
certification is noted in the trace and the construction proceeds.

All free choices default to the smallest available label so runs are
reproducible; explicit choices override.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from .core import (
    Complex,
    Simplex,
    anti_star,
    bistellar_move,
    boundary,
    complement,
    is_subcomplex,
    join,
    link,
    one_point_suspension,
)
from .errors import (
    DimensionTooLow,
    FactorJoinMismatch,
    FactorNotSphere,
    IntermediateClaimFailed,
    NoDegreeDVertex,
    NotBall,
    NotDisc,
    NotFlag,
    NotSphere,
    NotStackedBall,
    SigmaAlreadyFace,
    TooFewVertices,
    VertexNotPresent,
)
from .recognition import (
    DEFAULT_BUDGET,
    DEFAULT_SEED,
    certify_ball,
    certify_sphere,
    collapse_stacked_sphere_to_ball,
    degree,
    is_flag,
    is_stacked_ball,
    is_standard,
)

if TYPE_CHECKING:
    from .polytopal import PointConfiguration


@dataclass(frozen=True)
class CompletionResult:
    """A completed sphere with its containment check and construction log."""

    sphere: Complex
    embedding_check: bool
    trace: tuple[str, ...]
    witness_points: "PointConfiguration | None" = None


def _union(X: Complex, Y: Complex) -> Complex:
    return Complex._from_vertex_sets(itertools.chain(X._fsets, Y._fsets))


def _cone(apex: int, X: Complex) -> Complex:
    return Complex._from_vertex_sets(fs | {apex} for fs in X._fsets)


def _closure(vertices: Sequence[int]) -> Complex:
    return Complex._from_simplices([Simplex(vertices)])


def _finish(
    input_complex: Complex, sphere: Complex, trace: list[str]
) -> CompletionResult:
    if not is_subcomplex(input_complex, sphere):
        raise IntermediateClaimFailed("the completed sphere does not contain the input")
    if sphere.vertex_set != input_complex.vertex_set:
        raise IntermediateClaimFailed(
            "the completed sphere does not reuse exactly the input vertices"
        )
    trace.append(
        f"done: dim {sphere.dim}, {sphere.n_facets} facets on "
        f"{sphere.n_vertices} vertices"
    )
    return CompletionResult(sphere, True, tuple(trace))


def _certify_input(
    X: Complex, what: str, trust: bool, budget: int, seed: int, trace: list[str]
) -> None:
    if trust:
        trace.append(f"{what}: certification skipped (trusted)")
        return
    verdict = certify_sphere(X, budget, seed)
    if verdict.is_refuted:
        raise NotSphere(f"{what} is not a sphere: {verdict.reason}")
    trace.append(f"{what}: certification {verdict.status}")


def _faces_subset_of(sub_faces: set[frozenset[int]], X: Complex) -> bool:
    return all(X.has_face(f) for f in sub_faces)


def _all_faces(X: Complex) -> set[frozenset[int]]:
    out: set[frozenset[int]] = set()
    for k in range(1, X.dim + 2):
        out |= X.faces_of_size(k)
    return out


# ---------------------------------------------------------------------------
# sphere completions (output dimension = input dimension + 1)
# ---------------------------------------------------------------------------


def complete_join(
    S: Complex,
    factors: Sequence[Complex],
    v_choices: Sequence[int] | None = None,
    *,
    trust: bool = False,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
) -> CompletionResult:
    """Complete a join of at least two spheres.

    Cone the chosen vertex's anti-star inside the first factor and join with
    the remaining factors; do the same inside the second factor; the union of
    the two resulting balls is a sphere one dimension up, on the same
    vertices, containing the join.
    """
    if len(factors) < 2:
        raise FactorJoinMismatch("need at least two join factors")
    trace: list[str] = []
    joined = factors[0]
    for f in factors[1:]:
        joined = join(joined, f)
    if joined != S:
        raise FactorJoinMismatch("the join of the factors does not equal the input")
    trace.append(f"verified input = join of {len(factors)} factors")
    if not trust:
        for i, f in enumerate(factors):
            verdict = certify_sphere(f, budget, seed)
            if verdict.is_refuted:
                raise FactorNotSphere(f"factor {i} is not a sphere: {verdict.reason}")
            trace.append(f"factor {i}: certification {verdict.status}")
    else:
        trace.append("factor certification skipped (trusted)")
    if v_choices is None:
        v_choices = [min(f.vertices) for f in factors]
    if len(v_choices) != len(factors):
        raise FactorJoinMismatch("one chosen vertex per factor is required")
    for vi, f in zip(v_choices, factors):
        if vi not in f.vertex_set:
            raise VertexNotPresent(f"chosen vertex {vi} is not in its factor")
    v1, v2 = v_choices[0], v_choices[1]
    d1 = _cone(v1, anti_star(factors[0], v1))
    b1 = d1
    for f in factors[1:]:
        b1 = join(b1, f)
    d2 = _cone(v2, anti_star(factors[1], v2))
    b2 = join(factors[0], d2)
    for f in factors[2:]:
        b2 = join(b2, f)
    trace.append(
        f"coned vertex {v1} in factor 0 and vertex {v2} in factor 1; "
        f"union of the two balls"
    )
    sphere = _union(b1, b2)
    return _finish(S, sphere, trace)


def complete_degree_d(
    S: Complex,
    v: int | None = None,
    u: int | None = None,
    *,
    trust: bool = False,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
) -> CompletionResult:
    """Complete a sphere with a vertex of minimal degree.

    Collapse the degree-(dim+1) vertex v by a bistellar move, then suspend the
    smaller sphere over (u, v).  The suspension restores v, so the result
    contains the input.
    """
    trace: list[str] = []
    _certify_input(S, "input", trust, budget, seed, trace)
    d = S.dim + 1
    n = S.n_vertices
    if n < d + 2:
        raise TooFewVertices(f"need at least {d + 2} vertices, have {n}")
    if v is None:
        for cand in S.vertices:
            if degree(S, cand) == d:
                v = cand
                break
        else:
            raise NoDegreeDVertex(f"no vertex of degree {d}")
    elif degree(S, v) != d:
        raise NoDegreeDVertex(f"vertex {v} has degree {degree(S, v)} != {d}")
    sigma = Simplex._raw(tuple(sorted(link(S, v).vertex_set)))
    try:
        collapsed = bistellar_move(S, v, sigma)
    except SigmaAlreadyFace as exc:
        raise IntermediateClaimFailed(
            f"collapse target {tuple(sigma)} is already a face"
        ) from exc
    trace.append(f"collapsed vertex {v} onto {tuple(sigma)}")
    if u is None:
        u = min(collapsed.vertices)
    sphere = one_point_suspension(collapsed, u, v)
    trace.append(f"one-point suspension (u={u}, v={v})")
    return _finish(S, sphere, trace)


def complete_flag(
    S: Complex,
    v: int | None = None,
    u: int | None = None,
    *,
    trust: bool = False,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
) -> CompletionResult:
    """Complete a flag sphere.

    Glue the anti-star of v to a cone over the anti-star of u inside the link
    of v.  Flagness makes the two balls meet exactly along that link, so the
    union is a sphere of the same dimension missing v; suspending over (u, v)
    finishes the job.
    """
    trace: list[str] = []
    _certify_input(S, "input", trust, budget, seed, trace)
    if not is_flag(S):
        raise NotFlag("input is not a flag sphere")
    if v is None:
        v = min(S.vertices)
    if v not in S.vertex_set:
        raise VertexNotPresent(f"vertex {v} not in the complex")
    L = link(S, v)
    if u is None:
        u = min(L.vertices)
    if u not in L.vertex_set:
        raise VertexNotPresent(f"vertex {u} is not adjacent to {v}")
    d2 = anti_star(S, v)
    d3 = _cone(u, anti_star(L, u))
    if not (is_subcomplex(L, d2) and is_subcomplex(L, d3)):
        raise IntermediateClaimFailed("the link of v is not contained in both balls")
    common = {f for f in _all_faces(d3) if d2.has_face(f)}
    if not _faces_subset_of(common, L):
        raise IntermediateClaimFailed(
            "the two balls meet outside the link of v; flagness violated"
        )
    trace.append(f"verified ball intersection equals the link of {v}")
    s2 = _union(d2, d3)
    mid_verdict = certify_sphere(s2, budget, seed)
    if mid_verdict.is_refuted:
        raise IntermediateClaimFailed(
            f"the glued complex is not a sphere: {mid_verdict.reason}"
        )
    trace.append(f"glued sphere without {v}: certification {mid_verdict.status}")
    sphere = one_point_suspension(s2, u, v)
    trace.append(f"one-point suspension (u={u}, v={v})")
    return _finish(S, sphere, trace)


# ---------------------------------------------------------------------------
# stacked completions
# ---------------------------------------------------------------------------


def complete_stacked_ball(B: Complex) -> CompletionResult:
    """Boundary of the cone over everything but the last glued facet.

    The stacking witness is exact (dual tree plus vertex count), so no
    separate certification is needed.  The last facet's apex is the cone
    vertex; the input sits inside the resulting stacked sphere of the same
    dimension.
    """
    report = is_stacked_ball(B)
    if not report.stacked:
        raise NotStackedBall(report.reason)
    d = B.dim
    if d < 2:
        raise DimensionTooLow("needs dimension >= 2")
    if B.n_vertices < d + 2:
        raise TooFewVertices(f"need at least {d + 2} vertices, have {B.n_vertices}")
    witness = report.witness
    assert witness is not None
    last = witness.facets[-1]
    apex = witness.attachments[-1][1]
    trace = [
        f"stacking witness with {len(witness.facets)} facets; "
        f"last facet {tuple(last)} has fresh apex {apex}"
    ]
    rest = complement(B, _closure(last))
    coned = _cone(apex, rest)
    inner = is_stacked_ball(coned)
    if not inner.stacked:
        raise IntermediateClaimFailed(
            f"cone over the peeled ball is not stacked: {inner.reason}"
        )
    trace.append(f"coned the peeled ball with {apex}; cone is stacked")
    sphere = boundary(coned)
    return _finish(B, sphere, trace)


def complete_stacked_sphere(S: Complex) -> CompletionResult:
    """Collapse the stacked sphere to a ball it bounds, then complete the ball."""
    d = S.dim + 1
    if S.n_vertices < d + 2:
        raise TooFewVertices(f"need at least {d + 2} vertices, have {S.n_vertices}")
    ball = collapse_stacked_sphere_to_ball(S)
    trace = [
        f"collapsed to a stacked {ball.dim}-ball with {ball.n_facets} facets"
    ]
    inner = complete_stacked_ball(ball)
    trace.extend(inner.trace[:-1])
    return _finish(S, inner.sphere, trace)


def sphere_chain(X: Complex) -> list[Complex]:
    """Iterate complete_stacked_sphere up to the standard sphere on all vertices.

    Returns the chain starting at X itself; each element contains the previous
    one and the last has dimension n - 2.
    """
    chain: list[Complex] = [X]
    cur = X
    n = X.n_vertices
    while cur.dim < n - 2:
        step = complete_stacked_sphere(cur)
        if not is_subcomplex(cur, step.sphere):
            raise IntermediateClaimFailed("chain step lost the previous sphere")
        cur = step.sphere
        chain.append(cur)
    if not is_standard(cur).sphere:
        raise IntermediateClaimFailed("chain did not end at the standard sphere")
    return chain


# ---------------------------------------------------------------------------
# ball completions (output dimension = input dimension)
# ---------------------------------------------------------------------------


def complete_ball_degree_d(
    B: Complex,
    u: int | None = None,
    *,
    trust: bool = False,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
) -> CompletionResult:
    """Complete a ball with a boundary vertex of minimal degree.

    u of degree dim has a single-facet link, so its link inside the boundary
    sphere is a standard sphere; coning u over its boundary anti-star yields a
    second ball meeting B exactly in the boundary, and the union is a sphere
    of the same dimension on the same vertices.
    """
    trace: list[str] = []
    if trust:
        trace.append("input: certification skipped (trusted)")
    else:
        verdict = certify_ball(B, budget, seed)
        if verdict.is_refuted:
            raise NotBall(f"input is not a ball: {verdict.reason}")
        trace.append(f"input: ball certification {verdict.status}")
    d = B.dim
    n = B.n_vertices
    if n < d + 2:
        raise TooFewVertices(f"need at least {d + 2} vertices, have {n}")
    if u is None:
        for cand in B.vertices:
            if degree(B, cand) == d:
                u = cand
                break
        else:
            raise NoDegreeDVertex(f"no vertex of degree {d}")
    elif u not in B.vertex_set:
        raise VertexNotPresent(f"vertex {u} not in the complex")
    elif degree(B, u) != d:
        raise NoDegreeDVertex(f"vertex {u} has degree {degree(B, u)} != {d}")
    u_link = link(B, u)
    if u_link.n_facets != 1:
        raise IntermediateClaimFailed(
            f"link of {u} is not the closure of one simplex"
        )
    tau = u_link.facets[0]
    M = boundary(B)
    if u not in M.vertex_set:
        raise IntermediateClaimFailed(f"vertex {u} is not on the boundary")
    m_link_facets = {fs - {u} for fs in M._fsets if u in fs}
    if m_link_facets != {frozenset(tau) - {x} for x in tau}:
        raise IntermediateClaimFailed(
            f"boundary link of {u} is not the boundary of {tuple(tau)}"
        )
    trace.append(
        f"vertex {u} has degree {d}; boundary link is the boundary of {tuple(tau)}"
    )
    cap = _cone(u, anti_star(M, u))
    common = {f for f in _all_faces(cap) if B.has_face(f)}
    if not _faces_subset_of(common, M):
        raise IntermediateClaimFailed("cap and ball meet outside the boundary")
    trace.append("verified cap intersects the ball exactly in the boundary")
    sphere = _union(B, cap)
    return _finish(B, sphere, trace)


def complete_disc(
    B: Complex,
    *,
    trust: bool = False,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
) -> CompletionResult:
    """Fill ears of a 2-ball until its boundary is a triangle, then cap it.

    Each fill picks the first boundary position (cycle labeled from its
    smallest vertex toward that vertex's smaller neighbor) whose skip pair is
    a non-edge; the boundary cycle shrinks by exactly one vertex per step.
    """
    if B.dim != 2:
        raise NotDisc(f"dimension {B.dim} != 2")
    if B.n_vertices < 4:
        raise TooFewVertices(f"need at least 4 vertices, have {B.n_vertices}")
    trace: list[str] = []
    if trust:
        trace.append("input: certification skipped (trusted)")
    else:
        verdict = certify_ball(B, budget, seed)
        if verdict.is_refuted:
            raise NotDisc(f"input is not a disc: {verdict.reason}")
        trace.append(f"input: disc certification {verdict.status}")
    cur = B
    while True:
        cycle = _boundary_cycle(cur)
        m = len(cycle)
        if m == 3:
            cap = frozenset(cycle)
            if cur.has_face(cap):
                raise IntermediateClaimFailed(
                    f"boundary triangle {tuple(sorted(cap))} is already a face"
                )
            cur = Complex._from_vertex_sets(list(cur._fsets) + [cap])
            trace.append(f"capped the final triangle {tuple(sorted(cap))}")
            break
        filled = False
        for i in range(m):
            prev, here, nxt = cycle[i - 1], cycle[i], cycle[(i + 1) % m]
            if not cur.has_face({prev, nxt}):
                cur = Complex._from_vertex_sets(
                    list(cur._fsets) + [frozenset((prev, here, nxt))]
                )
                trace.append(
                    f"filled ear at {here} with ({prev},{here},{nxt}); "
                    f"boundary {m} -> {m - 1}"
                )
                filled = True
                break
        if not filled:
            raise IntermediateClaimFailed(
                "every skip pair on the boundary is an edge; cannot fill an ear"
            )
    final = certify_sphere(cur, budget, seed)
    if not final.is_certified:
        raise IntermediateClaimFailed(f"filled disc is not a 2-sphere: {final.reason}")
    return _finish(B, cur, trace)


def _boundary_cycle(D: Complex) -> list[int]:
    """Boundary of a disc as a vertex cycle, canonically rooted and oriented."""
    bd = boundary(D)
    adjacency: dict[int, list[int]] = {}
    for a, b in bd.facets:
        adjacency.setdefault(a, []).append(b)
        adjacency.setdefault(b, []).append(a)
    if any(len(nbrs) != 2 for nbrs in adjacency.values()):
        raise IntermediateClaimFailed("boundary is not a single cycle")
    start = min(adjacency)
    second = min(adjacency[start])
    cycle = [start, second]
    while True:
        a, b = cycle[-2], cycle[-1]
        nxt = adjacency[b][0] if adjacency[b][0] != a else adjacency[b][1]
        if nxt == start:
            break
        cycle.append(nxt)
    if len(cycle) != len(adjacency):
        raise IntermediateClaimFailed("boundary is not a single cycle")
    return cycle
