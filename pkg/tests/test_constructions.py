import random

import pytest

from combisphere import (
    boundary,
    certify_sphere,
    complete_ball_degree_d,
    complete_degree_d,
    complete_disc,
    complete_flag,
    complete_join,
    complete_stacked_ball,
    complete_stacked_sphere,
    from_facets,
    get,
    is_standard,
    is_subcomplex,
    join,
    link,
    sphere_chain,
)
from combisphere.errors import (
    DimensionTooLow,
    FactorJoinMismatch,
    FactorNotSphere,
    NoDegreeDVertex,
    NotBall,
    NotDisc,
    NotFlag,
    NotSphere,
    NotStacked,
    NotStackedBall,
    TooFewVertices,
    VertexNotPresent,
)
from helpers import (
    moebius_torus,
    random_disc,
    random_flag_2sphere,
    random_stacked_ball,
    random_stacked_sphere,
)

S0_12 = [(1,), (2,)]
S0_34 = [(3,), (4,)]
STANDARD_2_SPHERE = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]


def _check_contract(X, result, expect_dim):
    assert is_subcomplex(X, result.sphere)
    assert result.sphere.vertex_set == X.vertex_set
    assert result.sphere.dim == expect_dim
    assert result.embedding_check
    assert result.trace and result.trace[-1].startswith("done:")


class TestCompleteJoin:
    def test_four_cycle_of_two_zero_spheres(self):
        S = join(from_facets(S0_12), from_facets(S0_34))
        result = complete_join(S, [from_facets(S0_12), from_facets(S0_34)])
        assert result.sphere == from_facets(STANDARD_2_SPHERE)
        _check_contract(S, result, 2)

    def test_octahedron_three_factors(self):
        factors = [from_facets([(1,), (2,)]), from_facets([(3,), (4,)]),
                   from_facets([(5,), (6,)])]
        octa = get("octahedron").complex
        result = complete_join(octa, factors)
        _check_contract(octa, result, 3)
        assert certify_sphere(result.sphere).is_certified

    def test_cycle_times_zero_sphere(self):
        cyc = from_facets([(1, 2), (2, 3), (3, 4), (1, 4)])
        s0 = from_facets([(5,), (6,)])
        S = join(cyc, s0)
        result = complete_join(S, [cyc, s0])
        _check_contract(S, result, 3)
        assert certify_sphere(result.sphere).is_certified

    def test_explicit_pivot_choices(self):
        cyc = from_facets([(1, 2), (2, 3), (3, 4), (1, 4)])
        s0 = from_facets([(5,), (6,)])
        S = join(cyc, s0)
        a = complete_join(S, [cyc, s0], [1, 5])
        b = complete_join(S, [cyc, s0], [2, 5])
        assert a.sphere != b.sphere
        for r, pivot in ((a, 1), (b, 2)):
            assert is_subcomplex(S, r.sphere)
            assert any(f"vertex {pivot} in factor 0" in line for line in r.trace)

    def test_pivot_must_live_in_its_factor(self):
        S = join(from_facets(S0_12), from_facets(S0_34))
        with pytest.raises(VertexNotPresent):
            complete_join(S, [from_facets(S0_12), from_facets(S0_34)], [3, 3])

    def test_join_mismatch_rejected(self):
        S = get("octahedron").complex
        with pytest.raises(FactorJoinMismatch):
            complete_join(S, [from_facets(S0_12), from_facets(S0_34)])

    def test_single_factor_rejected(self):
        S = join(from_facets(S0_12), from_facets(S0_34))
        with pytest.raises(FactorJoinMismatch):
            complete_join(S, [S])

    def test_ball_factor_rejected(self):
        ball = from_facets([(1, 2)])
        s0 = from_facets([(3,), (4,)])
        with pytest.raises(FactorNotSphere):
            complete_join(join(ball, s0), [ball, s0])


class TestCompleteDegreeD:
    def test_four_cycle(self):
        S = from_facets([(1, 2), (2, 3), (3, 4), (1, 4)])
        result = complete_degree_d(S)
        assert result.sphere == from_facets(STANDARD_2_SPHERE)
        _check_contract(S, result, 2)

    def test_explicit_vertex_and_apex(self):
        S = from_facets([(1, 2), (2, 3), (3, 4), (1, 4)])
        result = complete_degree_d(S, v=4, u=3)
        _check_contract(S, result, 2)
        assert result.sphere == from_facets(STANDARD_2_SPHERE)

    def test_stacked_spheres_have_degree_d_vertices(self):
        rng = random.Random(6)
        for _ in range(10):
            d = rng.randint(1, 3)
            S = random_stacked_sphere(rng, d, rng.randint(d + 4, d + 8))
            result = complete_degree_d(S)
            _check_contract(S, result, d + 1)
            assert certify_sphere(result.sphere).is_certified

    def test_no_low_degree_vertex(self):
        with pytest.raises(NoDegreeDVertex):
            complete_degree_d(get("octahedron").complex)

    def test_wrong_explicit_vertex(self):
        S = random_stacked_sphere(random.Random(0), 2, 8)
        top = max(S.vertices, key=lambda v: len([f for f in S.facets if v in f]))
        with pytest.raises(NoDegreeDVertex):
            complete_degree_d(S, v=top)

    def test_minimal_sphere_too_small(self):
        with pytest.raises(TooFewVertices):
            complete_degree_d(get("standard_sphere(2)").complex)

    def test_non_sphere_rejected(self):
        with pytest.raises(NotSphere):
            complete_degree_d(moebius_torus())

    def test_trust_skips_certification(self):
        S = from_facets([(1, 2), (2, 3), (3, 4), (1, 4)])
        result = complete_degree_d(S, trust=True)
        assert result.trace[0].endswith("skipped (trusted)")

    def test_unknown_input_proceeds_with_note(self):
        S = random_stacked_sphere(random.Random(5), 3, 9)
        result = complete_degree_d(S, budget=0)
        assert result.trace[0] == "input: certification unknown"
        _check_contract(S, result, 4)


class TestCompleteFlag:
    def test_octahedron_frozen(self):
        octa = get("octahedron").complex
        result = complete_flag(octa)
        assert result.sphere == from_facets(
            [(2, 3, 4, 5), (2, 3, 4, 6), (1, 2, 3, 5), (1, 2, 3, 6),
             (1, 2, 4, 5), (1, 2, 4, 6), (1, 3, 4, 5), (1, 3, 4, 6)]
        )
        _check_contract(octa, result, 3)

    def test_cross_polytope_4(self):
        S = get("cross_polytope(4)").complex
        result = complete_flag(S)
        _check_contract(S, result, 4)
        assert certify_sphere(result.sphere).is_certified

    def test_random_flag_spheres(self):
        rng = random.Random(12)
        for _ in range(6):
            S = random_flag_2sphere(rng, rng.randint(6, 10))
            result = complete_flag(S)
            _check_contract(S, result, 3)
            assert certify_sphere(result.sphere).is_certified

    def test_non_flag_rejected(self):
        S = random_stacked_sphere(random.Random(2), 2, 7)
        with pytest.raises(NotFlag):
            complete_flag(S)

    def test_non_sphere_rejected(self):
        with pytest.raises(NotSphere):
            complete_flag(moebius_torus())


class TestCompleteStackedBall:
    def test_two_tetrahedra_frozen(self):
        B = from_facets([(1, 2, 3, 4), (2, 3, 4, 5)])
        result = complete_stacked_ball(B)
        assert result.sphere == get("standard_sphere(3)").complex
        _check_contract(B, result, 3)

    def test_three_triangles_frozen(self):
        B = from_facets([(1, 2, 3), (2, 3, 4), (3, 4, 5)])
        result = complete_stacked_ball(B)
        assert result.sphere == from_facets(
            [(1, 2, 3), (1, 2, 4), (2, 3, 4), (1, 3, 5), (1, 4, 5), (3, 4, 5)]
        )
        _check_contract(B, result, 2)

    def test_random_stacked_balls(self):
        rng = random.Random(8)
        for _ in range(10):
            d = rng.randint(2, 5)
            B = random_stacked_ball(rng, d, rng.randint(d + 2, d + 9))
            result = complete_stacked_ball(B)
            _check_contract(B, result, d)

    def test_non_stacked_rejected(self):
        with pytest.raises(NotStackedBall):
            complete_stacked_ball(from_facets([(1, 2, 5), (2, 3, 5), (3, 4, 5),
                                               (1, 4, 5)]))

    def test_paths_are_too_flat(self):
        with pytest.raises(DimensionTooLow):
            complete_stacked_ball(from_facets([(1, 2), (2, 3)]))

    def test_single_simplex_too_small(self):
        with pytest.raises(TooFewVertices):
            complete_stacked_ball(from_facets([(1, 2, 3)]))


class TestCompleteStackedSphere:
    def test_bipyramid_frozen(self):
        S = boundary(from_facets([(1, 2, 3, 4), (2, 3, 4, 5)]))
        result = complete_stacked_sphere(S)
        assert result.sphere == get("standard_sphere(3)").complex
        _check_contract(S, result, 3)

    def test_random_stacked_spheres(self):
        rng = random.Random(14)
        for _ in range(10):
            d = rng.randint(1, 4)
            S = random_stacked_sphere(rng, d, rng.randint(d + 3, d + 9))
            result = complete_stacked_sphere(S)
            _check_contract(S, result, d + 1)

    def test_non_stacked_rejected(self):
        with pytest.raises(NotStacked):
            complete_stacked_sphere(get("octahedron").complex)


class TestSphereChain:
    def test_five_cycle_reaches_standard(self):
        chain = sphere_chain(get("cycle(5)").complex)
        assert [c.dim for c in chain] == [1, 2, 3]
        assert chain[0] == get("cycle(5)").complex
        assert is_standard(chain[-1]).sphere
        for small, big in zip(chain, chain[1:]):
            assert is_subcomplex(small, big)
            assert small.vertex_set == big.vertex_set

    def test_standard_input_is_a_singleton_chain(self):
        S = get("standard_sphere(2)").complex
        assert sphere_chain(S) == [S]

    def test_random_chains(self):
        rng = random.Random(20)
        for _ in range(5):
            S = random_stacked_sphere(rng, 1, rng.randint(5, 8))
            chain = sphere_chain(S)
            assert is_standard(chain[-1]).sphere
            assert chain[-1].dim == S.n_vertices - 2


class TestCompleteBallDegreeD:
    def test_catalog_ball_rebuilds_gs_sphere(self):
        result = complete_ball_degree_d(get("example43_ball").complex, 8)
        assert result.sphere == get("gs_m38").complex
        _check_contract(get("example43_ball").complex, result, 3)

    def test_default_vertex_scan(self):
        B = from_facets([(1, 2, 3, 4), (2, 3, 4, 5)])
        result = complete_ball_degree_d(B)
        _check_contract(B, result, 3)
        assert certify_sphere(result.sphere).is_certified

    def test_random_stacked_balls(self):
        rng = random.Random(27)
        for _ in range(8):
            d = rng.randint(2, 4)
            B = random_stacked_ball(rng, d, rng.randint(d + 2, d + 8))
            result = complete_ball_degree_d(B)
            _check_contract(B, result, d)
            assert certify_sphere(result.sphere).is_certified

    def test_closed_complex_rejected(self):
        with pytest.raises(NotBall):
            complete_ball_degree_d(get("gs_m38").complex)

    def test_no_degree_d_vertex(self):
        B = from_facets([(1, 2, 5), (2, 3, 5), (3, 4, 5), (1, 4, 5)])
        with pytest.raises(NoDegreeDVertex):
            complete_ball_degree_d(B)

    def test_wrong_explicit_vertex(self):
        B = from_facets([(1, 2, 3, 4), (2, 3, 4, 5)])
        with pytest.raises(NoDegreeDVertex):
            complete_ball_degree_d(B, u=2)


class TestCompleteDisc:
    def test_two_triangles_frozen(self):
        B = from_facets([(1, 2, 3), (1, 3, 4)])
        result = complete_disc(B)
        assert result.sphere == from_facets(STANDARD_2_SPHERE)
        assert any(line.startswith("filled ear") for line in result.trace)
        _check_contract(B, result, 2)

    def test_random_discs(self):
        rng = random.Random(33)
        for _ in range(12):
            B = random_disc(rng, rng.randint(4, 25))
            result = complete_disc(B)
            _check_contract(B, result, 2)
            assert certify_sphere(result.sphere).is_certified

    def test_trace_records_unit_boundary_decrements(self):
        B = random_disc(random.Random(40), 15)
        result = complete_disc(B)
        fills = [line for line in result.trace if line.startswith("filled ear")]
        sizes = []
        for line in fills:
            before, after = line.rsplit("boundary ", 1)[1].split(" -> ")
            sizes.append((int(before), int(after)))
        assert all(b == a - 1 for a, b in sizes)
        assert [a for a, _ in sizes[1:]] == [b for _, b in sizes[:-1]]

    def test_wrong_dimension_rejected(self):
        with pytest.raises(NotDisc):
            complete_disc(from_facets([(1, 2, 3, 4), (2, 3, 4, 5)]))

    def test_sphere_input_rejected(self):
        with pytest.raises(NotDisc):
            complete_disc(get("octahedron").complex)

    def test_single_triangle_too_small(self):
        with pytest.raises(TooFewVertices):
            complete_disc(from_facets([(1, 2, 3)]))
