"""Built-in named complexes and point configurations.

Two facet lists are hand-entered golden data, stored in canonical order and
guarded by checksum tests: the Gruenbaum-Sreedharan sphere and Barnette's
sphere, the two classical non-polytopal 3-spheres on 8 vertices.  Everything
else is either derived from them through library operations or generated
parametrically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import Complex, from_facets, join, one_point_suspension
from .errors import UnknownName
from .polytopal import PointConfiguration

# Gruenbaum and Sreedharan (1967), "An enumeration of simplicial 4-polytopes
# with 8 vertices": the neighbourly non-polytopal 3-sphere.
_GS_M38 = (
    (1, 2, 3, 4), (1, 2, 3, 7), (1, 2, 4, 8), (1, 2, 6, 7), (1, 2, 6, 8),
    (1, 3, 4, 7), (1, 4, 7, 8), (1, 5, 6, 7), (1, 5, 6, 8), (1, 5, 7, 8),
    (2, 3, 4, 5), (2, 3, 5, 8), (2, 3, 6, 7), (2, 3, 6, 8), (2, 4, 5, 8),
    (3, 4, 5, 6), (3, 4, 6, 7), (3, 5, 6, 8), (4, 5, 6, 7), (4, 5, 7, 8),
)

# The 3-ball that replaces the star of vertex 8 inside the sphere above.
_GS_BALL_C = ((1, 2, 4, 5), (1, 2, 5, 6), (1, 4, 5, 7), (2, 3, 5, 6))

# The anti-star of vertex 8 in the sphere above (all facets avoiding 8).
_GS_BALL_D = (
    (1, 2, 3, 4), (1, 2, 3, 7), (1, 2, 6, 7), (1, 3, 4, 7), (1, 5, 6, 7),
    (2, 3, 4, 5), (2, 3, 6, 7), (3, 4, 5, 6), (3, 4, 6, 7), (4, 5, 6, 7),
)

# Barnette (1970), "Diagrams and Schlegel diagrams": the non-neighbourly
# non-polytopal 3-sphere on 8 vertices.
_BARNETTE = (
    (1, 2, 3, 4), (1, 2, 3, 8), (1, 2, 4, 8), (1, 3, 4, 7), (1, 3, 6, 7),
    (1, 3, 6, 8), (1, 4, 5, 6), (1, 4, 5, 7), (1, 4, 6, 8), (1, 5, 6, 7),
    (2, 3, 4, 7), (2, 3, 5, 6), (2, 3, 5, 8), (2, 3, 6, 7), (2, 4, 5, 7),
    (2, 4, 5, 8), (2, 5, 6, 7), (3, 5, 6, 8), (4, 5, 6, 8),
)

_GS_CITE = (
    "Gruenbaum and Sreedharan, An enumeration of simplicial 4-polytopes "
    "with 8 vertices, J. Combin. Theory 2 (1967)"
)
_BARNETTE_CITE = (
    "Barnette, Diagrams and Schlegel diagrams, in Combinatorial Structures "
    "and their Applications (Gordon and Breach, 1970)"
)


@dataclass(frozen=True)
class NamedExample:
    name: str
    complex: Complex | None
    provenance: str
    expected_properties: tuple[tuple[str, object], ...]
    points: PointConfiguration | None = None


def standard_ball(d: int) -> Complex:
    """Closure of a single d-simplex on vertices 1..d+1."""
    if d < 0:
        raise UnknownName(f"standard_ball needs d >= 0, got {d}")
    return from_facets([tuple(range(1, d + 2))])


def standard_sphere(d: int) -> Complex:
    """Boundary of a (d+1)-simplex: the minimal d-sphere, on 1..d+2."""
    if d < 0:
        raise UnknownName(f"standard_sphere needs d >= 0, got {d}")
    labels = tuple(range(1, d + 3))
    return from_facets(
        [labels[:i] + labels[i + 1 :] for i in range(len(labels))]
    )


def cycle(n: int) -> Complex:
    """The n-cycle 1-2-...-n-1 as a 1-sphere."""
    if n < 3:
        raise UnknownName(f"cycle needs n >= 3, got {n}")
    return from_facets(
        [(i, i + 1) for i in range(1, n)] + [(1, n)]
    )


def cross_polytope(k: int) -> Complex:
    """Boundary of the k-dimensional cross-polytope on vertices 1..2k.

    Vertices 2i-1 and 2i are the antipodal pair in coordinate i; facets pick
    one vertex from each pair, 2^k in all.
    """
    if k < 1:
        raise UnknownName(f"cross_polytope needs k >= 1, got {k}")
    facets: list[tuple[int, ...]] = [()]
    for i in range(1, k + 1):
        facets = [f + (v,) for f in facets for v in (2 * i - 1, 2 * i)]
    return from_facets(facets)


def octahedron() -> Complex:
    return cross_polytope(3)


def cyclic_polytope_points(n: int, d: int = 3) -> PointConfiguration:
    """n points on the moment curve t -> (t, t^2, ..., t^d), t = 1..n."""
    if d < 1:
        raise UnknownName(f"cyclic_polytope_points needs d >= 1, got {d}")
    if n < d + 1:
        raise UnknownName(
            f"cyclic_polytope_points needs n >= d + 1 = {d + 1}, got {n}"
        )
    return PointConfiguration.from_dict(
        d, {t: tuple(Fraction(t) ** j for j in range(1, d + 1)) for t in range(1, n + 1)}
    )


@lru_cache(maxsize=None)
def _entry(name: str, *args: int) -> NamedExample:
    if name == "gs_m38":
        return NamedExample(
            "gs_m38",
            from_facets(_GS_M38),
            _GS_CITE,
            (
                ("dim", 3),
                ("n_vertices", 8),
                ("n_facets", 20),
                ("euler_characteristic", 0),
            ),
        )
    if name == "gs_ball_C":
        return NamedExample(
            "gs_ball_C",
            from_facets(_GS_BALL_C),
            _GS_CITE,
            (
                ("dim", 3),
                ("n_vertices", 7),
                ("n_facets", 4),
                ("euler_characteristic", 1),
            ),
        )
    if name == "gs_ball_D":
        return NamedExample(
            "gs_ball_D",
            from_facets(_GS_BALL_D),
            _GS_CITE,
            (
                ("dim", 3),
                ("n_vertices", 7),
                ("n_facets", 10),
                ("euler_characteristic", 1),
            ),
        )
    if name == "gs_s37":
        return NamedExample(
            "gs_s37",
            from_facets(_GS_BALL_C + _GS_BALL_D),
            "union of the two 3-balls gs_ball_C and gs_ball_D along their "
            "common boundary; a polytopal 3-sphere on 7 vertices",
            (
                ("dim", 3),
                ("n_vertices", 7),
                ("n_facets", 14),
                ("euler_characteristic", 0),
            ),
        )
    if name == "gs_s48":
        return NamedExample(
            "gs_s48",
            one_point_suspension(_entry("gs_s37").complex, 7, 8),
            "one-point suspension of gs_s37 over (7, 8); a polytopal "
            "4-sphere on 8 vertices containing gs_m38",
            (
                ("dim", 4),
                ("n_vertices", 8),
                ("n_facets", 20),
                ("euler_characteristic", 2),
            ),
        )
    if name == "barnette":
        return NamedExample(
            "barnette",
            from_facets(_BARNETTE),
            _BARNETTE_CITE,
            (
                ("dim", 3),
                ("n_vertices", 8),
                ("n_facets", 19),
                ("euler_characteristic", 0),
            ),
        )
    if name == "barnette_join":
        two_points = from_facets([(7,), (8,)])
        triangle_a = from_facets([(1, 2), (2, 5), (1, 5)])
        triangle_b = from_facets([(3, 4), (4, 6), (3, 6)])
        return NamedExample(
            "barnette_join",
            join(join(two_points, triangle_a), triangle_b),
            "join of a 0-sphere on {7,8} with two 3-cycles on {1,2,5} and "
            "{3,4,6}; a 4-sphere on 8 vertices containing barnette",
            (
                ("dim", 4),
                ("n_vertices", 8),
                ("n_facets", 18),
                ("euler_characteristic", 2),
            ),
        )
    if name == "example43_ball":
        return NamedExample(
            "example43_ball",
            from_facets(_GS_BALL_D + ((1, 2, 4, 8),)),
            "gs_ball_D with the single facet 1248 glued on; an 8-vertex "
            "3-ball whose completion through its degree-3 vertex 8 "
            "reproduces gs_m38",
            (
                ("dim", 3),
                ("n_vertices", 8),
                ("n_facets", 11),
                ("euler_characteristic", 1),
            ),
        )
    if name == "octahedron":
        return NamedExample(
            "octahedron",
            octahedron(),
            "boundary of the 3-dimensional cross-polytope",
            (
                ("dim", 2),
                ("n_vertices", 6),
                ("n_facets", 8),
                ("euler_characteristic", 2),
            ),
        )
    if name == "standard_sphere":
        (d,) = args
        return NamedExample(
            f"standard_sphere({d})",
            standard_sphere(d),
            "boundary of a simplex",
            (
                ("dim", d),
                ("n_vertices", d + 2),
                ("n_facets", d + 2),
                ("euler_characteristic", 1 + (-1) ** d),
            ),
        )
    if name == "standard_ball":
        (d,) = args
        return NamedExample(
            f"standard_ball({d})",
            standard_ball(d),
            "closure of a simplex",
            (
                ("dim", d),
                ("n_vertices", d + 1),
                ("n_facets", 1),
                ("euler_characteristic", 1),
            ),
        )
    if name == "cycle":
        (n,) = args
        return NamedExample(
            f"cycle({n})",
            cycle(n),
            "polygon boundary",
            (
                ("dim", 1),
                ("n_vertices", n),
                ("n_facets", n),
                ("euler_characteristic", 0),
            ),
        )
    if name == "cross_polytope":
        (k,) = args
        return NamedExample(
            f"cross_polytope({k})",
            cross_polytope(k),
            "boundary of the k-dimensional cross-polytope",
            (
                ("dim", k - 1),
                ("n_vertices", 2 * k),
                ("n_facets", 2**k),
                ("euler_characteristic", 1 + (-1) ** (k - 1)),
            ),
        )
    if name == "cyclic_polytope_points":
        n, d = args if len(args) == 2 else (args[0], 3)
        return NamedExample(
            f"cyclic_polytope_points({n},{d})",
            None,
            "moment curve t -> (t, t^2, ..., t^d) at t = 1..n",
            (("dim", d), ("n_points", n)),
            points=cyclic_polytope_points(n, d),
        )
    raise UnknownName(f"no catalog entry named {name!r}")


_FIXED = (
    "barnette",
    "barnette_join",
    "example43_ball",
    "gs_ball_C",
    "gs_ball_D",
    "gs_m38",
    "gs_s37",
    "gs_s48",
    "octahedron",
)
_PARAMETRIC = (
    "cross_polytope(k)",
    "cycle(n)",
    "cyclic_polytope_points(n,d)",
    "standard_ball(d)",
    "standard_sphere(d)",
)

_NAME_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\(([^()]*)\))?$")


def available() -> tuple[str, ...]:
    return _FIXED + _PARAMETRIC


def get(name: str) -> NamedExample:
    """Look up a catalog entry, e.g. 'gs_m38' or 'standard_sphere(2)'."""
    match = _NAME_RE.match(name.strip())
    if match is None:
        raise UnknownName(f"malformed catalog name {name!r}")
    base, arg_text = match.groups()
    args: tuple[int, ...] = ()
    if arg_text is not None:
        parts = [p.strip() for p in arg_text.split(",") if p.strip()]
        try:
            args = tuple(int(p) for p in parts)
        except ValueError:
            raise UnknownName(f"non-integer arguments in {name!r}") from None
    parametric = {
        "standard_sphere": 1,
        "standard_ball": 1,
        "cycle": 1,
        "cross_polytope": 1,
    }
    if base in parametric:
        if len(args) != parametric[base]:
            raise UnknownName(
                f"{base} takes {parametric[base]} integer argument(s), "
                f"got {len(args)}"
            )
        return _entry(base, *args)
    if base == "cyclic_polytope_points":
        if len(args) not in (1, 2):
            raise UnknownName(
                "cyclic_polytope_points takes (n) or (n, d) integer arguments"
            )
        return _entry(base, *args)
    if args:
        raise UnknownName(f"{base} takes no arguments")
    return _entry(base)
