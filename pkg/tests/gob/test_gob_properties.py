import random

from bisetkit.algebra import INFINITE, FpGroup
from bisetkit.bisets import CyclicBiset, WreathBiset, cyclic_group, wreath_validate
from bisetkit.gob import (
    GobBuilder,
    GraphOfBisets,
    check_left_fibrant,
    fundamental_biset,
    validate_gob,
)
from bisetkit.graphs import EdgeSpec, GraphOfGroups

CASES = 50


def _gog(rng: random.Random) -> GraphOfGroups:
    count = rng.randint(2, 4)
    vertices = {
        f"v{i}": cyclic_group(rng.choice((INFINITE, 2, 3)), f"g{i}") for i in range(count)
    }
    edges = []
    for i in range(1, count):
        ends = [f"v{rng.randrange(i)}", f"v{i}"]
        rng.shuffle(ends)
        edges.append(EdgeSpec(f"e{len(edges)}", ends[0], ends[1]))
    for _ in range(rng.randint(0, 2)):
        origin, terminus = rng.sample(sorted(vertices), 2)
        edges.append(EdgeSpec(f"e{len(edges)}", origin, terminus))
    return GraphOfGroups.build(vertices, edges, name="random")


def _covering(rng: random.Random, gog: GraphOfGroups, degree: int) -> GraphOfBisets:
    """Fibrant gob of total ``degree`` over every vertex of ``gog``, with trivial edge bisets."""
    builder = GobBuilder(gog, gog, name="covering")
    slots: dict[str, list[tuple[str, int]]] = {}
    for v in gog.graph.vertices:
        group = gog.group(v)
        generator = group.factors[0].name
        slots[v] = []
        remaining = degree
        while remaining:
            z = f"{v}_{len(slots[v])}"
            if group.factors[0].order == INFINITE:
                k = rng.randint(1, min(3, remaining))
                builder.vertex(z, v, v, CyclicBiset.regular(k, generator))
            else:
                k = 1
                builder.vertex(z, v, v, CyclicBiset(group, group, 1))
            slots[v].extend((z, i) for i in range(k))
            remaining -= k
    trivial = FpGroup.trivial()
    for edge in gog.graph.edges:
        targets = list(range(degree))
        rng.shuffle(targets)
        lifts: dict[tuple[str, str], list[tuple[int, int]]] = {}
        for a, b in enumerate(targets):
            (z, i), (w, j) = slots[edge.origin][a], slots[edge.terminus][b]
            lifts.setdefault((z, w), []).append((i, j))
        one, other = gog.group(edge.origin).identity(), gog.group(edge.terminus).identity()
        for n, ((z, w), pairs) in enumerate(lifts.items()):
            builder.edge(
                f"{edge.name}_{n}",
                z,
                w,
                edge.name,
                edge.name,
                WreathBiset(trivial, trivial, len(pairs), ()),
                minus=[(one, i) for i, _ in pairs],
                plus=[(other, j) for _, j in pairs],
            )
    return builder.build()


def test_random_coverings_are_valid_and_fibrant():
    rng = random.Random(20240611)
    for _ in range(CASES):
        gob = _covering(rng, _gog(rng), rng.randint(1, 4))
        assert validate_gob(gob).valid
        assert check_left_fibrant(gob).fibrant


def test_fundamental_biset_degree_is_conserved_over_every_star():
    rng = random.Random(20240612)
    for _ in range(CASES):
        gog = _gog(rng)
        degree = rng.randint(1, 4)
        gob = _covering(rng, gog, degree)
        dagger = rng.choice(gog.graph.vertices)
        for star in gog.graph.vertices:
            assert sum(gob.degree(z) for z in gob.vertices_over(star)) == degree
            fb = fundamental_biset(gob, dagger, star)
            assert fb.degree == degree
            assert wreath_validate(fb.biset).valid
