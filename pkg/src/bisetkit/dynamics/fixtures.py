"""
Reference dynamical systems.

Each fixture is a Hubbard bundle or a graph of bisets; the ``*_fb`` helpers
compute fundamental bisets at the usual basepoints.
"""

from __future__ import annotations

from fractions import Fraction

from ..algebra import INFINITE
from ..bisets import CyclicBiset, TableBiset, WreathBiset, as_wreath, cyclic_group
from ..gob import FundamentalBiset, GobBuilder, GraphOfBisets, fundamental_biset
from ..graphs import EdgeSpec, Graph, GraphOfGroups
from .compile import hubbard_to_gob
from .hubbard import HubbardBundle, HubbardTree


def _tree(
    vertices: tuple[str, ...],
    edges: tuple[tuple[str, str, str], ...],
    angles: dict[str, Fraction | int],
    orders: dict[str, int] | None = None,
    name: str = "",
) -> HubbardTree:
    return HubbardTree(
        Graph.build(vertices, edges),
        {x: Fraction(a) for x, a in angles.items()},
        dict(orders or {}),
        name,
    )


def basilica_hubbard() -> HubbardBundle:
    """``z**2 - 1``: the critical point ``x0`` and the critical value ``x1`` swap."""
    base = _tree(
        ("x0", "x1"),
        (("e", "x1", "x0"),),
        {"e": 0, "~e": 0},
        {"x0": INFINITE, "x1": INFINITE},
        name="basilica",
    )
    cover = _tree(
        ("y0a", "y1", "y0b"),
        (("f", "y0a", "y1"), ("g", "y1", "y0b")),
        {"f": 0, "~f": 0, "g": Fraction(1, 2), "~g": 0},
        name="basilica^-1",
    )
    return HubbardBundle(
        base,
        cover,
        p={"y0a": "x0", "y1": "x1", "y0b": "x0", "f": "~e", "g": "e"},
        lam={"y0a": "x1", "y1": "x0", "y0b": "x0", "f": "e", "g": "x0"},
        deg={"y1": 2},
        embed={"x0": "y1", "x1": "y0a"},
        name="basilica",
    )


def power_map(degree: int = 2) -> HubbardBundle:
    """``z**d`` on its one-vertex tree."""
    tree = _tree(("t",), (), {}, {"t": INFINITE}, name=f"z^{degree}")
    return HubbardBundle(
        tree,
        _tree(("t",), (), {}, name=f"z^{degree}"),
        p={"t": "t"},
        lam={"t": "t"},
        deg={"t": degree},
        embed={"t": "t"},
        name=f"z^{degree}",
    )


def z2_plus_i_hubbard() -> HubbardBundle:
    """``z**2 + i``: a tripod at ``alpha`` with the postcritical orbit ``i -> i-1 -> -i -> i-1``."""
    base = _tree(
        ("alpha", "i", "i_1", "m_i"),
        (("A_i", "alpha", "i"), ("A_i1", "alpha", "i_1"), ("A_mi", "alpha", "m_i")),
        {
            "A_i": 0,
            "A_i1": Fraction(1, 3),
            "A_mi": Fraction(2, 3),
            "~A_i": 0,
            "~A_i1": 0,
            "~A_mi": 0,
        },
        name="z^2+i",
    )
    cover = _tree(
        ("alpha", "m_alpha", "zero", "i", "i_1", "m_i", "one_m_i"),
        (
            ("e1", "alpha", "i"),
            ("e2", "alpha", "i_1"),
            ("e3", "alpha", "zero"),
            ("e4", "m_alpha", "zero"),
            ("e5", "m_alpha", "m_i"),
            ("e6", "m_alpha", "one_m_i"),
        ),
        {
            "e1": 0,
            "e2": Fraction(1, 3),
            "e3": Fraction(2, 3),
            "e4": Fraction(2, 3),
            "e5": 0,
            "e6": Fraction(1, 3),
            "~e3": 0,
            "~e4": Fraction(1, 2),
            "~e1": 0,
            "~e2": 0,
            "~e5": 0,
            "~e6": 0,
        },
        name="z^2+i^-1",
    )
    p = {
        "alpha": "alpha",
        "m_alpha": "alpha",
        "zero": "i",
        "i": "i_1",
        "m_i": "i_1",
        "i_1": "m_i",
        "one_m_i": "m_i",
        "e1": "A_i1",
        "e2": "A_mi",
        "e3": "A_i",
        "e4": "A_i",
        "e5": "A_i1",
        "e6": "A_mi",
    }
    lam = {v: v for v in ("alpha", "i", "i_1", "m_i")}
    lam.update({v: "A_mi" for v in ("zero", "m_alpha", "one_m_i")})
    lam.update({"e1": "A_i", "e2": "A_i1"})
    lam.update({e: "A_mi" for e in ("e3", "e4", "e5", "e6")})
    return HubbardBundle(
        base,
        cover,
        p=p,
        lam=lam,
        deg={"zero": 2},
        embed={v: v for v in ("alpha", "i", "i_1", "m_i")},
        name="z^2+i",
    )


def basilica_lamination() -> GraphOfBisets:
    """Basilica from its lamination: a circle vertex ``C`` and a point ``A`` joined twice.

    With ``dagger = A`` and ``star = C`` the fundamental biset is
    ``t = <1, t>(1 2)``, ``u = <u^-1, t>(1 2)``.
    """
    circle = cyclic_group(INFINITE, "t")
    point = cyclic_group(1)
    gog = GraphOfGroups.build(
        {"C": circle, "A": point},
        [EdgeSpec("x", "C", "A"), EdgeSpec("y", "C", "A", label="u")],
        name="lamination",
    )
    t = circle.generator(0)
    over_circle = WreathBiset(circle, point, 1, (), ("4",), "U")
    over_edge = WreathBiset(circle, point, 1, (), name="C|x")
    return (
        GobBuilder(gog, gog, name="basilica-lamination")
        .vertex("S", "C", "C", as_wreath(CyclicBiset.regular(2)).relabeled(("1", "2"), "S"))
        .vertex("T", "A", "A", TableBiset.trivial("3", name="T"))
        .vertex("U", "C", "A", over_circle)
        .edge("y1", "S", "T", "x", "y", TableBiset.trivial("y1"), minus=[(circle.identity(), 0)])
        .edge("x2", "S", "T", "y", "x", TableBiset.trivial("x2"), minus=[(circle.identity(), 1)])
        .edge("x1", "S", "U", "C", "x", over_edge, minus=[(circle.identity(), 0)])
        .edge("y2", "S", "U", "C", "y", over_edge, minus=[(t.inverse(), 1)])
        .build()
    )


def basilica_hubbard_fb() -> FundamentalBiset:
    return fundamental_biset(hubbard_to_gob(basilica_hubbard()), "x0", "x0")


def basilica_lamination_fb() -> FundamentalBiset:
    return fundamental_biset(basilica_lamination(), "A", "C")


def power_map_fb(degree: int = 2) -> FundamentalBiset:
    return fundamental_biset(hubbard_to_gob(power_map(degree)), "t", "t")


def z2_plus_i_fb() -> FundamentalBiset:
    return fundamental_biset(hubbard_to_gob(z2_plus_i_hubbard()), "alpha", "alpha")

