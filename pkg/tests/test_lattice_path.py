import re
import xml.etree.ElementTree as ET

import pytest

from conftest import SMALL_PAIRS
from oracles import lean_subsets, rational_catalan
from semimodules import (
    LatticePoint,
    SemigroupPair,
    enumerate_paths,
    enumerate_semimodules,
    lean_to_path,
    make_semimodule,
    path_from_steps,
    path_from_vertices,
    path_to_semimodule,
    render,
    syzygy_generators,
)
from semimodules.lattice_path import svg_to_lattice
from semimodules.semigroup import point_to_value

FIG1_VERTICES = [(0, 5), (0, 3), (1, 3), (1, 2), (2, 2), (2, 1), (4, 1), (4, 0), (7, 0)]
SVG = "{http://www.w3.org/2000/svg}"


def _vertices(path):
    return [p.as_tuple() for p in path.vertices]


def test_lean_to_path_examples(s57, s34):
    assert _vertices(lean_to_path(s57, [0, 9, 11, 8])) == FIG1_VERTICES
    assert _vertices(lean_to_path(s57, [0])) == [(0, 5), (0, 0), (7, 0)]
    assert _vertices(lean_to_path(s34, [0, 5])) == [(0, 3), (0, 1), (1, 1), (1, 0), (4, 0)]


def test_lean_to_path_rejects(s57):
    with pytest.raises(ValueError):
        lean_to_path(s57, [0, 7])
    with pytest.raises(ValueError):
        lean_to_path(s57, [9, 11])


def test_turns(s57):
    path = lean_to_path(s57, [0, 9, 11, 8])
    assert [point_to_value(s57, p) for p in path.es_turns] == [9, 11, 8]
    assert [point_to_value(s57, p) for p in path.se_turns] == [14, 16, 18, 15]
    assert path.steps == "SSESESEESEEE"


def test_path_to_semimodule_examples(s57, s34):
    r = path_to_semimodule(s57, path_from_vertices(s57, FIG1_VERTICES))
    assert (r.generators, r.syzygies) == ([0, 9, 11, 8], [14, 16, 18, 15])
    r = path_to_semimodule(s57, path_from_steps(s57, "SSSSSEEEEEEE"))
    assert (r.generators, r.syzygies) == ([0], [35])
    r = path_to_semimodule(s34, path_from_vertices(s34, [(0, 3), (0, 1), (1, 1), (1, 0), (4, 0)]))
    assert (r.generators, r.syzygies) == ([0, 5], [8, 9])


@pytest.mark.parametrize("steps", ["ESSSSSEEEEEE", "SSSSSEEEEEE", "SSSSSEEEEEEEE", "SSSSXEEEEEEE", "SSESSEEEEEEE"])
def test_malformed_paths_rejected(s57, steps):
    with pytest.raises(ValueError):
        path_from_steps(s57, steps)


def test_malformed_vertices_rejected(s57):
    with pytest.raises(ValueError):
        path_from_vertices(s57, [(0, 5), (1, 3), (7, 0)])


def test_enumeration_examples(s23, s34, s57):
    assert list(enumerate_semimodules(s23)) == [[0], [0, 1]]
    assert sorted(map(sorted, enumerate_semimodules(s34))) == [[0], [0, 1], [0, 1, 2], [0, 2], [0, 5]]
    assert sum(1 for _ in enumerate_semimodules(s57)) == 66


@pytest.mark.parametrize("alpha,beta", SMALL_PAIRS)
def test_enumeration_matches_subset_filter(alpha, beta):
    S = SemigroupPair(alpha, beta)
    leans = list(enumerate_semimodules(S))
    as_sets = [frozenset(x) for x in leans]
    assert len(set(as_sets)) == len(as_sets)
    assert set(as_sets) == set(lean_subsets(alpha, beta))
    assert len(leans) == rational_catalan(alpha, beta)
    steps = list(enumerate_paths(S))
    assert steps == sorted(steps, key=lambda s: s.replace("S", "0").replace("E", "1"))
    for lean, st in zip(leans, steps):
        D = make_semimodule(S, lean)
        assert list(D.generators) == lean
        path = lean_to_path(S, lean)
        assert path.steps == st
        assert path_from_steps(S, st) == path
        r = path_to_semimodule(S, path)
        assert r.generators == lean
        assert r.syzygies == list(syzygy_generators(D).generators)
        for v in path.vertices:
            assert point_to_value(S, v) >= 0


def test_render_ascii_labels(s57):
    text = render(s57, lean_to_path(s57, [0, 9, 11, 8]), "ascii")
    for label in ("*9", "*11", "*8", "14o", "16o", "18o", "15o"):
        assert label in text


def test_render_svg_straight_path(s23):
    doc = render(s23, lean_to_path(s23, [0]), "svg")
    root = ET.fromstring(doc)
    polylines = root.findall(f"{SVG}polyline")
    assert len(polylines) == 1
    assert len(polylines[0].get("points").split()) - 1 == 2
    assert len(root.findall(f"{SVG}line[@class='diagonal']")) == 1


def test_render_svg_vertices(s57):
    root = ET.fromstring(render(s57, lean_to_path(s57, [0, 9, 11, 8]), "svg"))
    pts = root.find(f"{SVG}polyline").get("points").split()
    assert [svg_to_lattice(s57, *map(int, p.split(","))).as_tuple() for p in pts] == FIG1_VERTICES
    assert len(root.findall(f"{SVG}circle[@class='generator']")) == 3
    assert len(root.findall(f"{SVG}circle[@class='syzygy']")) == 4


def test_render_tikz_segments(s34):
    tex = render(s34, lean_to_path(s34, [0, 5]), "tikz")
    thick = [ln for ln in tex.splitlines() if ln.startswith(r"\draw[ultra thick]")]
    assert len(thick) == 1
    assert thick[0].count(" -- ") == 4
    assert tex.startswith(r"\begin{tikzpicture}") and tex.rstrip().endswith(r"\end{tikzpicture}")


def test_render_unknown_format(s23):
    with pytest.raises(ValueError):
        render(s23, lean_to_path(s23, [0]), "png")
