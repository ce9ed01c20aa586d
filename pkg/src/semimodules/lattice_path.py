"""Lean sets as staircase paths from (0, alpha) to (beta, 0).

A path moves by unit steps ``S`` (down) and ``E`` (right) and never rises
above the segment joining its endpoints.  Its E-then-S corners are the
nonzero generators of a semimodule, its S-then-E corners the syzygies.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator
from xml.sax.saxutils import escape

from .semigroup import LatticePoint, SemigroupPair, gap_to_point, point_to_value, staircase_key, value_to_point
from .semimodule import is_lean
from .syzygy import corner_points


@dataclass(frozen=True)
class LatticePath:
    """Corner vertices of a staircase, including both endpoints."""

    vertices: tuple[LatticePoint, ...]
    es_turns: tuple[LatticePoint, ...]
    se_turns: tuple[LatticePoint, ...]

    @property
    def steps(self) -> str:
        out = []
        for p, q in zip(self.vertices, self.vertices[1:]):
            out.append("E" * (q.a - p.a) if q.a != p.a else "S" * (p.b - q.b))
        return "".join(out)

    @property
    def segments(self) -> list[tuple[LatticePoint, LatticePoint]]:
        return list(zip(self.vertices, self.vertices[1:]))


@dataclass(frozen=True)
class PathReading:
    generators: list[int]
    syzygies: list[int]


def lean_to_path(S: SemigroupPair, lean) -> LatticePath:
    lean = sorted(set(lean))
    if not lean or lean[0] != 0:
        raise ValueError("lean set must contain 0")
    if not is_lean(S, lean):
        raise ValueError(f"{lean} is not lean for {S}")
    es = sorted((gap_to_point(S, g) for g in lean[1:]), key=staircase_key)
    se = corner_points(S, [value_to_point(S, 0)] + es)
    vertices = [LatticePoint(0, S.alpha)]
    for k, corner in enumerate(se):
        vertices.append(corner)
        if k < len(es):
            vertices.append(es[k])
    vertices.append(LatticePoint(S.beta, 0))
    return LatticePath(tuple(vertices), tuple(es), tuple(se))


def path_from_steps(S: SemigroupPair, steps: str) -> LatticePath:
    """Build a path from a step string over ``{"S", "E"}``, validating it."""
    x, y = 0, S.alpha
    pts = [LatticePoint(x, y)]
    for ch in steps:
        if ch == "E":
            x += 1
        elif ch == "S":
            y -= 1
        else:
            raise ValueError(f"unknown step {ch!r}")
        if x > S.beta or y < 0:
            raise ValueError("path leaves the rectangle")
        if point_to_value(S, (x, y)) < 0:
            raise ValueError(f"path crosses the diagonal at {(x, y)}")
        pts.append(LatticePoint(x, y))
    if (x, y) != (S.beta, 0):
        raise ValueError(f"path ends at {(x, y)}, not {(S.beta, 0)}")
    es, se, vertices = [], [], [pts[0]]
    for i in range(1, len(pts) - 1):
        before, after = steps[i - 1], steps[i]
        if before == "E" and after == "S":
            es.append(pts[i])
        elif before == "S" and after == "E":
            se.append(pts[i])
        if before != after:
            vertices.append(pts[i])
    vertices.append(pts[-1])
    return LatticePath(tuple(vertices), tuple(es), tuple(se))


def path_from_vertices(S: SemigroupPair, vertices) -> LatticePath:
    """Build a path from its corner list; straight runs are filled in."""
    pts = [LatticePoint(*v) for v in vertices]
    steps = []
    for p, q in zip(pts, pts[1:]):
        if p.b == q.b and q.a > p.a:
            steps.append("E" * (q.a - p.a))
        elif p.a == q.a and q.b < p.b:
            steps.append("S" * (p.b - q.b))
        else:
            raise ValueError(f"malformed segment {p.as_tuple()} -> {q.as_tuple()}")
    if not pts or pts[0] != LatticePoint(0, S.alpha):
        raise ValueError("path must start at (0, alpha)")
    return path_from_steps(S, "".join(steps))


def path_to_semimodule(S: SemigroupPair, path: LatticePath) -> PathReading:
    path = path_from_steps(S, path.steps)
    return PathReading(
        [0] + [point_to_value(S, p) for p in path.es_turns],
        [point_to_value(S, p) for p in path.se_turns],
    )


def enumerate_paths(S: SemigroupPair) -> Iterator[str]:
    """All admissible step strings, lexicographically with ``S < E``."""
    alpha, beta = S.alpha, S.beta
    ab = alpha * beta
    buf: list[str] = []

    def walk(x: int, y: int):
        if x == beta and y == 0:
            yield "".join(buf)
            return
        if y > 0:
            buf.append("S")
            yield from walk(x, y - 1)
            buf.pop()
        # stay weakly below the diagonal
        if x < beta and ab - (x + 1) * alpha - y * beta >= 0:
            buf.append("E")
            yield from walk(x + 1, y)
            buf.pop()

    yield from walk(0, alpha)


def enumerate_semimodules(S: SemigroupPair) -> Iterator[list[int]]:
    """Every lean set of ``S`` once, as a staircase-sorted generator list."""
    for steps in enumerate_paths(S):
        yield path_to_semimodule(S, path_from_steps(S, steps)).generators


# -- rendering ---------------------------------------------------------------

def render(S: SemigroupPair, path: LatticePath, format: str = "ascii") -> str:
    try:
        fn = _RENDERERS[format]
    except KeyError:
        raise ValueError(f"unknown format {format!r}; expected one of {sorted(_RENDERERS)}") from None
    return fn(S, path)


def _labelled_points(S: SemigroupPair):
    """Points coding a nonnegative value, excluding the ambiguous endpoint (beta, 0)."""
    for b in range(S.alpha, -1, -1):
        for a in range(S.beta + 1):
            if point_to_value(S, (a, b)) >= 0 and (a, b) != (S.beta, 0):
                yield LatticePoint(a, b)


def _render_ascii(S: SemigroupPair, path: LatticePath) -> str:
    ab = S.alpha * S.beta
    w = len(str(ab)) + 2
    left = w
    rows, cols = 2 * S.alpha + 1, left + S.beta * w + w
    canvas = [[" "] * cols for _ in range(rows)]

    def at(p):
        return 2 * (S.alpha - p.b), left + p.a * w

    for p in _labelled_points(S):
        r, c = at(p)
        canvas[r][c] = "."
    for p, q in path.segments:
        (r0, c0), (r1, c1) = at(p), at(q)
        if r0 == r1:
            for c in range(c0 + 1, c1):
                canvas[r0][c] = "-"
        else:
            for r in range(r0 + 1, r1):
                canvas[r][c0] = "|"
    for p in path.vertices:
        r, c = at(p)
        canvas[r][c] = "+"
    for p in path.es_turns:
        r, c = at(p)
        canvas[r][c] = "*"
        for i, ch in enumerate(str(point_to_value(S, p))):
            canvas[r][c + 1 + i] = ch
    for p in path.se_turns:
        r, c = at(p)
        canvas[r][c] = "o"
        label = str(point_to_value(S, p))
        for i, ch in enumerate(label):
            canvas[r][c - len(label) + i] = ch
    lines = ["".join(row).rstrip() for row in canvas]
    lines.append(f"{S}: * generator, o syzygy")
    return "\n".join(lines) + "\n"


SVG_UNIT = 40
SVG_MARGIN = 50


def svg_coords(S: SemigroupPair, p) -> tuple[int, int]:
    a, b = p
    return SVG_MARGIN + a * SVG_UNIT, SVG_MARGIN + (S.alpha - b) * SVG_UNIT


def svg_to_lattice(S: SemigroupPair, x: int, y: int) -> LatticePoint:
    return LatticePoint((x - SVG_MARGIN) // SVG_UNIT, S.alpha - (y - SVG_MARGIN) // SVG_UNIT)


def _render_svg(S: SemigroupPair, path: LatticePath) -> str:
    u, m = SVG_UNIT, SVG_MARGIN
    width, height = 2 * m + S.beta * u, 2 * m + S.alpha * u
    es, se = set(path.es_turns), set(path.se_turns)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        "<title>%s</title>" % escape(
            f"Lattice path for {S} with generators {[0] + [point_to_value(S, p) for p in path.es_turns]}"
        ),
        '<g class="grid" stroke="#999" stroke-width="1">',
    ]
    for a in range(S.beta + 1):
        (x0, y0), (x1, y1) = svg_coords(S, (a, 0)), svg_coords(S, (a, S.alpha))
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}"/>')
    for b in range(S.alpha + 1):
        (x0, y0), (x1, y1) = svg_coords(S, (0, b)), svg_coords(S, (S.beta, b))
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}"/>')
    out.append("</g>")
    (x0, y0), (x1, y1) = svg_coords(S, (0, S.alpha)), svg_coords(S, (S.beta, 0))
    out.append(f'<line class="diagonal" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="black" stroke-width="1"/>')
    pts = " ".join("%d,%d" % svg_coords(S, p) for p in path.vertices)
    out.append(f'<polyline class="path" points="{pts}" fill="none" stroke="black" stroke-width="4"/>')
    out.append('<g class="labels" font-family="serif" font-size="14">')
    for p in _labelled_points(S):
        v = point_to_value(S, p)
        x, y = svg_coords(S, (p.a - 1, p.b - 1))
        x, y = x + 6, y - 10
        if p.a == 0 or p.b == 0:
            text, colour = f"({v})", "black"
        else:
            text, colour = str(v), "black" if p in es else "#696969"
        out.append(f'<text x="{x}" y="{y}" fill="{colour}">{text}</text>')
    out.append("</g>")
    for p in path.es_turns:
        x, y = svg_coords(S, p)
        out.append(f'<circle class="generator" cx="{x}" cy="{y}" r="4" fill="black"/>')
    big = max(path.se_turns, key=lambda p: point_to_value(S, p))
    for p in (LatticePoint(0, S.alpha), *path.se_turns, LatticePoint(S.beta, 0)):
        x, y = svg_coords(S, p)
        cls, r = ("syzygy", 6 if p == big else 4) if p in se else ("endpoint", 4)
        out.append(f'<circle class="{cls}" cx="{x}" cy="{y}" r="{r}" fill="white" stroke="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _render_tikz(S: SemigroupPair, path: LatticePath) -> str:
    al, be = S.alpha, S.beta
    es, se = set(path.es_turns), set(path.se_turns)
    out = [
        r"\begin{tikzpicture}[scale=0.65]",
        rf"\draw[dashed] (-1,-1) grid [step=1cm]({be},0);",
        rf"\draw[dashed] (-1,-1) grid [step=1cm](0,{al});",
        rf"\draw[] (0,0) grid [step=1cm]({be},{al});",
        rf"\draw[] (0,{al}) -- ({be},0);",
        r"\draw[ultra thick] " + " -- ".join(f"({p.a},{p.b})" for p in path.vertices) + ";",
    ]
    for p in path.es_turns:
        out.append(rf"\draw[fill] ({p.a},{p.b}) circle [radius=0.1];")
    for p in _labelled_points(S):
        v = point_to_value(S, p)
        x, y = p.a - 1, p.b - 1
        if p.b == 0:
            out.append(rf"\node [below right] at ({x},-0.2) {{$\scriptstyle ({v})$}};")
        elif p.a == 0:
            out.append(rf"\node [below right] at (-1,{y + 0.8:.1f}) {{$\scriptstyle ({v})$}};")
        else:
            colour = "" if p in es else "[gray]"
            out.append(rf"\node [below right]{colour} at ({x + 0.15:.2f},{y + 0.8:.1f}) {{${v}$}};")
    big = max(path.se_turns, key=lambda p: point_to_value(S, p))
    for p in (*path.se_turns, LatticePoint(0, al), LatticePoint(be, 0)):
        r = 0.15 if p == big and p in se else 0.1
        out.append(rf"\draw[fill=white] ({p.a},{p.b}) circle [radius={r}];")
    out.append(r"\end{tikzpicture}")
    return "\n".join(out) + "\n"


_RENDERERS = {"ascii": _render_ascii, "svg": _render_svg, "tikz": _render_tikz}
