"""Write-only plot data: CSV point dumps, SVG sketches of configurations
with their hulls and convex paths, and DOT for refinement posets."""

from __future__ import annotations

import itertools

from .geometry import Config, Dir, convex_hull
from .paths import enumerate_zeta_convex_paths


def config_csv(A: Config) -> str:
    lines = ["index,x,y"]
    for i, p in enumerate(A):
        lines.append(f"{i},{p.x},{p.y}")
    return "\n".join(lines) + "\n"


def _bounds(A: Config):
    xs = [float(p.x) for p in A]
    ys = [float(p.y) for p in A]
    pad = 0.15 * max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    return min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad


def config_svg(A: Config, zeta: Dir | None = None, width: int = 480) -> str:
    x0, y0, x1, y1 = _bounds(A)
    scale = width / (x1 - x0)
    height = int((y1 - y0) * scale)

    def tx(p):
        return (float(p.x) - x0) * scale, height - (float(p.y) - y0) * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">'
    ]
    hull = convex_hull(A)
    pts = " ".join("%.2f,%.2f" % tx(A[i]) for i in hull)
    parts.append(
        f'<polygon points="{pts}" fill="#eef" stroke="#88a" stroke-width="1"/>'
    )
    if zeta is not None and len(A) >= 2:
        vals = sorted(range(len(A)), key=lambda i: zeta.infinity_form(A[i]))
        for a, i in enumerate(vals):
            for j in vals[a + 1:]:
                try:
                    paths = enumerate_zeta_convex_paths(A, i, j, zeta)
                except Exception:
                    continue
                for path in paths:
                    chain = " ".join(
                        "%.2f,%.2f" % tx(A[v]) for v in path.vertices
                    )
                    parts.append(
                        f'<polyline points="{chain}" fill="none" '
                        'stroke="#c66" stroke-width="0.7" opacity="0.6"/>'
                    )
    for i, p in enumerate(A):
        cx, cy = tx(p)
        parts.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="3" fill="#333"/>')
        parts.append(
            f'<text x="{cx + 5:.2f}" y="{cy - 5:.2f}" font-size="11">{i}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def poset_csv(A: Config) -> str:
    """CSV edge list (covering relations) of the refinement poset of
    regular subdivisions, with one node row per subdivision."""
    from .secondary import enumerate_subdivisions, is_regular, refines

    subs = [s for s in enumerate_subdivisions(A) if is_regular(A, s) is not None]
    n = len(subs)
    less = [
        [i != j and subs[i] != subs[j] and refines(subs[i], subs[j]) for j in range(n)]
        for i in range(n)
    ]
    lines = ["kind,source,target,label"]
    for i, s in enumerate(subs):
        label = "|".join("".join(str(v) for v in c.polygon) for c in s.cells)
        lines.append(f"node,{i},,{label}")
    for i in range(n):
        for j in range(n):
            if less[i][j] and not any(less[i][k] and less[k][j] for k in range(n)):
                lines.append(f"edge,{i},{j},")
    return "\n".join(lines) + "\n"


def poset_dot(A: Config) -> str:
    """DOT digraph of the refinement poset of regular subdivisions
    (covering relations only)."""
    from .secondary import enumerate_subdivisions, is_regular, refines

    subs = [s for s in enumerate_subdivisions(A) if is_regular(A, s) is not None]
    n = len(subs)
    less = [
        [i != j and subs[i] != subs[j] and refines(subs[i], subs[j]) for j in range(n)]
        for i in range(n)
    ]
    lines = ["digraph refinement {", "  rankdir=BT;"]
    for i, s in enumerate(subs):
        label = "|".join(
            "".join(str(v) for v in c.polygon) for c in s.cells
        )
        lines.append(f'  n{i} [label="{label}"];')
    for i, j in itertools.product(range(n), range(n)):
        if less[i][j] and not any(
            less[i][k] and less[k][j] for k in range(n)
        ):
            lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
