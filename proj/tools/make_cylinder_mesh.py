#!/usr/bin/env python3
"""Generate the bundled channel-with-cylinder triangulation.

Writes data/cylinder_g1.mesh and include/splitfem/data/cylinder_g1.hpp.
Boundary tags: 1 inflow (x=0), 2 outflow (x=2.2), 3 walls (y=0, y=0.41),
4 cylinder (polygon inscribed in the circle of radius 0.05 about (0.2, 0.2)).
The output is deterministic (fixed seed).
"""
import argparse
import pathlib

import numpy as np
from scipy.spatial import Delaunay

LX, LY = 2.2, 0.41
CX, CY, R = 0.2, 0.2, 0.05
N_CYL = 40
N_OUTER = 118
N_INTERIOR = 328
H_MIN, H_MAX = 0.0078, 0.1055
H_NEAR, GROWTH = 0.011, 0.33


def size(x, y):
    d = np.hypot(x - CX, y - CY) - R
    return np.minimum(H_MAX, H_NEAR + GROWTH * np.maximum(d, 0.0))


def place_on_segment(a, b, count):
    """Interior points of segment a-b, equidistributed in 1/size."""
    t = np.linspace(0.0, 1.0, 2001)
    pts = a[None, :] + t[:, None] * (b - a)[None, :]
    dens = 1.0 / size(pts[:, 0], pts[:, 1])
    cum = np.concatenate([[0.0], np.cumsum(0.5 * (dens[1:] + dens[:-1]) * np.diff(t))])
    targets = np.linspace(0.0, cum[-1], count + 2)[1:-1]
    ts = np.interp(targets, cum, t)
    return a[None, :] + ts[:, None] * (b - a)[None, :]


def outer_boundary():
    corners = np.array([[0.0, 0.0], [LX, 0.0], [LX, LY], [0.0, LY]])
    lengths = []
    for i in range(4):
        a, b = corners[i], corners[(i + 1) % 4]
        t = np.linspace(0.0, 1.0, 2001)
        pts = a[None, :] + t[:, None] * (b - a)[None, :]
        dens = 1.0 / size(pts[:, 0], pts[:, 1])
        lengths.append(np.trapezoid(dens, t) * np.linalg.norm(b - a))
    lengths = np.array(lengths)
    free = N_OUTER - 4
    counts = np.floor(free * lengths / lengths.sum()).astype(int)
    while counts.sum() < free:
        counts[np.argmax(free * lengths / lengths.sum() - counts)] += 1
    pts, tags = [], []
    side_tag = [3, 2, 3, 1]
    for i in range(4):
        a, b = corners[i], corners[(i + 1) % 4]
        pts.append(a[None, :])
        pts.append(place_on_segment(a, b, counts[i]))
        tags += [side_tag[i]] * (counts[i] + 1)
    return np.vstack(pts), tags


def cylinder_boundary():
    th = np.linspace(0.0, 2 * np.pi, N_CYL, endpoint=False)
    return np.column_stack([CX + R * np.cos(th), CY + R * np.sin(th)])


def inside_domain(p, margin=0.0):
    return ((p[:, 0] > margin) & (p[:, 0] < LX - margin) & (p[:, 1] > margin)
            & (p[:, 1] < LY - margin)
            & (np.hypot(p[:, 0] - CX, p[:, 1] - CY) > R + margin))


def triangulate(pts):
    tri = Delaunay(pts).simplices
    c = pts[tri].mean(axis=1)
    keep = np.hypot(c[:, 0] - CX, c[:, 1] - CY) > R * np.cos(np.pi / N_CYL)
    tri = tri[keep]
    a, b, d = pts[tri[:, 0]], pts[tri[:, 1]], pts[tri[:, 2]]
    area = 0.5 * ((b[:, 0] - a[:, 0]) * (d[:, 1] - a[:, 1]) - (b[:, 1] - a[:, 1]) * (d[:, 0] - a[:, 0]))
    flip = area < 0
    tri[flip] = tri[flip][:, [0, 2, 1]]
    return tri


def smooth(fixed, interior, iterations=400):
    nf = len(fixed)
    for it in range(iterations):
        pts = np.vstack([fixed, interior])
        tri = triangulate(pts)
        edges = np.vstack([tri[:, [0, 1]], tri[:, [1, 2]], tri[:, [2, 0]]])
        edges = np.unique(np.sort(edges, axis=1), axis=0)
        vec = pts[edges[:, 0]] - pts[edges[:, 1]]
        length = np.linalg.norm(vec, axis=1)
        mid = 0.5 * (pts[edges[:, 0]] + pts[edges[:, 1]])
        h = size(mid[:, 0], mid[:, 1])
        l0 = h * 1.2 * np.sqrt((length ** 2).sum() / (h ** 2).sum())
        force = np.maximum(l0 - length, 0.0)[:, None] * vec / length[:, None]
        total = np.zeros_like(pts)
        np.add.at(total, edges[:, 0], force)
        np.add.at(total, edges[:, 1], -force)
        step = 0.2 * total[nf:]
        interior = interior + step
        bad = ~inside_domain(interior, 1e-3)
        if bad.any():
            interior[bad] = interior[bad] - step[bad]
    return interior


def boundary_edges(tri, tags_of_vertex, n_outer):
    edges = {}
    for t in tri:
        for a, b in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
            key = (min(a, b), max(a, b))
            edges.setdefault(key, []).append((a, b))
    result = []
    for key, owners in edges.items():
        if len(owners) == 1:
            a, b = owners[0]
            if a >= n_outer + N_CYL or b >= n_outer + N_CYL:
                raise RuntimeError("interior vertex on the boundary")
            if a >= n_outer:
                tag = 4
            else:
                ta, tb = tags_of_vertex[a], tags_of_vertex[b]
                tag = ta if ta == tb else None
                if tag is None:
                    pa = np.array(PTS[a]); pb = np.array(PTS[b])
                    mx, my = 0.5 * (pa + pb)
                    tag = 1 if abs(mx) < 1e-12 else 2 if abs(mx - LX) < 1e-12 else 3
            result.append((a, b, tag))
    return result


def main():
    global PTS
    ap = argparse.ArgumentParser()
    ap.add_argument("--root", default=str(pathlib.Path(__file__).resolve().parents[1]))
    args = ap.parse_args()
    rng = np.random.default_rng(20200521)
    outer, outer_tags = outer_boundary()
    cyl = cylinder_boundary()
    fixed = np.vstack([outer, cyl])
    cand = []
    while len(cand) < N_INTERIOR:
        p = rng.uniform([0, 0], [LX, LY], size=(20000, 2))
        p = p[inside_domain(p, 0.004)]
        keep = rng.uniform(size=len(p)) < (H_MIN / size(p[:, 0], p[:, 1])) ** 2 * 6
        cand.extend(p[keep].tolist())
    interior = np.array(cand[:N_INTERIOR])
    interior = smooth(fixed, interior)
    pts = np.vstack([fixed, interior])
    PTS = pts.tolist()
    tri = triangulate(pts)
    bnd = boundary_edges(tri, outer_tags, len(outer))
    assert len(pts) == 486, len(pts)
    assert len(tri) == 814, len(tri)
    assert len(bnd) == N_OUTER + N_CYL, len(bnd)
    lines = ["# channel [0,2.2]x[0,0.41] minus polygonal cylinder r=0.05 at (0.2,0.2)",
             "# tags: 1 inflow, 2 outflow, 3 walls, 4 cylinder",
             "mesh 2d triangle", f"vertices {len(pts)}"]
    lines += [f"{x:.17g} {y:.17g}" for x, y in pts]
    lines.append(f"triangles {len(tri)}")
    lines += [f"{a} {b} {c}" for a, b, c in tri]
    lines.append(f"boundary_edges {len(bnd)}")
    lines += [f"{a} {b} {t}" for a, b, t in bnd]
    text = "\n".join(lines) + "\n"
    root = pathlib.Path(args.root)
    (root / "data").mkdir(exist_ok=True)
    (root / "data" / "cylinder_g1.mesh").write_text(text)
    hdr = root / "include" / "splitfem" / "data"
    hdr.mkdir(parents=True, exist_ok=True)
    (hdr / "cylinder_g1.hpp").write_text(
        "// Generated by tools/make_cylinder_mesh.py; do not edit.\n#pragma once\n\n"
        "namespace splitfem::data {\n\ninline constexpr const char* cylinder_g1_mesh = R\"MESH(\n"
        + text + ")MESH\";\n\n}  // namespace splitfem::data\n")
    e = np.vstack([tri[:, [0, 1]], tri[:, [1, 2]], tri[:, [2, 0]]])
    e = np.unique(np.sort(e, axis=1), axis=0)
    l = np.linalg.norm(pts[e[:, 0]] - pts[e[:, 1]], axis=1)
    print(f"V={len(pts)} T={len(tri)} E={len(e)} B={len(bnd)} min h={l.min():.4f} max h={l.max():.4f}")


if __name__ == "__main__":
    main()
