"""Immersions and embeddings of the higher Klein bottles, plus mesh tooling.

K_n is a mapping torus of the (n-1)-torus: sweep a nested torus
T^(n-1) in R^n along a closed plane curve while the torus shrinks and
regrows so that the time-pi slice matches the time-0 slice after the
flip theta_1 -> pi - theta_1.  Concretely, with D = 1/(2^(n+1) - 5):

* the directrix is the figure-eight a(t) = (5 sin t, 2 sin^2 t cos t),
  traversed for t in [0, pi] (each lobe carries one branch);
* the tube radius r(t) = 1/2 - d (2t - pi) sqrt(t (pi - t)) with
  d = 2 / (pi^2 (2^(n+1) - 5)) stays inside [1/2 - D/2, 1/2 + D/2];
* the swept fibre is the nested torus with radii 2^(n-i) D for
  i = 1..n-2 and last radius r(t) - 1/2 + 3D/2, placed in the
  hyperplane spanned by the directrix normal and the axes e_3..e_(n+1).

The result is an immersion of K_n in R^(n+1); the two branches of the
figure-eight overlap near the crossing, so genuine double points remain.
Appending sin(2t) as one extra coordinate separates the branches and
gives an embedding in R^(n+2).

Meshes sample the parameter grid, welding the t = pi row onto the t = 0
row through the flip (this needs an even theta resolution).  The
self-intersection scan hashes vertices into cells of side `radius` and
reports close pairs that are not mesh neighbours, where "neighbour"
means graph distance at most 2 in the share-a-quad adjacency.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

MIN_DIRECTRIX_SPEED = 1e-8


def base_unit(n: int) -> float:
    """D = 1/(2^(n+1) - 5), the size unit of the nested fibre torus."""
    if n < 2:
        raise ValueError("need n >= 2")
    return 1.0 / (2 ** (n + 1) - 5)


def wave_amplitude(n: int) -> float:
    """Amplitude d of the tube-radius wave; the band is 1/2 +- pi^2 d / 4."""
    return 2.0 / (np.pi**2 * (2 ** (n + 1) - 5))


def tube_radius(n: int, t):
    """r(t) = 1/2 - d (2t - pi) sqrt(t (pi - t)), elementwise on arrays."""
    t = np.asarray(t, dtype=float)
    d = wave_amplitude(n)
    return 0.5 - d * (2 * t - np.pi) * np.sqrt(np.maximum(t * (np.pi - t), 0.0))


def directrix(t):
    """The plane figure-eight a(t) = (5 sin t, 2 sin^2 t cos t)."""
    t = np.asarray(t, dtype=float)
    return np.stack([5 * np.sin(t), 2 * np.sin(t) ** 2 * np.cos(t)], axis=-1)


def directrix_velocity(t):
    t = np.asarray(t, dtype=float)
    return np.stack(
        [5 * np.cos(t), 4 * np.sin(t) * np.cos(t) ** 2 - 2 * np.sin(t) ** 3],
        axis=-1,
    )


def directrix_normal(t):
    """Unit normal J(t), the velocity rotated a quarter turn; J(pi) = -J(0)."""
    v = directrix_velocity(t)
    speed = np.linalg.norm(v, axis=-1, keepdims=True)
    if np.min(speed) < MIN_DIRECTRIX_SPEED:
        raise ValueError("directrix speed fell below the regularity guard")
    v = v / speed
    return np.stack([-v[..., 1], v[..., 0]], axis=-1)


def nested_torus_radii(n: int, t):
    """Fibre radii (r_1, ..., r_(n-1)) at time t; the last one varies."""
    if n < 2:
        raise ValueError("need n >= 2")
    unit = base_unit(n)
    last = tube_radius(n, t) - 0.5 + 1.5 * unit
    return [2.0 ** (n - i) * unit for i in range(1, n - 1)] + [last]


def nesting_margin(radii) -> float:
    """min over i of r_i - sum(r_j, j > i); positive means strictly nested."""
    margin = np.inf
    tail = np.zeros(())
    for r in reversed(list(radii)):
        r = np.asarray(r, dtype=float)
        margin = min(margin, float(np.min(r - tail)))
        tail = tail + r
    return margin


def validate_nesting(radii) -> None:
    if nesting_margin(radii) <= 0:
        raise ValueError("torus radii are not strictly nested")


def torus_point(radii, thetas):
    """Point of the nested torus T^m in R^(m+1), m = len(radii).

    thetas has shape (..., m); radii entries may be scalars or arrays
    broadcastable against the leading shape.  Built by the recursion
    w_(m-1) = r_(m-1), w_j = r_j + w_(j+1) cos(theta_(j+1)); then
    x_1 = w_0 cos(theta_0) and x_(j+1) = w_j sin(theta_j).
    """
    thetas = np.asarray(thetas, dtype=float)
    m = thetas.shape[-1]
    if len(radii) != m:
        raise ValueError("need one radius per angle")
    w = np.asarray(radii[m - 1], dtype=float)
    ws = [w]
    for j in range(m - 2, -1, -1):
        w = radii[j] + w * np.cos(thetas[..., j + 1])
        ws.append(w)
    ws.reverse()
    shape = np.broadcast_shapes(thetas.shape[:-1], np.shape(ws[0]))
    x = np.empty(shape + (m + 1,))
    x[..., 0] = ws[0] * np.cos(thetas[..., 0])
    for j in range(m):
        x[..., j + 1] = ws[j] * np.sin(thetas[..., j])
    return x


def immersion_point(n: int, thetas, t):
    """K_n -> R^(n+1): fibre torus carried along the figure-eight.

    thetas has shape (..., n-1) and t broadcasts against the leading
    shape.  The first fibre coordinate rides the directrix normal; the
    remaining ones go to the coordinate axes e_3..e_(n+1).
    """
    thetas = np.asarray(thetas, dtype=float)
    t = np.asarray(t, dtype=float)
    if thetas.shape[-1] != n - 1:
        raise ValueError(f"need {n - 1} angles for K_{n}")
    x = torus_point(nested_torus_radii(n, t), thetas)
    a = directrix(t)
    j = directrix_normal(t)
    shape = np.broadcast_shapes(x.shape[:-1], t.shape)
    out = np.empty(shape + (n + 1,))
    out[..., 0] = a[..., 0] + x[..., 0] * j[..., 0]
    out[..., 1] = a[..., 1] + x[..., 0] * j[..., 1]
    out[..., 2:] = x[..., 1:]
    return out


def embedding_point(n: int, thetas, t):
    """K_n -> R^(n+2): the immersion with sin(2t) appended.

    sin(2t) has opposite signs on the two branches t and pi - t, which
    is what pushes the overlapping tubes apart.
    """
    imm = immersion_point(n, thetas, t)
    t = np.asarray(t, dtype=float)
    shape = imm.shape[:-1]
    out = np.empty(shape + (n + 2,))
    out[..., :-1] = imm
    out[..., -1] = np.broadcast_to(np.sin(2 * t), shape)
    return out


@dataclass(frozen=True)
class MeshSpec:
    """Sampling plan: which map, and how fine a parameter grid."""

    n: int
    target: str  # "immersion" or "embedding"
    res_theta: int
    res_t: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")
        if self.target not in ("immersion", "embedding"):
            raise ValueError("target must be 'immersion' or 'embedding'")
        if self.res_theta < 4 or self.res_theta % 2:
            raise ValueError("res_theta must be even and >= 4 (the weld flips theta_1 by half a turn)")
        if self.res_t < 3:
            raise ValueError("res_t must be >= 3")

    @property
    def dim(self) -> int:
        return self.n + (1 if self.target == "immersion" else 2)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "target": self.target,
            "res_theta": self.res_theta,
            "res_t": self.res_t,
        }


@dataclass(frozen=True)
class Mesh:
    """Vertex/quad sampling of the immersion or embedding.

    vertices: (N, dim) float array.  faces: (F, 4) int array of quads, one
    per axis pair of the parameter grid, wrapped in theta and welded in t.
    t_values: per-vertex sweep parameter (None for meshes loaded without it).
    weld_error: max distance between the t = pi row and its flipped t = 0
    image, measured before the row was identified away.
    """

    vertices: np.ndarray
    faces: np.ndarray
    t_values: np.ndarray | None
    spec: MeshSpec | None
    weld_error: float

    @property
    def dim(self) -> int:
        return self.vertices.shape[1]

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_faces(self) -> int:
        return len(self.faces)


def grid_weld_index(i1: int, res_theta: int) -> int:
    """Index image of theta_1 -> pi - theta_1 on the uniform grid."""
    return (res_theta // 2 - i1) % res_theta


def build_mesh(spec: MeshSpec) -> Mesh:
    """Sample the chosen map on a closed parameter grid.

    Grid: theta_k = 2 pi i / res_theta, t_j = pi j / (res_t - 1).  The
    j = res_t - 1 row equals the j = 0 row after theta_1 -> pi - theta_1,
    so those samples are welded onto row 0 and only res_t - 1 rows of
    vertices are kept.  Quads are emitted for every pair of grid axes.
    """
    n, A, T = spec.n, spec.res_theta, spec.res_t
    point = immersion_point if spec.target == "immersion" else embedding_point

    # the fibre stays strictly nested across the whole radius band
    unit = base_unit(n)
    for extreme in (unit, 2 * unit):
        validate_nesting(
            [2.0 ** (n - i) * unit for i in range(1, n - 1)] + [extreme]
        )

    theta = 2 * np.pi * np.arange(A) / A
    tker = np.pi * np.arange(T - 1) / (T - 1)
    grids = np.meshgrid(*([theta] * (n - 1)), tker, indexing="ij")
    thetas = np.stack(grids[:-1], axis=-1)
    tval = grids[-1]
    pts = point(n, thetas, tval)
    vertices = pts.reshape(-1, spec.dim)
    t_values = tval.reshape(-1)

    # how closely the welded row really lands on its image
    base = np.meshgrid(*([theta] * (n - 1)), indexing="ij")
    th_end = np.stack(base, axis=-1)
    th_start = th_end.copy()
    th_start[..., 0] = np.pi - th_start[..., 0]
    weld_error = float(
        np.max(np.abs(point(n, th_end, np.pi) - point(n, th_start, 0.0)))
    )

    faces = _grid_faces(n, A, T)
    return Mesh(vertices, faces, t_values, spec, weld_error)


def _flat_ids(indices, A: int, T: int) -> np.ndarray:
    """Kept-vertex ids for grid indices, applying theta wrap and t weld."""
    axes = [np.asarray(ix) % A for ix in indices[:-1]]
    tt = np.asarray(indices[-1])
    at_weld = tt == T - 1
    axes[0] = np.where(at_weld, (A // 2 - axes[0]) % A, axes[0])
    tt = np.where(at_weld, 0, tt)
    shape = tuple([A] * len(axes)) + (T - 1,)
    return np.ravel_multi_index(tuple(axes) + (tt,), shape)


def _grid_faces(n: int, A: int, T: int) -> np.ndarray:
    """Quads (base, +e_a, +e_a+e_b, +e_b) for every axis pair a < b."""
    kept = tuple([A] * (n - 1)) + (T - 1,)
    base = [g.ravel() for g in np.indices(kept)]
    quads = []
    for a, b in combinations(range(n), 2):
        corners = []
        for da, db in ((0, 0), (1, 0), (1, 1), (0, 1)):
            idx = list(base)
            idx[a] = idx[a] + da
            idx[b] = idx[b] + db
            corners.append(_flat_ids(idx, A, T))
        quads.append(np.stack(corners, axis=1))
    return np.concatenate(quads, axis=0).astype(np.int64)


def mesh_edges(faces: np.ndarray) -> np.ndarray:
    """Unique undirected edges of a quad array, as sorted (E, 2) rows."""
    rolled = np.roll(faces, -1, axis=1)
    e = np.stack([faces.ravel(), rolled.ravel()], axis=1)
    e.sort(axis=1)
    return np.unique(e, axis=0)


def euler_characteristic(mesh: Mesh) -> int:
    return mesh.num_vertices - len(mesh_edges(mesh.faces)) + mesh.num_faces


@dataclass(frozen=True)
class ScanResult:
    """Close vertex pairs that are not mesh neighbours."""

    radius: float
    num_vertices: int
    pairs: tuple[tuple[int, int], ...]
    distances: tuple[float, ...]
    t_pairs: tuple[tuple[float, float], ...] | None

    @property
    def num_pairs(self) -> int:
        return len(self.pairs)

    def to_json(self) -> dict:
        return {
            "radius": self.radius,
            "num_vertices": self.num_vertices,
            "num_pairs": self.num_pairs,
            "pairs": [list(p) for p in self.pairs],
            "distances": list(self.distances),
            "t_pairs": [list(p) for p in self.t_pairs] if self.t_pairs is not None else None,
            "seam_confinement": seam_confinement_radius(self),
        }


def _candidate_pairs(P: np.ndarray, radius: float):
    """All vertex pairs within `radius`, via a uniform spatial hash.

    Cells of side `radius` are keyed by their raw bytes; each pair of
    points at distance <= radius lands in cells differing by at most one
    per axis, so scanning a half-space of the 3^dim offsets sees every
    pair exactly once.
    """
    N, dim = P.shape
    cells = np.floor(P / radius).astype(np.int64)
    vdt = np.dtype((np.void, cells.dtype.itemsize * dim))
    keys = np.ascontiguousarray(cells).view(vdt).ravel()
    order = np.argsort(keys)
    uniq, starts, counts = np.unique(keys[order], return_index=True, return_counts=True)
    zero = (0,) * dim
    out_i, out_j = [], []
    for off in product((-1, 0, 1), repeat=dim):
        if off != zero and off < zero:
            continue
        shifted = np.ascontiguousarray(cells + np.array(off)).view(vdt).ravel()
        loc = np.searchsorted(uniq, shifted)
        ok = loc < len(uniq)
        ok[ok] = uniq[loc[ok]] == shifted[ok]
        src = np.flatnonzero(ok)
        hit = loc[src]
        reps = counts[hit]
        total = int(reps.sum())
        if total == 0:
            continue
        # ragged gather of the run of sorted keys behind each hit cell
        first = np.repeat(starts[hit], reps)
        within = np.arange(total) - np.repeat(np.cumsum(reps) - reps, reps)
        jj = order[first + within]
        ii = np.repeat(src, reps)
        keep = (ii < jj) if off == zero else np.ones(total, dtype=bool)
        out_i.append(ii[keep])
        out_j.append(jj[keep])
    if not out_i:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    I = np.concatenate(out_i)
    J = np.concatenate(out_j)
    d2 = np.sum((P[I] - P[J]) ** 2, axis=1)
    close = d2 <= radius * radius
    return I[close], J[close]


def _mesh_near_mask(faces: np.ndarray, I: np.ndarray, J: np.ndarray) -> np.ndarray:
    """Which candidate pairs are within graph distance 2 of each other.

    Adjacency is "shares a quad".  With ball(v) = {v} + its neighbours,
    distance <= 2 is exactly ball(i) meeting ball(j); only balls of
    vertices that occur in candidate pairs are materialised.
    """
    wanted = np.union1d(I, J)
    mask = np.isin(faces, wanted).any(axis=1)
    balls: dict[int, set[int]] = {int(v): {int(v)} for v in wanted}
    for quad in faces[mask]:
        qs = set(int(v) for v in quad)
        for v in quad:
            ball = balls.get(int(v))
            if ball is not None:
                ball |= qs
    near = np.empty(len(I), dtype=bool)
    for k in range(len(I)):
        near[k] = not balls[int(I[k])].isdisjoint(balls[int(J[k])])
    return near


def self_intersection_scan(mesh: Mesh, radius: float) -> ScanResult:
    """Report non-neighbour vertex pairs at distance <= radius.

    An embedding sampled finely enough yields no pairs; an immersion with
    genuine double points keeps reporting pairs however fine the mesh.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    P = np.ascontiguousarray(mesh.vertices, dtype=np.float64)
    I, J = _candidate_pairs(P, radius)
    if len(I):
        near = _mesh_near_mask(mesh.faces, I, J)
        I, J = I[~near], J[~near]
    lo = np.minimum(I, J)
    hi = np.maximum(I, J)
    pairs = np.unique(np.stack([lo, hi], axis=1), axis=0) if len(I) else np.empty((0, 2), np.int64)
    dists = np.sqrt(np.sum((P[pairs[:, 0]] - P[pairs[:, 1]]) ** 2, axis=1))
    t_pairs = None
    if mesh.t_values is not None:
        tv = mesh.t_values
        t_pairs = tuple(
            (float(tv[a]), float(tv[b])) for a, b in pairs
        )
    return ScanResult(
        radius=float(radius),
        num_vertices=len(P),
        pairs=tuple((int(a), int(b)) for a, b in pairs),
        distances=tuple(float(d) for d in dists),
        t_pairs=t_pairs,
    )


def seam_confinement_radius(result: ScanResult) -> float | None:
    """How far from the seam the reported pairs reach, in t units.

    For each pair take the larger endpoint value of min(t, pi - t); the
    maximum over pairs bounds the t-band containing every collision.
    None when there are no pairs or no t data.
    """
    if result.t_pairs is None or not result.t_pairs:
        return None
    worst = 0.0
    for ta, tb in result.t_pairs:
        sa = min(ta, np.pi - ta)
        sb = min(tb, np.pi - tb)
        worst = max(worst, max(sa, sb))
    return worst


# mesh files: a tiny self-describing text format, plus OBJ export

def write_mesh_text(mesh: Mesh, path: str) -> None:
    """Write the documented text format (meta/v/t/f lines, 0-based faces)."""
    with open(path, "w") as fh:
        fh.write("# klein-forge mesh\n")
        if mesh.spec is not None:
            s = mesh.spec
            fh.write(f"meta n {s.n}\n")
            fh.write(f"meta target {s.target}\n")
            fh.write(f"meta res_theta {s.res_theta}\n")
            fh.write(f"meta res_t {s.res_t}\n")
        fh.write(f"meta dim {mesh.dim}\n")
        fh.write(f"meta weld_error {mesh.weld_error!r}\n")
        for v in mesh.vertices:
            fh.write("v " + " ".join(repr(float(x)) for x in v) + "\n")
        if mesh.t_values is not None:
            for t in mesh.t_values:
                fh.write(f"t {float(t)!r}\n")
        for f in mesh.faces:
            fh.write("f " + " ".join(str(int(i)) for i in f) + "\n")


def read_mesh_text(path: str) -> Mesh:
    meta: dict[str, str] = {}
    verts: list[list[float]] = []
    tvals: list[float] = []
    faces: list[list[int]] = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            kind, _, rest = line.partition(" ")
            if kind == "meta":
                key, _, val = rest.partition(" ")
                meta[key] = val
            elif kind == "v":
                verts.append([float(x) for x in rest.split()])
            elif kind == "t":
                tvals.append(float(rest))
            elif kind == "f":
                faces.append([int(x) for x in rest.split()])
            else:
                raise ValueError(f"unrecognised mesh line: {line!r}")
    if not verts:
        raise ValueError("mesh file has no vertices")
    vertices = np.asarray(verts, dtype=np.float64)
    if tvals and len(tvals) != len(verts):
        raise ValueError("t lines must match v lines one to one")
    spec = None
    if {"n", "target", "res_theta", "res_t"} <= meta.keys():
        spec = MeshSpec(
            int(meta["n"]), meta["target"], int(meta["res_theta"]), int(meta["res_t"])
        )
    return Mesh(
        vertices=vertices,
        faces=np.asarray(faces, dtype=np.int64).reshape(-1, 4),
        t_values=np.asarray(tvals) if tvals else None,
        spec=spec,
        weld_error=float(meta.get("weld_error", "nan")),
    )


def write_obj(mesh: Mesh, path: str, axes: tuple[int, int, int] | None = None) -> None:
    """Export as Wavefront OBJ (quads, 1-based).

    Meshes of dimension > 3 must pick three coordinate axes to project to.
    """
    if mesh.dim == 3 and axes is None:
        axes = (0, 1, 2)
    if axes is None:
        raise ValueError(f"mesh lives in R^{mesh.dim}; pass axes=(i,j,k) to project")
    if len(axes) != 3 or any(a < 0 or a >= mesh.dim for a in axes):
        raise ValueError("axes must be three valid coordinate indices")
    with open(path, "w") as fh:
        fh.write("# klein-forge OBJ export\n")
        for v in mesh.vertices[:, list(axes)]:
            fh.write(f"v {float(v[0])!r} {float(v[1])!r} {float(v[2])!r}\n")
        for f in mesh.faces:
            fh.write("f " + " ".join(str(int(i) + 1) for i in f) + "\n")
