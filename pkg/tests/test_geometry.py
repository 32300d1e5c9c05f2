"""Immersion/embedding geometry: frame identities, meshes, collision scans.

Frozen scan counts are exact: the pipeline is deterministic float math on a
fixed grid, so a changed count means changed geometry, not noise.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kleinforge import geometry as geo


# ------------------------------------------------------- directrix + frame

def test_directrix_endpoints_and_apex():
    assert np.allclose(geo.directrix(0.0), [0.0, 0.0], atol=1e-15)
    assert np.allclose(geo.directrix(np.pi), [0.0, 0.0], atol=1e-12)
    assert np.allclose(geo.directrix(np.pi / 2), [5.0, 0.0], atol=1e-12)
    assert np.allclose(geo.directrix_velocity(0.0), [5.0, 0.0], atol=1e-15)


def test_directrix_velocity_matches_finite_differences():
    t = np.linspace(1e-4, np.pi - 1e-4, 1001)
    h = 1e-7
    fd = (geo.directrix(t + h) - geo.directrix(t - h)) / (2 * h)
    assert np.max(np.abs(fd - geo.directrix_velocity(t))) < 1e-5


def test_normal_frame():
    t = np.linspace(0, np.pi, 641)
    J = geo.directrix_normal(t)
    assert np.allclose(np.linalg.norm(J, axis=-1), 1.0, atol=1e-12)
    V = geo.directrix_velocity(t)
    assert np.max(np.abs(np.sum(J * V, axis=-1))) < 1e-9
    # frame flips across the seam: J(pi) = -J(0)
    assert np.allclose(geo.directrix_normal(np.pi), -geo.directrix_normal(0.0), atol=1e-12)
    assert np.allclose(geo.directrix_normal(0.0), [0.0, 1.0], atol=1e-15)


def test_tube_radius_band():
    for n in (2, 3, 4, 6):
        t = np.linspace(0, np.pi, 2001)
        r = geo.tube_radius(n, t)
        band = np.pi**2 * geo.wave_amplitude(n) / 4
        assert np.all(np.abs(r - 0.5) <= band + 1e-12)
        assert abs(geo.tube_radius(n, 0.0) - 0.5) < 1e-15
        assert abs(geo.tube_radius(n, np.pi / 2) - 0.5) < 1e-12


def test_base_unit_values():
    assert geo.base_unit(2) == pytest.approx(1 / 3)
    assert geo.base_unit(3) == pytest.approx(1 / 11)
    assert geo.base_unit(4) == pytest.approx(1 / 27)


# -------------------------------------------------------------- tube stack

def test_nested_radii_shrink_and_stay_in_band():
    for n in (3, 4, 5):
        unit = geo.base_unit(n)
        for t in (0.0, 0.3, np.pi / 2, np.pi):
            radii = geo.nested_torus_radii(n, t)
            assert len(radii) == n - 1
            for i, r in enumerate(radii[:-1]):
                assert r == pytest.approx(2.0 ** (n - 1 - i) * unit)
            assert unit - 1e-12 <= radii[-1] <= 2 * unit + 1e-12
            geo.validate_nesting(radii)
            assert geo.nesting_margin(radii) > 0


def test_nesting_margin_flags_overlap():
    assert geo.nesting_margin([1.0, 0.5]) == pytest.approx(0.5)
    assert geo.nesting_margin([1.0, 1.0]) == pytest.approx(0.0)
    with pytest.raises(ValueError):
        geo.validate_nesting([1.0, 0.6, 0.5])  # 0.6 + 0.5 > 1.0


def test_torus_point_parity_and_peak():
    rng = np.random.default_rng(5)
    for n in (2, 3, 4):
        radii = [2.0 ** (n - 1 - i) for i in range(1, n)]
        th = rng.uniform(0, 2 * np.pi, size=(200, n - 1))
        x, y = geo.torus_point(radii, th), geo.torus_point(radii, -th)
        assert np.max(np.abs(x[..., 0] - y[..., 0])) < 1e-12
        assert np.max(np.abs(x[..., 1:] + y[..., 1:])) < 1e-12
        peak = geo.torus_point(radii, np.zeros(n - 1))
        assert peak[0] == pytest.approx(sum(radii))
        assert np.max(np.abs(peak[1:])) < 1e-15
        assert np.max(np.linalg.norm(x, axis=-1)) <= sum(radii) + 1e-9


def test_family_max_spread():
    # the union of fibres over one period reaches between (2^n-3)u and
    # (2^n-2)u; the wave (2t-pi)sqrt(t(pi-t)) peaks at t = pi/2 +- pi/(2 sqrt 2)
    t_lo = np.pi / 2 + np.pi / (2 * np.sqrt(2.0))
    t_hi = np.pi / 2 - np.pi / (2 * np.sqrt(2.0))
    for n in (2, 3, 4):
        unit = geo.base_unit(n)
        assert sum(geo.nested_torus_radii(n, t_lo)) == pytest.approx(
            (2**n - 3) * unit, abs=1e-9
        )
        assert sum(geo.nested_torus_radii(n, t_hi)) == pytest.approx(
            (2**n - 2) * unit, abs=1e-9
        )
        tgrid = np.linspace(0, np.pi, 2001)
        tops = np.array([sum(geo.nested_torus_radii(n, t)) for t in tgrid])
        assert np.all(tops >= (2**n - 3) * unit - 1e-9)
        assert np.all(tops <= (2**n - 2) * unit + 1e-9)


# ------------------------------------------------------------ the two maps

@given(
    st.integers(2, 4),
    st.lists(st.floats(0, 2 * math.pi), min_size=3, max_size=3),
)
@settings(max_examples=200)
def test_weld_identity(n, angles):
    th = np.array(angles[: n - 1])
    a = geo.immersion_point(n, th, 0.0)
    b = geo.immersion_point(n, -th, np.pi)
    assert np.max(np.abs(a + b)) < 1e-9


def test_weld_identity_dense():
    rng = np.random.default_rng(11)
    for n in (2, 3, 4):
        th = rng.uniform(0, 2 * np.pi, size=(10_000, n - 1))
        gap = np.abs(
            geo.immersion_point(n, th, 0.0) + geo.immersion_point(n, -th, np.pi)
        ).max()
        assert gap < 1e-9


def test_embedding_extends_immersion():
    rng = np.random.default_rng(3)
    for n in (2, 3):
        th = rng.uniform(0, 2 * np.pi, size=(50, n - 1))
        t = rng.uniform(0, np.pi, size=(50, 1))
        imm = geo.immersion_point(n, th, t[..., 0])
        emb = geo.embedding_point(n, th, t[..., 0])
        assert emb.shape[-1] == imm.shape[-1] + 1
        assert np.allclose(emb[..., :-1], imm)
        assert np.allclose(emb[..., -1], np.sin(2 * t[..., 0]))


def test_embedding_separator_values():
    # sin(2t) tells apart the two passes through the shared plane region
    for t, want in ((0.0, 0.0), (np.pi / 4, 1.0), (3 * np.pi / 4, -1.0), (np.pi, 0.0)):
        v = geo.embedding_point(2, np.zeros(1), t)
        assert v[-1] == pytest.approx(want, abs=1e-12)


# ------------------------------------------------------------------ meshes

def test_mesh_spec_validation():
    with pytest.raises(ValueError):
        geo.MeshSpec(2, "immersion", 7, 10)  # odd theta grid cannot weld
    with pytest.raises(ValueError):
        geo.MeshSpec(2, "immersion", 8, 2)
    with pytest.raises(ValueError):
        geo.MeshSpec(2, "projection", 8, 8)
    spec = geo.MeshSpec(3, "embedding", 8, 8)
    assert spec.dim == 5


def test_grid_weld_involution():
    for A in (4, 8, 48):
        for i in range(A):
            j = geo.grid_weld_index(i, A)
            assert 0 <= j < A
            assert geo.grid_weld_index(j, A) == i


def test_build_mesh_n2_shape():
    mesh = geo.build_mesh(geo.MeshSpec(2, "immersion", 200, 400))
    assert mesh.num_vertices == 200 * 399
    assert mesh.num_faces == 200 * 399
    assert mesh.weld_error < 1e-12
    assert mesh.dim == 3
    # closed surface glued from a cylinder: chi = 0
    assert geo.euler_characteristic(mesh) == 0


def test_build_mesh_n3_closed():
    mesh = geo.build_mesh(geo.MeshSpec(3, "immersion", 12, 10))
    V = 12 * 12 * 9
    assert mesh.num_vertices == V
    assert mesh.weld_error < 1e-12
    # closed cubical 3-grid: 3 edges, 3 quads and 1 cube per vertex, so the
    # quad skeleton gives V - E + F = V and the full alternating sum is 0
    edges = geo.mesh_edges(mesh.faces)
    assert len(edges) == 3 * V
    assert mesh.num_faces == 3 * V
    assert geo.euler_characteristic(mesh) == V
    assert V - len(edges) + mesh.num_faces - V == 0


def test_faces_index_valid_vertices():
    mesh = geo.build_mesh(geo.MeshSpec(2, "embedding", 16, 12))
    assert mesh.faces.min() >= 0
    assert mesh.faces.max() < mesh.num_vertices
    assert mesh.vertices.shape == (mesh.num_vertices, 4)


# ------------------------------------------------------------------- scans

def test_immersion_scan_frozen_counts():
    mesh = geo.build_mesh(geo.MeshSpec(2, "immersion", 200, 400))
    result = geo.self_intersection_scan(mesh, 1e-2)
    assert result.num_pairs == 73
    reach = geo.seam_confinement_radius(result)
    assert reach == pytest.approx(0.5747, abs=2e-3)
    assert reach < 0.4 * np.pi


def test_embedding_scan_clean():
    mesh = geo.build_mesh(geo.MeshSpec(2, "embedding", 200, 400))
    result = geo.self_intersection_scan(mesh, 1e-2)
    assert result.num_pairs == 0
    assert geo.seam_confinement_radius(result) is None


def test_scan_excludes_quad_neighbours():
    # at a huge radius everything is close; survivors must share no quad
    # and no common quad-neighbour
    mesh = geo.build_mesh(geo.MeshSpec(2, "immersion", 8, 6))
    result = geo.self_intersection_scan(mesh, 10.0)
    assert result.num_pairs > 0
    near = {}
    for quad in mesh.faces:
        for a in quad:
            near.setdefault(int(a), {int(a)}).update(int(b) for b in quad)
    for i, j in result.pairs:
        assert not near[int(i)] & near[int(j)], (i, j)


def test_scan_matches_kdtree_oracle():
    from scipy.spatial import cKDTree

    mesh = geo.build_mesh(geo.MeshSpec(2, "immersion", 36, 40))
    radius = 0.15
    result = geo.self_intersection_scan(mesh, radius)
    tree = cKDTree(mesh.vertices)
    candidates = tree.query_pairs(radius, output_type="set")
    near = {}
    for quad in mesh.faces:
        for a in quad:
            near.setdefault(int(a), {int(a)}).update(int(b) for b in quad)
    expected = {
        (min(i, j), max(i, j))
        for i, j in candidates
        if not near[i] & near[j]
    }
    got = {(int(i), int(j)) for i, j in result.pairs}
    assert got == expected


def test_scan_distances_below_radius():
    mesh = geo.build_mesh(geo.MeshSpec(2, "immersion", 200, 400))
    result = geo.self_intersection_scan(mesh, 1e-2)
    assert result.num_pairs > 0
    assert all(d <= 1e-2 for d in result.distances)
    P = mesh.vertices
    for (i, j), d in zip(result.pairs, result.distances):
        assert np.linalg.norm(P[i] - P[j]) == pytest.approx(d, rel=1e-12)


def test_scan_rejects_bad_radius():
    mesh = geo.build_mesh(geo.MeshSpec(2, "immersion", 8, 6))
    with pytest.raises(ValueError):
        geo.self_intersection_scan(mesh, 0.0)


# ------------------------------------------------------------------- files

def test_mesh_text_round_trip(tmp_path):
    mesh = geo.build_mesh(geo.MeshSpec(3, "embedding", 8, 6))
    path = tmp_path / "mesh.txt"
    geo.write_mesh_text(mesh, str(path))
    back = geo.read_mesh_text(str(path))
    assert np.array_equal(back.vertices, mesh.vertices)  # repr round-trip is exact
    assert np.array_equal(back.faces, mesh.faces)
    assert np.array_equal(back.t_values, mesh.t_values)
    assert back.spec == mesh.spec
    assert back.weld_error == mesh.weld_error


def test_obj_export_3d(tmp_path):
    mesh = geo.build_mesh(geo.MeshSpec(2, "immersion", 8, 6))
    path = tmp_path / "mesh.obj"
    geo.write_obj(mesh, str(path))
    lines = path.read_text().splitlines()
    vs = [l for l in lines if l.startswith("v ")]
    fs = [l for l in lines if l.startswith("f ")]
    assert len(vs) == mesh.num_vertices
    assert len(fs) == mesh.num_faces
    first = np.array([float(x) for x in vs[0].split()[1:]])
    assert np.allclose(first, mesh.vertices[0])
    # OBJ faces are 1-based
    assert min(int(i) for l in fs for i in l.split()[1:]) == 1


def test_obj_export_needs_axes_beyond_3d(tmp_path):
    mesh = geo.build_mesh(geo.MeshSpec(3, "immersion", 8, 6))
    with pytest.raises(ValueError):
        geo.write_obj(mesh, str(tmp_path / "x.obj"))
    geo.write_obj(mesh, str(tmp_path / "x.obj"), axes=(0, 1, 3))
    lines = (tmp_path / "x.obj").read_text().splitlines()
    first = next(l for l in lines if l.startswith("v "))
    want = mesh.vertices[0][[0, 1, 3]]
    assert np.allclose([float(x) for x in first.split()[1:]], want)
