from .mesh_setup import *


@pytest.mark.parametrize("n,nv,nt,ne,nb", [
    (1, 4, 2, 5, 4),
    (2, 9, 8, 16, 8),
    (4, 25, 32, 56, 16),
])
def test_counts(n, nv, nt, ne, nb):
    m = build_unit_square_mesh(n)
    assert m.num_vertices == nv
    assert m.num_triangles == nt
    assert m.num_edges == ne
    assert np.sum(m.boundary_edge) == nb
    # Euler characteristic of a disk
    assert nv - ne + nt == 1


def test_areas():
    m = build_unit_square_mesh(4)
    assert_allclose(m.areas, np.full(32, 1. / 32), rtol=1e-14)
    assert_allclose(m.h, 0.25)


def test_counter_clockwise():
    m = build_unit_square_mesh(3)
    assert np.all(m.areas > 0)


def test_boundary_vertices():
    m = build_unit_square_mesh(2)
    vb, eb = mesh.boundary_entities(m)
    assert_array_equal(vb, [0, 1, 2, 3, 5, 6, 7, 8])
    assert len(eb) == 8
    x = m.vertices[vb]
    on_side = np.isclose(x, 0.) | np.isclose(x, 1.)
    assert np.all(on_side.any(axis=1))


def test_edge_incidence():
    m = build_unit_square_mesh(3)
    assert np.all((m.edge_tris == 1) == m.boundary_edge)
    assert np.all(m.edge_tris <= 2)
    assert np.all(m.edges[:, 0] < m.edges[:, 1])


def test_local_edges():
    m = build_unit_square_mesh(2)
    for t in range(m.num_triangles):
        for k in range(3):
            e = m.edges[m.tri_edges[t, k]]
            assert m.triangles[t, k] not in e
            assert set(e) <= set(m.triangles[t])


@pytest.mark.parametrize("n", [0, -1, 1.5])
def test_invalid_level(n):
    with pytest.raises(ValueError):
        build_unit_square_mesh(n)
