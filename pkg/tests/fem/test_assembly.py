from .fem_setup import *


def test_p0_mass():
    P0 = build_space(meshes[1], "P0")
    M = assemble(FormSpec("mass", 1., P0))
    assert_allclose(M.toarray(), np.diag([0.5, 0.5]), atol=atol)
    assert M.symmetric and M.psd


def test_p1_mass_total():
    P1 = build_space(meshes[4], "P1")
    M = assemble(FormSpec("mass", 1., P1)).toarray()
    assert_allclose(M.sum(), 1., rtol=rtol)
    x = meshes[4].vertices[:, 0]
    # integral of x^2 over the unit square
    assert_allclose(x @ M @ x, 1. / 3, rtol=rtol)


def test_p1_dirichlet_stiffness():
    P1 = build_space(meshes[2], "P1", dirichlet=True)
    K = fem.apply_essential_bc(assemble(FormSpec("stiffness", 1., P1)), P1)
    assert_allclose(K.toarray(), [[4.]], atol=atol)


def test_stiffness_kernel():
    P1 = build_space(meshes[4], "P1")
    K = assemble(FormSpec("stiffness", 2., P1)).toarray()
    assert_allclose(K @ np.ones(P1.ndof), np.zeros(P1.ndof), atol=atol)
    x = meshes[4].vertices[:, 0]
    assert_allclose(x @ K @ x, 2., rtol=rtol)


def test_coefficient_scales():
    P1 = build_space(meshes[2], "P1")
    a = assemble(FormSpec("mass", 1., P1)).toarray()
    b = assemble(FormSpec("mass", -3., P1))
    assert_allclose(b.toarray(), -3 * a, atol=atol)
    assert b.symmetric
    assert not b.psd


def test_p2_vector_energy():
    V = build_space(meshes[2], "P2-vector")
    pts = lagrange_nodes(V)
    # u = (x, 0): |grad u|^2 = 1, eps(u) : eps(u) = 1, div u = 1
    u = np.where(V.dof_component == 0, pts[:, 0], 0.)
    K = assemble(FormSpec("stiffness", 1., V)).toarray()
    E = assemble(FormSpec("eps_eps", 1., V)).toarray()
    D = assemble(FormSpec("div_div", 1., V)).toarray()
    assert_allclose(u @ K @ u, 1., rtol=1e-12)
    assert_allclose(u @ E @ u, 1., rtol=1e-12)
    assert_allclose(u @ D @ u, 1., rtol=1e-12)


def test_p2_vector_quadratic_mass():
    V = build_space(meshes[2], "P2-vector")
    pts = lagrange_nodes(V)
    # u = (x^2, y^2) is reproduced exactly, |u|^2 integrates to 2/5
    u = np.where(V.dof_component == 0, pts[:, 0] ** 2, pts[:, 1] ** 2)
    M = assemble(FormSpec("vector_mass", 1., V)).toarray()
    assert_allclose(u @ M @ u, 0.4, rtol=1e-12)


@pytest.mark.parametrize("family", ["P1-vector", "P2-vector"])
def test_rigid_motions(family):
    V = build_space(meshes[2], family)
    pts = lagrange_nodes(V)
    E = assemble(FormSpec("eps_eps", 1., V)).toarray()
    rotation = np.where(V.dof_component == 0, -pts[:, 1], pts[:, 0])
    shift = (V.dof_component == 1).astype(float)
    for r in (rotation, shift):
        assert_allclose(E @ r, np.zeros(V.ndof), atol=1e-12)


def test_rt0_divergence():
    m = meshes[2]
    RT = build_space(m, "RT0")
    P0 = build_space(m, "P0")
    B = assemble(FormSpec("div_coupling", 1., RT, P0)).toarray()
    assert B.shape == (m.num_triangles, m.num_edges)
    nz = B[np.abs(B) > 1e-12]
    assert_allclose(np.abs(nz), 1., rtol=1e-12)
    assert np.all(np.sum(np.abs(B) > 1e-12, axis=1) == 3)
    # the divergence theorem: interior fluxes cancel
    col = B.sum(axis=0)
    assert_allclose(col[~m.boundary_edge], 0., atol=1e-12)
    assert_allclose(np.abs(col[m.boundary_edge]), 1., rtol=1e-12)


def test_rt0_mass():
    RT = build_space(meshes[2], "RT0")
    M = assemble(FormSpec("vector_mass", 1., RT))
    assert M.symmetric
    w = np.linalg.eigvalsh(M.toarray())
    assert w.min() > 0


def test_div_div_agrees_with_coupling():
    m = meshes[2]
    RT = build_space(m, "RT0")
    P0 = build_space(m, "P0")
    B = assemble(FormSpec("div_coupling", 1., RT, P0)).toarray()
    Minv = np.diag(1. / m.areas)
    D = assemble(FormSpec("div_div", 1., RT)).toarray()
    assert_allclose(D, B.T @ Minv @ B, atol=1e-12)


def test_p2_p0_coupling():
    m = meshes[2]
    V = build_space(m, "P2-vector")
    P0 = build_space(m, "P0")
    B = assemble(FormSpec("div_coupling", 1., V, P0))
    pts = lagrange_nodes(V)
    u = np.where(V.dof_component == 0, pts[:, 0], pts[:, 1])
    # div u = 2 on every triangle
    assert_allclose(B.toarray() @ u, 2. * m.areas, rtol=1e-12)
    assert not B.symmetric


def test_form_space_checks():
    m = meshes[1]
    P0 = build_space(m, "P0")
    P1 = build_space(m, "P1")
    RT = build_space(m, "RT0")
    with pytest.raises(IncompatibleSpaces):
        assemble(FormSpec("stiffness", 1., P0))
    with pytest.raises(IncompatibleSpaces):
        assemble(FormSpec("eps_eps", 1., RT))
    with pytest.raises(IncompatibleSpaces):
        assemble(FormSpec("div_coupling", 1., P1, P0))
    with pytest.raises(IncompatibleSpaces):
        assemble(FormSpec("mass", 1., P1, P0))
    with pytest.raises(IncompatibleSpaces):
        assemble(FormSpec("mass", 1., build_space(meshes[2], "P0"), P0))
    with pytest.raises(ValueError):
        assemble(FormSpec("curl_curl", 1., RT))
