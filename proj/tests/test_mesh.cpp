// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "dissipax/mesh.hpp"

using namespace dissipax;

TEST_CASE("unit cube combinatorics")
{
  BoxMesh m(1, 1, 1, 1.0, 1.0, 1.0);
  CHECK(m.n_edges() == 12);
  CHECK(m.n_vertices() == 8);
  CHECK(m.n_cells() == 1);
  CHECK(m.n_interior_vertices() == 0);
  CHECK(m.boundary_edges().size() == 12);
}

TEST_CASE("edge counts follow the closed-form formula")
{
  // nx(ny+1)(nz+1) + ny(nx+1)(nz+1) + nz(nx+1)(ny+1)
  BoxMesh m2(2, 1, 1, 2.0, 1.0, 1.0);
  CHECK(m2.n_edges() == 20);

  BoxMesh m8(8, 8, 8, 3.14, 3.14, 3.14);
  CHECK(m8.n_edges() == 1944);
  CHECK(m8.n_edges() == 3 * 8 * 9 * 9);
}

TEST_CASE("boundary faces flag boundary edges")
{
  BoxMesh m(3, 2, 2, 1.0, 1.0, 1.0);
  for (const auto &bf : m.boundary_faces())
    for (int e : bf.edges)
      CHECK(m.edge_on_boundary(e));
  // 2*(3*2 + 3*2 + 2*2) faces
  CHECK(m.boundary_faces().size() == 2u * (6 + 6 + 4));
}

TEST_CASE("discrete curl of discrete gradient is exactly zero")
{
  for (auto dims : {std::array<int, 3>{1, 1, 1}, {2, 2, 2}, {3, 2, 4}})
  {
    BoxMesh m(dims[0], dims[1], dims[2], 1.0, 2.0, 0.7);
    const SpMatD c = m.curl_incidence();
    const SpMatD g = m.full_gradient_incidence();
    const SpMatD cg = SpMatD(c * g);
    double max_abs = 0.0;
    for (int k = 0; k < cg.outerSize(); ++k)
      for (SpMatD::InnerIterator it(cg, k); it; ++it)
        max_abs = std::max(max_abs, std::abs(it.value()));
    // integer incidence entries cancel exactly
    CHECK(max_abs == 0.0);
  }
}

TEST_CASE("edge orientation and cell-edge map are consistent")
{
  BoxMesh m(2, 2, 2, 1.0, 1.0, 1.0);
  const auto edges = m.cell_edges(0, 0, 0);
  for (int le = 0; le < 12; ++le)
  {
    const auto vs = m.edge_vertices(edges[le]);
    CHECK(vs[0] != vs[1]);
  }
  // x-edge at (0,0,0) runs from vertex (0,0,0) to (1,0,0)
  const auto vs = m.edge_vertices(m.edge_id(0, 0, 0, 0));
  CHECK(vs[0] == m.vertex_id(0, 0, 0));
  CHECK(vs[1] == m.vertex_id(1, 0, 0));
}

TEST_CASE("mesh validation errors")
{
  CHECK_THROWS_AS(BoxMesh(0, 1, 1, 1.0, 1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(BoxMesh(1, 1, 1, -1.0, 1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(BoxMesh(2000, 2000, 2000, 1.0, 1.0, 1.0), ValidationError);
}
