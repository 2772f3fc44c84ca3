// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#include "dissipax/mesh.hpp"

#include <limits>

namespace dissipax
{

BoxMesh::BoxMesh(int nx, int ny, int nz, double lx, double ly, double lz)
    : nx_(nx), ny_(ny), nz_(nz), lx_(lx), ly_(ly), lz_(lz)
{
  DX_VERIFY(nx >= 1 && ny >= 1 && nz >= 1, "cell counts must be >= 1");
  DX_VERIFY(lx > 0.0 && ly > 0.0 && lz > 0.0, "box side lengths must be positive");
  const std::int64_t nv64 = static_cast<std::int64_t>(nx + 1) * (ny + 1) * (nz + 1);
  const std::int64_t ne64 = static_cast<std::int64_t>(nx) * (ny + 1) * (nz + 1) +
                            static_cast<std::int64_t>(ny) * (nx + 1) * (nz + 1) +
                            static_cast<std::int64_t>(nz) * (nx + 1) * (ny + 1);
  DX_VERIFY(nv64 < std::numeric_limits<int>::max() &&
                2 * ne64 < std::numeric_limits<int>::max(),
            "mesh DOF count overflows 32-bit indexing");

  hx_ = lx / nx;
  hy_ = ly / ny;
  hz_ = lz / nz;
  n_edges_x_ = nx * (ny + 1) * (nz + 1);
  n_edges_y_ = ny * (nx + 1) * (nz + 1);
  n_edges_z_ = nz * (nx + 1) * (ny + 1);

  // Boundary edge classification: an edge is on the boundary iff one of its
  // transverse lattice coordinates sits on the box surface.
  boundary_edge_.assign(n_edges(), 0);
  for (int k = 0; k <= nz; ++k)
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i < nx; ++i)
        if (j == 0 || j == ny || k == 0 || k == nz)
          boundary_edge_[edge_id(0, i, j, k)] = 1;
  for (int k = 0; k <= nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i <= nx; ++i)
        if (i == 0 || i == nx || k == 0 || k == nz)
          boundary_edge_[edge_id(1, i, j, k)] = 1;
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i <= nx; ++i)
        if (i == 0 || i == nx || j == 0 || j == ny)
          boundary_edge_[edge_id(2, i, j, k)] = 1;
  for (int e = 0; e < n_edges(); ++e)
    if (boundary_edge_[e])
      boundary_edges_.push_back(e);

  for (int k = 1; k < nz; ++k)
    for (int j = 1; j < ny; ++j)
      for (int i = 1; i < nx; ++i)
        interior_vertices_.push_back(vertex_id(i, j, k));

  // Boundary faces, grouped by box side. Local edge order: two edges along
  // the first in-plane axis (at transverse offsets 0 and 1), then two along
  // the second. In-plane axes are ordered cyclically per normal: x-normal
  // faces use (y, z), y-normal (x, z), z-normal (x, y).
  auto add_faces = [&](int normal_axis, bool high) {
    BoxSide side = static_cast<BoxSide>(2 * normal_axis + (high ? 1 : 0));
    if (normal_axis == 0)
    {
      const int i = high ? nx : 0;
      for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
          boundary_faces_.push_back({side,
                                     {edge_id(1, i, j, k), edge_id(1, i, j, k + 1),
                                      edge_id(2, i, j, k), edge_id(2, i, j + 1, k)},
                                     hy_ * hz_,
                                     hy_,
                                     hz_});
    }
    else if (normal_axis == 1)
    {
      const int j = high ? ny : 0;
      for (int k = 0; k < nz; ++k)
        for (int i = 0; i < nx; ++i)
          boundary_faces_.push_back({side,
                                     {edge_id(0, i, j, k), edge_id(0, i, j, k + 1),
                                      edge_id(2, i, j, k), edge_id(2, i + 1, j, k)},
                                     hx_ * hz_,
                                     hx_,
                                     hz_});
    }
    else
    {
      const int k = high ? nz : 0;
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
          boundary_faces_.push_back({side,
                                     {edge_id(0, i, j, k), edge_id(0, i, j + 1, k),
                                      edge_id(1, i, j, k), edge_id(1, i + 1, j, k)},
                                     hx_ * hy_,
                                     hx_,
                                     hy_});
    }
  };
  for (int ax = 0; ax < 3; ++ax)
  {
    add_faces(ax, false);
    add_faces(ax, true);
  }
}

int BoxMesh::n_faces() const
{
  return (nx_ + 1) * ny_ * nz_ + nx_ * (ny_ + 1) * nz_ + nx_ * ny_ * (nz_ + 1);
}

int BoxMesh::edge_id(int axis, int i, int j, int k) const
{
  switch (axis)
  {
    case 0:
      return i + nx_ * (j + (ny_ + 1) * k);
    case 1:
      return n_edges_x_ + i + (nx_ + 1) * (j + ny_ * k);
    default:
      return n_edges_x_ + n_edges_y_ + i + (nx_ + 1) * (j + (ny_ + 1) * k);
  }
}

int BoxMesh::edge_axis(int e) const
{
  if (e < n_edges_x_)
    return 0;
  if (e < n_edges_x_ + n_edges_y_)
    return 1;
  return 2;
}

std::array<int, 2> BoxMesh::edge_vertices(int e) const
{
  if (e < n_edges_x_)
  {
    const int i = e % nx_;
    const int rest = e / nx_;
    const int j = rest % (ny_ + 1);
    const int k = rest / (ny_ + 1);
    return {vertex_id(i, j, k), vertex_id(i + 1, j, k)};
  }
  if (e < n_edges_x_ + n_edges_y_)
  {
    const int le = e - n_edges_x_;
    const int i = le % (nx_ + 1);
    const int rest = le / (nx_ + 1);
    const int j = rest % ny_;
    const int k = rest / ny_;
    return {vertex_id(i, j, k), vertex_id(i, j + 1, k)};
  }
  const int le = e - n_edges_x_ - n_edges_y_;
  const int i = le % (nx_ + 1);
  const int rest = le / (nx_ + 1);
  const int j = rest % (ny_ + 1);
  const int k = rest / (ny_ + 1);
  return {vertex_id(i, j, k), vertex_id(i, j, k + 1)};
}

Eigen::Vector3d BoxMesh::edge_center(int e) const
{
  const auto vs = edge_vertices(e);
  auto coords = [&](int v) {
    const int i = v % (nx_ + 1);
    const int rest = v / (nx_ + 1);
    const int j = rest % (ny_ + 1);
    const int k = rest / (ny_ + 1);
    return Eigen::Vector3d(i * hx_, j * hy_, k * hz_);
  };
  return 0.5 * (coords(vs[0]) + coords(vs[1]));
}

std::array<int, 12> BoxMesh::cell_edges(int ci, int cj, int ck) const
{
  std::array<int, 12> e{};
  for (int c = 0; c < 2; ++c)
    for (int b = 0; b < 2; ++b)
      e[b + 2 * c] = edge_id(0, ci, cj + b, ck + c);
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a)
      e[4 + a + 2 * c] = edge_id(1, ci + a, cj, ck + c);
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 2; ++a)
      e[8 + a + 2 * b] = edge_id(2, ci + a, cj + b, ck);
  return e;
}

int BoxMesh::face_id(int axis, int i, int j, int k) const
{
  const int n_xf = (nx_ + 1) * ny_ * nz_;
  const int n_yf = nx_ * (ny_ + 1) * nz_;
  switch (axis)
  {
    case 0:
      return i + (nx_ + 1) * (j + ny_ * k);
    case 1:
      return n_xf + i + nx_ * (j + (ny_ + 1) * k);
    default:
      return n_xf + n_yf + i + nx_ * (j + ny_ * k);
  }
}

std::array<int, 6> BoxMesh::cell_faces(int ci, int cj, int ck) const
{
  return {face_id(0, ci, cj, ck),     face_id(0, ci + 1, cj, ck),
          face_id(1, ci, cj, ck),     face_id(1, ci, cj + 1, ck),
          face_id(2, ci, cj, ck),     face_id(2, ci, cj, ck + 1)};
}

Eigen::Vector3d BoxMesh::cell_center(int ci, int cj, int ck) const
{
  return {(ci + 0.5) * hx_, (cj + 0.5) * hy_, (ck + 0.5) * hz_};
}

Eigen::Vector3d BoxMesh::cell_center(int c) const
{
  const int i = c % nx_;
  const int rest = c / nx_;
  return cell_center(i, rest % ny_, rest / ny_);
}

bool BoxMesh::vertex_on_boundary(int v) const
{
  const int i = v % (nx_ + 1);
  const int rest = v / (nx_ + 1);
  const int j = rest % (ny_ + 1);
  const int k = rest / (ny_ + 1);
  return i == 0 || i == nx_ || j == 0 || j == ny_ || k == 0 || k == nz_;
}

SpMatD BoxMesh::curl_incidence() const
{
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(n_faces()) * 4);
  int f = 0;
  // x-normal faces: boundary orientation +y then +z around the +x normal.
  for (int k = 0; k < nz_; ++k)
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i <= nx_; ++i, ++f)
      {
        trip.emplace_back(f, edge_id(1, i, j, k), 1.0);
        trip.emplace_back(f, edge_id(2, i, j + 1, k), 1.0);
        trip.emplace_back(f, edge_id(1, i, j, k + 1), -1.0);
        trip.emplace_back(f, edge_id(2, i, j, k), -1.0);
      }
  // y-normal faces: +z then +x around the +y normal.
  for (int k = 0; k < nz_; ++k)
    for (int j = 0; j <= ny_; ++j)
      for (int i = 0; i < nx_; ++i, ++f)
      {
        trip.emplace_back(f, edge_id(2, i, j, k), 1.0);
        trip.emplace_back(f, edge_id(0, i, j, k + 1), 1.0);
        trip.emplace_back(f, edge_id(2, i + 1, j, k), -1.0);
        trip.emplace_back(f, edge_id(0, i, j, k), -1.0);
      }
  // z-normal faces: +x then +y around the +z normal.
  for (int k = 0; k <= nz_; ++k)
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i, ++f)
      {
        trip.emplace_back(f, edge_id(0, i, j, k), 1.0);
        trip.emplace_back(f, edge_id(1, i + 1, j, k), 1.0);
        trip.emplace_back(f, edge_id(0, i, j + 1, k), -1.0);
        trip.emplace_back(f, edge_id(1, i, j, k), -1.0);
      }
  SpMatD c(n_faces(), n_edges());
  c.setFromTriplets(trip.begin(), trip.end());
  c.makeCompressed();
  return c;
}

SpMatD BoxMesh::full_gradient_incidence() const
{
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(n_edges()) * 2);
  for (int e = 0; e < n_edges(); ++e)
  {
    const auto vs = edge_vertices(e);
    trip.emplace_back(e, vs[0], -1.0);
    trip.emplace_back(e, vs[1], 1.0);
  }
  SpMatD g(n_edges(), n_vertices());
  g.setFromTriplets(trip.begin(), trip.end());
  g.makeCompressed();
  return g;
}

}  // namespace dissipax
