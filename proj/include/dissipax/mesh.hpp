// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef DISSIPAX_MESH_HPP
#define DISSIPAX_MESH_HPP

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "dissipax/common.hpp"

namespace dissipax
{

/// The six sides of the box, used to address per-face impedance coefficients
/// and to classify boundary faces.
enum class BoxSide : int
{
  xlo = 0,
  xhi = 1,
  ylo = 2,
  yhi = 3,
  zlo = 4,
  zhi = 5
};

/// Axis-aligned hexahedral mesh of the box [0,Lx] x [0,Ly] x [0,Lz].
///
/// Entity enumeration (lexicographic, x fastest):
///  - vertices (i,j,k), i in [0,nx], ...: id = i + (nx+1)*(j + (ny+1)*k)
///  - edges: x-directed family first, then y, then z; each family
///    lexicographic in its lattice coordinates. Orientation is along the
///    positive axis.
///  - cells (i,j,k), i in [0,nx): id = i + nx*(j + ny*k)
///  - faces: x-normal family, then y-normal, then z-normal.
///
/// Edge degrees of freedom use the Whitney convention: the coefficient of an
/// edge e is the line integral of the tangential component along e. The
/// discrete gradient then has entries exactly +-1.
class BoxMesh
{
public:
  BoxMesh(int nx, int ny, int nz, double lx, double ly, double lz);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int nz() const { return nz_; }
  double lx() const { return lx_; }
  double ly() const { return ly_; }
  double lz() const { return lz_; }
  double hx() const { return hx_; }
  double hy() const { return hy_; }
  double hz() const { return hz_; }

  int n_vertices() const { return (nx_ + 1) * (ny_ + 1) * (nz_ + 1); }
  int n_edges() const { return n_edges_x_ + n_edges_y_ + n_edges_z_; }
  int n_cells() const { return nx_ * ny_ * nz_; }
  int n_faces() const;
  int n_interior_vertices() const
  {
    return std::max(0, (nx_ - 1) * (ny_ - 1) * (nz_ - 1));
  }

  int vertex_id(int i, int j, int k) const
  {
    return i + (nx_ + 1) * (j + (ny_ + 1) * k);
  }
  int cell_id(int i, int j, int k) const { return i + nx_ * (j + ny_ * k); }

  /// Edge ids by family; axis 0 = x, 1 = y, 2 = z. For the x family the
  /// lattice coordinates are (i in [0,nx), j in [0,ny], k in [0,nz]).
  int edge_id(int axis, int i, int j, int k) const;
  int edge_axis(int e) const;

  /// Tail and head vertex ids of an edge (oriented along the positive axis).
  std::array<int, 2> edge_vertices(int e) const;

  /// Midpoint of an edge.
  Eigen::Vector3d edge_center(int e) const;

  double edge_length(int e) const
  {
    const int ax = edge_axis(e);
    return ax == 0 ? hx_ : (ax == 1 ? hy_ : hz_);
  }

  /// The 12 edges of a cell in the fixed local order: x-edges m = b + 2c,
  /// y-edges 4 + a + 2c, z-edges 8 + a + 2b, with a, b, c in {0,1} the
  /// local offsets transverse to the edge direction.
  std::array<int, 12> cell_edges(int ci, int cj, int ck) const;

  /// Face ids by normal axis, enumerated x-normal family first, matching the
  /// row order of curl_incidence. Face DOFs are fluxes along the positive
  /// axis direction.
  int face_id(int axis, int i, int j, int k) const;

  /// The 6 faces of a cell in local order x0,x1,y0,y1,z0,z1.
  std::array<int, 6> cell_faces(int ci, int cj, int ck) const;

  Eigen::Vector3d cell_center(int ci, int cj, int ck) const;
  Eigen::Vector3d cell_center(int c) const;

  bool edge_on_boundary(int e) const { return boundary_edge_[e] != 0; }
  bool vertex_on_boundary(int v) const;
  const std::vector<int> &boundary_edges() const { return boundary_edges_; }
  const std::vector<int> &interior_vertices() const { return interior_vertices_; }

  /// Boundary faces as quadruples of edge ids (local order: two edges along
  /// the first in-plane axis, then two along the second) with the box side
  /// they lie on.
  struct BoundaryFace
  {
    BoxSide side;
    std::array<int, 4> edges;
    double area;
    /// in-plane cell sizes (h_u, h_v) matching the local edge order
    double hu, hv;
  };
  const std::vector<BoundaryFace> &boundary_faces() const { return boundary_faces_; }

  /// Face-edge incidence (discrete curl) with entries +-1; rows enumerate all
  /// faces (x-normal, y-normal, z-normal families). Satisfies C * G = 0
  /// exactly in integer arithmetic for the full vertex gradient G.
  SpMatD curl_incidence() const;

  /// Vertex -> edge incidence over all vertices (entries +-1).
  SpMatD full_gradient_incidence() const;

private:
  int nx_, ny_, nz_;
  double lx_, ly_, lz_;
  double hx_, hy_, hz_;
  int n_edges_x_, n_edges_y_, n_edges_z_;
  std::vector<std::uint8_t> boundary_edge_;
  std::vector<int> boundary_edges_;
  std::vector<int> interior_vertices_;
  std::vector<BoundaryFace> boundary_faces_;
};

}  // namespace dissipax

#endif  // DISSIPAX_MESH_HPP
