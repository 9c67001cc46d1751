#pragma once
#include <array>
#include <ostream>
#include <vector>

#include "helisphere/surface.hpp"

namespace helisphere {

struct Mesh {
  // Row-major grid, vertex (i_s, i_t) at index i_s * n_t + i_t.  Projected
  // meshes fill vertices3, ambient meshes vertices4.
  std::vector<std::array<double, 3>> vertices3;
  std::vector<std::array<double, 4>> vertices4;
  std::vector<std::array<int, 4>> faces;
  std::vector<char> clipped;  // per-vertex: projection pole hit
  int n_s = 0, n_t = 0;
  bool projected = false;
  int n_clipped = 0;
};

// Projection from `pole` onto the hyperplane pole-perp, in an orthonormal
// basis of that hyperplane.
std::array<double, 3> stereographic_project(const std::array<double, 4>& p,
                                            const std::array<double, 4>& pole);

Mesh build_mesh(const HelicoidalSurface& surf, double s0, double s1, double t0,
                double t1, int n_s, int n_t, bool project,
                const std::array<double, 4>& pole = {0.0, 0.0, 0.0, 1.0});

void write_obj(const Mesh& mesh, std::ostream& os);

}  // namespace helisphere
