#include "helisphere/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "helisphere/errors.hpp"

namespace helisphere {

namespace {

int thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("HELISPHERE_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v < 256) n = std::min<unsigned>(n, unsigned(v));
  }
  return int(n);
}

}  // namespace

std::array<double, 3> stereographic_project(const std::array<double, 4>& p,
                                            const std::array<double, 4>& pole) {
  double d = p[0] * pole[0] + p[1] * pole[1] + p[2] * pole[2] + p[3] * pole[3];
  if (d >= 1.0 - 1e-9)
    throw PoleError("stereographic_project: point too close to the pole");
  std::array<double, 4> q;
  for (int i = 0; i < 4; ++i) q[i] = (p[i] - d * pole[i]) / (1.0 - d);

  // Orthonormal basis of pole-perp: standard basis vectors skipping the
  // largest pole component, Gram-Schmidt in index order.
  int skip = 0;
  for (int i = 1; i < 4; ++i)
    if (std::abs(pole[i]) > std::abs(pole[skip])) skip = i;
  std::array<std::array<double, 4>, 3> basis;
  int nb = 0;
  for (int i = 0; i < 4; ++i) {
    if (i == skip) continue;
    std::array<double, 4> v{};
    v[i] = 1.0;
    double vp = v[0] * pole[0] + v[1] * pole[1] + v[2] * pole[2] + v[3] * pole[3];
    for (int k = 0; k < 4; ++k) v[k] -= vp * pole[k];
    for (int j = 0; j < nb; ++j) {
      double vb = 0.0;
      for (int k = 0; k < 4; ++k) vb += v[k] * basis[j][k];
      for (int k = 0; k < 4; ++k) v[k] -= vb * basis[j][k];
    }
    double nrm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
    for (int k = 0; k < 4; ++k) v[k] /= nrm;
    basis[nb++] = v;
  }
  std::array<double, 3> out{};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 4; ++k) out[j] += q[k] * basis[j][k];
  return out;
}

Mesh build_mesh(const HelicoidalSurface& surf, double s0, double s1, double t0,
                double t1, int n_s, int n_t, bool project,
                const std::array<double, 4>& pole) {
  if (n_s < 2 || n_t < 2) throw DomainError("build_mesh: need n_s, n_t >= 2");
  Mesh mesh;
  mesh.n_s = n_s;
  mesh.n_t = n_t;
  mesh.projected = project;
  mesh.vertices4.resize(std::size_t(n_s) * n_t);
  if (project) mesh.vertices3.resize(std::size_t(n_s) * n_t);
  mesh.clipped.assign(std::size_t(n_s) * n_t, 0);

  auto fill_rows = [&](int row_lo, int row_hi) {
    for (int i = row_lo; i < row_hi; ++i) {
      double s = s0 + (s1 - s0) * i / double(n_s - 1);
      for (int j = 0; j < n_t; ++j) {
        double t = t0 + (t1 - t0) * j / double(n_t - 1);
        std::size_t idx = std::size_t(i) * n_t + j;
        auto p = immerse(surf, s, t);
        mesh.vertices4[idx] = p;
        if (project) {
          try {
            mesh.vertices3[idx] = stereographic_project(p, pole);
          } catch (const PoleError&) {
            mesh.clipped[idx] = 1;
            mesh.vertices3[idx] = {0.0, 0.0, 0.0};
          }
        }
      }
    }
  };

  int nth = std::min(thread_count(), n_s);
  if (nth <= 1) {
    fill_rows(0, n_s);
  } else {
    std::vector<std::thread> workers;
    for (int k = 0; k < nth; ++k) {
      int lo = n_s * k / nth, hi = n_s * (k + 1) / nth;
      workers.emplace_back(fill_rows, lo, hi);
    }
    for (auto& w : workers) w.join();
  }

  for (char c : mesh.clipped) mesh.n_clipped += c;
  for (int i = 0; i + 1 < n_s; ++i)
    for (int j = 0; j + 1 < n_t; ++j) {
      int a = i * n_t + j;
      std::array<int, 4> f = {a, a + 1, a + n_t + 1, a + n_t};
      bool ok = true;
      for (int v : f) ok = ok && !mesh.clipped[v];
      if (ok) mesh.faces.push_back(f);
    }
  return mesh;
}

void write_obj(const Mesh& mesh, std::ostream& os) {
  char buf[128];
  std::size_t nv = mesh.projected ? mesh.vertices3.size() : mesh.vertices4.size();
  for (std::size_t i = 0; i < nv; ++i) {
    if (mesh.projected) {
      const auto& v = mesh.vertices3[i];
      std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
    } else {
      const auto& v = mesh.vertices4[i];
      std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g %.17g\n", v[0], v[1],
                    v[2], v[3]);
    }
    os << buf;
  }
  for (const auto& f : mesh.faces) {
    std::snprintf(buf, sizeof buf, "f %d %d %d %d\n", f[0] + 1, f[1] + 1,
                  f[2] + 1, f[3] + 1);
    os << buf;
  }
}

}  // namespace helisphere
