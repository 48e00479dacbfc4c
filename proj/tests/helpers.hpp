#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <vector>
#include <string>

#include "tiling/fixtures.hpp"
#include "tiling/grope.hpp"
#include "tiling/json_io.hpp"
#include "tiling/trimat.hpp"

namespace testing_util {

// "name" or "name.json" under fixtures/.
inline std::string fixture_path(const std::string &name) {
  bool has_ext = name.size() > 5 && name.compare(name.size() - 5, 5, ".json") == 0;
  return tiling::fixtures::path(has_ext ? name : name + ".json");
}

inline tiling::IncidenceMatrix fixture_matrix(const std::string &name) {
  return tiling::matrix_from_json(tiling::read_json_file(fixture_path(name)));
}

inline tiling::MarkedComplex fixture_complex(const std::string &name) {
  return tiling::marked_from_json(tiling::read_json_file(fixture_path(name)));
}

// Entries drawn with the given weights for -1, 0, +1.
inline tiling::IncidenceMatrix random_matrix(std::mt19937_64 &rng, int m, int n, int wm = 1, int wz = 1,
                                             int wp = 1) {
  std::discrete_distribution<int> pick({double(wm), double(wz), double(wp)});
  tiling::IncidenceMatrix M(m, n);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c)
      M.set_cell(r, c, tiling::tri_from_int(pick(rng) - 1));
  return M;
}

// A 3k-gon with an inner ring and a centre, optionally with one handle, then
// a few stellar subdivisions. Boundary 0..3k-1 in face orientation.
inline tiling::BoundedSurface random_bounded_surface(int k, bool handle, std::mt19937_64 &rng) {
  const int n = 3 * k;
  int nv = 2 * n + 1;
  std::vector<std::array<int, 3>> tris;
  for (int i = 0; i < n; ++i) {
    int a = i, b = (i + 1) % n, a2 = n + i, b2 = n + (i + 1) % n;
    tris.push_back({a, b, b2});
    tris.push_back({a, b2, a2});
    tris.push_back({a2, b2, 2 * n});
  }
  auto stellar = [&](size_t t) {
    auto [a, b, c] = tris[t];
    int v = nv++;
    tris[t] = {a, b, v};
    tris.push_back({b, c, v});
    tris.push_back({c, a, v});
  };
  std::uniform_int_distribution<int> few(0, 3);
  for (int s = few(rng); s > 0; --s)
    stellar(std::uniform_int_distribution<size_t>(0, tris.size() - 1)(rng));
  if (handle) {
    // split two triangles apart so their closed stars cannot touch
    for (int s = 0; s < 6; ++s)
      stellar(std::uniform_int_distribution<size_t>(0, tris.size() - 1)(rng));
    std::set<std::pair<int, int>> adj;
    for (const auto &t : tris)
      for (int e = 0; e < 3; ++e) {
        adj.insert({t[e], t[(e + 1) % 3]});
        adj.insert({t[(e + 1) % 3], t[e]});
      }
    auto touches = [&](const std::array<int, 3> &x, const std::array<int, 3> &y) {
      for (int p : x)
        for (int q : y)
          if (p == q || adj.count({p, q}))
            return true;
      return false;
    };
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < tris.size(); ++i)
      for (size_t j = i + 1; j < tris.size(); ++j)
        if (!touches(tris[i], tris[j]))
          pairs.push_back({i, j});
    if (!pairs.empty()) {
      auto [i, j] = pairs[std::uniform_int_distribution<size_t>(0, pairs.size() - 1)(rng)];
      auto A = tris[i], B = tris[j];
      std::array<int, 3> C{B[0], B[2], B[1]}; // B walked backwards
      tris.erase(tris.begin() + static_cast<long>(j));
      tris.erase(tris.begin() + static_cast<long>(i));
      for (int s = 0; s < 3; ++s) {
        int t = (s + 1) % 3;
        tris.push_back({A[s], A[t], C[t]});
        tris.push_back({A[s], C[t], C[s]});
      }
    }
  }
  tiling::BoundedSurface S;
  S.complex = tiling::DeltaComplex::from_triangles(nv, tris);
  for (int i = 0; i < n; ++i)
    S.boundary.push_back(i);
  return S;
}

// Base surface of genus 0..2 with 1..max_gluings surfaces glued in, each
// with a torsion-coprime k drawn from `candidates`. Returns the base alone if
// no candidate is coprime.
inline tiling::Grope random_grope(const tiling::GroupSpec &G, int max_gluings, std::mt19937_64 &rng,
                                  const std::vector<int> &candidates = {2, 3, 5, 7}) {
  int genus = std::uniform_int_distribution<int>(0, 2)(rng);
  int faces = std::uniform_int_distribution<int>(4, 12)(rng);
  tiling::Grope Gr = tiling::grope_base(tiling::random_surface(genus, faces, rng));
  std::vector<int> ks;
  for (int k : candidates)
    if (tiling::torsion_coprime(k, G))
      ks.push_back(k);
  if (ks.empty())
    return Gr;
  int count = std::uniform_int_distribution<int>(1, max_gluings)(rng);
  for (int g = 0; g < count; ++g) {
    int face = std::uniform_int_distribution<int>(0, Gr.complex.face_count() - 1)(rng);
    int k = ks[std::uniform_int_distribution<size_t>(0, ks.size() - 1)(rng)];
    bool handle = std::uniform_int_distribution<int>(0, 2)(rng) == 0;
    int offset = std::uniform_int_distribution<int>(0, 2)(rng);
    Gr = tiling::grope_glue(Gr, face, random_bounded_surface(k, handle, rng), k, G, offset);
  }
  return Gr;
}

} // namespace testing_util
