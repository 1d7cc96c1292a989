#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "rigidq/quiver.hpp"

namespace oracle {

// Positive roots as the orbit of the simple roots under simple reflections
// for the symmetrized form, keeping positive vectors.
inline std::vector<rigidq::DimVector> reflection_closure(const rigidq::Quiver& q) {
  const int n = q.vertex_count();
  std::vector<std::vector<int>> c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (const auto& a : q.arrows()) {
    c[a.tail][a.head] -= 1;
    c[a.head][a.tail] -= 1;
  }
  std::set<rigidq::DimVector> seen;
  std::vector<rigidq::DimVector> todo;
  for (int i = 0; i < n; ++i) {
    auto e = rigidq::DimVector::unit(static_cast<std::size_t>(n), static_cast<std::size_t>(i));
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    auto d = todo.back();
    todo.pop_back();
    for (int i = 0; i < n; ++i) {
      std::int64_t p = 0;
      for (int j = 0; j < n; ++j) p += c[i][j] * d[j];
      auto r = d;
      r[i] -= p;
      if (!r.is_nonnegative() || r.is_zero()) continue;
      if (seen.insert(r).second) todo.push_back(r);
    }
  }
  return {seen.begin(), seen.end()};
}

inline rigidq::DimVector random_d(std::mt19937_64& rng, int n, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> u(0, hi);
  rigidq::DimVector d(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) d[k] = u(rng);
  return d;
}

inline rigidq::DimVector random_v(std::mt19937_64& rng, int n, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> u(lo, hi);
  rigidq::DimVector d(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) d[k] = u(rng);
  return d;
}

inline std::vector<std::string> all_orientations(const std::string& family, int rank) {
  std::vector<std::string> out;
  for (const auto& o : rigidq::orientation_strings(rigidq::standard_edges(family[0], rank).size()))
    out.push_back(family + std::to_string(rank) + ":" + o);
  return out;
}

}  // namespace oracle
