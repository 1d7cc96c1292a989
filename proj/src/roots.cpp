#include "rigidq/roots.hpp"

#include <algorithm>
#include <set>

#include "rigidq/checked.hpp"
#include "rigidq/error.hpp"

namespace rigidq {

namespace {

DimVector embed(const DimVector& local, std::span<const int> vertices, std::size_t n) {
  DimVector d(n);
  for (std::size_t k = 0; k < vertices.size(); ++k) d[static_cast<std::size_t>(vertices[k])] = local[k];
  return d;
}

// Connected quiver only.
std::vector<DimVector> closure_connected(const Quiver& q) {
  const auto n = static_cast<std::size_t>(q.vertex_count());
  std::set<DimVector> found;
  std::vector<DimVector> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    frontier.push_back(DimVector::unit(n, i));
    found.insert(frontier.back());
  }
  while (!frontier.empty()) {
    auto a = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      auto b = a;
      b[i] += 1;
      if (q.euler().pair(b, b) == 1 && found.insert(b).second) frontier.push_back(std::move(b));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<DimVector> box_scan_connected(const Quiver& q) {
  const auto n = static_cast<std::size_t>(q.vertex_count());
  DimVector bound(n);
  for (const auto& a : closure_connected(q))
    for (std::size_t i = 0; i < n; ++i) bound[i] = std::max(bound[i], a[i]);

  // Odometer over [0, bound]; increments the last coordinate first, which
  // yields lexicographic order.
  std::vector<DimVector> out;
  DimVector cur(n);
  while (true) {
    if (!cur.is_zero() && q.euler().pair(cur, cur) == 1) out.push_back(cur);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (cur[k] < bound[k]) {
        ++cur[k];
        break;
      }
      cur[k] = 0;
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

template <class PerComponent>
std::vector<DimVector> per_component(const Quiver& q, PerComponent&& f) {
  const auto n = static_cast<std::size_t>(q.vertex_count());
  std::vector<DimVector> all;
  for (const auto& comp : q.components()) {
    std::vector<int> verts = comp.vertices;
    std::sort(verts.begin(), verts.end());
    for (const auto& a : f(q.induced(verts))) all.push_back(embed(a, verts, n));
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

std::vector<DimVector> roots_by_closure(const Quiver& q) { return per_component(q, closure_connected); }

std::vector<DimVector> roots_by_box_scan(const Quiver& q) { return per_component(q, box_scan_connected); }

std::size_t expected_root_count(const DynkinType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case 'A':
      return n * (n + 1) / 2;
    case 'D':
      return n * n - n;
    case 'E':
      return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  throw InvalidInput("unknown Dynkin family");
}

RootSystem::RootSystem(const Quiver& q, Method method)
    : quiver_(q), roots_(method == Method::box_scan ? roots_by_box_scan(q) : roots_by_closure(q)) {}

std::optional<std::size_t> RootSystem::index_of(const DimVector& a) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), a);
  if (it == roots_.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - roots_.begin());
}

std::size_t RootSystem::require(const DimVector& a) const {
  if (auto k = index_of(a)) return *k;
  throw InvalidInput(a.to_string() + " is not a positive root");
}

std::int64_t hom_dim(const RootSystem& roots, const DimVector& beta, const DimVector& alpha) {
  roots.require(beta);
  roots.require(alpha);
  return std::max<std::int64_t>(0, roots.quiver().euler().pair(beta, alpha));
}

std::int64_t ext_dim(const RootSystem& roots, const DimVector& beta, const DimVector& alpha) {
  return hom_dim(roots, beta, alpha) - roots.quiver().euler().pair(beta, alpha);
}

std::vector<std::int64_t> euler_inverse(const Quiver& q) {
  const int n = q.vertex_count();
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<std::int64_t> adj(nn, 0), power(nn, 0), sum(nn, 0);
  for (const auto& a : q.arrows()) adj[static_cast<std::size_t>(a.tail * n + a.head)] += 1;
  for (int i = 0; i < n; ++i) power[static_cast<std::size_t>(i * n + i)] = sum[static_cast<std::size_t>(i * n + i)] = 1;
  // A is nilpotent of index <= n.
  for (int step = 1; step < n; ++step) {
    std::vector<std::int64_t> next(nn, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        auto p = power[static_cast<std::size_t>(i * n + k)];
        if (p == 0) continue;
        for (int j = 0; j < n; ++j)
          next[static_cast<std::size_t>(i * n + j)] =
              checked::fma(next[static_cast<std::size_t>(i * n + j)], p, adj[static_cast<std::size_t>(k * n + j)]);
      }
    power = std::move(next);
    for (std::size_t k = 0; k < nn; ++k) sum[k] = checked::add(sum[k], power[k]);
  }
  return sum;
}

CoxeterMap coxeter_inverse(const Quiver& q) {
  const int n = q.vertex_count();
  const auto inv = euler_inverse(q);
  const auto& e = q.euler();
  std::vector<std::int64_t> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < n; ++k) s = checked::fma(s, inv[static_cast<std::size_t>(k * n + i)], e(k, j));
      m[static_cast<std::size_t>(i * n + j)] = -s;
    }
  return CoxeterMap(n, std::move(m));
}

DimVector CoxeterMap::apply(const DimVector& d) const {
  if (d.size() != static_cast<std::size_t>(n_)) throw InvalidInput("Coxeter map argument has wrong length");
  DimVector r(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i] = checked::fma(r[i], (*this)(i, j), d[j]);
  return r;
}

}  // namespace rigidq
