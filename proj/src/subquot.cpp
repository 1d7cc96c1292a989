#include "rigidq/subquot.hpp"

#include <algorithm>

#include "rigidq/checked.hpp"
#include "rigidq/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rigidq {

namespace {

// Linear constraints coeffs[b] . e <= bound[b], one per positive root in the
// component of alpha. Root and Euler entries are tiny (|entries| <= 6, row
// sums bounded by the vertex degree), so plain 64-bit products cannot
// overflow here.
struct Constraints {
  std::vector<DimVector> coeffs;
  std::vector<std::int64_t> bound;

  bool admits(const DimVector& e) const {
    for (std::size_t b = 0; b < coeffs.size(); ++b) {
      std::int64_t s = 0;
      const auto& c = coeffs[b];
      for (std::size_t i = 0; i < e.size(); ++i) s += c[i] * e[i];
      if (s > bound[b]) return false;
    }
    return true;
  }
};

enum class Side { sub, quot };

Constraints constraints_for(const RootSystem& roots, const DimVector& alpha, Side side) {
  const auto& q = roots.quiver();
  const auto& euler = q.euler();
  std::size_t first = 0;
  while (alpha[first] == 0) ++first;
  const int comp = q.component_of(static_cast<int>(first));

  Constraints c;
  for (const auto& beta : roots) {
    std::size_t v = 0;
    while (beta[v] == 0) ++v;
    if (q.component_of(static_cast<int>(v)) != comp) continue;
    if (side == Side::sub) {
      c.coeffs.push_back(euler.left(beta));  // <b, ->
      c.bound.push_back(std::max<std::int64_t>(0, euler.pair(beta, alpha)));
    } else {
      c.coeffs.push_back(euler.right(beta));  // <-, b>
      c.bound.push_back(std::max<std::int64_t>(0, euler.pair(alpha, beta)));
    }
  }
  return c;
}

// Maps a linear index in [0, prod(alpha_i + 1)) to a box point; the last
// coordinate varies fastest so increasing index is lexicographic order.
DimVector decode(std::uint64_t index, const DimVector& alpha) {
  DimVector e(alpha.size());
  for (std::size_t k = alpha.size(); k-- > 0;) {
    const auto radix = static_cast<std::uint64_t>(alpha[k] + 1);
    e[k] = static_cast<std::int64_t>(index % radix);
    index /= radix;
  }
  return e;
}

std::vector<DimVector> scan_serial(const DimVector& alpha, const Constraints& c) {
  std::vector<DimVector> out;
  const auto n = alpha.size();
  DimVector e(n);
  while (true) {
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (e[k] < alpha[k]) {
        ++e[k];
        break;
      }
      e[k] = 0;
      if (k == 0) return out;
    }
    if (c.admits(e)) out.push_back(e);
  }
}

std::vector<DimVector> scan_parallel(const DimVector& alpha, const Constraints& c) {
  std::uint64_t total = 1;
  for (auto a : alpha) total *= static_cast<std::uint64_t>(a + 1);
  const auto count = static_cast<std::int64_t>(total);

  std::vector<std::vector<DimVector>> chunks(static_cast<std::size_t>(max_threads()));
#pragma omp parallel
  {
    std::vector<DimVector> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t idx = 1; idx < count; ++idx) {
      auto e = decode(static_cast<std::uint64_t>(idx), alpha);
      if (c.admits(e)) local.push_back(std::move(e));
    }
#ifdef _OPENMP
    chunks[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
#else
    chunks[0] = std::move(local);
#endif
  }
  std::vector<DimVector> out;
  for (auto& ch : chunks) std::move(ch.begin(), ch.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DimVector> scan(const RootSystem& roots, const DimVector& alpha, Side side, Exec exec) {
  roots.require(alpha);
  const auto c = constraints_for(roots, alpha, side);
  std::uint64_t box = 1;
  for (auto a : alpha) box *= static_cast<std::uint64_t>(a + 1);
  // Small boxes are not worth a parallel region.
  return exec == Exec::parallel && box >= 4096 ? scan_parallel(alpha, c) : scan_serial(alpha, c);
}

}  // namespace

std::vector<DimVector> sub_dim_vectors(const RootSystem& roots, const DimVector& alpha, Exec exec) {
  return scan(roots, alpha, Side::sub, exec);
}

std::vector<DimVector> quot_dim_vectors(const RootSystem& roots, const DimVector& alpha, Exec exec) {
  return scan(roots, alpha, Side::quot, exec);
}

SubQuotCache::SubQuotCache(std::shared_ptr<const RootSystem> roots)
    : roots_(std::move(roots)), once_(new std::once_flag[roots_->size()]), sets_(roots_->size()) {}

const SubQuotSets& SubQuotCache::at(std::size_t k) const {
  if (k >= sets_.size()) throw InvalidInput("root index out of range");
  std::call_once(once_[k], [&] {
    const auto& alpha = (*roots_)[k];
    sets_[k] = SubQuotSets{alpha, sub_dim_vectors(*roots_, alpha), quot_dim_vectors(*roots_, alpha)};
  });
  return sets_[k];
}

void SubQuotCache::fill_all(Exec exec) const {
  const auto n = static_cast<std::int64_t>(sets_.size());
  if (exec == Exec::serial) {
    for (std::int64_t k = 0; k < n; ++k) at(static_cast<std::size_t>(k));
    return;
  }
  // Large boxes parallelize internally; the outer loop picks up the many
  // small roots.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < n; ++k) at(static_cast<std::size_t>(k));
}

std::int64_t hom_root_to(const SubQuotCache& cache, const DimVector& alpha, const DimVector& d) {
  const auto& q = cache.roots().quiver();
  require_dimension_vector(q, d);
  const auto& sets = cache.at(alpha);
  const auto form = q.euler().right(d);  // <-, d>
  std::int64_t best = 0;
  for (const auto& f : sets.quots) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) s = checked::fma(s, f[i], form[i]);
    best = std::max(best, s);
  }
  return best;
}

std::int64_t hom_root_to(const RootSystem& roots, const DimVector& alpha, const DimVector& d) {
  require_dimension_vector(roots.quiver(), d);
  roots.require(alpha);
  const auto form = roots.quiver().euler().right(d);
  std::int64_t best = 0;
  for (const auto& f : quot_dim_vectors(roots, alpha)) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) s = checked::fma(s, f[i], form[i]);
    best = std::max(best, s);
  }
  return best;
}

}  // namespace rigidq
