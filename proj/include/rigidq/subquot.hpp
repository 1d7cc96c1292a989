#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "rigidq/exec.hpp"
#include "rigidq/roots.hpp"

namespace rigidq {

// Dimension vectors of general subrepresentations and general quotients of
// an indecomposable U_a. Both sets exclude 0, contain a itself, and are
// sorted lexicographically.
struct SubQuotSets {
  DimVector root;
  std::vector<DimVector> subs;
  std::vector<DimVector> quots;
};

// Nonzero e <= a with [<b,a>]_+ >= <b,e> for every positive root b.
std::vector<DimVector> sub_dim_vectors(const RootSystem& roots, const DimVector& alpha, Exec exec = Exec::parallel);
// Nonzero e <= a with [<a,b>]_+ >= <e,b> for every positive root b.
std::vector<DimVector> quot_dim_vectors(const RootSystem& roots, const DimVector& alpha, Exec exec = Exec::parallel);

// Per-root memo of SubQuotSets for one root system. Entries are filled on
// first use; concurrent readers and concurrent first fills are safe.
class SubQuotCache {
 public:
  explicit SubQuotCache(std::shared_ptr<const RootSystem> roots);
  explicit SubQuotCache(const RootSystem& roots) : SubQuotCache(std::make_shared<const RootSystem>(roots)) {}

  const RootSystem& roots() const { return *roots_; }
  const SubQuotSets& at(std::size_t root_index) const;
  const SubQuotSets& at(const DimVector& alpha) const { return at(roots_->require(alpha)); }
  // Fills every entry (outer loop over roots parallel when requested).
  void fill_all(Exec exec = Exec::parallel) const;

 private:
  std::shared_ptr<const RootSystem> roots_;
  mutable std::unique_ptr<std::once_flag[]> once_;
  mutable std::vector<SubQuotSets> sets_;
};

// Generic hom(a, d) = dim Hom(U_a, V_{d,ri}) = max(0, max{<f,d> : a ->> f != 0}).
std::int64_t hom_root_to(const SubQuotCache& cache, const DimVector& alpha, const DimVector& d);
std::int64_t hom_root_to(const RootSystem& roots, const DimVector& alpha, const DimVector& d);

}  // namespace rigidq
