#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rigidq/exec.hpp"
#include "rigidq/subquot.hpp"

namespace rigidq {

// Multiplicities of indecomposable summands, keyed by positive root. Only
// nonzero entries are stored; iteration is in lexicographic root order.
class MultiplicityFunction {
 public:
  MultiplicityFunction() = default;
  MultiplicityFunction(std::initializer_list<std::pair<const DimVector, std::int64_t>> xs);

  // Setting 0 removes the entry.
  void set(const DimVector& root, std::int64_t mult);
  void add(const DimVector& root, std::int64_t mult) { set(root, get(root) + mult); }
  std::int64_t get(const DimVector& root) const;

  std::size_t support_size() const { return m_.size(); }
  bool empty() const { return m_.empty(); }
  auto begin() const { return m_.begin(); }
  auto end() const { return m_.end(); }

  // sum m(a) * a; `n` is the vertex count (needed when empty).
  DimVector total(std::size_t n) const;

  // "{(1,0):1, (1,1):1}"
  std::string to_string() const;

  friend bool operator==(const MultiplicityFunction&, const MultiplicityFunction&) = default;

 private:
  std::map<DimVector, std::int64_t> m_;
};

// Test hooks for the verification harness.
struct EvalOptions {
  // Skip the final [.]_+ clamp for the first root (lexicographically) whose
  // unclamped minimum is negative.
  bool fault_skip_clamp = false;
};

// Root system plus memoized sub/quotient sets for one quiver. Cheap to share;
// all methods are const and safe for concurrent use.
class RigidEngine {
 public:
  explicit RigidEngine(const Quiver& q);

  const Quiver& quiver() const { return roots_->quiver(); }
  const RootSystem& roots() const { return *roots_; }
  const SubQuotCache& cache() const { return cache_; }

  // m(a) = [min{<e,d>, <d,e'> : 0 != e ->> a, a ->> e' != 0}]_+ for every
  // positive root a, minimum taken before the clamp.
  MultiplicityFunction rigid_multiplicities(const DimVector& d, Exec exec = Exec::parallel,
                                            EvalOptions opts = {}) const;

  // Unclamped minimum for one root.
  std::int64_t formula_minimum(std::size_t root_index, const DimVector& d) const;

  std::int64_t hom_root_to(const DimVector& alpha, const DimVector& d) const {
    return rigidq::hom_root_to(cache_, alpha, d);
  }

 private:
  std::shared_ptr<const RootSystem> roots_;
  SubQuotCache cache_;
};

MultiplicityFunction rigid_multiplicities(const Quiver& q, const DimVector& d);

struct DecompositionReport {
  bool sum_ok = false;
  bool ext_free = false;
  bool support_bound = false;  // support size <= vertex count
  DimVector sum;
  std::size_t support_size = 0;
  // Ordered pairs (a, b) in the support with Ext^1(U_a, U_b) != 0.
  std::vector<std::pair<DimVector, DimVector>> ext_witnesses;
  // Support entries that are not positive roots or have non-positive
  // multiplicity.
  std::vector<DimVector> invalid_entries;

  bool ok() const { return sum_ok && ext_free && support_bound && invalid_entries.empty(); }
};

DecompositionReport check_decomposition(const RootSystem& roots, const DimVector& d, const MultiplicityFunction& m);

inline constexpr std::int64_t kBruteForceBound = 14;

// Ground truth by exhaustive search: depth-first over roots in lexicographic
// order (multiplicities tried from the largest feasible value down) for all
// m with sum m(a) a = d and Ext-free support. Throws InvalidInput if the
// total dimension exceeds `bound`, InternalError unless exactly one such m
// exists.
MultiplicityFunction brute_force_rigid(const RootSystem& roots, const DimVector& d,
                                       std::int64_t bound = kBruteForceBound);

}  // namespace rigidq
