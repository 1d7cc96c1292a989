#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rigidq/quiver.hpp"

namespace rigidq {

// All positive roots of a Dynkin quiver, i.e. the non-negative nonzero
// integer vectors with <a,a> = 1, in lexicographic order.
class RootSystem {
 public:
  enum class Method { box_scan, closure };

  explicit RootSystem(const Quiver& q, Method method = Method::box_scan);

  const Quiver& quiver() const { return quiver_; }
  std::size_t size() const { return roots_.size(); }
  const DimVector& operator[](std::size_t k) const { return roots_[k]; }
  std::span<const DimVector> roots() const { return roots_; }
  auto begin() const { return roots_.begin(); }
  auto end() const { return roots_.end(); }

  std::optional<std::size_t> index_of(const DimVector& a) const;
  bool contains(const DimVector& a) const { return index_of(a).has_value(); }
  // Throws InvalidInput if `a` is not a positive root.
  std::size_t require(const DimVector& a) const;

 private:
  Quiver quiver_;
  std::vector<DimVector> roots_;
};

inline RootSystem positive_roots(const Quiver& q) { return RootSystem(q); }

// Closes the simple roots under "a -> a + e_i whenever that is again a root",
// component by component. Lexicographic order.
std::vector<DimVector> roots_by_closure(const Quiver& q);
// Scans every vector in the componentwise box of the closure roots and keeps
// those with <a,a> = 1. Lexicographic order.
std::vector<DimVector> roots_by_box_scan(const Quiver& q);

// n(n+1)/2, n^2-n, 36, 63, 120.
std::size_t expected_root_count(const DynkinType& t);

// dim Hom(U_b, U_a) = [<b,a>]_+ for positive roots b, a.
std::int64_t hom_dim(const RootSystem& roots, const DimVector& beta, const DimVector& alpha);
// dim Ext^1(U_b, U_a) = hom_dim(b,a) - <b,a>.
std::int64_t ext_dim(const RootSystem& roots, const DimVector& beta, const DimVector& alpha);

// Integer matrix of the inverse Auslander-Reiten translate on dimension
// vectors, characterized by <M d, e> = -<e, d>. Equals -E^{-T} E.
class CoxeterMap {
 public:
  CoxeterMap() = default;
  CoxeterMap(int n, std::vector<std::int64_t> entries) : n_(n), m_(std::move(entries)) {}

  int size() const { return n_; }
  std::int64_t operator()(int i, int j) const { return m_[static_cast<std::size_t>(i * n_ + j)]; }
  DimVector apply(const DimVector& d) const;

 private:
  int n_ = 0;
  std::vector<std::int64_t> m_;
};

CoxeterMap coxeter_inverse(const Quiver& q);

// E^{-1} = I + A + A^2 + ... for the adjacency matrix A of the (acyclic)
// quiver; entry (i,j) counts paths i -> j.
std::vector<std::int64_t> euler_inverse(const Quiver& q);

}  // namespace rigidq
