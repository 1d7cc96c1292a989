#include "rigidq/rigid.hpp"

#include <algorithm>
#include <limits>

#include "rigidq/checked.hpp"
#include "rigidq/error.hpp"

namespace rigidq {

// ------------------------------------------------------- MultiplicityFunction

MultiplicityFunction::MultiplicityFunction(std::initializer_list<std::pair<const DimVector, std::int64_t>> xs) {
  for (const auto& [root, mult] : xs) set(root, mult);
}

void MultiplicityFunction::set(const DimVector& root, std::int64_t mult) {
  if (mult == 0)
    m_.erase(root);
  else
    m_[root] = mult;
}

std::int64_t MultiplicityFunction::get(const DimVector& root) const {
  auto it = m_.find(root);
  return it == m_.end() ? 0 : it->second;
}

DimVector MultiplicityFunction::total(std::size_t n) const {
  DimVector s(n);
  for (const auto& [root, mult] : m_) s += mult * root;
  return s;
}

std::string MultiplicityFunction::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [root, mult] : m_) {
    if (!first) s += ", ";
    first = false;
    s += root.to_string() + ":" + std::to_string(mult);
  }
  return s + "}";
}

// --------------------------------------------------------------- RigidEngine

RigidEngine::RigidEngine(const Quiver& q)
    : roots_(std::make_shared<const RootSystem>(q)), cache_(roots_) {}

namespace {

std::int64_t dot(const DimVector& a, const DimVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked::fma(s, a[i], b[i]);
  return s;
}

// <e,d> = e . (E d) and <d,e'> = (d^T E) . e'.
std::int64_t minimum_over(const SubQuotSets& sets, const DimVector& ed, const DimVector& de) {
  auto best = std::numeric_limits<std::int64_t>::max();
  for (const auto& e : sets.subs) best = std::min(best, dot(e, ed));
  for (const auto& e : sets.quots) best = std::min(best, dot(de, e));
  return best;
}

}  // namespace

std::int64_t RigidEngine::formula_minimum(std::size_t root_index, const DimVector& d) const {
  require_dimension_vector(quiver(), d);
  const auto& euler = quiver().euler();
  return minimum_over(cache_.at(root_index), euler.right(d), euler.left(d));
}

MultiplicityFunction RigidEngine::rigid_multiplicities(const DimVector& d, Exec exec, EvalOptions opts) const {
  require_dimension_vector(quiver(), d);
  const auto& euler = quiver().euler();
  const auto ed = euler.right(d);
  const auto de = euler.left(d);
  const auto count = static_cast<std::int64_t>(roots_->size());
  std::vector<std::int64_t> mins(roots_->size());

  cache_.fill_all(exec);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k)
      mins[static_cast<std::size_t>(k)] = minimum_over(cache_.at(static_cast<std::size_t>(k)), ed, de);
  } else {
    for (std::int64_t k = 0; k < count; ++k)
      mins[static_cast<std::size_t>(k)] = minimum_over(cache_.at(static_cast<std::size_t>(k)), ed, de);
  }

  MultiplicityFunction m;
  bool fault_used = false;
  for (std::size_t k = 0; k < mins.size(); ++k) {
    auto v = mins[k];
    if (v < 0 && opts.fault_skip_clamp && !fault_used) {
      fault_used = true;
    } else {
      v = std::max<std::int64_t>(v, 0);
    }
    m.set((*roots_)[k], v);
  }
  return m;
}

MultiplicityFunction rigid_multiplicities(const Quiver& q, const DimVector& d) {
  return RigidEngine(q).rigid_multiplicities(d);
}

// ------------------------------------------------------------------- checks

DecompositionReport check_decomposition(const RootSystem& roots, const DimVector& d, const MultiplicityFunction& m) {
  const auto& q = roots.quiver();
  require_dimension_vector(q, d);
  const auto n = static_cast<std::size_t>(q.vertex_count());

  DecompositionReport r;
  std::vector<DimVector> support;
  for (const auto& [root, mult] : m) {
    if (root.size() != n || !roots.contains(root) || mult <= 0)
      r.invalid_entries.push_back(root);
    else
      support.push_back(root);
  }
  r.sum = DimVector(n);
  for (const auto& [root, mult] : m)
    if (root.size() == n) r.sum += mult * root;
  r.sum_ok = r.sum == d;
  r.support_size = m.support_size();
  r.support_bound = r.support_size <= n;
  for (const auto& a : support)
    for (const auto& b : support)
      if (ext_dim(roots, a, b) != 0) r.ext_witnesses.emplace_back(a, b);
  r.ext_free = r.ext_witnesses.empty();
  return r;
}

// ------------------------------------------------------------- brute force

namespace {

class BruteForce {
 public:
  BruteForce(const RootSystem& roots, const DimVector& d) : roots_(roots), remaining_(d) {
    const auto k = roots.size(), n = d.size();
    pair_.resize(k * k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) pair_[a * k + b] = roots.quiver().euler().pair(roots[a], roots[b]);
    // covers_[r * n + i]: some root with index >= r has positive entry i.
    covers_.assign((k + 1) * n, false);
    for (std::size_t r = k; r-- > 0;)
      for (std::size_t i = 0; i < n; ++i) covers_[r * n + i] = covers_[(r + 1) * n + i] || roots[r][i] > 0;
    mult_.assign(k, 0);
  }

  std::vector<MultiplicityFunction> run() {
    search(0);
    return std::move(solutions_);
  }

 private:
  bool ext_free_with_chosen(std::size_t r) const {
    const auto k = roots_.size();
    for (auto c : chosen_)
      if (pair_[r * k + c] < 0 || pair_[c * k + r] < 0) return false;  // ext = [-<a,b>]_+
    return true;
  }

  void search(std::size_t r) {
    if (solutions_.size() >= 2) return;
    if (remaining_.is_zero()) {
      MultiplicityFunction m;
      for (auto c : chosen_) m.set(roots_[c], mult_[c]);
      solutions_.push_back(std::move(m));
      return;
    }
    const auto n = remaining_.size();
    if (r == roots_.size()) return;
    for (std::size_t i = 0; i < n; ++i)
      if (remaining_[i] > 0 && !covers_[r * n + i]) return;

    const auto& alpha = roots_[r];
    auto max_mult = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < n; ++i)
      if (alpha[i] > 0) max_mult = std::min(max_mult, remaining_[i] / alpha[i]);

    if (max_mult > 0 && ext_free_with_chosen(r)) {
      chosen_.push_back(r);
      for (auto mlt = max_mult; mlt >= 1; --mlt) {
        mult_[r] = mlt;
        for (std::size_t i = 0; i < n; ++i) remaining_[i] -= mlt * alpha[i];
        search(r + 1);
        for (std::size_t i = 0; i < n; ++i) remaining_[i] += mlt * alpha[i];
      }
      mult_[r] = 0;
      chosen_.pop_back();
    }
    search(r + 1);
  }

  const RootSystem& roots_;
  DimVector remaining_;
  std::vector<std::int64_t> pair_;
  std::vector<bool> covers_;
  std::vector<std::int64_t> mult_;
  std::vector<std::size_t> chosen_;
  std::vector<MultiplicityFunction> solutions_;
};

}  // namespace

MultiplicityFunction brute_force_rigid(const RootSystem& roots, const DimVector& d, std::int64_t bound) {
  require_dimension_vector(roots.quiver(), d);
  if (d.total() > bound)
    throw InvalidInput("total dimension " + std::to_string(d.total()) + " exceeds brute-force bound " +
                       std::to_string(bound));
  auto sols = BruteForce(roots, d).run();
  if (sols.size() != 1)
    throw InternalError("brute force found " + std::string(sols.empty() ? "no" : "several") +
                        " Ext-free decompositions of " + d.to_string());
  return std::move(sols.front());
}

}  // namespace rigidq
