#pragma once

// Type A quivers with the natural path labeling: vertices 1..n, one arrow
// between k and k+1 for each k. All vertex indices in this header are
// 1-based, matching the interval notation a_ij.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rigidq/linalg.hpp"
#include "rigidq/rigid.hpp"

namespace rigidq::typea {

// a_ij: entries 1 exactly on [i, j].
struct IntervalRoot {
  int i = 1;
  int j = 1;
  DimVector vector(int n) const;
  // Throws InvalidInput unless `a` is a 0/1 vector with contiguous support.
  static IntervalRoot from_vector(const DimVector& a);
  friend bool operator==(const IntervalRoot&, const IntervalRoot&) = default;
};

// rightward[k-1] is true iff the edge k -- k+1 is oriented k -> k+1.
// Throws InvalidInput if q is not a connected type A quiver in path labeling.
std::vector<bool> orientation_of(const Quiver& q);

// ">><" style orientation string (see parse_quiver), n = size + 1.
Quiver path_quiver(std::string_view orientation);
// 1 -> 2 -> ... -> s <- ... <- n.
Quiver single_sink_quiver(int n, int s);

// Sub/quotient dimension vectors of U_ij as indicator vectors of the
// nonempty subsets of [i, j] closed under successors / predecessors.
std::vector<DimVector> successor_closed(const Quiver& q, IntervalRoot root);
std::vector<DimVector> predecessor_closed(const Quiver& q, IntervalRoot root);

// Rigid multiplicities on 1 -> 2 -> ... -> n:
// m(a_ij) = [min{d_k - d_{i-1}, d_k - d_{j+1} : i <= k <= j}]_+, d_0 = d_{n+1} = 0.
MultiplicityFunction equioriented_multiplicities(int n, const DimVector& d);

// Rigid multiplicities of any type A quiver, evaluating the min-formula over
// successor/predecessor-closed subsets instead of general box scans.
MultiplicityFunction interval_multiplicities(const Quiver& q, const DimVector& d);
std::int64_t interval_multiplicity(const Quiver& q, const DimVector& d, IntervalRoot root);

enum class SinkMode { verbatim, corrected };

// Case split of the four-branch closed form for the single-sink quiver.
enum class SinkBranch { straddle, one_side, ends_at_sink, starts_at_sink };
const char* branch_name(SinkBranch b);
// First matching branch in the order straddle (i<s<j), one_side (j<s or
// i>s), ends_at_sink (j=s), starts_at_sink (i=s).
SinkBranch branch_of(int s, IntervalRoot root);

// verbatim: the four printed branches exactly as stated; corrected: the
// min-formula over interval sub/quotients (authoritative).
std::int64_t single_sink_multiplicity(int n, int s, const DimVector& d, IntervalRoot root,
                                      SinkMode mode = SinkMode::corrected);
MultiplicityFunction single_sink_multiplicities(int n, int s, const DimVector& d,
                                                SinkMode mode = SinkMode::corrected);

struct Discrepancy {
  int n = 0;
  int s = 0;
  DimVector d;
  IntervalRoot root;
  SinkBranch branch = SinkBranch::straddle;
  std::int64_t verbatim = 0;
  std::int64_t corrected = 0;
};

// Every (i, j) where the two modes disagree.
std::vector<Discrepancy> single_sink_discrepancies(int n, int s, const DimVector& d);

// Paths are vertex sequences in arrow direction, ending at the sink; empty
// when the path does not exist (boundary sinks outside [i, j] have only one).
struct SinkPaths {
  int sink = 0;
  std::vector<int> w;  // longest path in Q(i, k) ending in k
  std::vector<int> u;  // longest path in Q(k, j) ending in k
};

struct IntervalData {
  IntervalRoot root;
  std::vector<int> sinks;    // sinks of Q(i-1, j+1) other than i, j; ascending
  std::vector<int> sources;  // sources of Q(i, j); ascending
  std::vector<SinkPaths> paths;  // parallel to `sinks`
  // Arrows i -> i-1 and j -> j+1 leaving the interval.
  int outward_arrows = 0;
};

class SinkSourceData {
 public:
  explicit SinkSourceData(const Quiver& q);
  int n() const { return n_; }
  const IntervalData& at(int i, int j) const;

 private:
  int n_ = 0;
  std::vector<IntervalData> data_;  // row-major over (i, j), i <= j
};

inline SinkSourceData sink_source_data(const Quiver& q) { return SinkSourceData(q); }

// Direct sum of interval representations U_ij with identity maps along
// interior arrows; m must be supported on interval roots.
Representation build_rigid_rep(const Quiver& q, const MultiplicityFunction& m, const FieldConfig& field);

// Block matrix A_ij(V): block row per sink k, +V_w in the column block of
// the source starting w, -V_u in the column block of the source starting u.
Matrix rank_matrix(const Representation& v, const IntervalData& data);

// r(i, j) for 1 <= i <= j <= n.
class RankTuple {
 public:
  explicit RankTuple(int n) : n_(n), r_(static_cast<std::size_t>(n * n), 0) {}
  int n() const { return n_; }
  std::int64_t& at(int i, int j) { return r_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))]; }
  std::int64_t at(int i, int j) const { return r_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))]; }
  friend bool operator==(const RankTuple&, const RankTuple&) = default;

 private:
  int n_;
  std::vector<std::int64_t> r_;
};

// r(i, j) = rank A_ij(V) for every interval, including i = j.
RankTuple rank_tuple_of(const Representation& v);
RankTuple rank_tuple_of(const Representation& v, const SinkSourceData& data);

// Target ranks sum_{l in Q^so(i,j)} d_l - hom(a_ij, d).
RankTuple target_rank_tuple(const RigidEngine& engine, const DimVector& d);

// Rank of the composite map along [i, j] when [i, j] is a directed path
// (either way) or has a single interior sink s (rank of V_i + V_j -> V_s);
// r(i, i) = d_i. nullopt for other shapes.
std::optional<std::int64_t> composite_rank(const Representation& v, int i, int j);

struct RankCheck {
  int i = 0;
  int j = 0;
  std::int64_t actual = 0;
  std::int64_t target = 0;
};

struct RankCriterionReport {
  std::vector<RankCheck> checks;    // all (i, j)
  std::vector<RankCheck> failures;  // actual != target
  bool ok() const { return failures.empty(); }
};

// V is isomorphic to the rigid representation iff every r(i, j) matches its
// target.
RankCriterionReport verify_rank_criterion(const Representation& v, const DimVector& d, const RigidEngine& engine);

}  // namespace rigidq::typea
