#include "rigidq/typea.hpp"

#include <algorithm>
#include <limits>

#include "rigidq/checked.hpp"
#include "rigidq/error.hpp"

namespace rigidq::typea {

// ------------------------------------------------------------ basic shapes

DimVector IntervalRoot::vector(int n) const {
  if (i < 1 || j > n || i > j) throw InvalidInput("interval [" + std::to_string(i) + "," + std::to_string(j) + "] out of range");
  DimVector a(static_cast<std::size_t>(n));
  for (int k = i; k <= j; ++k) a[static_cast<std::size_t>(k - 1)] = 1;
  return a;
}

IntervalRoot IntervalRoot::from_vector(const DimVector& a) {
  int first = 0, last = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0 && a[k] != 1) throw InvalidInput(a.to_string() + " is not an interval root");
    if (a[k] == 1) {
      if (first == 0) first = static_cast<int>(k) + 1;
      else if (last != static_cast<int>(k)) throw InvalidInput(a.to_string() + " is not an interval root");
      last = static_cast<int>(k) + 1;
    }
  }
  if (first == 0) throw InvalidInput("zero vector is not an interval root");
  return {first, last};
}

std::vector<bool> orientation_of(const Quiver& q) {
  const int n = q.vertex_count();
  if (n < 1 || q.components().size() != 1 || q.components().front().family != 'A')
    throw InvalidInput("not a connected type A quiver");
  std::vector<bool> right(static_cast<std::size_t>(n - 1));
  std::vector<bool> seen(static_cast<std::size_t>(n - 1), false);
  for (const auto& a : q.arrows()) {
    int lo = std::min(a.tail, a.head);
    if (std::abs(a.tail - a.head) != 1) throw InvalidInput("type A quiver is not in path labeling");
    seen[static_cast<std::size_t>(lo)] = true;
    right[static_cast<std::size_t>(lo)] = a.tail < a.head;
  }
  return right;
}

Quiver path_quiver(std::string_view orientation) {
  return parse_quiver("A" + std::to_string(orientation.size() + 1) + ":" + std::string(orientation));
}

Quiver single_sink_quiver(int n, int s) {
  if (s < 1 || s > n) throw InvalidInput("sink position out of range");
  std::string o;
  for (int k = 1; k < n; ++k) o += k < s ? '>' : '<';
  return path_quiver(o);
}

namespace {

bool arrow_between(const std::vector<bool>& right, int from, int to) {
  // 1-based neighbours.
  if (to == from + 1) return right[static_cast<std::size_t>(from - 1)];
  if (to == from - 1) return !right[static_cast<std::size_t>(to - 1)];
  return false;
}

std::vector<DimVector> closed_subsets(const Quiver& q, IntervalRoot root, bool successors) {
  const auto right = orientation_of(q);
  const int n = q.vertex_count();
  const int len = root.j - root.i + 1;
  if (len > 30) throw InvalidInput("interval too long for subset enumeration");
  std::vector<DimVector> out;
  for (std::uint32_t mask = 1; mask < (1u << len); ++mask) {
    auto in = [&](int v) { return v >= root.i && v <= root.j && (mask >> (v - root.i) & 1u); };
    bool closed = true;
    for (int k = root.i; k <= root.j && closed; ++k) {
      if (!in(k)) continue;
      for (int l : {k - 1, k + 1}) {
        if (l < root.i || l > root.j) continue;
        bool edge = successors ? arrow_between(right, k, l) : arrow_between(right, l, k);
        if (edge && !in(l)) closed = false;
      }
    }
    if (!closed) continue;
    DimVector e(static_cast<std::size_t>(n));
    for (int k = root.i; k <= root.j; ++k) e[static_cast<std::size_t>(k - 1)] = in(k) ? 1 : 0;
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t entry(const DimVector& d, int k) {
  return k < 1 || k > static_cast<int>(d.size()) ? 0 : d[static_cast<std::size_t>(k - 1)];
}

}  // namespace

std::vector<DimVector> successor_closed(const Quiver& q, IntervalRoot root) { return closed_subsets(q, root, true); }
std::vector<DimVector> predecessor_closed(const Quiver& q, IntervalRoot root) { return closed_subsets(q, root, false); }

// ------------------------------------------------------------ closed forms

MultiplicityFunction equioriented_multiplicities(int n, const DimVector& d) {
  if (d.size() != static_cast<std::size_t>(n) || !d.is_nonnegative())
    throw InvalidInput("dimension vector must have length n and non-negative entries");
  MultiplicityFunction m;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      auto best = std::numeric_limits<std::int64_t>::max();
      for (int k = i; k <= j; ++k)
        best = std::min({best, entry(d, k) - entry(d, i - 1), entry(d, k) - entry(d, j + 1)});
      m.set(IntervalRoot{i, j}.vector(n), std::max<std::int64_t>(best, 0));
    }
  return m;
}

std::int64_t interval_multiplicity(const Quiver& q, const DimVector& d, IntervalRoot root) {
  require_dimension_vector(q, d);
  const auto& euler = q.euler();
  auto best = std::numeric_limits<std::int64_t>::max();
  for (const auto& e : successor_closed(q, root)) best = std::min(best, euler.pair(e, d));
  for (const auto& e : predecessor_closed(q, root)) best = std::min(best, euler.pair(d, e));
  return std::max<std::int64_t>(best, 0);
}

MultiplicityFunction interval_multiplicities(const Quiver& q, const DimVector& d) {
  const int n = q.vertex_count();
  MultiplicityFunction m;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) m.set(IntervalRoot{i, j}.vector(n), interval_multiplicity(q, d, {i, j}));
  return m;
}

const char* branch_name(SinkBranch b) {
  switch (b) {
    case SinkBranch::straddle:
      return "i<s<j";
    case SinkBranch::one_side:
      return "j<s or i>s";
    case SinkBranch::ends_at_sink:
      return "j=s";
    case SinkBranch::starts_at_sink:
      return "i=s";
  }
  return "?";
}

SinkBranch branch_of(int s, IntervalRoot r) {
  if (r.i < s && r.j > s) return SinkBranch::straddle;
  if (r.j < s || r.i > s) return SinkBranch::one_side;
  if (r.j == s) return SinkBranch::ends_at_sink;
  return SinkBranch::starts_at_sink;
}

namespace {

std::int64_t verbatim_value(const DimVector& d, int s, IntervalRoot r) {
  const int i = r.i, j = r.j;
  auto dd = [&](int k) { return entry(d, k); };
  auto best = std::numeric_limits<std::int64_t>::max();
  switch (branch_of(s, r)) {
    case SinkBranch::straddle:
      for (int k = i; k <= s; ++k)
        for (int kp = s; kp <= j; ++kp)
          best = std::min({best, dd(k) + dd(kp) - dd(s), dd(s) - dd(i - 1) - dd(j + 1), dd(kp) - dd(j + 1),
                           dd(k) - dd(i - 1)});
      break;
    case SinkBranch::one_side:
      for (int k = i; k <= j; ++k) best = std::min({best, dd(k) - dd(j + 1), dd(k) - dd(i - 1)});
      break;
    case SinkBranch::ends_at_sink:
      for (int k = i; k <= j; ++k) best = std::min(best, dd(k) - dd(i - 1));
      break;
    case SinkBranch::starts_at_sink:
      for (int k = i; k <= j; ++k) best = std::min(best, dd(k) - dd(j + 1));
      break;
  }
  return std::max<std::int64_t>(best, 0);
}

}  // namespace

std::int64_t single_sink_multiplicity(int n, int s, const DimVector& d, IntervalRoot root, SinkMode mode) {
  if (d.size() != static_cast<std::size_t>(n) || !d.is_nonnegative())
    throw InvalidInput("dimension vector must have length n and non-negative entries");
  if (root.i < 1 || root.j > n || root.i > root.j) throw InvalidInput("interval out of range");
  if (mode == SinkMode::verbatim) return verbatim_value(d, s, root);
  return interval_multiplicity(single_sink_quiver(n, s), d, root);
}

MultiplicityFunction single_sink_multiplicities(int n, int s, const DimVector& d, SinkMode mode) {
  const auto q = single_sink_quiver(n, s);
  MultiplicityFunction m;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      IntervalRoot r{i, j};
      auto v = mode == SinkMode::verbatim ? single_sink_multiplicity(n, s, d, r, mode) : interval_multiplicity(q, d, r);
      m.set(r.vector(n), v);
    }
  return m;
}

std::vector<Discrepancy> single_sink_discrepancies(int n, int s, const DimVector& d) {
  const auto q = single_sink_quiver(n, s);
  std::vector<Discrepancy> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      IntervalRoot r{i, j};
      auto v = single_sink_multiplicity(n, s, d, r, SinkMode::verbatim);
      auto c = interval_multiplicity(q, d, r);
      if (v != c) out.push_back({n, s, d, r, branch_of(s, r), v, c});
    }
  return out;
}

// ------------------------------------------------------- sinks and sources

SinkSourceData::SinkSourceData(const Quiver& q) : n_(q.vertex_count()) {
  const auto right = orientation_of(q);
  const int n = n_;
  auto arrow = [&](int from, int to) { return from >= 1 && to >= 1 && from <= n && to <= n && arrow_between(right, from, to); };

  data_.resize(static_cast<std::size_t>(n * n));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      IntervalData& e = data_[static_cast<std::size_t>((i - 1) * n + (j - 1))];
      e.root = {i, j};
      const int lo = std::max(1, i - 1), hi = std::min(n, j + 1);
      for (int v = lo; v <= hi; ++v) {
        bool sink = !(v > lo && arrow(v, v - 1)) && !(v < hi && arrow(v, v + 1));
        if (sink && v != i && v != j) e.sinks.push_back(v);
      }
      for (int v = i; v <= j; ++v) {
        bool source = !(v > i && arrow(v - 1, v)) && !(v < j && arrow(v + 1, v));
        if (source) e.sources.push_back(v);
      }
      e.outward_arrows = (arrow(i, i - 1) ? 1 : 0) + (arrow(j, j + 1) ? 1 : 0);
      for (int k : e.sinks) {
        SinkPaths p;
        p.sink = k;
        if (k > i) {
          int start = k;
          while (start - 1 >= i && arrow(start - 1, start)) --start;
          for (int v = start; v <= k; ++v) p.w.push_back(v);
        }
        if (k < j) {
          int start = k;
          while (start + 1 <= j && arrow(start + 1, start)) ++start;
          for (int v = start; v >= k; --v) p.u.push_back(v);
        }
        e.paths.push_back(std::move(p));
      }
    }
}

const IntervalData& SinkSourceData::at(int i, int j) const {
  if (i < 1 || j > n_ || i > j) throw InvalidInput("interval out of range");
  return data_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
}

// ------------------------------------------------------ representations

Representation build_rigid_rep(const Quiver& q, const MultiplicityFunction& m, const FieldConfig& field) {
  const auto right = orientation_of(q);
  const int n = q.vertex_count();
  std::vector<IntervalRoot> summands;
  for (const auto& [root, mult] : m) {
    if (root.size() != static_cast<std::size_t>(n)) throw InvalidInput("root length does not match quiver");
    if (mult < 0) throw InvalidInput("negative multiplicity");
    auto r = IntervalRoot::from_vector(root);
    for (std::int64_t c = 0; c < mult; ++c) summands.push_back(r);
  }
  // basis[s][v]: index of summand s's basis vector at vertex v (1-based v).
  DimVector dims(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> basis(summands.size(), std::vector<int>(static_cast<std::size_t>(n) + 1, -1));
  for (std::size_t s = 0; s < summands.size(); ++s)
    for (int v = summands[s].i; v <= summands[s].j; ++v)
      basis[s][static_cast<std::size_t>(v)] = static_cast<int>(dims[static_cast<std::size_t>(v - 1)]++);

  Representation rep(q, dims, field);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const int t = q.arrows()[a].tail + 1, h = q.arrows()[a].head + 1;
    Matrix mat(rep.dim(h - 1), rep.dim(t - 1));
    for (std::size_t s = 0; s < summands.size(); ++s) {
      int bt = basis[s][static_cast<std::size_t>(t)], bh = basis[s][static_cast<std::size_t>(h)];
      if (bt >= 0 && bh >= 0) mat(bh, bt) = 1;
    }
    rep.set_map(a, std::move(mat));
  }
  return rep;
}

namespace {

std::vector<int> zero_based(const std::vector<int>& path) {
  std::vector<int> p;
  p.reserve(path.size());
  for (int v : path) p.push_back(v - 1);
  return p;
}

}  // namespace

Matrix rank_matrix(const Representation& v, const IntervalData& data) {
  std::vector<int> row_off{0}, col_off{0};
  for (int k : data.sinks) row_off.push_back(row_off.back() + v.dim(k - 1));
  for (int l : data.sources) col_off.push_back(col_off.back() + v.dim(l - 1));
  Matrix a(row_off.back(), col_off.back());

  auto column_of = [&](int source) {
    auto it = std::find(data.sources.begin(), data.sources.end(), source);
    if (it == data.sources.end()) throw InternalError("path does not start at a source of the interval");
    return static_cast<std::size_t>(it - data.sources.begin());
  };
  auto place = [&](std::size_t row, const std::vector<int>& path, bool negative) {
    if (path.empty()) return;
    auto block = v.path_map(zero_based(path));
    if (negative) block = negate(block, v.field());
    auto col = column_of(path.front());
    for (int r = 0; r < block.rows(); ++r)
      for (int c = 0; c < block.cols(); ++c) a(row_off[row] + r, col_off[col] + c) = block(r, c);
  };
  for (std::size_t m = 0; m < data.paths.size(); ++m) {
    place(m, data.paths[m].w, false);
    place(m, data.paths[m].u, true);
  }
  return a;
}

RankTuple rank_tuple_of(const Representation& v, const SinkSourceData& data) {
  const int n = data.n();
  RankTuple r(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) r.at(i, j) = matrix_rank(rank_matrix(v, data.at(i, j)), v.field());
  return r;
}

RankTuple rank_tuple_of(const Representation& v) { return rank_tuple_of(v, SinkSourceData(v.quiver())); }

RankTuple target_rank_tuple(const RigidEngine& engine, const DimVector& d) {
  const auto& q = engine.quiver();
  require_dimension_vector(q, d);
  const SinkSourceData data(q);
  const int n = q.vertex_count();
  RankTuple r(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      std::int64_t so = 0;
      for (int l : data.at(i, j).sources) so = checked::add(so, d[static_cast<std::size_t>(l - 1)]);
      r.at(i, j) = so - engine.hom_root_to(IntervalRoot{i, j}.vector(n), d);
    }
  return r;
}

std::optional<std::int64_t> composite_rank(const Representation& v, int i, int j) {
  const auto right = orientation_of(v.quiver());
  const int n = v.quiver().vertex_count();
  if (i < 1 || j > n || i > j) throw InvalidInput("interval out of range");
  if (i == j) return v.dim(i - 1);

  std::vector<int> path;
  bool all_right = true, all_left = true;
  for (int k = i; k < j; ++k) (right[static_cast<std::size_t>(k - 1)] ? all_left : all_right) = false;
  if (all_right || all_left) {
    for (int k = i; k <= j; ++k) path.push_back(k - 1);
    if (all_left) std::reverse(path.begin(), path.end());
    return matrix_rank(v.path_map(path), v.field());
  }
  // Single interior sink: right on [i, s], left on [s, j].
  int s = i;
  while (s < j && right[static_cast<std::size_t>(s - 1)]) ++s;
  for (int k = s; k < j; ++k)
    if (right[static_cast<std::size_t>(k - 1)]) return std::nullopt;
  std::vector<int> left_path, right_path;
  for (int k = i; k <= s; ++k) left_path.push_back(k - 1);
  for (int k = j; k >= s; --k) right_path.push_back(k - 1);
  const auto a = v.path_map(left_path), b = v.path_map(right_path);
  Matrix joined(a.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) joined(r, c) = a(r, c);
    for (int c = 0; c < b.cols(); ++c) joined(r, a.cols() + c) = b(r, c);
  }
  return matrix_rank(joined, v.field());
}

RankCriterionReport verify_rank_criterion(const Representation& v, const DimVector& d, const RigidEngine& engine) {
  if (v.dims() != d) throw InvalidInput("representation has dimension vector " + v.dims().to_string() + ", expected " + d.to_string());
  if (!(v.quiver() == engine.quiver())) throw InvalidInput("representation and engine use different quivers");
  const SinkSourceData data(v.quiver());
  const auto actual = rank_tuple_of(v, data);
  const auto target = target_rank_tuple(engine, d);
  RankCriterionReport rep;
  const int n = data.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      RankCheck c{i, j, actual.at(i, j), target.at(i, j)};
      rep.checks.push_back(c);
      if (c.actual != c.target) rep.failures.push_back(c);
    }
  return rep;
}

}  // namespace rigidq::typea
