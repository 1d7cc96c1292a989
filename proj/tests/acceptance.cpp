// Acceptance suite: one PASS/FAIL line per criterion. Exit status 0 iff all
// criteria pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rigidq/linalg.hpp"
#include "rigidq/rigid.hpp"
#include "rigidq/roots.hpp"
#include "rigidq/typea.hpp"

using namespace rigidq;

namespace {

constexpr std::uint64_t kSeed = 20221;

// Tolerances.
constexpr std::int64_t kOracleBoundA = 10;
constexpr std::int64_t kOracleBoundD = 8;
constexpr int kStructuralSamples = 100;
constexpr std::int64_t kStructuralMaxEntry = 4;
constexpr int kEquiorientedSamples = 500;
constexpr std::int64_t kEquiorientedMaxEntry = 6;
constexpr int kSingleSinkSamples = 200;
constexpr std::int64_t kSingleSinkMaxEntry = 4;
constexpr int kRankCases = 100;
constexpr std::int64_t kRankMaxEntry = 5;
constexpr int kRigidityCases = 100;
constexpr int kSemicontinuitySamples = 200;
constexpr std::int64_t kSemicontinuityTotal = 8;
constexpr double kSemicontinuityEquality = 0.95;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string witness;

  void fail(const std::string& w) {
    if (ok) witness = w;
    ok = false;
  }
};

std::string str(const DimVector& d) { return d.to_string(); }

std::vector<std::string> orientations(const std::string& family, int rank) {
  std::vector<std::string> out;
  for (const auto& o : orientation_strings(standard_edges(family[0], rank).size()))
    out.push_back(family + std::to_string(rank) + ":" + o);
  return out;
}

std::vector<DimVector> vectors_up_to(std::size_t n, std::int64_t bound) {
  std::vector<DimVector> out;
  DimVector cur(n);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t left) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t x = 0; x <= left; ++x) {
      cur[k] = x;
      rec(k + 1, left - x);
    }
    cur[k] = 0;
  };
  rec(0, bound);
  return out;
}

DimVector random_d(std::mt19937_64& rng, int n, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> u(0, hi);
  DimVector d(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) d[static_cast<std::size_t>(k)] = u(rng);
  return d;
}

// 1. formula == brute force, all orientations of A2..A4 (sum <= 10), two of
// D4 and one of D5 (sum <= 8).
Outcome oracle_equivalence() {
  std::vector<std::pair<std::string, std::int64_t>> battery;
  for (int n = 2; n <= 4; ++n)
    for (const auto& s : orientations("A", n)) battery.emplace_back(s, kOracleBoundA);
  for (const char* s : {"D4:>>>", "D4:<><", "D5:><><"}) battery.emplace_back(s, kOracleBoundD);

  Outcome r;
  std::size_t total = 0;
  for (const auto& [s, bound] : battery) {
    const RigidEngine engine(parse_quiver(s));
    const auto ds = vectors_up_to(static_cast<std::size_t>(engine.quiver().vertex_count()), bound);
    total += ds.size();
    std::vector<char> bad(ds.size(), 0);
    const auto count = static_cast<std::int64_t>(ds.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k) {
      const auto& d = ds[static_cast<std::size_t>(k)];
      bad[static_cast<std::size_t>(k)] =
          !(engine.rigid_multiplicities(d, Exec::serial) == brute_force_rigid(engine.roots(), d, bound));
    }
    for (std::size_t k = 0; k < ds.size(); ++k)
      if (bad[k]) r.fail(s + " d=" + str(ds[k]));
  }
  r.detail = std::to_string(battery.size()) + " quivers, " + std::to_string(total) + " dimension vectors";
  return r;
}

// 2. sum and Ext-freeness on rank <= 8 quivers, two orientations each.
Outcome structural() {
  const std::vector<std::string> battery{"A8:>>>>>>>", "A8:<><><><", "D8:>>>>>>>", "D8:<<>><<>",
                                         "E6:>>>>>",   "E6:<><><",   "E7:>>>>>>",  "E7:<><><>",
                                         "E8:>>>>>>>", "E8:<><><><"};
  std::mt19937_64 rng(kSeed + 2);
  Outcome r;
  for (const auto& s : battery) {
    const RigidEngine engine(parse_quiver(s));
    for (int t = 0; t < kStructuralSamples; ++t) {
      auto d = random_d(rng, engine.quiver().vertex_count(), kStructuralMaxEntry);
      auto m = engine.rigid_multiplicities(d);
      auto rep = check_decomposition(engine.roots(), d, m);
      if (!rep.sum_ok || !rep.ext_free || !rep.invalid_entries.empty()) r.fail(s + " d=" + str(d));
    }
  }
  r.detail = std::to_string(battery.size()) + " quivers x " + std::to_string(kStructuralSamples) + " d";
  return r;
}

// 3. equioriented closed form.
Outcome equioriented() {
  std::mt19937_64 rng(kSeed + 3);
  Outcome r;
  for (int n = 1; n <= 8; ++n) {
    const RigidEngine engine(typea::single_sink_quiver(n, n));
    for (int t = 0; t < kEquiorientedSamples; ++t) {
      auto d = random_d(rng, n, kEquiorientedMaxEntry);
      if (!(typea::equioriented_multiplicities(n, d) == engine.rigid_multiplicities(d)))
        r.fail("n=" + std::to_string(n) + " d=" + str(d));
    }
  }
  r.detail = "n=1..8 x " + std::to_string(kEquiorientedSamples) + " d";
  return r;
}

// 4. single-sink closed form, both modes.
Outcome single_sink() {
  std::mt19937_64 rng(kSeed + 4);
  Outcome r;
  std::size_t logged = 0;
  for (int n = 1; n <= 7; ++n)
    for (int s = 1; s <= n; ++s) {
      const RigidEngine engine(typea::single_sink_quiver(n, s));
      for (int t = 0; t < kSingleSinkSamples; ++t) {
        auto d = random_d(rng, n, kSingleSinkMaxEntry);
        const auto tag = "n=" + std::to_string(n) + " s=" + std::to_string(s) + " d=" + str(d);
        if (!(typea::single_sink_multiplicities(n, s, d, typea::SinkMode::corrected) == engine.rigid_multiplicities(d)))
          r.fail(tag + ": corrected mode");
        for (const auto& x : typea::single_sink_discrepancies(n, s, d)) {
          ++logged;
          if (x.branch == typea::SinkBranch::straddle || x.branch == typea::SinkBranch::one_side)
            r.fail(tag + ": verbatim interior branch");
        }
      }
    }
  // Hand-check witnesses on 1 -> 2 <- 3.
  auto witness = [&](DimVector d, typea::IntervalRoot root) {
    bool found = false;
    for (const auto& x : typea::single_sink_discrepancies(3, 2, d)) found = found || x.root == root;
    if (!found) r.fail("witness d=" + str(d) + " not reproduced");
  };
  witness({1, 2, 1}, {2, 2});
  witness({1, 1, 1}, {1, 2});
  r.detail = "n=1..7, all s, " + std::to_string(kSingleSinkSamples) + " d each; " + std::to_string(logged) +
             " boundary discrepancies logged; both witnesses reproduced";
  return r;
}

// 5. rank criterion over Q and F_p, plus one degenerated representation.
Outcome rank_criterion() {
  std::mt19937_64 rng(kSeed + 5);
  std::uniform_int_distribution<int> rank(2, 6);
  Outcome r;
  int degenerate = 0, vacuous = 0;
  for (int t = 0; t < kRankCases; ++t) {
    const int n = rank(rng);
    const auto os = orientations("A", n);
    const auto s = os[std::uniform_int_distribution<std::size_t>(0, os.size() - 1)(rng)];
    const auto q = parse_quiver(s);
    const RigidEngine engine(q);
    const auto d = random_d(rng, n, kRankMaxEntry);
    const auto m = engine.rigid_multiplicities(d);
    const auto tag = s + " d=" + str(d);
    for (const auto& field : {FieldConfig::rationals(), FieldConfig::prime_field(kDefaultPrime)}) {
      auto v = typea::build_rigid_rep(q, m, field);
      if (!typea::verify_rank_criterion(v, d, engine).ok()) r.fail(tag + " over " + field.name());
      if (field.kind != FieldConfig::Kind::prime) continue;
      std::size_t arrow = q.arrows().size();
      for (std::size_t a = 0; a < q.arrows().size() && arrow == q.arrows().size(); ++a)
        if (!v.map(a).is_zero()) arrow = a;
      if (arrow == q.arrows().size()) {
        ++vacuous;
        continue;
      }
      v.set_map(arrow, Matrix(v.map(arrow).rows(), v.map(arrow).cols()));
      if (typea::verify_rank_criterion(v, d, engine).ok())
        r.fail(tag + ": degenerated representation accepted");
      else
        ++degenerate;
    }
  }
  r.detail = std::to_string(kRankCases) + " cases over Q and F_32003; " + std::to_string(degenerate) +
             " degenerations rejected, " + std::to_string(vacuous) + " with no nonzero map";
  return r;
}

// 6. dim End(V) = <d,d>.
Outcome rigidity() {
  std::mt19937_64 rng(kSeed + 6);
  std::uniform_int_distribution<int> rank(1, 6);
  Outcome r;
  const auto field = FieldConfig::prime_field(kDefaultPrime);
  for (int t = 0; t < kRigidityCases; ++t) {
    const int n = rank(rng);
    const auto os = orientations("A", n);
    const auto s = os[std::uniform_int_distribution<std::size_t>(0, os.size() - 1)(rng)];
    const auto q = parse_quiver(s);
    const RigidEngine engine(q);
    const auto d = random_d(rng, n, 4);
    const auto v = typea::build_rigid_rep(q, engine.rigid_multiplicities(d), field);
    if (hom_space_dim(v, v) != q.euler().pair(d, d)) r.fail(s + " d=" + str(d));
  }
  r.detail = std::to_string(kRigidityCases) + " type A cases";
  return r;
}

// 7. <M e_i, e_j> = -<e_j, e_i>.
Outcome coxeter_contract() {
  std::vector<std::string> battery;
  for (int n = 2; n <= 4; ++n)
    for (const auto& s : orientations("A", n)) battery.push_back(s);
  for (const char* s : {"D4:>>>", "D4:<><", "D5:><><", "A8:>>>>>>>", "A8:<><><><", "D8:>>>>>>>", "D8:<<>><<>",
                        "E6:>>>>>", "E6:<><><", "E7:>>>>>>", "E7:<><><>", "E8:>>>>>>>", "E8:<><><><"})
    battery.push_back(s);
  Outcome r;
  for (const auto& s : battery) {
    const auto q = parse_quiver(s);
    const auto m = coxeter_inverse(q);
    const auto n = static_cast<std::size_t>(q.vertex_count());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto ei = DimVector::unit(n, i), ej = DimVector::unit(n, j);
        if (q.euler().pair(m.apply(ei), ej) != -q.euler().pair(ej, ei))
          r.fail(s + " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1));
      }
  }
  r.detail = std::to_string(battery.size()) + " quivers";
  return r;
}

// 8. root counts, box scan == closure.
Outcome root_counts() {
  std::vector<std::pair<std::string, std::size_t>> cases;
  for (std::size_t n = 1; n <= 8; ++n) cases.emplace_back("A" + std::to_string(n), n * (n + 1) / 2);
  for (std::size_t n = 4; n <= 8; ++n) cases.emplace_back("D" + std::to_string(n), n * n - n);
  cases.emplace_back("E6", 36);
  cases.emplace_back("E7", 63);
  cases.emplace_back("E8", 120);
  Outcome r;
  for (const auto& [s, want] : cases) {
    const auto q = parse_quiver(s);
    const auto box = roots_by_box_scan(q);
    const auto closure = roots_by_closure(q);
    if (box.size() != want || box != closure) r.fail(s);
  }
  r.detail = std::to_string(cases.size()) + " types";
  return r;
}

// 9. hom(U_a, W) >= hom(U_a, rigid) for random W, equality generically.
Outcome semicontinuity() {
  const auto field = FieldConfig::prime_field(kDefaultPrime);
  std::mt19937_64 rng(kSeed + 9);
  Outcome r;
  double worst = 1.0;
  std::size_t cases = 0;
  for (int n = 2; n <= 4; ++n)
    for (const auto& s : orientations("A", n)) {
      const auto q = parse_quiver(s);
      const RigidEngine engine(q);
      for (int c = 0; c < 3; ++c) {
        auto d = random_d(rng, n, kSemicontinuityTotal);
        for (std::size_t k = 0; d.total() > kSemicontinuityTotal; k = (k + 1) % d.size())
          if (d[k] > 0) --d[k];
        ++cases;
        std::size_t equal = 0, total = 0;
        for (int t = 0; t < kSemicontinuitySamples; ++t) {
          const auto w = random_rep(q, d, field, rng());
          for (const auto& a : engine.roots()) {
            const auto u = typea::build_rigid_rep(q, MultiplicityFunction{{a, 1}}, field);
            const auto generic = engine.hom_root_to(a, d);
            const auto actual = hom_space_dim(u, w);
            ++total;
            if (actual < generic) r.fail(s + " d=" + str(d) + " a=" + str(a));
            if (actual == generic) ++equal;
          }
        }
        const double freq = static_cast<double>(equal) / static_cast<double>(total);
        worst = std::min(worst, freq);
        if (freq < kSemicontinuityEquality) r.fail(s + " d=" + str(d) + " equality frequency");
      }
    }
  std::ostringstream os;
  os << cases << " (Q,d) cases x " << kSemicontinuitySamples << " samples; min equality frequency " << worst;
  r.detail = os.str();
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"structural checks at scale", structural},
      {"equioriented closed form", equioriented},
      {"single-sink closed form", single_sink},
      {"rank criterion", rank_criterion},
      {"rigidity certificate", rigidity},
      {"inverse Coxeter contract", coxeter_contract},
      {"root counts", root_counts},
      {"semicontinuity", semicontinuity},
  };
  std::printf("seed %llu\n", static_cast<unsigned long long>(kSeed));
  bool all = true;
  int k = 0;
  for (const auto& [name, fn] : criteria) {
    ++k;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.ok;
    std::printf("%s %d %s: %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", k, name, o.detail.c_str(), secs,
                o.ok ? "" : " witness: ", o.witness.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
