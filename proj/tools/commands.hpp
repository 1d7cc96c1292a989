#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rigidq/rigid.hpp"

namespace rigidq::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalidInput = 2, kVerificationFailed = 3 };

struct Options {
  std::string quiver_file;
  std::string dynkin;
  std::string d;
  std::string format = "table";
  std::string field = "32003";
  std::optional<std::uint64_t> seed;
  std::string mode = "corrected";
  std::int64_t max_total_dim = 6;
  int samples = 20;
  bool inject_fault = false;
  std::string compare;   // verify: decomposition JSON to re-check
  std::string out;       // typea build: output file ("" = stdout)
  std::string rep_file;  // typea check
};

using Json = nlohmann::ordered_json;

// Seed from --seed, else RIGIDQ_SEED, else a fixed default.
std::uint64_t resolve_seed(const Options& o);

// {"quiver", "d", "summands", "checks", "discrepancies"}
Json decomposition_json(const RigidEngine& engine, const DimVector& d, const std::string& mode,
                        const EvalOptions& eval = {});

int cmd_roots(const Options& o, std::ostream& out, std::ostream& err);
int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err);
int cmd_verify(const Options& o, std::ostream& out, std::ostream& err);
int cmd_typea(const std::string& action, const Options& o, std::ostream& out, std::ostream& err);

// Full command line, including argv[0].
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rigidq::cli
