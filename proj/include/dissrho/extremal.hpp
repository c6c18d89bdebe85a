#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dissrho/enumeration.hpp"
#include "dissrho/families.hpp"
#include "dissrho/spectral.hpp"

namespace dissrho {

struct SearchOptions {
  double tol = kDefaultTol;
  double tie_gap = kTieGap;
  int workers = 1;
  EnumStrategy strategy = EnumStrategy::kOrderly;
  /// When false, runtime_ms is reported as 0 so that output is byte-reproducible.
  bool timing = true;
};

/// diss and rho of every class of one (order, mode).
struct Sweep {
  int n = 0;
  EnumMode mode = EnumMode::kConnected;
  std::vector<CanonicalForm> forms;
  std::vector<int> diss;
  std::vector<double> rho;
  double runtime_ms = 0.0;
};

Sweep run_sweep(const EnumStream& stream, const SearchOptions& options = {});

/// Lazily built streams and sweeps, shared between searches over the same orders.
class SweepCache {
 public:
  explicit SweepCache(SearchOptions options = {}) : options_(options) {}

  const EnumStream& stream(int n, EnumMode mode);
  const Sweep& sweep(int n, EnumMode mode);
  const SearchOptions& options() const { return options_; }

 private:
  SearchOptions options_;
  std::map<std::pair<int, EnumMode>, EnumStream> streams_;
  std::map<std::pair<int, EnumMode>, Sweep> sweeps_;
};

/// How co-extremal classes relate: a single class, classes with identical integer
/// characteristic polynomials, or classes separated by less than tie_gap only numerically.
enum class TieStatus { kUnique, kExact, kNumerical, kUnchecked };

struct Extremizer {
  std::string graph6;  ///< canonical form
  double rho = 0.0;
  std::vector<FamilySpec> families;  ///< every catalog member isomorphic to it
};

struct ExtremalReport {
  int n = 0;
  int k = 0;
  EnumMode mode = EnumMode::kConnected;
  bool maximize = false;
  std::optional<double> min_rho;  ///< extremal value; absent for an empty class
  std::vector<Extremizer> minimizers;
  std::size_t class_size = 0;
  double tolerance = kDefaultTol;
  double tie_gap = kTieGap;
  TieStatus ties = TieStatus::kUnique;
  double runtime_ms = 0.0;
};

/// Extremal classes among the sweep members with diss = k. Members within tie_gap of the
/// extremum are all reported.
ExtremalReport extremal_report(const Sweep& sweep, int k, bool maximize, const SearchOptions& options);

ExtremalReport min_rho_search(int n, int k, EnumMode mode, SweepCache& cache);
ExtremalReport min_rho_search(int n, int k, EnumMode mode, const SearchOptions& options = {});

/// Catalog members of the same order isomorphic to g.
std::vector<FamilySpec> match_families(const Graph& g);

/// Whether every pendant branch path of the tree has at most two vertices, or the tree is B(n,s,t).
bool corollary1_shape(const Graph& tree);

enum class TheoremCase { kTreeClaim, kKn1, kKn2, kKCeil23, kKFloor23, kK2, kMaxJoin, kCorollary1 };

TheoremCase parse_theorem_case(const std::string& name);
std::string theorem_case_name(TheoremCase c);

struct VerifyLine {
  int n = 0;
  int k = 0;
  EnumMode mode = EnumMode::kConnected;
  std::string expected;
  std::string observed;
  bool pass = true;
  bool exploratory = false;
  std::string note;
  std::optional<std::string> counterexample;  ///< graph6
};

struct VerifyResult {
  TheoremCase which = TheoremCase::kTreeClaim;
  bool pass = true;
  std::vector<VerifyLine> lines;
};

/// Checks the characterization named by `which` for every n in [n_lo, n_hi]. Connected mode
/// is used up to the connected enumeration cap; above it (or with force_trees) tree mode is
/// used, which is only accepted for k > ceil(2n/3) unless forced.
VerifyResult verify_theorem(TheoremCase which, int n_lo, int n_hi, bool force_trees, SweepCache& cache);

struct ClaimRow {
  std::string claim;
  std::string instance;
  std::string relation;  ///< "<", "<=", "=" (within tolerance) or "~" (closed form)
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = true;
};

/// Rows "claim1" (rho(S(0,k)) against sqrt(k+1), k = 1..50) and "claim2"/"claim3" (the G3
/// comparison chains over s + q <= max_sum).
std::vector<ClaimRow> verify_claims(int max_sum, double tol = kSmithTol);

/// The maximizer over connected graphs of order n with diss = k is join_maximizer(n, k).
VerifyLine max_rho_check(int n, int k, SweepCache& cache);

std::string to_json(const ExtremalReport& report);
std::string to_csv(const ExtremalReport& report);
std::string to_text(const ExtremalReport& report);

}  // namespace dissrho
