#pragma once

#include <random>

#include "blowup/session.hpp"
#include "blowup/theorems.hpp"

namespace blowup {

// Serializable projection of an invariant report; what the JSON schema
// carries and what the round-trip law compares.
struct InvariantSummary {
  int dim = 0;
  int depth_R = 0;
  std::optional<int> g;
  int l = 0;
  std::optional<int> deviation;
  std::optional<int> r_J;
  int s = 0;
  std::map<int, int> depths;
  int depth_G = 0;
  int grade_Gplus = 0;
  int reg_value = 0;
  std::string reg_status;
  bool operator==(const InvariantSummary&) const = default;
};

struct InstanceResult {
  std::string ring;
  std::string ideal;
  std::optional<InvariantSummary> invariants;
  std::vector<TheoremReport> theorems;
  std::vector<std::string> notes;
  std::optional<std::string> error;
  long timing_ms = 0;
  bool operator==(const InstanceResult&) const = default;
};

struct RunReport {
  std::string version;
  uint32_t prime = PrimeField::kDefaultPrime;
  uint64_t seed = 0;
  std::vector<std::string> caveats;
  std::vector<InstanceResult> instances;
  bool operator==(const RunReport&) const = default;

  bool any_violation() const;
  bool any_error() const;
};

struct RunOptions {
  uint64_t seed = 0;
  std::optional<uint32_t> prime_override;
  std::optional<int> max_power;
  int rmax = 30;
  // wall-clock timings are off by default so JSON output is byte-stable
  bool timings = false;
};

extern const char kArtifactVersion[];
std::vector<std::string> standing_caveats();

RunReport run_session(const SessionAST& ast, const RunOptions& opt);
RunReport run_corpus_instances(int vars, int maxdeg, int count, uint64_t seed,
                               const RunOptions& opt);

// Random monomial generators (minimal, degree in [1, maxdeg]); shared with
// the test corpora.
std::vector<Polynomial> random_monomial_ideal_gens(const RingPtr& ring,
                                                   std::mt19937_64& rng,
                                                   int maxdeg);

InvariantSummary summarize(const InvariantReport& rep);

}  // namespace blowup
