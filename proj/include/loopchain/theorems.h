#ifndef LOOPCHAIN_THEOREMS_H_
#define LOOPCHAIN_THEOREMS_H_

// Executable checks of the gonality, gonality-sequence, divisorial
// completeness and two-row tableau statements for general Martens-special
// chains. Every check runs the whole instance list and records failures with
// a machine-checkable payload instead of stopping at the first one.

#include <string>
#include <vector>

#include "json.hpp"
#include "loopchain/chain_model.h"

namespace loopchain {

struct InstanceResult {
  std::string label;
  bool pass = false;
  // Computed values; for a failure, the counterexample (tableau, divisor or
  // sequence) that refutes the claim.
  nlohmann::json detail;

  bool operator==(const InstanceResult&) const = default;
};

struct VerificationReport {
  std::string claim;
  std::string parameters;
  std::vector<InstanceResult> instances;

  bool passed() const;
  void add(std::string label, bool pass, nlohmann::json detail = {});
  bool operator==(const VerificationReport&) const = default;
};

void to_json(nlohmann::json& j, const InstanceResult& result);
void from_json(const nlohmann::json& j, InstanceResult& result);
void to_json(nlohmann::json& j, const VerificationReport& report);
void from_json(const nlohmann::json& j, VerificationReport& report);

// g_r for a general Martens-special chain of type k and genus g:
// k + 2r up to r = g - k - 1, then r + g - 1 up to r = g - 1, then r + g.
int martens_gonality_formula(int genus, int type, int r);

// Gonality k + 2 on the metric-general profile, split into "no two-row
// tableau with fewer than k deletions per row" and "one with exactly k".
VerificationReport verify_prop1(const MartensSpec& spec);

// Every two-row tableau on [(g-k-1) x 2] satisfies the structural lemmas on
// deletions from the hyperelliptic tableau.
VerificationReport verify_two_row_lemmas(const MartensSpec& spec);

VerificationReport verify_theorem_b(const MartensSpec& spec, int r_max);

// Discrete profile (exceptional torsion g + 1), realized as a chain and
// ranked through its own torsion; for g <= oracle_max_genus the g_1 and g_2
// entries are also confirmed by Baker-Norine search on the chain.
VerificationReport verify_theorem_c(const MartensSpec& spec, int r_max,
                                    int oracle_max_genus = 6);

// Needs g <= 10.
VerificationReport verify_divisorial_complete(const MartensSpec& spec,
                                              int threads = 1);

// Reports w^1_{k+2} of the realized discrete chain next to the metric value
// 0. Passes iff w^1_{k+2} >= 0 and w^1_{k+1} = -1. Needs g <= 6.
VerificationReport probe_theorem_a_discrete(const MartensSpec& spec);

// Gonality, two-row lemma and gonality-sequence checks (r_max = g + 2) for
// every valid spec with genus <= max_genus and type <= max_type, in
// all_martens_specs order.
std::vector<VerificationReport> verify_sweep(int max_genus, int max_type,
                                             int threads = 1);

}  // namespace loopchain

#endif  // LOOPCHAIN_THEOREMS_H_
