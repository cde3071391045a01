#pragma once

#include "qecc/registry.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qecc {

enum class ErrType { BitFlip, PhaseFlip, AllPauli };

std::string to_string(ErrType t);
std::optional<ErrType> err_type_from_string(std::string_view s);

// The user-facing inputs: qubit technology, qubit budget, circuit size,
// multi-qubit-gate requirement, and the error environment.
struct Scenario {
  std::string q_type = "simulation";  // technology name or "simulation"
  long long max_q_avail = 1;          // qubits available for error correction
  long long q_orig = 1;               // logical qubits in the circuit
  bool multi_q_gate = false;
  ErrType err_type = ErrType::AllPauli;
  double dep_err = 0.0;
  double gate_err = 0.0;
  double read_err = 0.0;
};

void validate_scenario(const Scenario& s);  // throws std::invalid_argument

// Gate errors weigh heaviest, then depolarizing, then readout.
struct ErrorWeights {
  double gate = 0.6;
  double dep = 0.3;
  double read = 0.1;
};

void validate_error_weights(const ErrorWeights& w);

// Base weights sum to 1; tg_boost is added on top (times the transversal-gate
// component) when the scenario needs multi-qubit gates. Exposed as
// configuration through the weights file.
struct ScoreWeights {
  double dist = 0.60;
  double thr = 0.05;
  double cx = 0.01;
  double dec = 0.04;
  double tg = 0.01;
  double real = 0.04;
  double util = 0.25;
  double tg_boost = 0.80;
};

void validate_score_weights(const ScoreWeights& w);

double effective_error_rate(const Scenario& s, const ErrorWeights& w);

bool protection_covers(Protection p, ErrType e);

inline constexpr int kStageCompatibility = 1;
inline constexpr int kStagePracticality = 2;
inline constexpr int kStageScalability = 3;
inline constexpr int kStageFinalReview = 4;

struct TraceEntry {
  int stage = 0;
  std::string code;
  bool passed = false;
  std::string reason;  // non-empty for every elimination
};

struct Candidate {
  const CodeSpec* code = nullptr;
  MaxDistance dist;  // attached by stage 2
};

struct StageResult {
  std::vector<Candidate> survivors;
  std::vector<TraceEntry> trace;
};

// Stage 1: error-type coverage, hardware realization, the multi-block gate
// rule, and feasibility at the minimum admissible distance.
StageResult stage1_compatibility(const Scenario& s, const Registry& reg);

// Stage 2: effective error rate strictly below threshold, budget-feasible
// distance attached to each survivor.
StageResult stage2_practicality(const std::vector<Candidate>& in, const Scenario& s,
                                const ErrorWeights& w);

// Stage 3: non-scalable codes drop out once more than one logical qubit
// needs protection.
StageResult stage3_scalability(const std::vector<Candidate>& in, const Scenario& s);

struct ScoreBreakdown {
  double dist = 0;
  double thr = 0;
  double cx = 0;
  double dec = 0;
  double tg = 0;
  double real = 0;
  double util = 0;
  double total = 0;
};

ScoreBreakdown score(const Candidate& c, const Scenario& s, long long cohort_max_d_eff,
                     double effective_rate, const ScoreWeights& w);

struct Recommendation {
  std::string id;
  MaxDistance max_distance;
  double score = 0;
  ScoreBreakdown breakdown;
};

struct RecommendOptions {
  ErrorWeights err_weights;
  ScoreWeights score_weights;
  std::optional<int> top_n;
  bool debug = false;
};

struct RecommendResult {
  std::vector<Recommendation> recommendations;  // descending score, ties by id
  std::vector<TraceEntry> trace;
  double effective_rate = 0;
};

class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Full pipeline: stages 1-3, cohort scoring, final hard-constraint review.
RecommendResult recommend(const Scenario& s, const Registry& reg, const RecommendOptions& opt = {});

}  // namespace qecc
