#include "qecc/recommender.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qecc {

namespace {

constexpr double kWeightSumTolerance = 1e-9;

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// f_tg component per transversal-gate mechanism: cheaper mechanisms score
// higher.
double transversal_factor(Transversal t) {
  switch (t) {
    case Transversal::None:
      return 0.0;
    case Transversal::LatticeSurgery:
      return 0.3;
    case Transversal::TPGLatticeSurgery:
      return 0.4;
    case Transversal::Teleportation:
      return 0.6;
    case Transversal::Clifford:
      return 1.0;
  }
  return 0.0;
}

bool realized_on(const CodeSpec& code, const std::string& q_type) {
  if (q_type == "simulation") return true;  // simulation is implicit for every code
  return std::find(code.realizations.begin(), code.realizations.end(), q_type) !=
         code.realizations.end();
}

}  // namespace

std::string to_string(ErrType t) {
  switch (t) {
    case ErrType::BitFlip:
      return "bit-flip";
    case ErrType::PhaseFlip:
      return "phase-flip";
    case ErrType::AllPauli:
      return "all-pauli";
  }
  return "?";
}

std::optional<ErrType> err_type_from_string(std::string_view s) {
  if (s == "bit-flip") return ErrType::BitFlip;
  if (s == "phase-flip") return ErrType::PhaseFlip;
  if (s == "all-pauli") return ErrType::AllPauli;
  return std::nullopt;
}

void validate_scenario(const Scenario& s) {
  if (s.q_type != "simulation" && !is_known_technology(s.q_type))
    throw std::invalid_argument("scenario: unknown qubit type '" + s.q_type + "'");
  if (s.max_q_avail < 1) throw std::invalid_argument("scenario: max_q_avail must be >= 1");
  if (s.q_orig < 1) throw std::invalid_argument("scenario: q_orig must be >= 1");
  auto prob_ok = [](double p) { return p >= 0.0 && p < 1.0 && !std::isnan(p); };
  if (!prob_ok(s.dep_err)) throw std::invalid_argument("scenario: dep_err out of [0,1)");
  if (!prob_ok(s.gate_err)) throw std::invalid_argument("scenario: gate_err out of [0,1)");
  if (!prob_ok(s.read_err)) throw std::invalid_argument("scenario: read_err out of [0,1)");
}

void validate_error_weights(const ErrorWeights& w) {
  if (w.gate < 0 || w.dep < 0 || w.read < 0)
    throw std::invalid_argument("error weights must be nonnegative");
  if (std::abs(w.gate + w.dep + w.read - 1.0) > kWeightSumTolerance)
    throw std::invalid_argument("error weights must sum to 1");
  if (!(w.gate > w.dep && w.dep > w.read))
    throw std::invalid_argument("error weights must satisfy gate > dep > read");
}

void validate_score_weights(const ScoreWeights& w) {
  const double parts[] = {w.dist, w.thr, w.cx, w.dec, w.tg, w.real, w.util, w.tg_boost};
  for (double v : parts)
    if (v < 0 || std::isnan(v)) throw std::invalid_argument("score weights must be nonnegative");
  double base = w.dist + w.thr + w.cx + w.dec + w.tg + w.real + w.util;
  if (std::abs(base - 1.0) > kWeightSumTolerance)
    throw std::invalid_argument("score base weights must sum to 1");
}

double effective_error_rate(const Scenario& s, const ErrorWeights& w) {
  return w.gate * s.gate_err + w.dep * s.dep_err + w.read * s.read_err;
}

bool protection_covers(Protection p, ErrType e) {
  if (p == Protection::BitFlipOnly) return e == ErrType::BitFlip;
  return true;
}

StageResult stage1_compatibility(const Scenario& s, const Registry& reg) {
  StageResult out;
  for (const auto& code : reg.codes) {
    std::string reason;
    if (!protection_covers(code.protection, s.err_type)) {
      reason = "error type: " + to_string(s.err_type) + " not covered (" +
               to_string(code.protection) + ")";
    } else if (!realized_on(code, s.q_type)) {
      reason = "realization: not realized on " + s.q_type;
    } else if (s.multi_q_gate && code.logical_qubits_per_block > 1) {
      reason = "multi-block gate rule: k=" + std::to_string(code.logical_qubits_per_block) +
               " > 1 with multi-qubit gates";
    } else {
      long long d_min = code.distance.min_admissible();
      long long need = 0;
      bool fits = false;
      try {
        need = physical_qubits(code, d_min, s.q_orig);
        fits = need <= s.max_q_avail;
      } catch (const std::overflow_error&) {
        fits = false;  // demand beyond 64-bit range exceeds any budget
      }
      if (!fits) {
        reason = "budget: needs " + (need > 0 ? std::to_string(need) : std::string("over 2^63")) +
                 " qubits at minimum distance " + std::to_string(d_min) + ", only " +
                 std::to_string(s.max_q_avail) + " available";
      }
    }
    if (reason.empty()) {
      out.survivors.push_back({&code, MaxDistance{}});
      out.trace.push_back({kStageCompatibility, code.id, true, ""});
    } else {
      out.trace.push_back({kStageCompatibility, code.id, false, reason});
    }
  }
  return out;
}

StageResult stage2_practicality(const std::vector<Candidate>& in, const Scenario& s,
                                const ErrorWeights& w) {
  StageResult out;
  const double p_eff = effective_error_rate(s, w);
  for (const auto& cand : in) {
    const CodeSpec& code = *cand.code;
    if (p_eff >= code.threshold) {
      out.trace.push_back({kStagePracticality, code.id, false,
                           "threshold: effective error rate " + fmt(p_eff) +
                               " >= threshold " + fmt(code.threshold)});
      continue;
    }
    MaxDistance md = max_distance(code, s.max_q_avail, s.q_orig);
    if (md.kind == MaxDistance::Kind::Infeasible) {
      out.trace.push_back({kStagePracticality, code.id, false,
                           "budget: no achievable distance within " +
                               std::to_string(s.max_q_avail) + " qubits"});
      continue;
    }
    out.survivors.push_back({&code, md});
    out.trace.push_back({kStagePracticality, code.id, true, ""});
  }
  return out;
}

StageResult stage3_scalability(const std::vector<Candidate>& in, const Scenario& s) {
  StageResult out;
  for (const auto& cand : in) {
    const CodeSpec& code = *cand.code;
    if (!code.scalable && s.q_orig > 1) {
      out.trace.push_back({kStageScalability, code.id, false,
                           "scalability: not scalable and q_orig=" + std::to_string(s.q_orig) +
                               " > 1"});
      continue;
    }
    out.survivors.push_back(cand);
    out.trace.push_back({kStageScalability, code.id, true, ""});
  }
  return out;
}

ScoreBreakdown score(const Candidate& c, const Scenario& s, long long cohort_max_d_eff,
                     double effective_rate, const ScoreWeights& w) {
  const CodeSpec& code = *c.code;
  ScoreBreakdown b;

  const long long d_eff = c.dist.d;  // achieved d, or the structural d0 for FixedNA
  b.dist = cohort_max_d_eff > 0 ? static_cast<double>(d_eff) / static_cast<double>(cohort_max_d_eff)
                                : 0.0;

  if (effective_rate <= 0.0) {
    b.thr = 1.0;
  } else {
    b.thr = std::clamp(std::log10(code.threshold / effective_rate) / 2.0, 0.0, 1.0);
  }

  b.dec = static_cast<double>(std::min<std::size_t>(code.decoders.size(), 10)) / 10.0;
  b.cx = static_cast<double>(kComplexityLevels - code.complexity) / 5.0;
  b.tg = transversal_factor(code.transversal);
  b.real = static_cast<double>(std::min<std::size_t>(code.realizations.size(), 6)) / 6.0;

  const long long k = code.logical_qubits_per_block;
  const long long blocks = (s.q_orig + k - 1) / k;
  b.util = static_cast<double>(s.q_orig) / static_cast<double>(blocks * k);

  b.total = w.dist * b.dist + w.thr * b.thr + w.cx * b.cx + w.dec * b.dec + w.tg * b.tg +
            w.real * b.real + w.util * b.util;
  if (s.multi_q_gate) b.total += w.tg_boost * b.tg;
  return b;
}

namespace {

// Re-assert every hard constraint on an outgoing recommendation; a violation
// here is a pipeline bug, not a user error.
void final_review(const Recommendation& rec, const CodeSpec& code, const Scenario& s,
                  double p_eff) {
  auto fail = [&](const std::string& what) {
    throw InternalConsistencyError("final review: code '" + code.id + "': " + what);
  };
  if (!protection_covers(code.protection, s.err_type)) fail("protection does not cover error type");
  if (s.q_type != "simulation" &&
      std::find(code.realizations.begin(), code.realizations.end(), s.q_type) ==
          code.realizations.end())
    fail("not realized on " + s.q_type);
  if (s.multi_q_gate && code.logical_qubits_per_block > 1) fail("violates multi-block gate rule");
  if (!code.scalable && s.q_orig > 1) fail("not scalable for q_orig > 1");
  if (!(p_eff < code.threshold)) fail("effective error rate not below threshold");
  switch (rec.max_distance.kind) {
    case MaxDistance::Kind::Achievable: {
      long long d = rec.max_distance.d;
      if (physical_qubits(code, d, s.q_orig) > s.max_q_avail) fail("distance exceeds qubit budget");
      long long next = code.distance.next_admissible(d);
      bool next_fits = false;
      try {
        next_fits = physical_qubits(code, next, s.q_orig) <= s.max_q_avail;
      } catch (const std::overflow_error&) {
        next_fits = false;
      }
      if (next_fits) fail("reported distance is not maximal");
      break;
    }
    case MaxDistance::Kind::FixedNA:
      if (physical_qubits(code, code.distance.d, s.q_orig) > s.max_q_avail)
        fail("fixed code exceeds qubit budget");
      break;
    case MaxDistance::Kind::Infeasible:
      fail("infeasible code reached the recommendation list");
  }
}

}  // namespace

RecommendResult recommend(const Scenario& s, const Registry& reg, const RecommendOptions& opt) {
  validate_scenario(s);
  validate_error_weights(opt.err_weights);
  validate_score_weights(opt.score_weights);

  RecommendResult result;
  result.effective_rate = effective_error_rate(s, opt.err_weights);

  StageResult s1 = stage1_compatibility(s, reg);
  StageResult s2 = stage2_practicality(s1.survivors, s, opt.err_weights);
  StageResult s3 = stage3_scalability(s2.survivors, s);

  result.trace = std::move(s1.trace);
  result.trace.insert(result.trace.end(), s2.trace.begin(), s2.trace.end());
  result.trace.insert(result.trace.end(), s3.trace.begin(), s3.trace.end());

  long long max_d_eff = 0;
  for (const auto& c : s3.survivors) max_d_eff = std::max(max_d_eff, c.dist.d);

  for (const auto& c : s3.survivors) {
    ScoreBreakdown b = score(c, s, max_d_eff, result.effective_rate, opt.score_weights);
    result.recommendations.push_back({c.code->id, c.dist, b.total, b});
  }
  std::sort(result.recommendations.begin(), result.recommendations.end(),
            [](const Recommendation& a, const Recommendation& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.id < b.id;
            });

  for (const auto& rec : result.recommendations) {
    final_review(rec, reg.at(rec.id), s, result.effective_rate);
    result.trace.push_back({kStageFinalReview, rec.id, true, ""});
  }

  if (opt.top_n && static_cast<std::size_t>(*opt.top_n) < result.recommendations.size())
    result.recommendations.resize(*opt.top_n);

  return result;
}

}  // namespace qecc
