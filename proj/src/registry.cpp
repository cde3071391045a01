#include "qecc/registry.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace qecc {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// Schema bounds for overhead formulas. Generous for any realistic code while
// keeping exact evaluation inside __int128 during distance searches.
constexpr std::size_t kMaxDegree = 6;
constexpr long long kMaxCoefficient = 1'000'000'000;
constexpr long long kMaxDenominator = 1'000'000'000;
constexpr long long kMonotonicityWindow = 512;  // distances checked past min_d at validation

constexpr long long kInt64Max = 0x7fffffffffffffffLL;

// Exact numerator value at d, or nullopt when it cannot fit __int128 (which
// already exceeds any 64-bit budget by far).
std::optional<__int128> eval_numerator(const OverheadFormula& f, long long d) {
  __int128 sum = 0;
  __int128 power = 1;
  for (std::size_t i = 0; i < f.numerator_coeffs.size(); ++i) {
    if (i > 0) {
      if (__builtin_mul_overflow(power, static_cast<__int128>(d), &power)) return std::nullopt;
    }
    __int128 term;
    if (__builtin_mul_overflow(power, static_cast<__int128>(f.numerator_coeffs[i]), &term))
      return std::nullopt;
    if (__builtin_add_overflow(sum, term, &sum)) return std::nullopt;
  }
  return sum;
}

// ceil(num/den) for den > 0.
__int128 ceil_div(__int128 num, __int128 den) {
  if (num >= 0) return (num + den - 1) / den;
  return num / den;
}

long long blocks_for(const CodeSpec& code, long long num_logical) {
  long long k = code.logical_qubits_per_block;
  return (num_logical + k - 1) / k;
}

// blocks * ceil(overhead(d)); nullopt means "beyond any 64-bit budget".
std::optional<__int128> physical_qubits_or_huge(const CodeSpec& code, long long d,
                                                long long num_logical) {
  auto num = eval_numerator(code.overhead, d);
  if (!num) return std::nullopt;
  __int128 per_block = ceil_div(*num, code.overhead.denominator);
  __int128 total;
  if (__builtin_mul_overflow(per_block, static_cast<__int128>(blocks_for(code, num_logical)),
                             &total))
    return std::nullopt;
  return total;
}

bool fits_budget(const CodeSpec& code, long long d, long long num_logical, long long budget) {
  auto phys = physical_qubits_or_huge(code, d, num_logical);
  return phys && *phys <= budget;
}

std::string code_ctx(const json& obj, std::size_t index) {
  std::string id = obj.is_object() && obj.contains("id") && obj["id"].is_string()
                       ? obj["id"].get<std::string>()
                       : "#" + std::to_string(index);
  return "code '" + id + "'";
}

const json& require_field(const json& obj, const char* key, const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end()) throw RegistryError(ctx + ": missing field '" + key + "'");
  return *it;
}

CodeSpec parse_code(const json& j, std::size_t index) {
  const std::string ctx = code_ctx(j, index);
  if (!j.is_object()) throw RegistryError(ctx + ": code entry must be an object");
  CodeSpec spec;
  try {
    spec.id = require_field(j, "id", ctx).get<std::string>();
    spec.display_name = require_field(j, "display_name", ctx).get<std::string>();

    const json& oh = require_field(j, "overhead", ctx);
    spec.overhead.numerator_coeffs =
        require_field(oh, "num", ctx + ": overhead").get<std::vector<long long>>();
    spec.overhead.denominator = require_field(oh, "den", ctx + ": overhead").get<long long>();

    const json& dist = require_field(j, "distance", ctx);
    std::string kind = require_field(dist, "kind", ctx + ": distance").get<std::string>();
    if (kind == "fixed") {
      spec.distance = DistanceDomain::fixed(require_field(dist, "d", ctx + ": distance").get<long long>());
    } else if (kind == "any") {
      spec.distance =
          DistanceDomain::any_integer(require_field(dist, "min_d", ctx + ": distance").get<long long>());
    } else if (kind == "odd") {
      spec.distance =
          DistanceDomain::odd_integer(require_field(dist, "min_d", ctx + ": distance").get<long long>());
    } else {
      throw RegistryError(ctx + ": distance: unknown kind '" + kind + "'");
    }

    spec.logical_qubits_per_block = require_field(j, "k", ctx).get<long long>();
    spec.threshold = require_field(j, "threshold", ctx).get<double>();

    std::string prot = require_field(j, "protection", ctx).get<std::string>();
    auto p = protection_from_string(prot);
    if (!p) throw RegistryError(ctx + ": protection: unknown value '" + prot + "'");
    spec.protection = *p;

    spec.decoders = require_field(j, "decoders", ctx).get<std::vector<std::string>>();

    std::string trans = require_field(j, "transversal", ctx).get<std::string>();
    auto t = transversal_from_string(trans);
    if (!t) throw RegistryError(ctx + ": transversal: unknown value '" + trans + "'");
    spec.transversal = *t;

    spec.scalable = require_field(j, "scalable", ctx).get<bool>();
    spec.realizations = require_field(j, "realizations", ctx).get<std::vector<std::string>>();
    spec.complexity = require_field(j, "complexity", ctx).get<int>();
  } catch (const json::exception& e) {
    throw RegistryError(ctx + ": " + e.what());
  }
  return spec;
}

ordered_json code_to_json(const CodeSpec& c) {
  ordered_json j;
  j["id"] = c.id;
  j["display_name"] = c.display_name;
  j["overhead"] = {{"num", c.overhead.numerator_coeffs}, {"den", c.overhead.denominator}};
  switch (c.distance.kind) {
    case DistanceDomain::Kind::Fixed:
      j["distance"] = {{"kind", "fixed"}, {"d", c.distance.d}};
      break;
    case DistanceDomain::Kind::AnyInteger:
      j["distance"] = {{"kind", "any"}, {"min_d", c.distance.d}};
      break;
    case DistanceDomain::Kind::OddInteger:
      j["distance"] = {{"kind", "odd"}, {"min_d", c.distance.d}};
      break;
  }
  j["k"] = c.logical_qubits_per_block;
  j["threshold"] = c.threshold;
  j["protection"] = to_string(c.protection);
  j["decoders"] = c.decoders;
  j["transversal"] = to_string(c.transversal);
  j["scalable"] = c.scalable;
  j["realizations"] = c.realizations;
  j["complexity"] = c.complexity;
  return j;
}

}  // namespace

Rational OverheadFormula::evaluate(long long d) const {
  auto num = eval_numerator(*this, d);
  if (!num || *num > kInt64Max || *num < -kInt64Max)
    throw std::overflow_error("overhead: value out of range at d=" + std::to_string(d));
  return Rational(static_cast<long long>(*num), denominator);
}

int OverheadFormula::degree() const {
  for (int i = static_cast<int>(numerator_coeffs.size()) - 1; i >= 0; --i)
    if (numerator_coeffs[i] != 0) return i;
  return 0;
}

std::string OverheadFormula::str() const {
  std::string poly;
  for (int i = static_cast<int>(numerator_coeffs.size()) - 1; i >= 0; --i) {
    long long c = numerator_coeffs[i];
    if (c == 0) continue;
    if (poly.empty()) {
      poly += c < 0 ? "-" : "";
    } else {
      poly += c < 0 ? " - " : " + ";
    }
    long long a = c < 0 ? -c : c;
    if (a != 1 || i == 0) poly += std::to_string(a);
    if (i >= 1) poly += "d";
    if (i >= 2) poly += "^" + std::to_string(i);
  }
  if (poly.empty()) poly = "0";
  if (denominator == 1) return poly;
  bool single_term = poly.find(' ') == std::string::npos;
  return (single_term ? poly : "(" + poly + ")") + "/" + std::to_string(denominator);
}

bool DistanceDomain::admits(long long dist) const {
  switch (kind) {
    case Kind::Fixed:
      return dist == d;
    case Kind::AnyInteger:
      return dist >= d;
    case Kind::OddInteger:
      return dist >= d && dist % 2 == 1;
  }
  return false;
}

long long DistanceDomain::min_admissible() const { return d; }

long long DistanceDomain::next_admissible(long long dist) const {
  switch (kind) {
    case Kind::Fixed:
      throw std::domain_error("distance domain is fixed");
    case Kind::AnyInteger:
      return dist < d ? d : dist + 1;
    case Kind::OddInteger: {
      if (dist < d) return d;
      return dist % 2 == 1 ? dist + 2 : dist + 1;
    }
  }
  throw std::domain_error("bad distance domain");
}

const CodeSpec* Registry::find(std::string_view id) const {
  for (const auto& c : codes)
    if (c.id == id) return &c;
  return nullptr;
}

const CodeSpec& Registry::at(std::string_view id) const {
  const CodeSpec* c = find(id);
  if (!c) throw RegistryError("unknown code id '" + std::string(id) + "'");
  return *c;
}

std::string to_string(Protection p) {
  switch (p) {
    case Protection::BitFlipOnly:
      return "bit-flip-only";
    case Protection::ArbitrarySingle:
      return "arbitrary-single";
    case Protection::DetectTwoCorrectOne:
      return "detect-two-correct-one";
    case Protection::AllPauli:
      return "all-pauli";
  }
  return "?";
}

std::string to_string(Transversal t) {
  switch (t) {
    case Transversal::None:
      return "none";
    case Transversal::Clifford:
      return "clifford";
    case Transversal::Teleportation:
      return "teleportation";
    case Transversal::TPGLatticeSurgery:
      return "tpg-lattice-surgery";
    case Transversal::LatticeSurgery:
      return "lattice-surgery";
  }
  return "?";
}

std::optional<Protection> protection_from_string(std::string_view s) {
  if (s == "bit-flip-only") return Protection::BitFlipOnly;
  if (s == "arbitrary-single") return Protection::ArbitrarySingle;
  if (s == "detect-two-correct-one") return Protection::DetectTwoCorrectOne;
  if (s == "all-pauli") return Protection::AllPauli;
  return std::nullopt;
}

std::optional<Transversal> transversal_from_string(std::string_view s) {
  if (s == "none") return Transversal::None;
  if (s == "clifford") return Transversal::Clifford;
  if (s == "teleportation") return Transversal::Teleportation;
  if (s == "tpg-lattice-surgery") return Transversal::TPGLatticeSurgery;
  if (s == "lattice-surgery") return Transversal::LatticeSurgery;
  return std::nullopt;
}

const std::vector<std::string>& technology_vocabulary() {
  static const std::vector<std::string> kVocab = {
      "superconducting", "trapped-ion", "optical",     "rydberg",
      "nmr",             "nv-diamond",  "ising-anyons"};
  return kVocab;
}

bool is_known_technology(std::string_view name) {
  const auto& v = technology_vocabulary();
  return std::find(v.begin(), v.end(), name) != v.end();
}

std::vector<ValidationIssue> validate_code(const CodeSpec& spec) {
  std::vector<ValidationIssue> issues;
  auto add = [&](const std::string& field, const std::string& msg) {
    issues.push_back({spec.id, field, msg});
  };

  if (spec.id.empty()) add("id", "id must be non-empty");
  for (char ch : spec.id) {
    if (!((ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '-')) {
      add("id", "id must be short lowercase ([a-z0-9-])");
      break;
    }
  }
  if (spec.display_name.empty()) add("display_name", "display name must be non-empty");

  const auto& f = spec.overhead;
  bool formula_ok = true;
  if (f.denominator < 1 || f.denominator > kMaxDenominator) {
    add("overhead.den", "denominator must be in [1, 1e9]");
    formula_ok = false;
  }
  if (f.numerator_coeffs.empty() ||
      std::all_of(f.numerator_coeffs.begin(), f.numerator_coeffs.end(),
                  [](long long c) { return c == 0; })) {
    add("overhead.num", "at least one numerator coefficient must be nonzero");
    formula_ok = false;
  }
  if (f.numerator_coeffs.size() > kMaxDegree + 1) {
    add("overhead.num", "degree must be at most " + std::to_string(kMaxDegree));
    formula_ok = false;
  }
  for (long long c : f.numerator_coeffs) {
    if (c < -kMaxCoefficient || c > kMaxCoefficient) {
      add("overhead.num", "coefficients must be within +/-1e9");
      formula_ok = false;
      break;
    }
  }

  bool domain_ok = true;
  switch (spec.distance.kind) {
    case DistanceDomain::Kind::Fixed:
      if (spec.distance.d < 2) {
        add("distance.d", "fixed distance must be >= 2");
        domain_ok = false;
      }
      break;
    case DistanceDomain::Kind::AnyInteger:
      if (spec.distance.d < 2) {
        add("distance.min_d", "minimum distance must be >= 2");
        domain_ok = false;
      }
      break;
    case DistanceDomain::Kind::OddInteger:
      if (spec.distance.d < 2) {
        add("distance.min_d", "minimum distance must be >= 2");
        domain_ok = false;
      } else if (spec.distance.d % 2 == 0) {
        add("distance.min_d", "minimum distance of an odd domain must be odd");
        domain_ok = false;
      }
      break;
  }

  // Open domains need strictly growing overheads for the distance search to
  // have a maximum.
  if (formula_ok && domain_ok && spec.distance.kind != DistanceDomain::Kind::Fixed) {
    if (f.degree() < 1 || f.numerator_coeffs[f.degree()] < 0)
      add("overhead", "open distance domains need a growing overhead (positive leading coefficient)");
  }
  if (formula_ok && domain_ok) {
    long long d = spec.distance.min_admissible();
    Rational prev(0);
    for (long long step = 0; step <= kMonotonicityWindow; ++step) {
      Rational v;
      try {
        v = f.evaluate(d);
      } catch (const std::overflow_error&) {
        break;  // already astronomically large, growth is not in doubt
      }
      if (v <= Rational(0)) {
        add("overhead", "value must be strictly positive at d=" + std::to_string(d));
        break;
      }
      if (step > 0 && v < prev) {
        add("overhead", "value must be non-decreasing (drops at d=" + std::to_string(d) + ")");
        break;
      }
      prev = v;
      if (spec.distance.kind == DistanceDomain::Kind::Fixed) break;
      d = spec.distance.next_admissible(d);
    }
  }

  if (spec.logical_qubits_per_block < 1) add("k", "logical_qubits_per_block must be >= 1");
  if (!(spec.threshold > 0.0 && spec.threshold < 1.0)) add("threshold", "threshold out of (0,1)");
  if (spec.complexity < 1 || spec.complexity > kComplexityLevels)
    add("complexity", "complexity rank must be in 1..6");

  std::set<std::string> seen;
  for (const auto& r : spec.realizations) {
    if (r == "simulation") {
      add("realizations", "'simulation' is implicit and may not be stored");
    } else if (!is_known_technology(r)) {
      add("realizations", "unknown technology '" + r + "'");
    }
    if (!seen.insert(r).second) add("realizations", "duplicate technology '" + r + "'");
  }

  std::set<std::string> dec_seen;
  for (const auto& dname : spec.decoders) {
    if (dname.empty()) add("decoders", "decoder names must be non-empty");
    if (!dec_seen.insert(dname).second) add("decoders", "duplicate decoder '" + dname + "'");
  }

  return issues;
}

Registry parse_registry(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw RegistryError(std::string("registry: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw RegistryError("registry: top level must be an object");

  Registry reg;
  try {
    reg.schema_version = require_field(j, "schema_version", "registry").get<int>();
  } catch (const json::exception& e) {
    throw RegistryError(std::string("registry: schema_version: ") + e.what());
  }
  if (reg.schema_version != 1)
    throw RegistryError("registry: unsupported schema_version " +
                        std::to_string(reg.schema_version));

  const json& codes = require_field(j, "codes", "registry");
  if (!codes.is_array()) throw RegistryError("registry: 'codes' must be an array");

  std::set<std::string> ids;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    CodeSpec spec = parse_code(codes[i], i);
    if (!ids.insert(spec.id).second)
      throw RegistryError("registry: duplicate code id '" + spec.id + "'");
    auto issues = validate_code(spec);
    if (!issues.empty()) {
      std::string msg = "code '" + spec.id + "' failed validation:";
      for (const auto& issue : issues) msg += "\n  " + issue.field + ": " + issue.message;
      throw RegistryError(msg);
    }
    reg.codes.push_back(std::move(spec));
  }
  return reg;
}

Registry load_registry(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw RegistryError("registry: read failure");
  return parse_registry(buf.str());
}

Registry load_registry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RegistryError("registry: cannot open '" + path + "'");
  return load_registry(in);
}

std::string serialize_registry(const Registry& reg) {
  ordered_json j;
  j["schema_version"] = reg.schema_version;
  j["codes"] = ordered_json::array();
  for (const auto& c : reg.codes) j["codes"].push_back(code_to_json(c));
  return j.dump(2) + "\n";
}

Rational overhead(const CodeSpec& code, long long d) {
  if (!code.distance.admits(d))
    throw std::domain_error("code '" + code.id + "': distance " + std::to_string(d) +
                            " is not admissible");
  return code.overhead.evaluate(d);
}

long long physical_qubits(const CodeSpec& code, long long d, long long num_logical) {
  if (num_logical < 1) throw std::invalid_argument("num_logical must be >= 1");
  if (!code.distance.admits(d))
    throw std::domain_error("code '" + code.id + "': distance " + std::to_string(d) +
                            " is not admissible");
  auto phys = physical_qubits_or_huge(code, d, num_logical);
  if (!phys || *phys > kInt64Max)
    throw std::overflow_error("physical qubit count out of 64-bit range");
  return static_cast<long long>(*phys);
}

MaxDistance max_distance(const CodeSpec& code, long long budget, long long num_logical) {
  if (budget < 0) throw std::invalid_argument("budget must be >= 0");
  if (num_logical < 1) throw std::invalid_argument("num_logical must be >= 1");

  if (code.distance.kind == DistanceDomain::Kind::Fixed) {
    long long d0 = code.distance.d;
    return fits_budget(code, d0, num_logical, budget) ? MaxDistance::fixed_na(d0)
                                                      : MaxDistance::infeasible();
  }

  const long long min_d = code.distance.min_admissible();
  const long long step = code.distance.kind == DistanceDomain::Kind::OddInteger ? 2 : 1;
  if (!fits_budget(code, min_d, num_logical, budget)) return MaxDistance::infeasible();

  // Monotone overhead: double the step index until infeasible, then bisect.
  auto dist_at = [&](long long t) { return min_d + step * t; };
  auto feasible_at = [&](long long t) {
    long long d;
    if (__builtin_mul_overflow(step, t, &d) || __builtin_add_overflow(min_d, d, &d)) return false;
    return fits_budget(code, d, num_logical, budget);
  };

  long long lo = 0;  // feasible
  long long hi = 1;
  while (feasible_at(hi)) {
    lo = hi;
    if (hi > (1LL << 61)) throw std::overflow_error("distance search exceeded representable range");
    hi *= 2;
  }
  while (hi - lo > 1) {
    long long mid = lo + (hi - lo) / 2;
    if (feasible_at(mid))
      lo = mid;
    else
      hi = mid;
  }
  return MaxDistance::achievable(dist_at(lo));
}

}  // namespace qecc
