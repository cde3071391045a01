#pragma once

#include "qecc/rational.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qecc {

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Physical-qubit cost of one code block as a rational polynomial in the code
// distance d: (sum_i numerator_coeffs[i] * d^i) / denominator.
struct OverheadFormula {
  std::vector<long long> numerator_coeffs;  // coefficient of d^i at index i
  long long denominator = 1;

  // Exact value at distance d. Throws std::overflow_error if the value does
  // not fit a 64-bit rational.
  Rational evaluate(long long d) const;

  int degree() const;
  std::string str() const;  // e.g. "d^2" or "(5d^2 - 2d - 1)/2"

  bool operator==(const OverheadFormula&) const = default;
};

// Set of admissible code distances. Fixed codes (Shor, Steane) have a single
// structural distance; lattice codes take any integer, Bacon-Shor odd only.
struct DistanceDomain {
  enum class Kind { Fixed, AnyInteger, OddInteger };

  Kind kind = Kind::AnyInteger;
  long long d = 2;  // the fixed distance, or the minimum for open kinds

  static DistanceDomain fixed(long long d0) { return {Kind::Fixed, d0}; }
  static DistanceDomain any_integer(long long min_d) { return {Kind::AnyInteger, min_d}; }
  static DistanceDomain odd_integer(long long min_d) { return {Kind::OddInteger, min_d}; }

  bool admits(long long dist) const;
  long long min_admissible() const;
  long long next_admissible(long long dist) const;  // smallest admissible value > dist

  bool operator==(const DistanceDomain&) const = default;
};

enum class Protection {
  BitFlipOnly,          // detects/corrects bit flips only
  ArbitrarySingle,      // corrects an arbitrary single-qubit error
  DetectTwoCorrectOne,  // detects two-qubit errors, corrects one
  AllPauli,             // detects and corrects all Pauli errors (distance-limited)
};

enum class Transversal { None, Clifford, Teleportation, TPGLatticeSurgery, LatticeSurgery };

inline constexpr int kComplexityLevels = 6;  // 1 = very low .. 6 = extremely high

struct CodeSpec {
  std::string id;
  std::string display_name;
  OverheadFormula overhead;
  DistanceDomain distance;
  long long logical_qubits_per_block = 1;  // k
  double threshold = 0.0;                  // strictly in (0,1)
  Protection protection = Protection::AllPauli;
  std::vector<std::string> decoders;
  Transversal transversal = Transversal::None;
  bool scalable = false;
  std::vector<std::string> realizations;  // closed vocabulary; never "simulation"
  int complexity = 1;                     // 1..6

  bool operator==(const CodeSpec&) const = default;
};

struct Registry {
  int schema_version = 1;
  std::vector<CodeSpec> codes;

  const CodeSpec* find(std::string_view id) const;
  const CodeSpec& at(std::string_view id) const;  // throws RegistryError on unknown id

  bool operator==(const Registry&) const = default;
};

struct ValidationIssue {
  std::string code_id;
  std::string field;
  std::string message;

  bool operator==(const ValidationIssue&) const = default;
};

std::string to_string(Protection p);
std::string to_string(Transversal t);
std::optional<Protection> protection_from_string(std::string_view s);
std::optional<Transversal> transversal_from_string(std::string_view s);

// Hardware technology vocabulary. "simulation" is reserved: every code is
// implicitly realizable in simulation and registry files may not list it.
const std::vector<std::string>& technology_vocabulary();
bool is_known_technology(std::string_view name);

// Empty report iff the spec satisfies every invariant.
std::vector<ValidationIssue> validate_code(const CodeSpec& spec);

// The shipped nine-code registry and its canonical JSON form.
const Registry& builtin_registry();
const char* builtin_registry_json();

Registry parse_registry(const std::string& json_text);  // throws RegistryError
Registry load_registry(std::istream& in);
Registry load_registry_file(const std::string& path);
std::string serialize_registry(const Registry& reg);

// Exact per-block overhead at distance d. Throws std::domain_error when d is
// not admissible for the code.
Rational overhead(const CodeSpec& code, long long d);

// blocks * ceil(overhead), blocks = ceil(num_logical / k).
long long physical_qubits(const CodeSpec& code, long long d, long long num_logical);

struct MaxDistance {
  enum class Kind { Achievable, FixedNA, Infeasible };

  Kind kind = Kind::Infeasible;
  long long d = 0;  // achieved distance; the structural d0 for FixedNA

  static MaxDistance achievable(long long dist) { return {Kind::Achievable, dist}; }
  static MaxDistance fixed_na(long long d0) { return {Kind::FixedNA, d0}; }
  static MaxDistance infeasible() { return {Kind::Infeasible, 0}; }

  bool operator==(const MaxDistance&) const = default;
};

// Largest admissible d whose physical-qubit demand fits the budget.
MaxDistance max_distance(const CodeSpec& code, long long budget, long long num_logical);

}  // namespace qecc
