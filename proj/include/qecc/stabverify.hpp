#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qecc::stab {

// Packed GF(2) vector.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int n) : n_(n), words_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void set(int i, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void xor_with(const BitVec& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  }

  int popcount() const;
  bool any() const;

  // Parity of the AND of two equally sized vectors.
  static int and_parity(const BitVec& a, const BitVec& b);

  bool operator==(const BitVec&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Phase-free n-qubit Pauli in binary-symplectic form: qubit i carries X iff
// x.get(i), Z iff z.get(i), Y iff both.
struct PauliOperator {
  int n = 0;
  BitVec x;
  BitVec z;

  int weight() const;
  bool is_identity() const;
  std::string str() const;

  bool operator==(const PauliOperator&) const = default;
};

PauliOperator parse_pauli(std::string_view text);  // alphabet {I,X,Y,Z}

// Phase-free product: bitwise XOR of the symplectic vectors.
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);

// Symplectic product (a.x . b.z + a.z . b.x) mod 2 == 0.
bool commutes(const PauliOperator& a, const PauliOperator& b);

struct StabilizerCode {
  std::string name;
  int n = 0;
  std::vector<PauliOperator> generators;
};

bool generators_commute(const StabilizerCode& code);
bool generators_independent(const StabilizerCode& code);

// Throws std::invalid_argument naming the violation.
void check_generators(const StabilizerCode& code);

using Syndrome = std::vector<std::uint8_t>;  // bit per generator: 1 = anticommutes

Syndrome syndrome(const StabilizerCode& code, const PauliOperator& error);

// Row-reduced GF(2) span of the generators' (x|z) rows, for repeated
// membership queries.
class StabilizerGroup {
 public:
  explicit StabilizerGroup(const StabilizerCode& code);

  bool contains(const PauliOperator& p) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int n_ = 0;
  std::vector<BitVec> rows_;
  std::vector<int> pivots_;
};

bool in_stabilizer_group(const StabilizerCode& code, const PauliOperator& p);

enum class Restrict { All, XOnly, ZOnly };

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

struct DistanceResult {
  bool found = false;  // false: every operator up to w_max is detected or stabilizing
  int distance = 0;    // the minimum weight when found, else the w_max searched
  std::optional<PauliOperator> witness;  // lexicographically first minimum-weight logical
  std::uint64_t examined = 0;
};

// Exhaustive search for the lightest undetectable non-stabilizer operator.
// Enumeration is lexicographic over supports, then letters X < Y < Z, so the
// witness is reproducible. Throws ResourceLimitError when the candidate count
// exceeds the cap instead of truncating.
DistanceResult min_distance(const StabilizerCode& code, int w_max, Restrict restrict_to = Restrict::All,
                            std::uint64_t cap = kDefaultEnumerationCap);

struct CorrectabilityReport {
  bool correctable = false;
  int t = 0;
  std::optional<PauliOperator> witness;
  std::uint64_t examined = 0;
};

// Correctable for t errors iff no undetectable non-stabilizer operator of
// weight <= 2t exists (distance >= 2t + 1).
CorrectabilityReport check_correctability(const StabilizerCode& code, int t,
                                          Restrict restrict_to = Restrict::All,
                                          std::uint64_t cap = kDefaultEnumerationCap);

const std::vector<StabilizerCode>& builtin_codes();
const StabilizerCode* find_builtin(std::string_view name);

// {"name": ..., "n": ..., "generators": ["ZZI", ...]}
StabilizerCode parse_code_definition(const std::string& json_text);
StabilizerCode load_code_file(const std::string& path);

}  // namespace qecc::stab
