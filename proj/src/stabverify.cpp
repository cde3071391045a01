#include "qecc/stabverify.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>

namespace qecc::stab {

namespace {

using json = nlohmann::json;

void require_same_size(const PauliOperator& a, const PauliOperator& b) {
  if (a.n != b.n)
    throw std::invalid_argument("pauli size mismatch: " + std::to_string(a.n) + " vs " +
                                std::to_string(b.n));
}

// (x|z) row of a Pauli as one 2n-bit vector.
BitVec symplectic_row(const PauliOperator& p) {
  BitVec row(2 * p.n);
  for (int i = 0; i < p.n; ++i) {
    if (p.x.get(i)) row.set(i, true);
    if (p.z.get(i)) row.set(p.n + i, true);
  }
  return row;
}

int first_set_bit(const BitVec& v) {
  for (int i = 0; i < v.size(); ++i)
    if (v.get(i)) return i;
  return -1;
}

// Candidate count sum_w C(n,w)*a^w, saturating.
std::uint64_t enumeration_size(int n, int w_max, int letters) {
  constexpr std::uint64_t kHuge = ~std::uint64_t{0};
  std::uint64_t total = 0;
  for (int w = 1; w <= std::min(w_max, n); ++w) {
    long double binom = 1.0L;
    for (int i = 0; i < w; ++i) binom = binom * static_cast<long double>(n - i) / (i + 1);
    long double count = binom;
    for (int i = 0; i < w; ++i) count *= letters;
    if (count > 1.0e18L) return kHuge;
    total += static_cast<std::uint64_t>(count + 0.5L);
    if (total > (std::uint64_t{1} << 62)) return kHuge;
  }
  return total;
}

}  // namespace

int BitVec::popcount() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool BitVec::any() const {
  for (std::uint64_t w : words_)
    if (w) return true;
  return false;
}

int BitVec::and_parity(const BitVec& a, const BitVec& b) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) acc ^= a.words_[i] & b.words_[i];
  return std::popcount(acc) & 1;
}

int PauliOperator::weight() const {
  int w = 0;
  for (int i = 0; i < n; ++i)
    if (x.get(i) || z.get(i)) ++w;
  return w;
}

bool PauliOperator::is_identity() const { return !x.any() && !z.any(); }

std::string PauliOperator::str() const {
  std::string s(n, 'I');
  for (int i = 0; i < n; ++i) {
    bool xi = x.get(i), zi = z.get(i);
    if (xi && zi)
      s[i] = 'Y';
    else if (xi)
      s[i] = 'X';
    else if (zi)
      s[i] = 'Z';
  }
  return s;
}

PauliOperator parse_pauli(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("pauli string must be non-empty");
  PauliOperator p;
  p.n = static_cast<int>(text.size());
  p.x = BitVec(p.n);
  p.z = BitVec(p.n);
  for (int i = 0; i < p.n; ++i) {
    switch (text[i]) {
      case 'I':
        break;
      case 'X':
        p.x.set(i, true);
        break;
      case 'Z':
        p.z.set(i, true);
        break;
      case 'Y':
        p.x.set(i, true);
        p.z.set(i, true);
        break;
      default:
        throw std::invalid_argument(std::string("illegal pauli character '") + text[i] +
                                    "' at position " + std::to_string(i));
    }
  }
  return p;
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  require_same_size(a, b);
  PauliOperator p = a;
  p.x.xor_with(b.x);
  p.z.xor_with(b.z);
  return p;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  require_same_size(a, b);
  return (BitVec::and_parity(a.x, b.z) ^ BitVec::and_parity(a.z, b.x)) == 0;
}

bool generators_commute(const StabilizerCode& code) {
  for (std::size_t i = 0; i < code.generators.size(); ++i)
    for (std::size_t j = i + 1; j < code.generators.size(); ++j)
      if (!commutes(code.generators[i], code.generators[j])) return false;
  return true;
}

bool generators_independent(const StabilizerCode& code) {
  return StabilizerGroup(code).rank() == static_cast<int>(code.generators.size());
}

void check_generators(const StabilizerCode& code) {
  for (const auto& g : code.generators)
    if (g.n != code.n)
      throw std::invalid_argument("code '" + code.name + "': generator " + g.str() +
                                  " has wrong qubit count");
  for (std::size_t i = 0; i < code.generators.size(); ++i)
    for (std::size_t j = i + 1; j < code.generators.size(); ++j)
      if (!commutes(code.generators[i], code.generators[j]))
        throw std::invalid_argument("code '" + code.name + "': generators " +
                                    code.generators[i].str() + " and " + code.generators[j].str() +
                                    " anticommute");
  if (!generators_independent(code))
    throw std::invalid_argument("code '" + code.name + "': generators are GF(2)-dependent");
}

Syndrome syndrome(const StabilizerCode& code, const PauliOperator& error) {
  if (error.n != code.n)
    throw std::invalid_argument("error operator size " + std::to_string(error.n) +
                                " does not match code on " + std::to_string(code.n) + " qubits");
  Syndrome s(code.generators.size(), 0);
  for (std::size_t g = 0; g < code.generators.size(); ++g)
    s[g] = commutes(code.generators[g], error) ? 0 : 1;
  return s;
}

StabilizerGroup::StabilizerGroup(const StabilizerCode& code) : n_(code.n) {
  for (const auto& g : code.generators) {
    BitVec row = symplectic_row(g);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (row.get(pivots_[r])) row.xor_with(rows_[r]);
    int pivot = first_set_bit(row);
    if (pivot < 0) continue;  // dependent generator spans nothing new
    rows_.push_back(row);
    pivots_.push_back(pivot);
  }
}

bool StabilizerGroup::contains(const PauliOperator& p) const {
  if (p.n != n_)
    throw std::invalid_argument("operator size does not match stabilizer group");
  BitVec v = symplectic_row(p);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (v.get(pivots_[r])) v.xor_with(rows_[r]);
  return !v.any();
}

bool in_stabilizer_group(const StabilizerCode& code, const PauliOperator& p) {
  return StabilizerGroup(code).contains(p);
}

DistanceResult min_distance(const StabilizerCode& code, int w_max, Restrict restrict_to,
                            std::uint64_t cap) {
  if (w_max < 1) throw std::invalid_argument("w_max must be >= 1");
  const int letters = restrict_to == Restrict::All ? 3 : 1;
  std::uint64_t size = enumeration_size(code.n, w_max, letters);
  if (size > cap)
    throw ResourceLimitError("enumeration of " + std::to_string(size) +
                             " operators exceeds cap " + std::to_string(cap));

  const StabilizerGroup group(code);
  DistanceResult result;
  result.distance = w_max;

  const char* alphabet = restrict_to == Restrict::All    ? "XYZ"
                         : restrict_to == Restrict::XOnly ? "X"
                                                          : "Z";

  std::vector<int> support;
  std::vector<int> letter;  // index into alphabet per support position

  auto apply_letter = [&](PauliOperator& p, int qubit, char ch) {
    p.x.set(qubit, ch == 'X' || ch == 'Y');
    p.z.set(qubit, ch == 'Z' || ch == 'Y');
  };

  for (int w = 1; w <= std::min(w_max, code.n); ++w) {
    support.resize(w);
    std::iota(support.begin(), support.end(), 0);
    while (true) {
      // all letter assignments for this support, first position most significant
      letter.assign(w, 0);
      while (true) {
        PauliOperator p;
        p.n = code.n;
        p.x = BitVec(code.n);
        p.z = BitVec(code.n);
        for (int i = 0; i < w; ++i) apply_letter(p, support[i], alphabet[letter[i]]);
        ++result.examined;
        bool zero_syndrome = true;
        for (const auto& g : code.generators) {
          if (!commutes(g, p)) {
            zero_syndrome = false;
            break;
          }
        }
        if (zero_syndrome && !group.contains(p)) {
          result.found = true;
          result.distance = w;
          result.witness = p;
          return result;
        }
        int pos = w - 1;
        while (pos >= 0 && letter[pos] == letters - 1) letter[pos--] = 0;
        if (pos < 0) break;
        ++letter[pos];
      }
      // next combination, lexicographic
      int i = w - 1;
      while (i >= 0 && support[i] == code.n - w + i) --i;
      if (i < 0) break;
      ++support[i];
      for (int j = i + 1; j < w; ++j) support[j] = support[j - 1] + 1;
    }
  }
  return result;
}

CorrectabilityReport check_correctability(const StabilizerCode& code, int t, Restrict restrict_to,
                                          std::uint64_t cap) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  DistanceResult d = min_distance(code, 2 * t, restrict_to, cap);
  CorrectabilityReport report;
  report.t = t;
  report.correctable = !d.found;
  report.witness = d.witness;
  report.examined = d.examined;
  return report;
}

namespace {

StabilizerCode make_code(std::string name, std::initializer_list<const char*> gens) {
  StabilizerCode code;
  code.name = std::move(name);
  code.generators.reserve(gens.size());
  for (const char* g : gens) code.generators.push_back(parse_pauli(g));
  code.n = code.generators.front().n;
  return code;
}

}  // namespace

const std::vector<StabilizerCode>& builtin_codes() {
  static const std::vector<StabilizerCode> kCodes = [] {
    std::vector<StabilizerCode> codes;
    codes.push_back(make_code("repetition-3", {"ZZI", "IZZ"}));
    codes.push_back(make_code("steane-7", {"IIIXXXX", "IXXIIXX", "XIXIXIX",  //
                                           "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"}));
    // Stabilizers of the standard Shor basis states: weight-2 Z pairs inside
    // each trio plus the two six-qubit X operators comparing trio signs.
    codes.push_back(make_code("shor-9", {"ZZIIIIIII", "IZZIIIIII", "IIIZZIIII", "IIIIZZIII",
                                         "IIIIIIZZI", "IIIIIIIZZ", "XXXXXXIII", "IIIXXXXXX"}));
    codes.push_back(make_code("bacon-shor-9",
                              {"XXXXXXIII", "IIIXXXXXX", "ZZIZZIZZI", "IZZIZZIZZ"}));
    // Distance-3 rotated surface code on a 3x3 data grid (row-major), bulk
    // plaquettes checkerboarded, weight-2 boundary checks.
    codes.push_back(make_code("rotated-surface-d3",
                              {"IXXIIIIII", "XXIXXIIII", "IIIIXXIXX", "IIIIIIXXI",  //
                               "ZIIZIIIII", "IIIZZIZZI", "IZZIZZIII", "IIIIIZIIZ"}));
    for (const auto& c : codes) check_generators(c);
    return codes;
  }();
  return kCodes;
}

const StabilizerCode* find_builtin(std::string_view name) {
  for (const auto& c : builtin_codes())
    if (c.name == name) return &c;
  return nullptr;
}

StabilizerCode parse_code_definition(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("code definition: invalid JSON: ") + e.what());
  }
  StabilizerCode code;
  try {
    code.name = j.at("name").get<std::string>();
    code.n = j.at("n").get<int>();
    for (const auto& g : j.at("generators")) code.generators.push_back(parse_pauli(g.get<std::string>()));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("code definition: ") + e.what());
  }
  if (code.n < 1) throw std::invalid_argument("code definition: n must be >= 1");
  if (code.generators.empty()) throw std::invalid_argument("code definition: no generators");
  check_generators(code);
  return code;
}

StabilizerCode load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open code definition '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code_definition(buf.str());
}

}  // namespace qecc::stab
