#include "qecc/benchdata.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace qecc {

namespace {

using ordered_json = nlohmann::ordered_json;

// Nearest anchor index; ties resolve toward the lower index.
std::size_t nearest_index(double value, const std::vector<double>& anchors, bool log_scale) {
  std::size_t best = 0;
  double best_dist = -1;
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    double d = log_scale ? std::abs(std::log10(value) - std::log10(anchors[i]))
                         : std::abs(value - anchors[i]);
    if (best_dist < 0 || d < best_dist) {
      best_dist = d;
      best = i;
    }
  }
  return best;
}

double position_of(std::size_t index, std::size_t count) {
  return count > 1 ? static_cast<double>(index) / static_cast<double>(count - 1) : 0.0;
}

std::size_t overhead_category(const CodeSpec& code) {
  const auto& f = code.overhead;
  int deg = f.degree();
  if (deg == 0) {
    Rational v = f.evaluate(code.distance.min_admissible());
    if (v == Rational(7)) return 0;
    if (v == Rational(9)) return 1;
    throw RegistryError("radar: code '" + code.id +
                        "': constant overhead fits no qubit-overhead category");
  }
  if (deg == 1) return 2;
  if (deg == 2) return 3;
  if (deg == 3) return 4;
  throw RegistryError("radar: code '" + code.id +
                      "': overhead degree " + std::to_string(deg) +
                      " fits no qubit-overhead category");
}

}  // namespace

std::vector<CurveSeries> overhead_series(const Registry& reg, const std::vector<std::string>& ids,
                                         long long d_min, long long d_max) {
  if (d_min < 2 || d_max < d_min)
    throw std::domain_error("overhead series: need 2 <= d_min <= d_max");
  std::vector<CurveSeries> out;
  for (const auto& id : ids) {
    const CodeSpec& code = reg.at(id);
    CurveSeries series;
    series.label = id;
    if (code.distance.kind == DistanceDomain::Kind::Fixed) {
      long long d0 = code.distance.d;
      series.points.push_back({static_cast<double>(d0),
                               static_cast<double>(overhead(code, d0).ceil())});
    } else {
      if (!code.distance.admits(d_min) && code.distance.next_admissible(d_min) > d_max &&
          d_min < code.distance.min_admissible())
        throw std::domain_error("overhead series: range below minimum distance of '" + id + "'");
      long long d = code.distance.admits(d_min) ? d_min : code.distance.next_admissible(d_min);
      if (d < code.distance.min_admissible())
        throw std::domain_error("overhead series: range below minimum distance of '" + id + "'");
      for (; d <= d_max; d = code.distance.next_admissible(d))
        series.points.push_back({static_cast<double>(d),
                                 static_cast<double>(overhead(code, d).ceil())});
    }
    out.push_back(std::move(series));
  }
  return out;
}

std::vector<CurveSeries> threshold_series(const Registry& reg) {
  std::vector<CurveSeries> out;
  for (std::size_t i = 0; i < reg.codes.size(); ++i)
    out.push_back({reg.codes[i].id, {{static_cast<double>(i), reg.codes[i].threshold}}});
  CurveSeries ref;
  ref.label = "reference";
  for (std::size_t i = 0; i < reg.codes.size(); ++i)
    ref.points.push_back({static_cast<double>(i), kUncorrectedReferenceRate});
  out.push_back(std::move(ref));
  return out;
}

RadarAxes radar_data(const Registry& reg) {
  RadarAxes out;

  RadarAxis overhead_axis{"qubit-overhead", {"7", "9", "d", "d^2", "d^3"}, {}};
  for (const auto& c : reg.codes)
    overhead_axis.positions.emplace_back(c.id, position_of(overhead_category(c), 5));
  out.axes.push_back(std::move(overhead_axis));

  const std::vector<double> thr_anchors = {1.9e-3, 0.01, 0.018, 0.045, 0.2, 0.3};
  RadarAxis thr_axis{"error-threshold", {"1.9e-3", "0.01", "0.018", "0.045", "0.2", "0.3"}, {}};
  for (const auto& c : reg.codes)
    thr_axis.positions.emplace_back(
        c.id, position_of(nearest_index(c.threshold, thr_anchors, true), thr_anchors.size()));
  out.axes.push_back(std::move(thr_axis));

  RadarAxis prot_axis{"error-protection",
                      {"bit-flip", "two-qubit", "detect-two-correct-one", "all-pauli"},
                      {}};
  for (const auto& c : reg.codes)
    prot_axis.positions.emplace_back(c.id, position_of(static_cast<std::size_t>(c.protection), 4));
  out.axes.push_back(std::move(prot_axis));

  const std::vector<double> dec_anchors = {0, 1, 2, 5, 10};
  RadarAxis dec_axis{"decoding", {"classical", "1", "2", "5", "10+"}, {}};
  for (const auto& c : reg.codes)
    dec_axis.positions.emplace_back(
        c.id, position_of(nearest_index(static_cast<double>(c.decoders.size()), dec_anchors, false),
                          dec_anchors.size()));
  out.axes.push_back(std::move(dec_axis));

  RadarAxis tg_axis{"transversal-gates", {"none", "clifford", "teleportation", "lattice-surgery"}, {}};
  for (const auto& c : reg.codes) {
    std::size_t idx = 0;
    switch (c.transversal) {
      case Transversal::None:
        idx = 0;
        break;
      case Transversal::Clifford:
        idx = 1;
        break;
      case Transversal::Teleportation:
        idx = 2;
        break;
      case Transversal::TPGLatticeSurgery:
      case Transversal::LatticeSurgery:
        idx = 3;
        break;
    }
    tg_axis.positions.emplace_back(c.id, position_of(idx, 4));
  }
  out.axes.push_back(std::move(tg_axis));

  RadarAxis scal_axis{"scalability", {"no", "yes"}, {}};
  for (const auto& c : reg.codes)
    scal_axis.positions.emplace_back(c.id, position_of(c.scalable ? 1 : 0, 2));
  out.axes.push_back(std::move(scal_axis));

  const std::vector<double> real_anchors = {0, 1, 2, 3, 6};
  RadarAxis real_axis{"realization", {"none", "1", "2", "3", "6"}, {}};
  for (const auto& c : reg.codes)
    real_axis.positions.emplace_back(
        c.id,
        position_of(nearest_index(static_cast<double>(c.realizations.size()), real_anchors, false),
                    real_anchors.size()));
  out.axes.push_back(std::move(real_axis));

  RadarAxis cx_axis{"complexity",
                    {"very-low", "low", "medium", "high", "very-high", "extremely-high"},
                    {}};
  for (const auto& c : reg.codes)
    cx_axis.positions.emplace_back(c.id, position_of(static_cast<std::size_t>(c.complexity - 1),
                                                     kComplexityLevels));
  out.axes.push_back(std::move(cx_axis));

  return out;
}

double logical_error_rate(const LERModel& m, double p, long long d) {
  if (!(m.prefactor > 0)) throw std::invalid_argument("LER model: prefactor must be positive");
  if (!(m.p_threshold > 0 && m.p_threshold < 1))
    throw std::invalid_argument("LER model: threshold out of (0,1)");
  if (d < 2) throw std::domain_error("LER: d must be >= 2");
  if (!(p > 0)) throw std::domain_error("LER: p must be positive");
  double exponent = static_cast<double>((d + 1) / 2);
  return std::min(1.0, m.prefactor * std::pow(p / m.p_threshold, exponent));
}

RequiredDistance required_distance(const LERModel& m, double p, double target, long long d_max) {
  if (!(target > 0 && target < 1)) throw std::invalid_argument("target must be in (0,1)");
  if (d_max < 3) throw std::invalid_argument("d_max must be >= 3");
  if (p >= m.p_threshold) return {false, 0};
  // A hair of relative slack so that exact-boundary targets count as met
  // despite double rounding.
  const double limit = target * (1.0 + 1e-9);
  for (long long d = 3; d <= d_max; d += 2)
    if (logical_error_rate(m, p, d) <= limit) return {true, d};
  return {false, 0};
}

std::string format_number(double v) { return nlohmann::json(v).dump(); }

namespace {

std::size_t write_all(std::ostream& out, const std::string& text) {
  out << text;
  if (!out) throw std::runtime_error("export: sink write failure");
  return text.size();
}

ordered_json series_to_json(const std::vector<CurveSeries>& series) {
  ordered_json j;
  j["series"] = ordered_json::array();
  for (const auto& s : series) {
    ordered_json entry;
    entry["label"] = s.label;
    entry["points"] = ordered_json::array();
    for (const auto& p : s.points) entry["points"].push_back({p.x, p.y});
    j["series"].push_back(std::move(entry));
  }
  return j;
}

ordered_json radar_to_json(const RadarAxes& axes) {
  ordered_json j;
  j["axes"] = ordered_json::array();
  for (const auto& axis : axes.axes) {
    ordered_json entry;
    entry["name"] = axis.name;
    entry["categories"] = axis.categories;
    entry["positions"] = ordered_json::array();
    for (const auto& [code, pos] : axis.positions)
      entry["positions"].push_back({{"code", code}, {"position", pos}});
    j["axes"].push_back(std::move(entry));
  }
  return j;
}

}  // namespace

std::size_t export_csv(const std::vector<CurveSeries>& series, std::ostream& out) {
  std::string text = "label,x,y\n";
  for (const auto& s : series)
    for (const auto& p : s.points)
      text += s.label + "," + format_number(p.x) + "," + format_number(p.y) + "\n";
  return write_all(out, text);
}

std::size_t export_json(const std::vector<CurveSeries>& series, std::ostream& out) {
  return write_all(out, series_to_json(series).dump(2) + "\n");
}

std::size_t export_csv(const RadarAxes& axes, std::ostream& out) {
  std::string text = "axis,code,position\n";
  for (const auto& axis : axes.axes)
    for (const auto& [code, pos] : axis.positions)
      text += axis.name + "," + code + "," + format_number(pos) + "\n";
  return write_all(out, text);
}

std::size_t export_json(const RadarAxes& axes, std::ostream& out) {
  return write_all(out, radar_to_json(axes).dump(2) + "\n");
}

}  // namespace qecc
