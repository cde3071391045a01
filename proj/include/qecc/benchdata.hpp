#pragma once

#include "qecc/registry.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qecc {

struct CurvePoint {
  double x = 0;
  double y = 0;

  bool operator==(const CurvePoint&) const = default;
};

struct CurveSeries {
  std::string label;
  std::vector<CurvePoint> points;  // x strictly increasing

  bool operator==(const CurveSeries&) const = default;
};

// Qubit demand per block over a distance range; fixed codes contribute their
// single structural point.
std::vector<CurveSeries> overhead_series(const Registry& reg, const std::vector<std::string>& ids,
                                         long long d_min, long long d_max);

inline constexpr double kUncorrectedReferenceRate = 1e-3;

// One single-point series per code (x = registry position) plus a "reference"
// series at the uncorrected-hardware rate.
std::vector<CurveSeries> threshold_series(const Registry& reg);

struct RadarAxis {
  std::string name;
  std::vector<std::string> categories;  // outward = later index
  std::vector<std::pair<std::string, double>> positions;  // (code id, index/(count-1))
};

struct RadarAxes {
  std::vector<RadarAxis> axes;
};

// Eight comparison axes with every code normalized onto [0,1]. Throws
// RegistryError when a code's value fits no category.
RadarAxes radar_data(const Registry& reg);

// Logical-error-rate ansatz: p_L = min(1, A * (p/p_th)^floor((d+1)/2)).
struct LERModel {
  double prefactor = 0.1;  // A
  double p_threshold = 0.018;
};

double logical_error_rate(const LERModel& m, double p, long long d);

struct RequiredDistance {
  bool achievable = false;
  long long d = 0;

  bool operator==(const RequiredDistance&) const = default;
};

// Smallest odd d >= 3 whose logical error rate meets the target; not
// achievable at or above threshold, or past d_max.
RequiredDistance required_distance(const LERModel& m, double p, double target, long long d_max);

// Exports return bytes written. CSV carries a mandatory header; both formats
// print numbers in shortest round-trip decimal form.
std::size_t export_csv(const std::vector<CurveSeries>& series, std::ostream& out);
std::size_t export_json(const std::vector<CurveSeries>& series, std::ostream& out);
std::size_t export_csv(const RadarAxes& axes, std::ostream& out);
std::size_t export_json(const RadarAxes& axes, std::ostream& out);

std::string format_number(double v);

}  // namespace qecc
