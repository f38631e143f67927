#pragma once

#include <string>
#include <vector>

#include "diracspec/multop.hpp"
#include "diracspec/torus.hpp"

namespace diracspec {

// One spectrum report, serialized deterministically:
//   { "signature": [p,q], "window": K,
//     "point": [ { "re":., "im":., "witnesses": [[k...],...] } ],
//     "scans": [ { "lambda": [re,im], "ray": "null", "norms": [...] } ] }
// Point values ordered by (|lambda|, arg lambda), witnesses lexicographic.
struct SpectrumReport {
  int sig_p = 0;
  int sig_q = 0;
  long window = 0;
  std::vector<PointValue> point;
  std::vector<MinkowskiScan> scans;
};

SpectrumReport make_report(const TorusSpectrumReport& torus);

std::string report_json(const SpectrumReport& report);

// CSV plot data: one row (re, im, witness count) per point value, same
// ordering as the JSON.
std::string report_csv(const SpectrumReport& report);

std::string scan_csv(const MinkowskiScan& scan);

}  // namespace diracspec
