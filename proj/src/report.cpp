#include "diracspec/report.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>

namespace diracspec {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

SpectrumReport make_report(const TorusSpectrumReport& torus) {
  SpectrumReport rep;
  rep.sig_p = torus.sig.p;
  rep.sig_q = torus.sig.q;
  rep.window = torus.window;
  rep.point = torus.point;
  return rep;
}

std::string report_json(const SpectrumReport& report) {
  nlohmann::json j;
  j["signature"] = {report.sig_p, report.sig_q};
  j["window"] = report.window;
  auto points = nlohmann::json::array();
  for (const PointValue& pv : report.point) {
    nlohmann::json entry;
    entry["re"] = pv.value.real();
    entry["im"] = pv.value.imag();
    entry["witnesses"] = pv.witnesses;
    points.push_back(std::move(entry));
  }
  j["point"] = std::move(points);
  auto scans = nlohmann::json::array();
  for (const MinkowskiScan& s : report.scans) {
    nlohmann::json entry;
    entry["lambda"] = {s.lambda.real(), s.lambda.imag()};
    entry["ray"] = s.ray;
    entry["norms"] = s.norms;
    scans.push_back(std::move(entry));
  }
  j["scans"] = std::move(scans);
  return j.dump(2) + "\n";
}

std::string report_csv(const SpectrumReport& report) {
  std::string out = "re,im,witness_count\n";
  for (const PointValue& pv : report.point) {
    out += fmt(pv.value.real());
    out += ',';
    out += fmt(pv.value.imag());
    out += ',';
    out += std::to_string(pv.witnesses.size());
    out += '\n';
  }
  return out;
}

std::string scan_csv(const MinkowskiScan& scan) {
  std::string out = "param,norm,lower_bound\n";
  for (size_t i = 0; i < scan.norms.size(); ++i) {
    out += fmt(scan.params[i]);
    out += ',';
    out += fmt(scan.norms[i]);
    out += ',';
    out += fmt(scan.lower_bounds[i]);
    out += '\n';
  }
  return out;
}

}  // namespace diracspec
