#include "diracspec/quasi_iso.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace diracspec {

long Grid::size() const {
  long total = 1;
  for (long c : count) {
    if (c < 1) throw std::invalid_argument("grid: axis count >= 1 required");
    total *= c;
  }
  return total;
}

std::vector<long> Grid::coords(long flat) const {
  std::vector<long> c(count.size());
  for (int d = dim() - 1; d >= 0; --d) {
    c[d] = flat % count[d];
    flat /= count[d];
  }
  return c;
}

std::vector<double> Grid::point(long flat) const {
  const std::vector<long> c = coords(flat);
  std::vector<double> x(count.size());
  for (int d = 0; d < dim(); ++d) x[d] = origin[d] + step[d] * static_cast<double>(c[d]);
  return x;
}

bool Grid::on_boundary(long flat) const {
  const std::vector<long> c = coords(flat);
  for (int d = 0; d < dim(); ++d)
    if (c[d] == 0 || c[d] == count[d] - 1) return true;
  return false;
}

Grid uniform_grid_1d(double lo, double hi, long count, bool periodic) {
  if (count < 2) throw std::invalid_argument("grid: at least two samples required");
  Grid g;
  g.origin = {lo};
  g.step = {(hi - lo) / static_cast<double>(count - 1)};
  g.count = {count};
  g.periodic = periodic;
  return g;
}

namespace {

Eigen::MatrixXd minkowski_eta(const Signature& sig) {
  Eigen::VectorXd d(sig.n());
  for (int j = 0; j < sig.n(); ++j) d[j] = sig.kappa(j);
  return d.asDiagonal();
}

double spectral_norm(const Eigen::MatrixXd& a) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(a).singularValues()(0);
}

Eigen::Matrix2d boost_matrix(double angle) {
  const double c = std::cosh(2.0 * angle), s = std::sinh(2.0 * angle);
  Eigen::Matrix2d b;
  b << c, s, s, c;
  return b;
}

}  // namespace

void validate_frame(const Signature& sig, const Eigen::MatrixXd& frame) {
  if (frame.rows() != sig.n() || frame.cols() != sig.n())
    throw InvalidFrame("frame: wrong dimensions");
  const Eigen::MatrixXd eta = minkowski_eta(sig);
  const double scale = 1.0 + frame.squaredNorm();
  const double defect = (frame.transpose() * eta * frame - eta).cwiseAbs().maxCoeff();
  if (defect > 1e-9 * scale)
    throw InvalidFrame("frame: does not preserve the (p,q) form");
  // Identity component: both the time block and the space block keep
  // orientation.  The blocks of a boost are well-conditioned even when the
  // full determinant is numerically unresolvable.
  if (sig.p > 0 && frame.topLeftCorner(sig.p, sig.p).determinant() <= 0.0)
    throw InvalidFrame("frame: time block not orientation-preserving");
  if (sig.q > 0 && frame.bottomRightCorner(sig.q, sig.q).determinant() <= 0.0)
    throw InvalidFrame("frame: space block not orientation-preserving");
}

BoostField boost_field_from_angle(
    const Grid& grid, const std::function<double(const std::vector<double>&)>& angle) {
  BoostField f;
  f.sig = Signature{1, 1};
  f.grid = grid;
  const long total = grid.size();
  f.frames.reserve(total);
  for (long i = 0; i < total; ++i) f.frames.push_back(boost_matrix(angle(grid.point(i))));
  return f;
}

BoostField boost_field_from_frames(const Signature& sig, const Grid& grid,
                                   std::vector<Eigen::MatrixXd> frames) {
  if (static_cast<long>(frames.size()) != grid.size())
    throw std::invalid_argument("boost field: frame count does not match grid");
  for (const auto& fr : frames) validate_frame(sig, fr);
  BoostField f;
  f.sig = sig;
  f.grid = grid;
  f.frames = std::move(frames);
  return f;
}

Eigen::MatrixXd frame_inverse(const Signature& sig, const Eigen::MatrixXd& frame) {
  const Eigen::MatrixXd eta = minkowski_eta(sig);
  return eta * frame.transpose() * eta;
}

FrameScan frame_norm_scan(const BoostField& field) {
  if (field.frames.empty()) throw std::invalid_argument("frame_norm_scan: empty field");
  FrameScan scan;
  for (long i = 0; i < static_cast<long>(field.frames.size()); ++i) {
    validate_frame(field.sig, field.frames[i]);
    const double fwd = spectral_norm(field.frames[i]);
    const double inv = spectral_norm(frame_inverse(field.sig, field.frames[i]));
    if (fwd > scan.max_norm) {
      scan.max_norm = fwd;
      scan.argmax = i;
    }
    if (inv > scan.max_inverse_norm) {
      scan.max_inverse_norm = inv;
      scan.arg_inverse_max = i;
    }
  }
  return scan;
}

QuasiIsoVerdict decide_quasi_isometry(const BoostField& f1, const BoostField& f2,
                                      double threshold) {
  if (f1.sig.p != f2.sig.p || f1.sig.q != f2.sig.q)
    throw std::invalid_argument("decide_quasi_isometry: signature mismatch");
  if (f1.frames.size() != f2.frames.size())
    throw std::invalid_argument("decide_quasi_isometry: fields on different grids");

  QuasiIsoVerdict verdict;
  double worst = 1.0;
  long arg_worst = 0;
  std::vector<double> records;
  std::vector<long> record_samples;

  for (long i = 0; i < static_cast<long>(f1.frames.size()); ++i) {
    validate_frame(f1.sig, f1.frames[i]);
    validate_frame(f2.sig, f2.frames[i]);
    const Eigen::MatrixXd x = frame_inverse(f1.sig, f1.frames[i]) * f2.frames[i];
    const double g = std::max(spectral_norm(x),
                              spectral_norm(frame_inverse(f1.sig, x)));
    if (g > worst || i == 0) {
      worst = std::max(g, 1.0);
      arg_worst = i;
      records.push_back(worst);
      record_samples.push_back(i);
    }
  }
  verdict.bound = worst * worst;  // h2 <= C^2 h1 with C the norm bound

  if (f1.grid.periodic) {
    verdict.quasi_isometric = true;
    verdict.note = "periodic domain: any two bundle metrics are quasi-isometric";
    return verdict;
  }

  const bool diverging = worst > threshold && records.size() >= 4 &&
                         f1.grid.on_boundary(arg_worst);
  if (diverging) {
    verdict.quasi_isometric = false;
    verdict.evidence_norms = std::move(records);
    verdict.evidence_samples = std::move(record_samples);
    verdict.note = "transition norms grow past the divergence threshold toward the grid boundary";
  } else {
    verdict.quasi_isometric = true;
    verdict.note = "bounded transition norms on the sampled grid";
  }
  return verdict;
}

double riemannian_metric_at(const BoostField& field, long flat,
                            const Eigen::VectorXd& X, const Eigen::VectorXd& Y) {
  if (X.size() != field.sig.n() || Y.size() != field.sig.n())
    throw std::invalid_argument("riemannian_metric_at: tangent vector length mismatch");
  validate_frame(field.sig, field.at(flat));
  const Eigen::MatrixXd inv = frame_inverse(field.sig, field.at(flat));
  return (inv * X).dot(inv * Y);
}

EqualityNote spectral_equality_report(const QuasiIsoVerdict& verdict,
                                      bool compact_domain) {
  if (compact_domain)
    return {"spectra coincide",
            "compact base manifold: independent of the time-like subbundle"};
  if (verdict.quasi_isometric)
    return {"spectra coincide",
            "quasi-isometric on the sampled grid with C = " + std::to_string(verdict.bound)};
  return {"no conclusion",
          "theorem hypothesis not established: transition norms unbounded on samples; "
          "no counterexample is known either"};
}

namespace {

BoostField load_json_field(std::istream& in) {
  nlohmann::json j;
  in >> j;
  const auto sig_arr = j.at("signature");
  const Signature sig = make_signature(sig_arr.at(0).get<int>(), sig_arr.at(1).get<int>());

  Grid grid;
  const auto& gj = j.at("grid");
  grid.origin = gj.at("origin").get<std::vector<double>>();
  grid.step = gj.at("step").get<std::vector<double>>();
  grid.count = gj.at("count").get<std::vector<long>>();
  grid.periodic = gj.value("periodic", false);
  if (grid.origin.size() != grid.count.size() || grid.step.size() != grid.count.size())
    throw std::invalid_argument("grid file: origin/step/count length mismatch");

  if (j.contains("angles")) {
    if (sig.p != 1 || sig.q != 1)
      throw std::invalid_argument("grid file: scalar angles require signature (1,1)");
    const auto angles = j.at("angles").get<std::vector<double>>();
    if (static_cast<long>(angles.size()) != grid.size())
      throw std::invalid_argument("grid file: angle count does not match grid");
    std::vector<Eigen::MatrixXd> frames;
    frames.reserve(angles.size());
    for (double a : angles) frames.push_back(boost_matrix(a));
    return boost_field_from_frames(sig, grid, std::move(frames));
  }

  const int n = sig.n();
  std::vector<Eigen::MatrixXd> frames;
  for (const auto& row : j.at("frames")) {
    const auto entries = row.get<std::vector<double>>();
    if (static_cast<int>(entries.size()) != n * n)
      throw std::invalid_argument("grid file: frame entry count mismatch");
    Eigen::MatrixXd fr(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) fr(r, c) = entries[r * n + c];
    frames.push_back(fr);
  }
  return boost_field_from_frames(sig, grid, std::move(frames));
}

BoostField load_csv_field(std::istream& in) {
  // First line: "# signature p q [periodic]"; second line: header with the
  // coordinate columns m1..md followed by the row-major frame entries.
  std::string line;
  if (!std::getline(in, line) || line.rfind("# signature", 0) != 0)
    throw std::invalid_argument("grid csv: missing '# signature p q' line");
  std::istringstream head(line.substr(11));
  int p = 0, q = 0;
  std::string flag;
  head >> p >> q >> flag;
  const Signature sig = make_signature(p, q);

  if (!std::getline(in, line)) throw std::invalid_argument("grid csv: missing header");
  int coord_cols = 0;
  {
    std::istringstream hs(line);
    std::string col;
    while (std::getline(hs, col, ','))
      if (!col.empty() && col[0] == 'm') ++coord_cols;
  }
  if (coord_cols < 1) throw std::invalid_argument("grid csv: no coordinate columns");

  const int n = sig.n();
  std::vector<Eigen::MatrixXd> frames;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    if (static_cast<int>(row.size()) != coord_cols + n * n)
      throw std::invalid_argument("grid csv: wrong column count");
    Eigen::MatrixXd fr(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) fr(r, c) = row[coord_cols + r * n + c];
    frames.push_back(fr);
  }
  if (frames.empty()) throw std::invalid_argument("grid csv: no samples");

  Grid grid;
  grid.origin = {0.0};
  grid.step = {1.0};
  grid.count = {static_cast<long>(frames.size())};
  grid.periodic = (flag == "periodic");
  return boost_field_from_frames(sig, grid, std::move(frames));
}

}  // namespace

BoostField load_boost_field_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("grid file: cannot open " + path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    return load_json_field(in);
  return load_csv_field(in);
}

}  // namespace diracspec
