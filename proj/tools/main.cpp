#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "diracspec/gamma.hpp"
#include "diracspec/multop.hpp"
#include "diracspec/product.hpp"
#include "diracspec/quasi_iso.hpp"
#include "diracspec/report.hpp"
#include "diracspec/symbol.hpp"
#include "diracspec/torus.hpp"

namespace {

using namespace diracspec;

struct Options {
  std::string sig = "1,1";
  long window = 1;
  std::string lambda;
  std::string ray = "null";
  long jmax = 50;
  std::string grid;
  std::string evs;
  std::string delta;
  long zmax = 1;
  bool friedrich_literal = false;
  std::string format = "json";
  std::string out;
};

Signature parse_sig(const std::string& s) {
  int p = 0, q = 0;
  if (std::sscanf(s.c_str(), "%d,%d", &p, &q) != 2)
    throw std::invalid_argument("--sig expects p,q");
  return make_signature(p, q);
}

cplx parse_lambda(const std::string& s) {
  double re = 0.0, im = 0.0;
  if (std::sscanf(s.c_str(), "%lf,%lf", &re, &im) == 2) return {re, im};
  if (std::sscanf(s.c_str(), "%lf", &re) == 1) return {re, 0.0};
  throw std::invalid_argument("--lambda expects re,im");
}

Ray parse_ray(const std::string& s, const Signature& sig) {
  if (s == "null") return null_ray(sig);
  if (s.rfind("custom:", 0) == 0) {
    std::vector<long> dir;
    std::string rest = s.substr(7);
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      dir.push_back(std::stol(rest.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    if (static_cast<int>(dir.size()) != sig.n())
      throw std::invalid_argument("--ray custom: needs one component per axis");
    return [dir](long j) {
      LatticeIndex k(dir.size());
      for (size_t i = 0; i < dir.size(); ++i) k[i] = j * dir[i];
      return k;
    };
  }
  throw std::invalid_argument("--ray expects null or custom:c1,c2,...");
}

void write_output(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary | std::ios::trunc);
  if (!f) throw std::invalid_argument("cannot open output file " + opt.out);
  f << payload;
}

nlohmann::json matrix_json(const Eigen::MatrixXcd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_clifford_gen(const Options& opt) {
  const GammaSet g = build_gammas(parse_sig(opt.sig));
  if (opt.format == "csv") {
    std::string out = "matrix,row,col,re,im\n";
    char buf[96];
    auto emit = [&](const std::string& name, const Eigen::MatrixXcd& m) {
      for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          std::snprintf(buf, sizeof(buf), "%s,%ld,%ld,%.17g,%.17g\n", name.c_str(),
                        static_cast<long>(r), static_cast<long>(c), m(r, c).real(),
                        m(r, c).imag());
          out += buf;
        }
    };
    for (size_t j = 0; j < g.gammas.size(); ++j)
      emit("gamma" + std::to_string(j + 1), g.gammas[j]);
    emit("beta", g.beta);
    write_output(opt, out);
  } else {
    nlohmann::json j;
    j["signature"] = {g.sig.p, g.sig.q};
    j["dim"] = g.dim();
    nlohmann::json gs = nlohmann::json::array();
    for (const auto& gamma : g.gammas) gs.push_back(matrix_json(gamma));
    j["gammas"] = std::move(gs);
    j["beta"] = matrix_json(g.beta);
    write_output(opt, j.dump(2) + "\n");
  }
  return 0;
}

int run_clifford_verify(const Options& opt) {
  const GammaSet g = build_gammas(parse_sig(opt.sig));
  const CliffordIdentityReport rep = verify_clifford_identities(g);
  const InvarianceReport inv = verify_compact_invariance(g, 64);

  bool ok = rep.max_anticommutator_error == 0.0 && rep.max_square_error == 0.0 &&
            rep.max_trace_error == 0.0 && rep.beta_hermiticity_error <= tol::floating &&
            rep.beta_square_error <= tol::floating && inv.max_deviation <= tol::floating;
  if (rep.beta_checked) ok = ok && rep.beta_balanced && rep.beta_eigenvalue_error <= tol::floating;

  std::printf("anticommutators      max error %.3g\n", rep.max_anticommutator_error);
  std::printf("squares              max error %.3g\n", rep.max_square_error);
  std::printf("traces               max error %.3g\n", rep.max_trace_error);
  std::printf("beta hermiticity     max error %.3g\n", rep.beta_hermiticity_error);
  std::printf("beta involution      max error %.3g\n", rep.beta_square_error);
  if (rep.beta_checked)
    std::printf("beta balance         %s (eigenvalue error %.3g)\n",
                rep.beta_balanced ? "ok" : "FAILED", rep.beta_eigenvalue_error);
  std::printf("compact invariance   max deviation %.3g over %d samples\n",
              inv.max_deviation, inv.samples);
  std::printf("%s\n", ok ? "all identities hold" : "IDENTITY FALSIFIED");
  return ok ? 0 : 2;
}

int run_spectrum_torus(const Options& opt) {
  const Signature sig = parse_sig(opt.sig);
  SpectrumReport rep = make_report(torus_point_spectrum(sig, opt.window));
  if (!opt.lambda.empty()) {
    const GammaSet g = build_gammas(sig);
    rep.scans.push_back(
        minkowski_continuous_evidence(g, parse_lambda(opt.lambda), opt.jmax));
  }
  write_output(opt, opt.format == "csv" ? report_csv(rep) : report_json(rep));
  return 0;
}

int run_minkowski_scan(const Options& opt) {
  const Signature sig = parse_sig(opt.sig);
  const GammaSet g = build_gammas(sig);
  if (opt.lambda.empty()) throw std::invalid_argument("minkowski-scan requires --lambda");
  const MinkowskiScan scan =
      minkowski_continuous_evidence(g, parse_lambda(opt.lambda), opt.jmax);
  if (opt.format == "csv") {
    write_output(opt, scan_csv(scan));
  } else {
    SpectrumReport rep;
    rep.sig_p = sig.p;
    rep.sig_q = sig.q;
    rep.window = 0;
    rep.scans.push_back(scan);
    write_output(opt, report_json(rep));
  }
  return 0;
}

int run_spectrum_product(const Options& opt) {
  if (opt.evs.empty()) throw std::invalid_argument("spectrum product requires --evs");
  const FiberEigenvalueList evs = load_eigenvalue_list_file(opt.evs);
  SpectrumReport rep;
  rep.sig_p = 1;
  rep.sig_q = 1;
  rep.window = opt.window;
  rep.point = product_point_spectrum(evs, opt.window);
  write_output(opt, opt.format == "csv" ? report_csv(rep) : report_json(rep));
  return 0;
}

int run_oracle_torus(const Options& opt) {
  const Signature sig = parse_sig(opt.sig);
  const TorusOracleCheck check = torus_oracle_check(sig, opt.window);
  std::printf("torus oracle (%d,%d) window %ld: dim %ld (%s), hausdorff %.3g\n", sig.p,
              sig.q, opt.window, check.total_dim,
              check.assembled ? "assembled" : "blockwise", check.hausdorff);
  if (check.hausdorff > 1e-9) {
    std::printf("ORACLE DEVIATION above 1e-9\n");
    return 2;
  }
  return 0;
}

int run_oracle_product(const Options& opt) {
  if (opt.evs.empty()) throw std::invalid_argument("oracle product requires --evs");
  const FiberEigenvalueList evs = load_eigenvalue_list_file(opt.evs);
  std::vector<cplx> closed;
  for (const PointValue& pv : product_point_spectrum(evs, opt.window))
    closed.push_back(pv.value);
  std::vector<cplx> numeric;
  for (const auto& e : evs) {
    for (const LatticeIndex& k : lattice_window(2, opt.window)) {
      const auto ev = eigenvalues_quad(product_block(e.value, k[0], k[1]));
      numeric.insert(numeric.end(), ev.begin(), ev.end());
    }
  }
  const double dist = hausdorff_distance(closed, numeric);
  std::printf("product oracle window %ld: %zu blocks, hausdorff %.3g\n", opt.window,
              numeric.size() / 2, dist);
  if (dist > 1e-9) {
    std::printf("ORACLE DEVIATION above 1e-9\n");
    return 2;
  }
  return 0;
}

int run_quasiiso_check(const Options& opt) {
  if (opt.grid.empty()) throw std::invalid_argument("quasiiso check requires --grid");
  const BoostField field = load_boost_field_file(opt.grid);
  // Reference field: the parallel frame a = 0 / identity on the same grid.
  std::vector<Eigen::MatrixXd> id_frames(
      field.frames.size(), Eigen::MatrixXd::Identity(field.sig.n(), field.sig.n()));
  const BoostField reference =
      boost_field_from_frames(field.sig, field.grid, std::move(id_frames));
  const QuasiIsoVerdict verdict = decide_quasi_isometry(reference, field);
  const EqualityNote note = spectral_equality_report(verdict, field.grid.periodic);

  nlohmann::json j;
  j["verdict"] = verdict.quasi_isometric ? "QuasiIsometricOnSamples" : "UnboundednessEvidence";
  j["bound"] = verdict.bound;
  j["note"] = verdict.note;
  j["evidence_norms"] = verdict.evidence_norms;
  j["conclusion"] = note.conclusion;
  j["hypothesis"] = note.hypothesis;
  write_output(opt, j.dump(2) + "\n");
  return 0;
}

int run_friedrich_gen(const Options& opt) {
  std::vector<int> delta;
  for (char c : opt.delta) {
    if (c == ',') continue;
    if (c != '0' && c != '1') throw std::invalid_argument("--delta expects a 0/1 string");
    delta.push_back(c - '0');
  }
  if (delta.empty() || delta.size() % 2 != 0)
    throw std::invalid_argument("--delta needs an even number of bits");
  const int N = static_cast<int>(delta.size()) / 2;
  const FiberEigenvalueList evs =
      friedrich_torus_eigenvalues(N, delta, opt.zmax, opt.friedrich_literal);
  write_output(opt, eigenvalue_list_json(evs));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirac operator spectra on flat pseudo-Riemannian spin manifolds"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opt.out);
  };

  auto* clifford = app.add_subcommand("clifford", "gamma matrix construction");
  auto* cl_gen = clifford->add_subcommand("gen", "emit the gamma matrices and beta");
  cl_gen->add_option("--sig", opt.sig)->required();
  add_common(cl_gen);
  auto* cl_verify = clifford->add_subcommand("verify", "check the Clifford identities");
  cl_verify->add_option("--sig", opt.sig)->required();

  auto* spectrum = app.add_subcommand("spectrum", "point spectra and scans");
  auto* sp_torus = spectrum->add_subcommand("torus", "point spectrum of T^{p,q}");
  sp_torus->add_option("--sig", opt.sig)->required();
  sp_torus->add_option("--window", opt.window)->required();
  sp_torus->add_option("--lambda", opt.lambda);
  sp_torus->add_option("--jmax", opt.jmax);
  add_common(sp_torus);
  auto* sp_mink = spectrum->add_subcommand("minkowski-scan",
                                           "resolvent divergence scan on R^{p,q}");
  sp_mink->add_option("--sig", opt.sig)->required();
  sp_mink->add_option("--lambda", opt.lambda)->required();
  sp_mink->add_option("--jmax", opt.jmax);
  sp_mink->add_option("--ray", opt.ray);
  add_common(sp_mink);
  auto* sp_prod = spectrum->add_subcommand("product", "point spectrum of T^{1,1} x F");
  sp_prod->add_option("--evs", opt.evs)->required();
  sp_prod->add_option("--window", opt.window)->required();
  add_common(sp_prod);

  auto* oracle = app.add_subcommand("oracle", "finite-section eigensolver checks");
  auto* or_torus = oracle->add_subcommand("torus", "torus closed form vs eigensolver");
  or_torus->add_option("--sig", opt.sig)->required();
  or_torus->add_option("--window", opt.window)->required();
  auto* or_prod = oracle->add_subcommand("product", "product blocks vs eigensolver");
  or_prod->add_option("--evs", opt.evs)->required();
  or_prod->add_option("--window", opt.window)->required();

  auto* quasiiso = app.add_subcommand("quasiiso", "quasi-isometry of frame fields");
  auto* qi_check = quasiiso->add_subcommand("check", "compare a grid field against the parallel frame");
  qi_check->add_option("--grid", opt.grid)->required();
  add_common(qi_check);

  auto* friedrich = app.add_subcommand("friedrich", "Riemannian torus eigenvalue lists");
  auto* fr_gen = friedrich->add_subcommand("gen", "generate a T^{2N}_delta eigenvalue list");
  fr_gen->add_option("--delta", opt.delta)->required();
  fr_gen->add_option("--zmax", opt.zmax)->required();
  fr_gen->add_flag("--friedrich-literal", opt.friedrich_literal);
  add_common(fr_gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (cl_gen->parsed()) return run_clifford_gen(opt);
    if (cl_verify->parsed()) return run_clifford_verify(opt);
    if (sp_torus->parsed()) return run_spectrum_torus(opt);
    if (sp_mink->parsed()) return run_minkowski_scan(opt);
    if (sp_prod->parsed()) return run_spectrum_product(opt);
    if (or_torus->parsed()) return run_oracle_torus(opt);
    if (or_prod->parsed()) return run_oracle_product(opt);
    if (qi_check->parsed()) return run_quasiiso_check(opt);
    if (fr_gen->parsed()) return run_friedrich_gen(opt);
    std::cerr << "missing subcommand\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const OracleCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const SingularPoint& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
