// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0
//
// biquat-cli: energy tables, density grids, shell probabilities, spinor and
// rotation evaluation, and the verification suites. Output is JSON by
// default (stable field order, shortest round-trip floats) or CSV.
//
// Exit codes: 0 success, 1 usage error, 2 domain or numerical error,
// 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "biquat/biquat.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerify = 3;

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiFailure : std::runtime_error {
  ApiFailure(bq_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  bq_status status;
};

void check(bq_status s) {
  if (s != BQ_OK) throw ApiFailure(s, bq_last_error());
}

int exit_code_for(bq_status s) { return s == BQ_ERR_USAGE ? kExitUsage : kExitDomain; }

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), res.ptr};
}

int parse_int(const std::string& s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end) throw UsageFailure("not an integer: '" + s + "'");
  return v;
}

/// "1..3", "-2..2", "1,2,3" or a mix such as "1,3..4".
std::vector<int> parse_int_list(const std::string& spec) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = spec.find(',', start);
    const std::string item = spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.empty()) throw UsageFailure("empty entry in list '" + spec + "'");
    const std::size_t dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(item));
    } else {
      const int lo = parse_int(item.substr(0, dots));
      const int hi = parse_int(item.substr(dots + 2));
      if (hi < lo) throw UsageFailure("empty range '" + item + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

/// Twice a half-integer given as "3/2", "-1/2" or "1.5".
int parse_twice_half_integer(const std::string& s, const char* what) {
  const std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    const int num = parse_int(s.substr(0, slash));
    const int den = parse_int(s.substr(slash + 1));
    if (den != 2 || num % 2 == 0) throw UsageFailure(std::string(what) + " must be a half-integer: '" + s + "'");
    return num;
  }
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end) throw UsageFailure(std::string(what) + " is not a number: '" + s + "'");
  const double twice = 2.0 * v;
  if (twice != std::round(twice) || static_cast<long>(std::round(twice)) % 2 == 0) {
    throw UsageFailure(std::string(what) + " must be a half-integer: '" + s + "'");
  }
  return static_cast<int>(std::round(twice));
}

std::pair<int, int> parse_grid(const std::string& s) {
  const std::size_t colon = s.find(':');
  if (colon == std::string::npos) throw UsageFailure("grid must be 'R:THETA' counts, got '" + s + "'");
  const int nr = parse_int(s.substr(0, colon));
  const int nt = parse_int(s.substr(colon + 1));
  if (nr < 2 || nt < 3) throw UsageFailure("grid needs at least 2 radial and 3 polar intervals");
  return {nr, nt};
}

Json quat_json(const bq_quat& q) {
  Json arr = Json::array();
  for (const auto& c : q.q) arr.push_back(Json::array({c.re, c.im}));
  return arr;
}

Json number_or_string(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

struct WaveHandle {
  bq_wavefunction* ptr = nullptr;
  ~WaveHandle() { bq_wavefunction_destroy(ptr); }
};

struct ReportHandle {
  bq_report* ptr = nullptr;
  ~ReportHandle() { bq_report_destroy(ptr); }
};

// Shared state options.
struct StateOptions {
  double z = 1.0;
  int n = 1;
  int k = -1;
  std::string mj = "1/2";
};

void add_state_options(CLI::App* cmd, StateOptions& s) {
  cmd->add_option("--z", s.z, "nuclear charge Z")->capture_default_str();
  cmd->add_option("--n", s.n, "principal quantum number")->capture_default_str();
  cmd->add_option("--k", s.k, "Dirac quantum number kappa (1s1/2: -1)")->capture_default_str();
  cmd->add_option("--mj", s.mj, "m_j as '1/2' or '0.5'")->capture_default_str();
}

Json state_json(const StateOptions& s, int twice_mj) {
  Json j;
  j["z"] = s.z;
  j["n"] = s.n;
  j["k"] = s.k;
  j["mj"] = 0.5 * twice_mj;
  return j;
}

// Builds the state, mapping invalid quantum numbers to a usage error.
void create_state(const StateOptions& s, int twice_mj, WaveHandle& w) {
  const bq_status st = bq_wavefunction_create(s.n, s.k, twice_mj, s.z, &w.ptr);
  if (st == BQ_ERR_DOMAIN) throw UsageFailure(std::string("invalid state: ") + bq_last_error());
  check(st);
}

int cmd_energy(double z, const std::string& n_spec, const std::string& k_spec, const std::string& units, bool csv) {
  if (units != "mc2" && units != "eV") throw UsageFailure("--units must be mc2 or eV");
  const std::vector<int> ns = parse_int_list(n_spec);
  std::vector<int> ks;
  for (int k : parse_int_list(k_spec)) {
    if (k != 0) ks.push_back(k);
  }
  if (ns.empty() || ks.empty()) throw UsageFailure("no (n, k) combinations requested");
  const double scale = units == "eV" ? bq_electron_rest_energy_ev() : 1.0;

  Json rows = Json::array();
  std::size_t failures = 0;
  for (int n : ns) {
    for (int k : ks) {
      double e = 0.0;
      double b = 0.0;
      double s = 0.0;
      double c = 0.0;
      Json row;
      row["n"] = n;
      row["k"] = k;
      if (bq_energy(n, k, z, &e, &b, &s, &c) == BQ_OK) {
        row["energy"] = e * scale;
        row["binding"] = b * scale;
        row["s"] = s;
        row["C"] = c;
      } else {
        row["error"] = bq_last_error();
        ++failures;
      }
      rows.push_back(std::move(row));
    }
  }

  if (csv) {
    std::cout << "n,k,energy,binding,s,C,error\n";
    for (const auto& r : rows) {
      std::cout << r["n"].get<int>() << ',' << r["k"].get<int>() << ',';
      if (r.contains("error")) {
        std::cout << ",,,,\"" << r["error"].get<std::string>() << "\"\n";
      } else {
        std::cout << format_double(r["energy"].get<double>()) << ',' << format_double(r["binding"].get<double>())
                  << ',' << format_double(r["s"].get<double>()) << ',' << format_double(r["C"].get<double>())
                  << ",\n";
      }
    }
  } else {
    Json out;
    out["command"] = "energy";
    out["inputs"] = {{"z", z}, {"n", ns}, {"k", ks}, {"units", units}};
    out["units"] = {{"energy", units}, {"binding", units}, {"s", "1"}, {"C", "mc/hbar"}};
    out["rows"] = rows;
    std::cout << out.dump(2) << '\n';
  }
  return failures == rows.size() ? kExitDomain : kExitOk;
}

// Composite Simpson weights on n + 1 equally spaced nodes (n even).
std::vector<double> simpson_weights(int n, double h) {
  std::vector<double> w(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) w[static_cast<std::size_t>(i)] = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
  for (auto& x : w) x *= h / 3.0;
  return w;
}

int cmd_density(const StateOptions& s, const std::string& grid, std::optional<double> r_max_opt, double tol, bool csv) {
  const int twice_mj = parse_twice_half_integer(s.mj, "--mj");
  auto [nr, nt] = parse_grid(grid);
  if (nr % 2) ++nr;
  if (nt % 2) ++nt;
  WaveHandle w;
  create_state(s, twice_mj, w);

  double r_max = 0.0;
  if (r_max_opt) {
    if (!(*r_max_opt > 0.0)) throw UsageFailure("--rmax must be positive");
    r_max = *r_max_opt;
  } else {
    double c = 0.0;
    check(bq_energy(s.n, s.k, s.z, nullptr, nullptr, nullptr, &c));
    r_max = (20.0 + 4.0 * s.n) * bq_fine_structure() / c;
  }

  constexpr int kPhiSamples = 8;
  const double pi = std::acos(-1.0);
  const double hr = r_max / nr;
  const double ht = pi / nt;
  std::vector<double> radii;
  std::vector<double> thetas;
  for (int i = 1; i <= nr; ++i) radii.push_back(hr * i);
  for (int j = 0; j <= nt; ++j) thetas.push_back(ht * j);

  std::vector<std::vector<double>> dens(radii.size(), std::vector<double>(thetas.size()));
  for (std::size_t i = 0; i < radii.size(); ++i) {
    for (std::size_t j = 0; j < thetas.size(); ++j) {
      double acc = 0.0;
      for (int p = 0; p < kPhiSamples; ++p) {
        double d = 0.0;
        check(bq_wavefunction_density(w.ptr, radii[i], thetas[j], 2.0 * pi * p / kPhiSamples, &d));
        acc += d;
      }
      dens[i][j] = acc / kPhiSamples;
    }
  }

  const auto wr = simpson_weights(nr, hr);
  const auto wt = simpson_weights(nt, ht);
  double integral = 0.0;
  double min_density = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < radii.size(); ++i) {
    double ring = 0.0;
    for (std::size_t j = 0; j < thetas.size(); ++j) {
      ring += wt[j] * std::sin(thetas[j]) * dens[i][j];
      min_density = std::min(min_density, dens[i][j]);
    }
    integral += wr[i + 1] * radii[i] * radii[i] * ring;  // the r = 0 node contributes 0
  }
  integral *= 2.0 * pi;

  if (csv) {
    std::cout << "r,theta,density\n";
    for (std::size_t i = 0; i < radii.size(); ++i) {
      for (std::size_t j = 0; j < thetas.size(); ++j) {
        std::cout << format_double(radii[i]) << ',' << format_double(thetas[j]) << ',' << format_double(dens[i][j])
                  << '\n';
      }
    }
    return kExitOk;
  }
  Json out;
  out["command"] = "density";
  Json inputs = state_json(s, twice_mj);
  inputs["grid"] = {{"r", nr}, {"theta", nt}};
  inputs["r_max"] = r_max;
  inputs["tol"] = tol;
  out["inputs"] = inputs;
  out["units"] = {{"r", "bohr"}, {"theta", "rad"}, {"density", "bohr^-3"}};
  out["phi_samples"] = kPhiSamples;
  out["grid_integral"] = integral;
  out["grid_integral_within_tol"] = std::abs(integral - 1.0) <= tol;
  out["min_density"] = min_density;
  out["r"] = radii;
  out["theta"] = thetas;
  out["density"] = dens;
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int cmd_probability(const StateOptions& s, double r_lo, double r_hi, const std::string& grid, bool csv) {
  const int twice_mj = parse_twice_half_integer(s.mj, "--mj");
  if (!(r_lo >= 0.0) || !(r_hi > r_lo)) throw UsageFailure("probability interval needs 0 <= r_lo < r_hi");
  int nt = 0;
  int np = 0;
  if (!grid.empty()) std::tie(nt, np) = parse_grid(grid);
  WaveHandle w;
  create_state(s, twice_mj, w);
  double value = 0.0;
  double err = 0.0;
  check(bq_wavefunction_probability(w.ptr, r_lo, r_hi, nt, np, &value, &err));
  if (csv) {
    std::cout << "r_lo,r_hi,probability,error_estimate\n"
              << format_double(r_lo) << ',' << format_double(r_hi) << ',' << format_double(value) << ','
              << format_double(err) << '\n';
    return kExitOk;
  }
  Json out;
  out["command"] = "probability";
  Json inputs = state_json(s, twice_mj);
  inputs["r_lo"] = number_or_string(r_lo);
  inputs["r_hi"] = number_or_string(r_hi);
  out["inputs"] = inputs;
  out["units"] = {{"r", "bohr"}, {"probability", "1"}};
  out["probability"] = value;
  out["error_estimate"] = err;
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int cmd_spinor(int l, const std::string& j, const std::string& mj, double theta, double phi, bool csv) {
  const int twice_j = parse_twice_half_integer(j, "--j");
  const int twice_mj = parse_twice_half_integer(mj, "--mj");
  bq_quat q{};
  double up = 0.0;
  double down = 0.0;
  check(bq_spinor_evaluate(l, twice_j, twice_mj, theta, phi, &q, &up, &down));
  if (csv) {
    std::cout << "theta,phi,p_up,p_down\n"
              << format_double(theta) << ',' << format_double(phi) << ',' << format_double(up) << ','
              << format_double(down) << '\n';
    return kExitOk;
  }
  Json out;
  out["command"] = "spinor";
  out["inputs"] = {{"l", l}, {"j", 0.5 * twice_j}, {"mj", 0.5 * twice_mj}, {"theta", theta}, {"phi", phi}};
  out["units"] = {{"angles", "rad"}, {"probability", "sr^-1"}};
  out["value"] = quat_json(q);
  out["p_up"] = up;
  out["p_down"] = down;
  out["density"] = up + down;
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

std::array<double, 3> parse_axis(const std::string& s) {
  if (s == "x") return {1.0, 0.0, 0.0};
  if (s == "y") return {0.0, 1.0, 0.0};
  if (s == "z") return {0.0, 0.0, 1.0};
  std::array<double, 3> n{};
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t comma = s.find(',', start);
    if ((i < 2) == (comma == std::string::npos)) throw UsageFailure("axis must be x, y, z or 'nx,ny,nz'");
    const std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto res = std::from_chars(item.data(), item.data() + item.size(), n[i]);
    if (res.ec != std::errc{} || res.ptr != item.data() + item.size()) {
      throw UsageFailure("axis component is not a number: '" + item + "'");
    }
    start = comma + 1;
  }
  const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (!(len > 0.0)) throw UsageFailure("axis must be nonzero");
  for (auto& x : n) x /= len;
  return n;
}

int cmd_rotate(const std::string& axis_spec, double angle, const std::string& spin, bool csv) {
  const auto axis = parse_axis(axis_spec);
  int spin_index = 0;
  if (spin == "x") {
    spin_index = 0;
  } else if (spin == "y") {
    spin_index = 1;
  } else if (spin == "z") {
    spin_index = 2;
  } else {
    throw UsageFailure("--spin must be x, y or z");
  }
  bq_quat d{};
  bq_quat rotated{};
  check(bq_rotate(axis.data(), angle, spin_index, &d, &rotated));
  if (csv) {
    std::cout << "quantity,k,re,im\n";
    for (const auto& [label, q] : {std::pair{"rotation", d}, std::pair{"rotated", rotated}}) {
      for (int k = 0; k < 4; ++k) {
        std::cout << label << ',' << k << ',' << format_double(q.q[k].re) << ',' << format_double(q.q[k].im) << '\n';
      }
    }
    return kExitOk;
  }
  Json out;
  out["command"] = "rotate";
  out["inputs"] = {{"axis", axis}, {"angle", angle}, {"spin", spin}};
  out["units"] = {{"angle", "rad"}, {"operator", "hbar"}};
  out["rotation"] = quat_json(d);
  out["rotated"] = quat_json(rotated);
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, bool csv) {
  const auto start = std::chrono::steady_clock::now();
  ReportHandle r;
  const bq_status st = bq_verify(suite.c_str(), seed, &r.ptr);
  if (st == BQ_ERR_USAGE) throw UsageFailure(bq_last_error());
  check(st);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > 60.0) std::cerr << "warning: verification took " << elapsed << " s (budget 60 s)\n";

  const std::size_t n = bq_report_size(r.ptr);
  Json checks = Json::array();
  if (csv) std::cout << "suite,name,max_deviation,tolerance,passed\n";
  for (std::size_t i = 0; i < n; ++i) {
    const char* s = nullptr;
    const char* name = nullptr;
    double dev = 0.0;
    double tol = 0.0;
    int passed = 0;
    check(bq_report_check(r.ptr, i, &s, &name, &dev, &tol, &passed));
    if (csv) {
      std::cout << s << ",\"" << name << "\"," << format_double(dev) << ',' << format_double(tol) << ','
                << (passed ? "true" : "false") << '\n';
    } else {
      checks.push_back(
          {{"suite", s}, {"name", name}, {"max_deviation", dev}, {"tolerance", tol}, {"passed", passed != 0}});
    }
  }
  const bool ok = bq_report_passed(r.ptr) != 0;
  if (!csv) {
    Json out;
    out["command"] = "verify";
    out["inputs"] = {{"suite", suite}, {"seed", seed}};
    out["passed"] = ok;
    out["checks"] = checks;
    std::cout << out.dump(2) << '\n';
  }
  return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biquaternion spin-1/2 algebra and the relativistic one-electron atom"};
  app.require_subcommand(1);
  bool csv = false;
  app.add_flag("--csv", csv, "emit CSV instead of JSON");

  double ez = 1.0;
  std::string en = "1..3";
  std::string ek = "-2..2";
  std::string units = "mc2";
  auto* energy = app.add_subcommand("energy", "Sommerfeld energy table");
  energy->add_option("--z", ez, "nuclear charge Z")->capture_default_str();
  energy->add_option("--n", en, "n values: '1..3' or '1,2'")->capture_default_str();
  energy->add_option("--k", ek, "kappa values: '-2..2' (0 is skipped)")->capture_default_str();
  energy->add_option("--units", units, "mc2 or eV")->capture_default_str();
  energy->add_flag("--csv", csv, "emit CSV instead of JSON");

  StateOptions dstate;
  std::string grid = "1600:64";
  std::optional<double> r_max;
  double tol = 1e-6;
  auto* density = app.add_subcommand("density", "phi-averaged density on an (r, theta) grid");
  add_state_options(density, dstate);
  density->add_option("--grid", grid, "radial:polar interval counts")->capture_default_str();
  density->add_option("--rmax", r_max, "outer radius in Bohr");
  density->add_option("--tol", tol, "tolerance for the grid integral")->capture_default_str();
  density->add_flag("--csv", csv, "emit CSV instead of JSON");

  StateOptions pstate;
  double r_lo = 0.0;
  double r_hi = std::numeric_limits<double>::infinity();
  std::string pgrid;
  auto* probability = app.add_subcommand("probability", "probability of a radial shell");
  add_state_options(probability, pstate);
  probability->add_option("--r-lo", r_lo, "inner radius (Bohr)")->capture_default_str();
  probability->add_option("--r-hi", r_hi, "outer radius (Bohr), default infinity");
  probability->add_option("--grid", pgrid, "sphere quadrature theta:phi node counts");
  probability->add_flag("--csv", csv, "emit CSV instead of JSON");

  int sl = 2;
  std::string sj = "5/2";
  std::string smj = "3/2";
  double theta = 0.5;
  double phi = 0.0;
  auto* spinor = app.add_subcommand("spinor", "spin spherical harmonic at one direction");
  spinor->add_option("--l", sl, "orbital l")->capture_default_str();
  spinor->add_option("--j", sj, "j = l +/- 1/2")->capture_default_str();
  spinor->add_option("--mj", smj, "m_j")->capture_default_str();
  spinor->add_option("--theta", theta, "polar angle (rad)")->capture_default_str();
  spinor->add_option("--phi", phi, "azimuth (rad)")->capture_default_str();
  spinor->add_flag("--csv", csv, "emit CSV instead of JSON");

  std::string axis = "z";
  double angle = 0.0;
  std::string spin = "z";
  auto* rotate = app.add_subcommand("rotate", "rotate a spin operator");
  rotate->add_option("--axis", axis, "x, y, z or 'nx,ny,nz'")->capture_default_str();
  rotate->add_option("--angle", angle, "rotation angle (rad)")->capture_default_str();
  rotate->add_option("--spin", spin, "spin operator x, y or z")->capture_default_str();
  rotate->add_flag("--csv", csv, "emit CSV instead of JSON");

  std::string suite = "all";
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suite, "algebra, spin, rotation, spinor, hydrogen, dirac or all")
      ->capture_default_str();
  verify->add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
  verify->add_flag("--csv", csv, "emit CSV instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (energy->parsed()) return cmd_energy(ez, en, ek, units, csv);
    if (density->parsed()) return cmd_density(dstate, grid, r_max, tol, csv);
    if (probability->parsed()) return cmd_probability(pstate, r_lo, r_hi, pgrid, csv);
    if (spinor->parsed()) return cmd_spinor(sl, sj, smj, theta, phi, csv);
    if (rotate->parsed()) return cmd_rotate(axis, angle, spin, csv);
    if (verify->parsed()) return cmd_verify(suite, seed, csv);
  } catch (const UsageFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ApiFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.status);
  }
  return kExitUsage;
}
