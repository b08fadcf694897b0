// Copyright 2026 The fgext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fgext/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "fgext/bounds/definetti.hpp"
#include "fgext/bounds/family.hpp"
#include "fgext/channels/channel_io.hpp"
#include "fgext/cli/config.hpp"
#include "fgext/extend/extension.hpp"
#include "fgext/fgs/cm_io.hpp"
#include "fgext/fgs/measures.hpp"
#include "fgext/fgs/states.hpp"
#include "fgext/matalg/spectral.hpp"
#include "fgext/oracle/suites.hpp"

namespace fgext::cli {

using Json = nlohmann::ordered_json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotBonaFide: return kExitNotBonaFide;
    case ErrorCode::kSolverStalled: return kExitStalled;
    case ErrorCode::kNotCP:
    case ErrorCode::kNotFeasible: return kExitNegative;
    case ErrorCode::kParseError:
    case ErrorCode::kWrongSplit:
    case ErrorCode::kDimensionOdd:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kNotAntisymmetric: return kExitBadInput;
    default: return kExitUsage;
  }
}

namespace {

// ---------------------------------------------------------------------------
// sources

std::pair<std::string, std::string> split_spec(const std::string& spec) {
  const auto pos = spec.find(':');
  if (pos == std::string::npos) return {"", ""};
  return {spec.substr(0, pos), spec.substr(pos + 1)};
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorCode::kParseError, "bad number '" + s + "' in " + what);
}

int parse_int(const std::string& s, const std::string& what) {
  const double v = parse_double(s, what);
  if (v != std::floor(v) || v < 1 || v > 1e6) throw Error(ErrorCode::kParseError, "bad count '" + s + "' in " + what);
  return static_cast<int>(v);
}

std::optional<CmSource> builtin_cm(const std::string& spec) {
  const auto [kind, arg] = split_spec(spec);
  const std::pair<Index, Index> one_one{1, 1};
  if (kind == "family") {
    const auto comma = arg.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::kParseError, "family needs K1,K2");
    const auto b = bounds::family_cm(parse_int(arg.substr(0, comma), spec), parse_int(arg.substr(comma + 1), spec));
    return CmSource{spec, b.cm().matrix(), one_one};
  }
  if (kind == "eps") return CmSource{spec, bounds::epsilon_family(parse_double(arg, spec)).cm().matrix(), one_one};
  if (kind == "bell") {
    fgs::StateKind k;
    if (arg == "phi+") k = fgs::StateKind::kBellPhiPlus;
    else if (arg == "phi-") k = fgs::StateKind::kBellPhiMinus;
    else if (arg == "psi+") k = fgs::StateKind::kBellPsiPlus;
    else if (arg == "psi-") k = fgs::StateKind::kBellPsiMinus;
    else throw Error(ErrorCode::kParseError, "unknown Bell state '" + arg + "'");
    return CmSource{spec, fgs::bell(k).matrix(), one_one};
  }
  if (kind == "epr") {
    const int m = parse_int(arg, spec);
    return CmSource{spec, fgs::epr(m).matrix(), std::make_pair(Index{m}, Index{m})};
  }
  if (kind == "vacuum") return CmSource{spec, fgs::vacuum(parse_int(arg, spec)).matrix(), std::nullopt};
  if (kind == "single") return CmSource{spec, fgs::single_mode(parse_double(arg, spec)).matrix(), std::nullopt};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// output

std::string table_key(std::string k) {
  std::replace(k.begin(), k.end(), '_', '-');
  return k;
}

std::string table_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); })) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : " ") + table_value(e);
    return s;
  }
  return v.dump();
}

void emit(const Json& doc, OutputFormat fmt, std::ostream& out) {
  if (fmt == OutputFormat::kJson) {
    out << doc.dump() << '\n';
    return;
  }
  if (doc.is_array()) {
    if (doc.empty()) return;
    bool first = true;
    for (const auto& [k, v] : doc.front().items()) {
      out << (first ? "" : "\t") << k;
      first = false;
    }
    out << '\n';
    for (const auto& row : doc) {
      first = true;
      for (const auto& [k, v] : row.items()) {
        out << (first ? "" : "\t") << table_value(v);
        first = false;
      }
      out << '\n';
    }
    return;
  }
  for (const auto& [k, v] : doc.items()) out << table_key(k) << ": " << table_value(v) << '\n';
}

Json matrix_rows(const Matrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c) == 0.0 ? 0.0 : m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Json feasibility_json(const extend::FeasibilityResult& r) {
  Json j;
  j["status"] = extend::to_string(r.status);
  j["margin"] = r.margin;
  j["margin_upper_bound"] = r.margin_bound;
  if (r.certificate) {
    j["certificate"] = r.certificate->text;
    j["certificate_kind"] =
        r.certificate->kind == extend::Certificate::Kind::kColumnSum ? "column-sum" : "cross-correlation";
  } else {
    j["certificate"] = nullptr;
    j["certificate_kind"] = nullptr;
  }
  j["newton_steps"] = r.newton_steps;
  return j;
}

int status_exit(const extend::FeasibilityResult& r) { return r.feasible() ? kExitOk : kExitNegative; }

// ---------------------------------------------------------------------------
// commands

struct Context {
  RunConfig cfg;
  std::ostream& out;
  std::ostream& err;
};

int cmd_check_cm(Context& ctx, const std::string& source) {
  const CmSource src = load_cm_source(source);
  const matalg::AntisymmetricMatrix k(src.matrix);
  const auto spectrum = matalg::hermitian_spectrum(k);
  Json j;
  j["source"] = src.label;
  j["modes"] = k.modes();
  if (src.split) j["split"] = {src.split->first, src.split->second};
  int code = kExitOk;
  try {
    const auto cm = fgs::validate_cm(k, ctx.cfg.eps_psd);
    j["bona_fide"] = true;
    j["pure"] = cm.is_pure();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotBonaFide) throw;
    j["bona_fide"] = false;
    j["pure"] = nullptr;
    code = kExitNotBonaFide;
  }
  j["max_eigenvalue"] = spectrum.empty() ? 0.0 : spectrum.back();
  j["spectrum"] = spectrum;
  const auto cf = matalg::canonical_form(k);
  j["canonical_lambdas"] = std::vector<double>(cf.lambdas.data(), cf.lambdas.data() + cf.lambdas.size());
  emit(j, ctx.cfg.output_format, ctx.out);
  return code;
}

fgs::BipartiteCM bipartite_from(const CmSource& src, const std::vector<Index>& split_flag, double eps_psd) {
  std::optional<std::pair<Index, Index>> split = src.split;
  if (split_flag.size() == 2) split = std::make_pair(split_flag[0], split_flag[1]);
  if (!split) throw Error(ErrorCode::kWrongSplit, "'" + src.label + "' has no split; pass --split NA NB");
  return fgs::BipartiteCM(fgs::validate_cm(src.matrix, eps_psd), split->first, split->second);
}

struct ExtendibleArgs {
  std::string source;
  int k1 = 1;
  int k2 = 1;
  std::vector<Index> split;
  std::string emit_extension;
  std::string emit_witness;
};

int cmd_extendible(Context& ctx, const ExtendibleArgs& a) {
  const CmSource src = load_cm_source(a.source);
  const auto b = bipartite_from(src, a.split, ctx.cfg.eps_psd);
  const extend::ExtendQuery q(b, a.k1, a.k2);
  Json j;
  j["source"] = src.label;
  j["n_a"] = b.n_a();
  j["n_b"] = b.n_b();
  j["k1"] = a.k1;
  j["k2"] = a.k2;
  extend::FeasibilityResult r;
  try {
    r = extend::feasibility(q, ctx.cfg.feasibility_options());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSolverStalled) throw;
    j["status"] = "SolverStalled";
    j["margin"] = e.value() ? *e.value() : std::nan("");
    j["message"] = e.what();
    emit(j, ctx.cfg.output_format, ctx.out);
    return kExitStalled;
  }
  j.update(feasibility_json(r));
  j["separable_gaussian"] = extend::is_separable_gaussian(b, ctx.cfg.eps_psd);
  if (!a.emit_extension.empty()) {
    if (r.feasible()) {
      const auto ext = extend::build_extension(q, r, ctx.cfg.eps_feas);
      fgs::write_cm_file(a.emit_extension, ext.matrix());
      j["extension"] = a.emit_extension;
    } else {
      j["extension"] = nullptr;
    }
  }
  if (!a.emit_witness.empty()) {
    if (r.feasible()) {
      const std::string pa = a.emit_witness + "_delta_a.cm";
      const std::string pb = a.emit_witness + "_delta_b.cm";
      fgs::write_cm_file(pa, r.delta_a->matrix());
      fgs::write_cm_file(pb, r.delta_b->matrix());
      j["witness"] = {pa, pb};
    } else {
      j["witness"] = nullptr;
    }
  }
  emit(j, ctx.cfg.output_format, ctx.out);
  return status_exit(r);
}

Json bounds_record(std::optional<bounds::DeFinettiReport> rep, Index n_a, Index n_b, std::optional<int> k1,
                   std::optional<int> k2) {
  Json j;
  j["k1"] = k1 ? Json(*k1) : Json(nullptr);
  j["k2"] = k2 ? Json(*k2) : Json(nullptr);
  j["n_a"] = n_a;
  j["n_b"] = n_b;
  j["T"] = rep ? Json(rep->t) : Json(nullptr);
  j["trace_upper"] = rep ? Json(rep->trace_upper) : Json(nullptr);
  j["trace_lower"] = rep && rep->trace_lower ? Json(*rep->trace_lower) : Json(nullptr);
  j["er_upper"] = rep ? Json(rep->er_upper) : Json(nullptr);
  j["esq_upper"] = rep ? Json(rep->esq_upper) : Json(nullptr);
  return j;
}

struct BoundsArgs {
  std::vector<Index> modes;
  std::optional<int> k1;
  std::optional<int> k2;
  std::string cm;
  std::vector<Index> split;
};

int cmd_bounds(Context& ctx, const BoundsArgs& a) {
  if (a.k1.has_value() != a.k2.has_value()) throw Error(ErrorCode::kInvalidParameter, "give both --k1 and --k2");
  if (a.cm.empty() && (a.modes.size() != 2 || !a.k1)) {
    throw Error(ErrorCode::kInvalidParameter, "bounds needs --modes NA NB with --k1/--k2, or --cm");
  }
  Index n_a = a.modes.size() == 2 ? a.modes[0] : 0;
  Index n_b = a.modes.size() == 2 ? a.modes[1] : 0;
  std::optional<fgs::BipartiteCM> b;
  if (!a.cm.empty()) {
    b = bipartite_from(load_cm_source(a.cm), a.split, ctx.cfg.eps_psd);
    n_a = b->n_a();
    n_b = b->n_b();
  }
  std::optional<bounds::DeFinettiReport> rep;
  if (a.k1) rep = bounds::definetti_bounds(n_a, n_b, *a.k1, *a.k2);
  std::optional<double> lower;
  if (b && b->n_a() == 1 && b->n_b() == 1) lower = bounds::lower_bound_two_mode(*b);
  if (rep) rep->trace_lower = lower;
  Json j = bounds_record(rep, n_a, n_b, a.k1, a.k2);
  if (b) {
    j["trace_lower"] = lower ? Json(*lower) : Json(nullptr);
    j["cm_trace_upper"] = bounds::trace_upper_from_cm(*b);
  }
  emit(Json::array({j}), ctx.cfg.output_format, ctx.out);
  return kExitOk;
}

struct FamilyArgs {
  int k1_max = 4;
  int k2_max = 4;
  std::optional<int> k1;
  std::optional<int> k2;
  int jobs = 1;
  bool check = false;
  std::string write_cm;
};

Json family_record(int k1, int k2, bool check, const RunConfig& cfg) {
  const auto b = bounds::family_cm(k1, k2);
  auto rep = bounds::definetti_bounds(1, 1, k1, k2);
  rep.trace_lower = bounds::lower_bound_two_mode(b);
  rep.family_params = std::make_pair(k1, k2);
  Json j = bounds_record(rep, 1, 1, k1, k2);
  j["cm_trace_upper"] = bounds::trace_upper_from_cm(b);
  j["spectral_radius"] = bounds::family_spectrum(k1, k2)[3];
  j["overlap_with_epr"] = fgs::overlap(b.cm(), bounds::family_cm(1, 1).cm());
  j["bosonic_lower"] = bounds::bosonic_strategy_lower_bound(k1, k2);
  if (check) {
    try {
      const auto r = extend::feasibility(extend::ExtendQuery(b, k1, k2), cfg.feasibility_options());
      j["status"] = extend::to_string(r.status);
      j["margin"] = r.margin;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSolverStalled) throw;
      j["status"] = "SolverStalled";
      j["margin"] = e.value() ? *e.value() : std::nan("");
    }
  }
  return j;
}

int cmd_family(Context& ctx, const FamilyArgs& a) {
  std::vector<std::pair<int, int>> items;
  if (a.k1 || a.k2) {
    if (!a.k1 || !a.k2) throw Error(ErrorCode::kInvalidParameter, "give both --k1 and --k2");
    items.emplace_back(*a.k1, *a.k2);
  } else {
    if (a.k1_max < 1 || a.k2_max < 1) throw Error(ErrorCode::kInvalidParameter, "sweep bounds must be >= 1");
    for (int k1 = 1; k1 <= a.k1_max; ++k1)
      for (int k2 = 1; k2 <= a.k2_max; ++k2) items.emplace_back(k1, k2);
  }
  if (!a.write_cm.empty()) {
    if (items.size() != 1) throw Error(ErrorCode::kInvalidParameter, "--write-cm needs a single --k1/--k2");
    fgs::write_cm_file(a.write_cm, bounds::family_cm(items[0].first, items[0].second).cm().matrix(),
                       std::make_pair(Index{1}, Index{1}));
  }
  if (a.jobs < 1) throw Error(ErrorCode::kInvalidParameter, "--jobs must be >= 1");

  // Items are independent; results are written by index so output order is fixed.
  std::vector<Json> rows(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  auto work = [&](std::size_t start) {
    for (std::size_t i = start; i < items.size(); i += static_cast<std::size_t>(a.jobs)) {
      try {
        rows[i] = family_record(items[i].first, items[i].second, a.check, ctx.cfg);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(a.jobs), items.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Json doc = Json::array();
  int code = kExitOk;
  for (auto& r : rows) {
    if (r.contains("status") && r["status"] == "SolverStalled") code = kExitStalled;
    doc.push_back(std::move(r));
  }
  emit(doc, ctx.cfg.output_format, ctx.out);
  return code;
}

struct ChannelArgs {
  std::string source;
  std::string action;
  int k = 2;
  std::string out;
};

int cmd_channel(Context& ctx, const ChannelArgs& a) {
  Json j;
  j["source"] = a.source;
  j["action"] = a.action;
  std::optional<channels::GaussianChannel> ch;
  try {
    ch = load_channel_source(a.source, ctx.cfg.eps_psd);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotCP || a.action != "validate") throw;
    j["valid"] = false;
    j["min_eigenvalue"] = e.value() ? *e.value() : std::nan("");
    emit(j, ctx.cfg.output_format, ctx.out);
    return kExitNegative;
  }
  j["n_in"] = ch->n_in();
  j["n_out"] = ch->n_out();
  int code = kExitOk;
  auto feasibility_report = [&](const std::function<extend::FeasibilityResult()>& run) {
    try {
      const auto r = run();
      j.update(feasibility_json(r));
      code = status_exit(r);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSolverStalled) throw;
      j["status"] = "SolverStalled";
      j["margin"] = e.value() ? *e.value() : std::nan("");
      code = kExitStalled;
    }
  };
  if (a.action == "validate") {
    j["valid"] = true;
    const Index d = ch->x().rows();
    j["min_eigenvalue"] =
        matalg::realify_psd_check(Matrix::Identity(d, d) - ch->x() * ch->x().transpose(), ch->n()).min_eig;
  } else if (a.action == "antidegradable") {
    feasibility_report([&] { return channels::antidegradable(*ch, ctx.cfg.feasibility_options()); });
  } else if (a.action == "k_ext") {
    if (a.k < 1) throw Error(ErrorCode::kInvalidParameter, "--k must be >= 1");
    j["k"] = a.k;
    feasibility_report([&] { return channels::channel_k_extendible(*ch, a.k, ctx.cfg.feasibility_options()); });
  } else if (a.action == "eb") {
    const bool eb = channels::is_entanglement_breaking(*ch, ctx.cfg.eps_psd);
    j["entanglement_breaking"] = eb;
    j["x_op_norm"] = ch->x().size() ? matalg::norms(ch->x()).op : 0.0;
    code = eb ? kExitOk : kExitNegative;
  } else if (a.action == "choi") {
    const auto c = channels::choi_cm(*ch);
    j["split"] = {c.n_a(), c.n_b()};
    j["matrix"] = matrix_rows(c.cm().matrix());
    if (!a.out.empty()) {
      fgs::write_cm_file(a.out, c.cm().matrix(), std::make_pair(c.n_a(), c.n_b()));
      j["written"] = a.out;
    }
  } else {
    throw Error(ErrorCode::kInvalidParameter, "unknown channel action '" + a.action + "'");
  }
  emit(j, ctx.cfg.output_format, ctx.out);
  return code;
}

struct OracleArgs {
  std::string suite;
  int n_max = 3;
  int trials = 100;
  std::optional<std::uint64_t> seed;
};

int cmd_oracle_verify(Context& ctx, const OracleArgs& a) {
  if (a.n_max > 6) throw Error(ErrorCode::kInvalidParameter, "n_max above 6 is too expensive for these suites");
  const auto rep = oracle::run_suite(a.suite, a.n_max, a.trials, a.seed.value_or(ctx.cfg.seed));
  Json j;
  j["suite"] = rep.name;
  j["n_max"] = a.n_max;
  j["trials"] = rep.trials;
  j["checks"] = rep.checks;
  j["max_residual"] = rep.max_residual;
  j["tolerance"] = rep.tolerance;
  j["passed"] = rep.passed;
  emit(j, ctx.cfg.output_format, ctx.out);
  return rep.passed ? kExitOk : kExitNegative;
}

void report_error(const Error& e, OutputFormat fmt, std::ostream& out, std::ostream& err) {
  Json j;
  j["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  emit(j, fmt, out);
  err << "fgext: " << e.what() << '\n';
}

}  // namespace

CmSource load_cm_source(const std::string& spec) {
  if (!std::filesystem::exists(spec)) {
    if (auto b = builtin_cm(spec)) return *b;
  }
  const auto doc = fgs::read_cm_document(spec);
  return CmSource{spec, doc.matrix, doc.split};
}

channels::GaussianChannel load_channel_source(const std::string& spec, double eps_psd) {
  if (!std::filesystem::exists(spec)) {
    const auto [kind, arg] = split_spec(spec);
    if (kind == "loss") return channels::pure_loss(parse_double(arg, spec));
    if (kind == "identity") {
      const int n = parse_int(arg, spec);
      return channels::validate_channel(Matrix::Identity(2 * n, 2 * n), Matrix::Zero(2 * n, 2 * n), eps_psd);
    }
    if (kind == "replacement") {
      const int n = parse_int(arg, spec);
      return channels::validate_channel(Matrix::Zero(2 * n, 2 * n), fgs::vacuum(n).matrix(), eps_psd);
    }
  }
  const auto doc = channels::read_channel_document(spec);
  return channels::validate_channel(doc.x, doc.n, eps_psd);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extendibility, de Finetti bounds and channel checks for fermionic Gaussian states", "fgext"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> config_path;
  std::optional<std::string> format;
  std::optional<double> eps_psd, eps_feas;
  std::optional<int> max_iters;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, std::string("JSON config file (default: $") + kConfigEnvVar + ")");
  app.add_option("--format", format, "Output format: json or table");
  app.add_option("--eps-psd", eps_psd, "PSD tolerance");
  app.add_option("--eps-feas", eps_feas, "Feasibility tolerance");
  app.add_option("--max-iters", max_iters, "Newton step budget per solve");
  app.add_option("--seed", seed, "Seed for randomized steps");

  std::string check_source;
  auto* check = app.add_subcommand("check-cm", "Validate a covariance matrix and print its spectrum");
  check->add_option("source", check_source, "CM file or built-in spec")->required();

  ExtendibleArgs ext;
  auto* extc = app.add_subcommand("extendible", "Decide (k1,k2)-extendibility");
  extc->add_option("source", ext.source, "CM file or built-in spec")->required();
  extc->add_option("k1", ext.k1, "Copies of A")->required()->check(CLI::PositiveNumber);
  extc->add_option("k2", ext.k2, "Copies of B")->required()->check(CLI::PositiveNumber);
  extc->add_option("--split", ext.split, "Modes of A and B")->expected(2);
  extc->add_option("--emit-extension", ext.emit_extension, "Write the extended CM here");
  extc->add_option("--emit-witness", ext.emit_witness, "Write PREFIX_delta_a.cm and PREFIX_delta_b.cm");

  BoundsArgs bnd;
  auto* bndc = app.add_subcommand("bounds", "De Finetti bounds for given sizes, or from a CM");
  bndc->add_option("--modes", bnd.modes, "NA NB")->expected(2);
  bndc->add_option("--k1", bnd.k1, "Copies of A");
  bndc->add_option("--k2", bnd.k2, "Copies of B");
  bndc->add_option("--cm", bnd.cm, "CM file or built-in spec");
  bndc->add_option("--split", bnd.split, "Modes of A and B")->expected(2);

  FamilyArgs fam;
  auto* famc = app.add_subcommand("family", "Sweep the extendible two-mode family");
  famc->add_option("--k1-max", fam.k1_max, "Sweep k1 over 1..K");
  famc->add_option("--k2-max", fam.k2_max, "Sweep k2 over 1..K");
  famc->add_option("--k1", fam.k1, "Single k1");
  famc->add_option("--k2", fam.k2, "Single k2");
  famc->add_option("--jobs", fam.jobs, "Worker threads");
  famc->add_flag("--check", fam.check, "Also solve extendibility at (k1,k2)");
  famc->add_option("--write-cm", fam.write_cm, "Write the (single) family CM here");

  ChannelArgs chn;
  auto* chnc = app.add_subcommand("channel", "Channel validation and classification");
  chnc->add_option("source", chn.source, "Channel file or loss:L | identity:N | replacement:N")->required();
  chnc->add_option("action", chn.action, "validate | antidegradable | eb | choi | k_ext")
      ->required()
      ->check(CLI::IsMember({"validate", "antidegradable", "eb", "choi", "k_ext"}));
  chnc->add_option("--k", chn.k, "Number of output copies for k_ext");
  chnc->add_option("--out", chn.out, "Write the Choi CM here (choi)");

  OracleArgs orc;
  auto* orcc = app.add_subcommand("oracle-verify", "Compare CM formulas against dense Fock-space states");
  orcc->add_option("suite", orc.suite, "roundtrip | wick | sandwich | extension")
      ->required()
      ->check(CLI::IsMember({"roundtrip", "wick", "sandwich", "extension"}));
  orcc->add_option("--n-max", orc.n_max, "Largest mode count");
  orcc->add_option("--trials", orc.trials, "Random instances");
  orcc->add_option("--seed", orc.seed, "Suite seed (default: config seed)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fgext: " << e.what() << '\n';
    return kExitUsage;
  }

  OutputFormat fmt = OutputFormat::kJson;
  try {
    RunConfig cfg = resolve_config(config_path);
    if (format) cfg.output_format = parse_output_format(*format);
    if (eps_psd) cfg.eps_psd = *eps_psd;
    if (eps_feas) cfg.eps_feas = *eps_feas;
    if (max_iters) cfg.max_iters = *max_iters;
    if (seed) cfg.seed = *seed;
    cfg.validate();
    fmt = cfg.output_format;
    Context ctx{cfg, out, err};
    if (*check) return cmd_check_cm(ctx, check_source);
    if (*extc) return cmd_extendible(ctx, ext);
    if (*bndc) return cmd_bounds(ctx, bnd);
    if (*famc) return cmd_family(ctx, fam);
    if (*chnc) return cmd_channel(ctx, chn);
    if (*orcc) return cmd_oracle_verify(ctx, orc);
  } catch (const Error& e) {
    report_error(e, fmt, out, err);
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace fgext::cli
