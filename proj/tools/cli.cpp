#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "coocc/affinity.hpp"
#include "coocc/bayes.hpp"
#include "coocc/beta.hpp"
#include "coocc/classic.hpp"
#include "coocc/error.hpp"
#include "coocc/imputer.hpp"
#include "coocc/presence.hpp"
#include "coocc/version.hpp"
#include "report.hpp"

namespace coocc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string data;
  std::string out;
  std::string pair;
  std::string period;
  std::string index = "jaccard";
  std::string link = "logit";
  std::string sd = "sample";
  std::string axis = "unit";
  std::string log;
  std::string covariates;
  std::string prior = "uniform";
  std::size_t randomize = 0;
  std::uint64_t seed = 0;
  double pca_threshold = 1e-5;
  std::size_t retain = 0;
  bool between_over_within = false;
  bool pairwise = false;
  bool alpha_pairs = false;
  double missing_frac = 0.02;
  std::size_t reps = 20;
  std::int64_t k = 0, total = 0, count_a = 0, count_b = 0;
  double grid = 0.05;
  int order = 64;
};

std::string fmt(double v) { return format_double(v); }

std::string fmt_short(double v) {
  if (!std::isfinite(v)) return format_double(v);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Deviation parse_sd(const std::string& s) {
  return s == "population" ? Deviation::Population : Deviation::Sample;
}

PipelineConfig pipeline_of(const Options& o, LinkKind link) {
  PipelineConfig pc;
  pc.link = link;
  pc.pca_threshold = o.pca_threshold;
  pc.retain = o.retain;
  pc.lda.between_over_within = o.between_over_within;
  return pc;
}

std::vector<LinkKind> links_of(const std::string& s) {
  if (s == "both") return {LinkKind::Logit, LinkKind::Probit};
  return {parse_link(s)};
}

std::pair<std::size_t, std::size_t> resolve_pair(const PresenceTensor& t, const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos) {
    throw UsageError("--pair expects two entity identifiers separated by a comma");
  }
  return {t.entity_index(s.substr(0, comma)), t.entity_index(s.substr(comma + 1))};
}

std::vector<std::size_t> resolve_periods(const PresenceTensor& t, const std::string& period) {
  if (!period.empty()) return {t.period_index(period)};
  std::vector<std::size_t> all(t.num_periods());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

std::vector<std::uint8_t> presence_vector(const PresenceTensor& t, std::size_t e, std::size_t r) {
  std::vector<std::uint8_t> v;
  v.reserve(t.num_units());
  for (const Cell c : t.slice(e, r)) {
    if (c == Cell::Missing) {
      throw Error(ErrorCode::MissingData, "entity '" + t.entities()[e] + "' has missing cells in period '" +
                                              t.periods()[r] + "'");
    }
    v.push_back(c == Cell::Present ? 1 : 0);
  }
  return v;
}

void emit(const Options& o, const std::string& content, std::ostream& out) {
  if (o.out.empty()) {
    out << content;
  } else {
    write_atomic(o.out, content);
  }
}

Json provenance(const Options& o, const std::string& command, Json config) {
  Json p;
  p["tool"] = "coocc";
  p["version"] = kVersion;
  p["command"] = command;
  p["config"] = std::move(config);
  p["seed"] = o.seed;
  if (!o.data.empty()) {
    p["input"] = {{"path", o.data}, {"sha256", sha256_file(o.data)}};
  }
  return p;
}

// ---------------------------------------------------------------- commands

int cmd_validate(const Options& o, std::ostream& out) {
  const auto t = read_presence_csv(o.data);
  out << "k=" << t.num_entities() << " n=" << t.num_units() << " l=" << t.num_periods()
      << " missing=" << t.missing_count() << "\n";
  return kExitOk;
}

int cmd_classic(const Options& o, std::ostream& out) {
  const auto t = read_presence_csv(o.data);
  const auto [a, b] = resolve_pair(t, o.pair);
  for (const std::size_t r : resolve_periods(t, o.period)) {
    const auto va = presence_vector(t, a, r);
    const auto vb = presence_vector(t, b, r);
    double value = 0.0;
    if (o.index == "jaccard") {
      value = jaccard(va, vb);
    } else if (o.index == "dice") {
      value = sorensen_dice(va, vb);
    } else {
      const auto c = cooccurrence_counts(t, a, b, r);
      const std::vector<std::uint64_t> counts{c.count_a, c.count_b};
      value = simpson_diversity(counts);
    }
    out << "period=" << t.periods()[r] << ' ' << o.index << '=' << fmt_short(value) << "\n";
  }
  return kExitOk;
}

int cmd_alpha(const Options& o, std::ostream& out) {
  const auto t = read_presence_csv(o.data);
  const auto [a, b] = resolve_pair(t, o.pair);
  for (const std::size_t r : resolve_periods(t, o.period)) {
    const auto c = cooccurrence_counts(t, a, b, r);
    const double alpha = alpha_mle(static_cast<std::int64_t>(c.total),
                                   static_cast<std::int64_t>(c.count_a),
                                   static_cast<std::int64_t>(c.count_b),
                                   static_cast<double>(c.both));
    out << "period=" << t.periods()[r] << " alpha_hat=" << fmt_short(alpha) << " N=" << c.total
        << " mA=" << c.count_a << " mB=" << c.count_b << " X=" << c.both << "\n";
  }
  return kExitOk;
}

Json link_diagnostics(const LinkSummary& s) {
  Json d;
  d["link"] = std::string(link_name(s.link));
  d["randomized"] = s.randomized;
  d["replicates"] = s.replicates;
  d["retained"] = s.retained;
  if (!s.randomized) {
    d["ridge"] = number(s.ridge);
    d["basis_condition"] = number(s.basis_condition);
  }
  Json score = Json::array();
  for (Eigen::Index i = 0; i < s.score.size(); ++i) score.push_back(number(s.score(i)));
  d["score"] = std::move(score);
  if (s.ensemble) {
    d["used"] = s.ensemble->used;
    d["failed"] = s.ensemble->failed;
    Json reps = Json::array();
    for (const auto& r : s.ensemble->diagnostics) {
      reps.push_back({{"replicate", r.replicate},
                      {"status", r.status},
                      {"norm", number(r.norm)},
                      {"flipped", r.flipped},
                      {"ridge", number(r.ridge)}});
    }
    d["replicate_log"] = std::move(reps);
  }
  return d;
}

std::string beta_key(const LinkSummary& s) {
  return "beta_" + std::string(link_name(s.link)) + (s.randomized ? "_randomized" : "");
}

int cmd_beta(const Options& o, std::ostream& out) {
  const auto t = read_presence_csv(o.data);
  CompareConfig cc;
  cc.links = links_of(o.link);
  cc.pipeline = pipeline_of(o, cc.links.front());
  cc.replicates = o.randomize;
  cc.seed = o.seed;
  cc.deviation = parse_sd(o.sd);
  cc.pair_alpha = o.alpha_pairs;
  const auto report = compare_indices(t, cc);

  Json config{{"link", o.link},
              {"randomize", o.randomize},
              {"seed", o.seed},
              {"pca_threshold", number(o.pca_threshold)},
              {"retain", o.retain},
              {"sd", o.sd},
              {"between_over_within", o.between_over_within},
              {"pairwise", o.pairwise},
              {"alpha_pairs", o.alpha_pairs}};
  Json j;
  j["meta"] = {{"entities", t.num_entities()},
               {"units", t.num_units()},
               {"periods", t.periods()},
               {"provenance", provenance(o, "beta", std::move(config))}};

  Json per_unit = Json::array();
  for (std::size_t u = 0; u < report.units.size(); ++u) {
    Json row;
    row["unit"] = report.units[u];
    row["prevalence"] = number(report.prevalence[u]);
    row["jaccard"] = number(report.jaccard[u]);
    for (const auto& s : report.links) row[beta_key(s)] = number(s.beta(static_cast<Eigen::Index>(u)));
    per_unit.push_back(std::move(row));
  }
  j["per_unit"] = std::move(per_unit);

  Json pairwise = nullptr;
  if (o.pairwise || o.alpha_pairs) {
    pairwise = Json::object();
    if (o.pairwise) {
      const auto& first = report.links.front();
      const auto table = score_table(first.score, t.num_units(), t.num_periods());
      const auto sim = similarity_matrix(table, cc.deviation);
      Json rows = Json::array();
      for (Eigen::Index i = 0; i < sim.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < sim.cols(); ++c) row.push_back(number(sim(i, c)));
        rows.push_back(std::move(row));
      }
      pairwise["similarity"] = {{"axis", "unit"},
                                {"link", std::string(link_name(first.link))},
                                {"labels", report.units},
                                {"values", std::move(rows)}};
    }
    if (o.alpha_pairs) {
      Json list = Json::array();
      for (const auto& p : report.affinities) {
        list.push_back({{"a", t.entities()[p.a]},
                        {"b", t.entities()[p.b]},
                        {"period", t.periods()[p.period]},
                        {"N", p.counts.total},
                        {"mA", p.counts.count_a},
                        {"mB", p.counts.count_b},
                        {"X", p.counts.both},
                        {"alpha_hat", number(p.alpha)}});
      }
      pairwise["affinity"] = std::move(list);
    }
  }
  j["pairwise"] = std::move(pairwise);

  Json links = Json::array();
  for (const auto& s : report.links) links.push_back(link_diagnostics(s));
  j["diagnostics"] = {{"links", std::move(links)}};

  if (!o.log.empty()) {
    std::ostringstream log;
    for (const auto& s : report.links) {
      if (!s.ensemble) continue;
      log << "# link=" << link_name(s.link) << "\n";
      write_diagnostics(log, *s.ensemble);
    }
    write_atomic(o.log, log.str());
  }
  emit(o, dump(j), out);
  return kExitOk;
}

int cmd_heatmap(const Options& o, std::ostream& out) {
  const auto t = read_presence_csv(o.data);
  if (o.out.empty()) throw UsageError("heatmap needs --out");
  const Axis axis = o.axis == "entity" ? Axis::Entity : Axis::Unit;
  std::optional<std::size_t> period;
  if (!o.period.empty()) period = t.period_index(o.period);
  const auto m = pairwise_matrix(t, axis, pipeline_of(o, parse_link(o.link)), period);
  std::string title = std::string("pairwise similarity, ") + (axis == Axis::Unit ? "unit" : "entity") +
                      " axis, " + o.link + " link";
  title += period ? ", period " + o.period : ", all periods";
  write_atomic(o.out, heatmap_svg(m, title));
  out << "wrote " << o.out << " (" << m.labels.size() << " x " << m.labels.size() << ")\n";
  return kExitOk;
}

int cmd_impute_check(const Options& o, std::ostream& out) {
  const auto t = read_presence_csv(o.data);
  ImputeCheckConfig ic;
  ic.missing_fraction = o.missing_frac;
  ic.repetitions = o.reps;
  ic.seed = o.seed;
  ic.pipeline = pipeline_of(o, parse_link(o.link));
  const auto report = impute_compare(t, ic);

  const std::size_t n = t.num_units();
  std::string csv = "repetition,unit,period,full,imputed\n";
  for (std::size_t r = 0; r < report.repetitions.size(); ++r) {
    const auto& rep = report.repetitions[r];
    for (Eigen::Index i = 0; i < report.full_score.size(); ++i) {
      const auto row = static_cast<std::size_t>(i);
      csv += std::to_string(r) + ',' + t.units()[row % n] + ',' + t.periods()[row / n] + ',' +
             fmt(report.full_score(i)) + ',' + fmt(rep.imputed_score(i)) + '\n';
    }
  }
  emit(o, csv, out);
  std::string summary;
  for (std::size_t r = 0; r < report.repetitions.size(); ++r) {
    summary += "# repetition=" + std::to_string(r) +
               " masked=" + std::to_string(report.repetitions[r].masked) +
               " correlation=" + fmt(report.repetitions[r].correlation) + "\n";
  }
  summary += "mean_correlation=" + fmt(report.mean_correlation) +
             " min_correlation=" + fmt(report.min_correlation) +
             " max_correlation=" + fmt(report.max_correlation) + "\n";
  out << summary;
  return kExitOk;
}

int cmd_bayes(const Options& o, std::ostream& out) {
  const PairCounts c{o.k, o.total, o.count_a, o.count_b};
  const PriorKind kind = o.prior == "truncnormal" ? PriorKind::TruncatedNormal : PriorKind::Uniform;
  const auto fit = maximize_prior(c, kind, o.grid, o.order);
  if (kind == PriorKind::Uniform) {
    out << "prior=uniform upper=" << fmt_short(fit.upper);
  } else {
    out << "prior=truncnormal mu1=" << fmt_short(fit.mu1) << " mu2=" << fmt_short(fit.mu2);
  }
  out << " likelihood=" << fmt_short(fit.likelihood) << " evaluated=" << fit.evaluated << "\n";
  if (!o.out.empty()) {
    Json config{{"prior", o.prior}, {"k", o.k},       {"N", o.total},
                {"mA", o.count_a},  {"mB", o.count_b}, {"grid", number(o.grid)},
                {"order", o.order}};
    Json j;
    j["meta"] = {{"provenance", provenance(o, "bayes", std::move(config))}};
    Json result{{"likelihood", number(fit.likelihood)}, {"evaluated", fit.evaluated}};
    if (kind == PriorKind::Uniform) {
      result["upper"] = number(fit.upper);
    } else {
      result["mu1"] = number(fit.mu1);
      result["mu2"] = number(fit.mu2);
    }
    j["per_unit"] = Json::array();
    j["pairwise"] = nullptr;
    Json grid = Json::array();
    for (double v : fit.grid_values) grid.push_back(number(v));
    j["diagnostics"] = {{"result", std::move(result)}, {"grid_values", std::move(grid)}};
    write_atomic(o.out, dump(j));
  }
  return kExitOk;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
    while (!field.empty() && field.front() == ' ') field.erase(field.begin());
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const auto t = read_presence_csv(o.data);
  if (o.out.empty()) throw UsageError("compare needs --out");

  std::vector<std::string> cov_header;
  std::map<std::string, std::vector<std::string>> cov_rows;
  if (!o.covariates.empty()) {
    std::ifstream in(o.covariates);
    if (!in) throw Error(ErrorCode::MalformedCsv, "cannot open '" + o.covariates + "'");
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::MalformedCsv, "empty covariate file");
    cov_header = split_csv_line(line);
    if (cov_header.empty() || cov_header.front() != "unit") {
      throw Error(ErrorCode::MalformedCsv, "covariate header must start with 'unit'");
    }
    cov_header.erase(cov_header.begin());
    while (std::getline(in, line)) {
      if (line.empty() || line == "\r") continue;
      auto fields = split_csv_line(line);
      if (fields.size() != cov_header.size() + 1) {
        throw Error(ErrorCode::MalformedCsv, "covariate row has the wrong field count: " + line);
      }
      const std::string unit = fields.front();
      fields.erase(fields.begin());
      if (!cov_rows.emplace(unit, std::move(fields)).second) {
        throw Error(ErrorCode::DuplicateCell, "duplicate covariate row for unit '" + unit + "'");
      }
    }
  }

  CompareConfig cc;
  cc.links = {LinkKind::Logit, LinkKind::Probit};
  cc.pipeline = pipeline_of(o, LinkKind::Logit);
  cc.replicates = o.randomize;
  cc.seed = o.seed;
  cc.deviation = parse_sd(o.sd);
  const auto report = compare_indices(t, cc);

  std::string csv = "unit,prevalence,jaccard";
  for (const auto& s : report.links) csv += ',' + beta_key(s);
  for (const auto& h : cov_header) csv += ',' + h;
  csv += '\n';
  for (std::size_t u = 0; u < report.units.size(); ++u) {
    csv += report.units[u] + ',' + fmt(report.prevalence[u]) + ',' + fmt(report.jaccard[u]);
    for (const auto& s : report.links) csv += ',' + fmt(s.beta(static_cast<Eigen::Index>(u)));
    const auto it = cov_rows.find(report.units[u]);
    for (std::size_t c = 0; c < cov_header.size(); ++c) {
      csv += ',';
      if (it != cov_rows.end()) csv += it->second[c];
    }
    csv += '\n';
  }
  write_atomic(o.out, csv);
  out << "wrote " << o.out << " (" << report.units.size() << " units)\n";
  return kExitOk;
}

// ---------------------------------------------------------------- parsing

void set_threads_from_env() {
  const char* v = std::getenv("COOCC_THREADS");
  if (!v || !*v) return;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end == '\0' && n > 0) omp_set_num_threads(static_cast<int>(n));
}

// Splices `key=value` lines from --config in front of the user's own flags,
// so that with last-wins options the command line takes precedence.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i + 2));
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (!path || args.size() < 2) return args;
  std::ifstream probe(*path);
  if (!probe) throw UsageError("cannot open config file '" + *path + "'");
  std::vector<std::string> injected;
  for (const auto& item : CLI::ConfigINI().from_file(*path)) {
    if (item.name == "++" || item.name == "--") continue;
    std::string value;
    for (std::size_t i = 0; i < item.inputs.size(); ++i) value += (i ? "," : "") + item.inputs[i];
    injected.push_back("--" + item.name + "=" + value);
  }
  args.insert(args.begin() + 2, injected.begin(), injected.end());
  return args;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  set_threads_from_env();
  Options o;
  CLI::App app{"Similarity and co-occurrence indices for presence-absence panels", "coocc"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--config", "key=value file; keys are long option names");

  const auto data_arg = [&](CLI::App* s) { s->add_option("data", o.data, "presence CSV")->required(); };
  const auto pipeline_args = [&](CLI::App* s) {
    s->add_option("--pca-threshold", o.pca_threshold, "smallest retained PCA eigenvalue");
    s->add_option("--retain", o.retain, "PCA columns passed to LDA (0 = all)");
    s->add_flag("--between-over-within", o.between_over_within,
                "maximise between/within instead of within/between");
  };
  const CLI::IsMember links_all({"logit", "probit", "both"});
  const CLI::IsMember links_one({"logit", "probit"});
  const CLI::IsMember sds({"sample", "population"});

  auto* validate = app.add_subcommand("validate", "check a presence CSV and print its shape");
  data_arg(validate);

  auto* classic = app.add_subcommand("classic", "classical index for an entity pair");
  data_arg(classic);
  classic->add_option("--pair", o.pair, "A,B")->required();
  classic->add_option("--period", o.period, "period identifier (default: every period)");
  classic->add_option("--index", o.index)->check(CLI::IsMember({"jaccard", "dice", "simpson"}));

  auto* alpha = app.add_subcommand("alpha", "affinity MLE for an entity pair");
  data_arg(alpha);
  alpha->add_option("--pair", o.pair, "A,B")->required();
  alpha->add_option("--period", o.period, "period identifier (default: every period)");

  auto* beta = app.add_subcommand("beta", "spectral similarity index per unit");
  data_arg(beta);
  beta->add_option("--link", o.link)->check(links_all);
  beta->add_option("--randomize", o.randomize, "replicates of the randomised ensemble");
  beta->add_option("--seed", o.seed);
  pipeline_args(beta);
  beta->add_option("--sd", o.sd, "standard deviation divisor")->check(sds);
  beta->add_flag("--pairwise", o.pairwise, "include the unit pairwise similarity matrix");
  beta->add_flag("--alpha-pairs", o.alpha_pairs, "include the affinity of every entity pair");
  beta->add_option("--log", o.log, "replicate diagnostics log");
  beta->add_option("--out", o.out, "report.json (default: stdout)");

  auto* heatmap = app.add_subcommand("heatmap", "pairwise similarity heatmap (SVG)");
  data_arg(heatmap);
  heatmap->add_option("--axis", o.axis)->check(CLI::IsMember({"unit", "entity"}));
  heatmap->add_option("--period", o.period, "single period (default: across periods)");
  heatmap->add_option("--link", o.link)->check(links_one);
  pipeline_args(heatmap);
  heatmap->add_option("--out", o.out, "heat.svg")->required();

  auto* impute = app.add_subcommand("impute-check", "mask, impute and compare score vectors");
  data_arg(impute);
  impute->add_option("--missing-frac", o.missing_frac);
  impute->add_option("--reps", o.reps);
  impute->add_option("--seed", o.seed);
  impute->add_option("--link", o.link)->check(links_one);
  pipeline_args(impute);
  impute->add_option("--out", o.out, "pairs CSV (default: stdout)");

  auto* bayes = app.add_subcommand("bayes", "prior hyperparameter grid search");
  bayes->add_option("--prior", o.prior)->check(CLI::IsMember({"uniform", "truncnormal"}));
  bayes->add_option("--k", o.k)->required();
  bayes->add_option("--N", o.total)->required();
  bayes->add_option("--mA", o.count_a)->required();
  bayes->add_option("--mB", o.count_b)->required();
  bayes->add_option("--grid", o.grid);
  bayes->add_option("--order", o.order, "Gauss-Legendre order");
  bayes->add_option("--out", o.out, "report.json");

  auto* compare = app.add_subcommand("compare", "per-unit table of indices for plotting");
  data_arg(compare);
  compare->add_option("--randomize", o.randomize);
  compare->add_option("--seed", o.seed);
  pipeline_args(compare);
  compare->add_option("--sd", o.sd)->check(sds);
  compare->add_option("--covariates", o.covariates, "CSV with a leading 'unit' column");
  compare->add_option("--out", o.out, "table.csv")->required();

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = expand_config(std::move(args));
    std::vector<const char*> ptrs;
    for (const auto& a : args) ptrs.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitUsage;
    }

    if (validate->parsed()) return cmd_validate(o, out);
    if (classic->parsed()) return cmd_classic(o, out);
    if (alpha->parsed()) return cmd_alpha(o, out);
    if (beta->parsed()) return cmd_beta(o, out);
    if (heatmap->parsed()) return cmd_heatmap(o, out);
    if (impute->parsed()) return cmd_impute_check(o, out);
    if (bayes->parsed()) return cmd_bayes(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << error_name(e.code()) << ": " << e.what() << "\n";
    return error_category(e.code()) == ErrorCategory::Numerical ? kExitNumerical : kExitData;
  } catch (const std::exception& e) {
    err << "error: io: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace coocc::cli
