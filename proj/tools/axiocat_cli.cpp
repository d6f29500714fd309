// axiocat command-line front end: fit, check-axioms, evaluate, perturb, predict.

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "axiocat/evaluation/robustness.hpp"
#include "axiocat/evaluation/test_axiom.hpp"
#include "axiocat/io/models.hpp"

namespace fs = std::filesystem;
using namespace axiocat;

namespace {

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

struct AlgoFlags {
  std::string algo;
  std::optional<std::string> config;
  std::optional<std::string> label_col;
  std::optional<Index> dim, k, c;
  std::optional<double> lambda, bandwidth, alpha, tol;
  std::optional<std::string> penalty, loss;
  std::optional<int> iterations;
  std::optional<std::uint64_t> seed;
};

void add_algo_flags(CLI::App* cmd, AlgoFlags& f) {
  cmd->add_option("--algo", f.algo, "algorithm id");
  cmd->add_option("--config", f.config, "JSON run config; flags override its values")->check(CLI::ExistingFile);
  cmd->add_option("--label-col", f.label_col, "label (or regression target) column");
  cmd->add_option("--dim", f.dim, "output dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--k", f.k, "neighbors")->check(CLI::PositiveNumber);
  cmd->add_option("--c", f.c, "categories (clustering)")->check(CLI::PositiveNumber);
  cmd->add_option("--lambda", f.lambda, "penalty / ridge weight")->check(CLI::NonNegativeNumber);
  cmd->add_option("--penalty", f.penalty, "regression penalty")->check(CLI::IsMember({"none", "l1", "l2"}));
  cmd->add_option("--bandwidth", f.bandwidth, "kde bandwidth")->check(CLI::PositiveNumber);
  cmd->add_option("--alpha", f.alpha, "naive bayes smoothing")->check(CLI::NonNegativeNumber);
  cmd->add_option("--loss", f.loss, "mds/isomap loss")->check(CLI::IsMember({"strain", "stress"}));
  cmd->add_option("--iterations", f.iterations, "nmf iterations")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_option("--tol", f.tol, "tolerance for parameter agreement")->check(CLI::NonNegativeNumber);
}

FitConfig resolve(const AlgoFlags& f) {
  FitConfig cfg;
  if (f.config) {
    try {
      auto j = nlohmann::json::parse(read_text_file(*f.config));
      if (!f.algo.empty()) j["algo"] = f.algo;
      cfg = fit_config_from_json(j);
    } catch (const nlohmann::json::parse_error& e) {
      throw DomainError("config '" + *f.config + "': " + e.what());
    }
  } else {
    if (f.algo.empty()) throw DomainError("--algo is required (or give --config)");
    cfg.algo = f.algo;
  }
  if (f.dim) cfg.dim = f.dim;
  if (f.k) cfg.k = *f.k;
  if (f.c) cfg.c = *f.c;
  if (f.lambda) cfg.lambda = f.lambda;
  if (f.bandwidth) cfg.bandwidth = f.bandwidth;
  if (f.alpha) cfg.alpha = *f.alpha;
  if (f.tol) cfg.tol = *f.tol;
  if (f.penalty) cfg.penalty = *f.penalty;
  if (f.loss) cfg.loss = *f.loss;
  if (f.iterations) cfg.iterations = *f.iterations;
  if (f.seed) cfg.seed = *f.seed;
  validate(cfg);
  return cfg;
}

Dataset load_for(const FitConfig& cfg, const AlgoFlags& f, const std::string& path) {
  DatasetOptions o;
  o.label_col = f.label_col;
  o.label_is_target = needs_target(cfg.algo);
  auto d = load_dataset(path, o);
  spdlog::info("read {}: {} objects, {} features{}", path, d.X.n(), d.X.p(),
               d.labeled() ? ", " + std::to_string(d.c()) + " categories" : std::string());
  return d;
}

AxiomReport fit_report(const FittedModel& f, double tol) {
  auto r = check_axioms(f.output);
  if (f.input.memberships() && f.input.inner()) r.ucr = check_ucr(f.input, f.output, tol);
  return r;
}

// ---- commands ---------------------------------------------------------------

void cmd_fit(const AlgoFlags& flags, const std::string& input, const fs::path& out) {
  const auto cfg = resolve(flags);
  const auto d = load_for(cfg, flags, input);
  const auto f = fit_model(cfg, d);
  spdlog::info("fitted {}", f.inner.algorithm_id());
  write_file_atomic(out / "model.json", dump(model_json(cfg, d, f)));
  write_file_atomic(out / "output.csv", to_csv(f.table));
  write_file_atomic(out / "axioms.json", dump(to_json(fit_report(f, cfg.tol))));
  if (f.objective) write_file_atomic(out / "objective.csv", to_csv(*f.objective));
}

LoadedModel read_model(const std::string& path) {
  try {
    return load_model(nlohmann::json::parse(read_text_file(path)));
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("model '" + path + "': " + e.what());
  }
}

void cmd_check_axioms(const std::string& model_path, const std::string& input, const fs::path& out) {
  const auto m = read_model(model_path);
  const auto d = load_dataset_for(m, input);
  const auto report = check_axioms(apply_model(m, d));
  spdlog::info("ss={} cs={} ce={}", report.ss.holds, report.cs.holds, report.ce.holds);
  write_file_atomic(out / "axioms.json", dump(to_json(report)));
}

void cmd_predict(const std::string& model_path, const std::string& input, const fs::path& out) {
  const auto m = read_model(model_path);
  const auto d = load_dataset_for(m, input);
  const auto bundle = apply_model(m, d);
  const auto inner = inner_from_model(m);
  auto table = profile_table(bundle.data(), inner);
  if (is_supervised(m.config.algo)) {
    table.header.push_back("label");
    for (Index k = 0; k < bundle.n(); ++k) {
      std::string names;
      const auto set = best_of(inner.profile(bundle.data().row(k)));
      for (auto i : set.indices())
        names += (names.empty() ? "" : ";") + m.label_names.at(i);
      table.rows[static_cast<std::size_t>(k)].push_back(names);
    }
  }
  write_file_atomic(out / "predictions.csv", to_csv(table));
}

void cmd_evaluate(const AlgoFlags& flags, const std::string& train_path, const std::string& test_path,
                  const fs::path& out) {
  const auto cfg = resolve(flags);
  const auto train = load_for(cfg, flags, train_path);
  const auto test = load_for(cfg, flags, test_path);
  if (to_json(train.schema()) != to_json(test.schema()))
    throw ShapeError("train schema " + to_json(train.schema()).dump() + " differs from test schema " +
                     to_json(test.schema()).dump());
  const auto a = fit_model(cfg, train);
  const auto b = fit_model(cfg, test);
  const auto verdict = check_test_axiom(a.inner, b.inner, cfg.tol);
  nlohmann::json j{{"algorithm_id", a.inner.algorithm_id()},
                   {"distance", verdict.distance},
                   {"tol", verdict.tol},
                   {"passed", verdict.passed},
                   {"train_objects", train.X.n()},
                   {"test_objects", test.X.n()}};
  if (is_supervised(cfg.algo)) {
    if (train.label_names != test.label_names) throw ShapeError("train and test label sets differ");
    std::size_t wrong = 0;
    for (Index k = 0; k < test.X.n(); ++k) {
      const auto set = best_of(a.inner.profile(test.X.row(k)));
      if (!(set.indices().size() == 1 && set.front() == test.labels[static_cast<std::size_t>(k)])) ++wrong;
    }
    j["disagreement_rate"] = static_cast<double>(wrong) / static_cast<double>(test.X.n());
  }
  spdlog::info("test axiom distance {} ({})", verdict.distance, verdict.passed ? "pass" : "fail");
  write_file_atomic(out / "evaluation.json", dump(j));
}

void cmd_perturb(const AlgoFlags& flags, const std::string& input, double sigma, int count,
                 const std::string& mode, const fs::path& out) {
  if (!(sigma > 0.0)) throw DomainError("--sigma must be > 0, got " + format_number(sigma));
  if (count < 2) throw DomainError("--count must be >= 2, got " + std::to_string(count));
  const auto cfg = resolve(flags);
  const auto d = load_for(cfg, flags, input);
  const auto base = fit_model(cfg, d);
  Rng rng(cfg.seed);
  std::vector<RobustnessPair> pairs;
  const int width = static_cast<int>(std::to_string(count).size());
  for (int i = 1; i <= count; ++i) {
    Matrix x = d.X.values();
    for (Index j = 0; j < x.cols(); ++j) {
      if (d.feature_types[static_cast<std::size_t>(j)] == ColumnType::categorical) continue;
      for (Index k = 0; k < x.rows(); ++k) x(k, j) += sigma * rng.normal();
    }
    Dataset copy = d;
    copy.X = DataMatrix(x);
    std::string id = std::to_string(i);
    id.insert(0, static_cast<std::size_t>(width) - id.size(), '0');
    const auto csv = out / "perturbed" / ("perturbed_" + id + ".csv");
    write_file_atomic(csv, to_csv(dataset_table(copy, x)));
    write_file_atomic(schema_path_for(csv), dump(to_json(copy.schema())));
    const auto f = fit_model(cfg, copy);
    pairs.push_back({{base.input, base.output}, {f.input, f.output}});
  }
  const auto report = estimate_robustness(pairs, mode == "inner" ? RobustnessMode::inner : RobustnessMode::local_outer);
  spdlog::info("k1={} k2={}", report.k1, report.k2);
  write_file_atomic(out / "robustness.json", dump(to_json(report)));
}

void setup_logging() {
  auto logger = spdlog::stderr_logger_mt("axiocat");
  logger->set_pattern("%l: %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("AXIOCAT_LOG")) spdlog::set_level(spdlog::level::from_str(env));
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"axiocat: fit categorization algorithms and check their axioms"};
  app.require_subcommand(1);

  AlgoFlags flags;
  std::string input, test, model, mode = "local-outer";
  std::string out;
  double sigma = 0.0;
  int count = 0;

  auto* fit = app.add_subcommand("fit", "fit an algorithm; writes model.json, output.csv, axioms.json");
  add_algo_flags(fit, flags);
  fit->add_option("--input", input, "dataset CSV")->required();
  fit->add_option("--out", out, "output directory")->required();

  auto* check = app.add_subcommand("check-axioms", "axiom report for a model applied to a dataset");
  check->add_option("--model", model, "model.json")->required();
  check->add_option("--input", input, "dataset CSV")->required();
  check->add_option("--out", out, "output directory")->required();

  auto* predict = app.add_subcommand("predict", "per-object profiles and assignment sets");
  predict->add_option("--model", model, "model.json")->required();
  predict->add_option("--input", input, "dataset CSV")->required();
  predict->add_option("--out", out, "output directory")->required();

  auto* evaluate = app.add_subcommand("evaluate", "fit on train and test, compare the representations");
  add_algo_flags(evaluate, flags);
  evaluate->add_option("--input", input, "training CSV")->required();
  evaluate->add_option("--test", test, "test CSV")->required();
  evaluate->add_option("--out", out, "output directory")->required();

  auto* perturb = app.add_subcommand("perturb", "Gaussian-perturbed copies and a robustness report");
  add_algo_flags(perturb, flags);
  perturb->add_option("--input", input, "dataset CSV")->required();
  perturb->add_option("--sigma", sigma, "noise standard deviation")->required();
  perturb->add_option("--count", count, "number of perturbed copies")->required();
  perturb->add_option("--mode", mode, "ratio mode")->check(CLI::IsMember({"local-outer", "inner"}));
  perturb->add_option("--out", out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*fit) cmd_fit(flags, input, out);
    else if (*check) cmd_check_axioms(model, input, out);
    else if (*predict) cmd_predict(model, input, out);
    else if (*evaluate) cmd_evaluate(flags, input, test, out);
    else cmd_perturb(flags, input, sigma, count, mode, out);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::numerical ? 3 : 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
