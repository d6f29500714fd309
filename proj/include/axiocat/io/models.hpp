#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "axiocat/classification/fisher.hpp"
#include "axiocat/classification/knn.hpp"
#include "axiocat/classification/lda.hpp"
#include "axiocat/classification/logistic.hpp"
#include "axiocat/classification/max_margin.hpp"
#include "axiocat/classification/naive_bayes.hpp"
#include "axiocat/clustering/prototypes.hpp"
#include "axiocat/core/report_json.hpp"
#include "axiocat/estimation/gaussian.hpp"
#include "axiocat/estimation/kde.hpp"
#include "axiocat/estimation/regression.hpp"
#include "axiocat/io/dataset.hpp"
#include "axiocat/reduction/isomap.hpp"
#include "axiocat/reduction/lle.hpp"
#include "axiocat/reduction/mds.hpp"
#include "axiocat/reduction/nmf.hpp"
#include "axiocat/reduction/pca.hpp"

namespace axiocat {

inline nlohmann::json matrix_json(const Matrix& m) {
  auto rows = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    auto r = nlohmann::json::array();
    for (Index j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline Matrix matrix_from_json(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw DomainError(what + ": expected an array of rows");
  if (j.empty()) return Matrix(0, 0);
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  Matrix m(static_cast<Index>(j.size()), static_cast<Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ShapeError(what + ": ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[i][c].is_number()) throw DomainError(what + ": non-numeric entry at row " + std::to_string(i + 1));
      m(static_cast<Index>(i), static_cast<Index>(c)) = j[i][c].get<double>();
    }
  }
  return m;
}

inline nlohmann::json vector_json(const Vector& v) {
  auto a = nlohmann::json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

inline const std::vector<std::string>& algorithm_ids() {
  static const std::vector<std::string> ids{"pca",        "nmf", "lle", "mds",      "isomap",     "gaussian",
                                            "kde",        "regression", "prototypes", "knn", "lda",
                                            "max-margin", "logistic",   "naive-bayes", "fisher"};
  return ids;
}

inline bool is_supervised(const std::string& algo) {
  return algo == "knn" || algo == "lda" || algo == "max-margin" || algo == "logistic" || algo == "naive-bayes" ||
         algo == "fisher";
}
inline bool needs_target(const std::string& algo) { return algo == "regression"; }
/// Fitted representations tied to the training objects; applying them means refitting.
inline bool is_transductive(const std::string& algo) { return algo == "lle" || algo == "mds" || algo == "isomap"; }
inline bool is_embedding(const std::string& algo) {
  return algo == "pca" || algo == "nmf" || is_transductive(algo);
}

struct FitConfig {
  std::string algo;
  std::optional<Index> dim;  // reduction: default 2; fisher: default c - 1
  Index k = 5;               // knn, lle, isomap neighbors
  Index c = 2;               // clustering categories
  std::optional<double> lambda;
  std::string penalty = "none";  // regression: none | l1 | l2
  std::optional<double> bandwidth;
  double alpha = 1.0;            // naive bayes smoothing
  std::string loss = "strain";   // mds, isomap: strain | stress
  int iterations = 500;          // nmf
  std::uint64_t seed = 0;
  double tol = 1e-9;
};

inline void validate(const FitConfig& cfg) {
  const auto& ids = algorithm_ids();
  if (std::find(ids.begin(), ids.end(), cfg.algo) == ids.end()) {
    std::string all;
    for (const auto& id : ids) all += (all.empty() ? "" : ", ") + id;
    throw DomainError("unknown algorithm '" + cfg.algo + "'; expected one of " + all);
  }
  if (cfg.dim && *cfg.dim < 1) throw DomainError("--dim must be >= 1, got " + std::to_string(*cfg.dim));
  if (cfg.k < 1) throw DomainError("--k must be >= 1, got " + std::to_string(cfg.k));
  if (cfg.c < 1) throw DomainError("--c must be >= 1, got " + std::to_string(cfg.c));
  if (cfg.lambda && !(*cfg.lambda >= 0.0)) throw DomainError("--lambda must be >= 0, got " + std::to_string(*cfg.lambda));
  if (cfg.bandwidth && !(*cfg.bandwidth > 0.0))
    throw DomainError("--bandwidth must be > 0, got " + std::to_string(*cfg.bandwidth));
  if (!(cfg.alpha >= 0.0)) throw DomainError("--alpha must be >= 0, got " + std::to_string(cfg.alpha));
  if (!(cfg.tol >= 0.0)) throw DomainError("--tol must be >= 0, got " + std::to_string(cfg.tol));
  if (cfg.iterations < 1) throw DomainError("--iterations must be >= 1, got " + std::to_string(cfg.iterations));
  if (cfg.loss != "strain" && cfg.loss != "stress") throw DomainError("--loss must be strain or stress, got '" + cfg.loss + "'");
  if (cfg.penalty != "none" && cfg.penalty != "l1" && cfg.penalty != "l2")
    throw DomainError("--penalty must be none, l1 or l2, got '" + cfg.penalty + "'");
  if (cfg.penalty != "none" && !(cfg.lambda && *cfg.lambda > 0.0))
    throw DomainError("--penalty " + cfg.penalty + " needs --lambda > 0");
}

inline nlohmann::json to_json(const FitConfig& cfg) {
  nlohmann::json j{{"algo", cfg.algo},       {"k", cfg.k},         {"c", cfg.c},
                   {"penalty", cfg.penalty}, {"alpha", cfg.alpha}, {"loss", cfg.loss},
                   {"iterations", cfg.iterations}, {"seed", cfg.seed}, {"tol", cfg.tol}};
  j["dim"] = cfg.dim ? nlohmann::json(*cfg.dim) : nlohmann::json(nullptr);
  j["lambda"] = cfg.lambda ? nlohmann::json(*cfg.lambda) : nlohmann::json(nullptr);
  j["bandwidth"] = cfg.bandwidth ? nlohmann::json(*cfg.bandwidth) : nlohmann::json(nullptr);
  return j;
}

/// Unknown keys are rejected; missing keys keep their defaults.
inline FitConfig fit_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("config must be a JSON object");
  static const std::vector<std::string> keys{"algo", "dim",  "k",          "c",    "lambda", "penalty", "bandwidth",
                                             "alpha", "loss", "iterations", "seed", "tol"};
  for (const auto& [key, value] : j.items())
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw DomainError("config: unknown key '" + key + "'");
  FitConfig cfg;
  try {
    cfg.algo = j.at("algo").get<std::string>();
    if (j.contains("dim") && !j["dim"].is_null()) cfg.dim = j["dim"].get<Index>();
    if (j.contains("k")) cfg.k = j["k"].get<Index>();
    if (j.contains("c")) cfg.c = j["c"].get<Index>();
    if (j.contains("lambda") && !j["lambda"].is_null()) cfg.lambda = j["lambda"].get<double>();
    if (j.contains("penalty")) cfg.penalty = j["penalty"].get<std::string>();
    if (j.contains("bandwidth") && !j["bandwidth"].is_null()) cfg.bandwidth = j["bandwidth"].get<double>();
    if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
    if (j.contains("loss")) cfg.loss = j["loss"].get<std::string>();
    if (j.contains("iterations")) cfg.iterations = j["iterations"].get<int>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("config: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

/// One row per object: object number, the profile s1..sc and the referring set
/// as ';'-joined 1-based category numbers.
inline CsvTable profile_table(const DataMatrix& X, const InnerRepresentation& inner) {
  CsvTable t;
  t.header = {"object"};
  for (const auto& s : numbered("s", inner.categories())) t.header.push_back(s);
  t.header.push_back("assignment");
  for (Index k = 0; k < X.n(); ++k) {
    const auto prof = inner.profile(X.row(k));
    std::vector<std::string> row{std::to_string(k + 1)};
    for (Index i = 0; i < prof.scores.size(); ++i) row.push_back(format_number(prof.scores(i)));
    std::string a;
    const auto set = best_of(prof);
    for (auto i : set.indices()) a += (a.empty() ? "" : ";") + std::to_string(i + 1);
    row.push_back(a);
    t.rows.push_back(std::move(row));
  }
  return t;
}

struct FittedModel {
  std::string algo;
  InnerRepresentation inner;    // the representation serialized and compared
  CategorizationBundle input;   // (X, U) plus the input-side inner representation when there is one
  CategorizationBundle output;  // (Y, V, inner)
  nlohmann::json summary;       // algorithm-specific values
  CsvTable table;               // output.csv
  std::optional<CsvTable> objective;
};

namespace detail {

inline CsvTable objective_table(const std::vector<double>& values) {
  CsvTable t{{"iteration", "objective"}, {}};
  for (std::size_t i = 0; i < values.size(); ++i) t.rows.push_back({std::to_string(i), format_number(values[i])});
  return t;
}

inline MdsOptions mds_options(const FitConfig& cfg) {
  MdsOptions o;
  o.loss = cfg.loss == "stress" ? MdsLoss::stress : MdsLoss::strain;
  return o;
}

inline Penalty penalty_of(const FitConfig& cfg) {
  if (cfg.penalty == "l1") return Penalty::l1(*cfg.lambda);
  if (cfg.penalty == "l2") return Penalty::l2(*cfg.lambda);
  return Penalty::none();
}

inline NaiveBayesOptions naive_bayes_options(const FitConfig& cfg, const std::vector<ColumnType>& types) {
  NaiveBayesOptions o;
  o.alpha = cfg.alpha;
  for (auto t : types) o.kinds.push_back(t == ColumnType::categorical ? FeatureKind::categorical : FeatureKind::real);
  return o;
}

inline FittedModel fit_classifier(const FitConfig& cfg, const Dataset& d, InnerRepresentation inner,
                                  nlohmann::json summary) {
  CategorizationBundle output = classification_bundle(d.X, inner);
  const auto sets = assign_outer(output.require_memberships());
  std::size_t wrong = 0;
  for (std::size_t k = 0; k < d.labels.size(); ++k)
    if (!(sets[k].indices().size() == 1 && sets[k].front() == d.labels[k])) ++wrong;
  summary["training_disagreement"] = static_cast<double>(wrong) / static_cast<double>(d.labels.size());
  auto table = profile_table(d.X, inner);
  return {cfg.algo, std::move(inner), CategorizationBundle(d.X, d.memberships()), std::move(output),
          std::move(summary), std::move(table), std::nullopt};
}

}  // namespace detail

inline FittedModel fit_model(const FitConfig& cfg, const Dataset& d) {
  validate(cfg);
  const DataMatrix& X = d.X;
  const Index dim = cfg.dim.value_or(2);
  const auto& a = cfg.algo;
  if (is_supervised(a) && !d.labeled()) throw ShapeError(a + " needs a label column (--label-col or schema)");
  if (needs_target(a) && !d.target) throw ShapeError(a + " needs a target column (--label-col or schema)");

  if (a == "pca") {
    const auto f = fit_pca(X, dim);
    nlohmann::json s{{"eigenvalues", vector_json(f.rep.eigenvalues)},
                     {"scatter_eigenvalues", vector_json(f.scatter_eigenvalues)},
                     {"residual", f.residual}};
    auto out = pca_output_bundle(f);
    return {a, pca_input_inner(f.rep), pca_input_bundle(X, f), out, s,
            matrix_table(numbered("y", dim), f.embedding.values()), std::nullopt};
  }
  if (a == "nmf") {
    const auto f = fit_nmf(X, dim, {cfg.iterations, cfg.seed});
    nlohmann::json s{{"objective", f.objective.back()}, {"iterations", cfg.iterations}};
    return {a, nmf_input_inner(f.rep), nmf_input_bundle(X, f), nmf_output_bundle(f), s,
            matrix_table(numbered("y", dim), f.rep.coefficients), detail::objective_table(f.objective)};
  }
  if (a == "lle") {
    const auto f = fit_lle(X, dim, cfg.k);
    nlohmann::json s{{"kept_eigenvalues", vector_json(f.kept_eigenvalues)},
                     {"weight_objective", f.weight_objective},
                     {"embedding_objective", f.embedding_objective}};
    auto in = lle_input_bundle(X, f);
    return {a, in.require_inner(), in, lle_output_bundle(f), s,
            matrix_table(numbered("y", dim), f.embedding.values()), std::nullopt};
  }
  if (a == "mds" || a == "isomap") {
    MdsFit m;
    std::optional<CategorizationBundle> in;
    if (a == "mds") {
      const auto D = DistanceRepresentation::euclidean(X);
      m = fit_mds(D, dim, detail::mds_options(cfg));
      in = mds_input_bundle(D);
    } else {
      const auto f = fit_isomap(X, dim, cfg.k, detail::mds_options(cfg));
      m = f.mds;
      in = isomap_input_bundle(X, f);
    }
    nlohmann::json s{{"eigenvalues", vector_json(m.eigenvalues)}, {"stress", m.stress}, {"iterations", m.iterations}};
    CategorizationBundle out(m.embedding, MembershipMatrix::single_category(X.n()),
                             detail::configuration_inner(a, m.embedding.values()));
    return {a, in->require_inner(), *in, out, s, matrix_table(numbered("y", dim), m.embedding.values()), std::nullopt};
  }
  if (a == "gaussian") {
    const auto g = fit_gaussian_mle(X);
    auto out = gaussian_bundle(X, g);
    return {a, gaussian_inner(g), CategorizationBundle(X), out, {{"nll", gaussian_nll(X, g)}},
            profile_table(X, out.require_inner()), std::nullopt};
  }
  if (a == "kde") {
    const auto k = cfg.bandwidth ? fit_kde(X, *cfg.bandwidth) : fit_kde(X);
    auto out = kde_bundle(X, k);
    return {a, kde_inner(k), CategorizationBundle(X), out, {{"bandwidth", k.bandwidth()}},
            profile_table(X, out.require_inner()), std::nullopt};
  }
  if (a == "regression") {
    const auto m = fit_regression(X.values(), *d.target, detail::penalty_of(cfg));
    nlohmann::json s{{"penalty", to_string(m.penalty.kind)},
                     {"singular", m.singular},
                     {"objective", regression_objective(X.values(), *d.target, m)}};
    if (m.penalty.kind != PenaltyKind::none) s["lambda"] = m.penalty.lambda;
    CsvTable t{{"object", "prediction", "target", "residual"}, {}};
    const Vector pred = m.predict(X.values());
    for (Index k = 0; k < X.n(); ++k)
      t.rows.push_back({std::to_string(k + 1), format_number(pred(k)), format_number((*d.target)(k)),
                        format_number((*d.target)(k) - pred(k))});
    auto out = regression_bundle(X.values(), *d.target, m);
    return {a, regression_inner(m), CategorizationBundle(out.data()), out, s, t, std::nullopt};
  }
  if (a == "prototypes") {
    ClusteringOptions o;
    o.seed = cfg.seed;
    auto r = fit_prototype_clustering(X, cfg.c, o);
    nlohmann::json s{{"objective", r.objective.back()},
                     {"iterations", r.iterations},
                     {"converged", r.converged},
                     {"empty_category_events", r.empty_events.size()},
                     {"prototypes_distinct", r.prototypes.pairwise_distinct()}};
    if (r.prototypes.c() >= 2) s["separation"] = separation_value(r.prototypes);
    auto inner = prototype_inner(r.prototypes);
    auto table = profile_table(X, inner);
    return {a, inner, CategorizationBundle(X), r.bundle, s, table, detail::objective_table(r.objective)};
  }

  const auto U = d.memberships();
  if (a == "knn") return detail::fit_classifier(cfg, d, knn_inner(fit_knn(X, U, cfg.k)), {{"k", cfg.k}});
  if (a == "lda") {
    const auto m = fit_gaussian_lda(X, U, cfg.lambda.value_or(0.0));
    return detail::fit_classifier(cfg, d, lda_inner(m), {{"priors", vector_json(m.priors)}});
  }
  if (a == "max-margin") {
    const auto m = fit_max_margin(X, U);
    nlohmann::json s{{"margin", margin_of(m)}, {"support", one_based(m.support_indices)},
                     {"iterations", m.iterations}, {"kkt_gap", m.kkt_gap}};
    return detail::fit_classifier(cfg, d, max_margin_inner(m), s);
  }
  if (a == "logistic") {
    LogisticOptions o;
    o.l2 = cfg.lambda.value_or(0.0);
    const auto m = fit_logistic(X, U, o);
    nlohmann::json s{{"objective", m.objective.back()}, {"iterations", m.iterations}, {"converged", m.converged}};
    auto f = detail::fit_classifier(cfg, d, logistic_inner(m), s);
    f.objective = detail::objective_table(m.objective);
    return f;
  }
  if (a == "naive-bayes") {
    const auto m = fit_naive_bayes(X, U, detail::naive_bayes_options(cfg, d.feature_types));
    auto f = detail::fit_classifier(cfg, d, naive_bayes_inner(m), {{"priors", vector_json(m.priors)}});
    f.output = naive_bayes_bundle(X, m);
    return f;
  }
  // fisher
  const auto f = fit_fisher_projection(X, U, cfg.lambda.value_or(0.0), cfg.dim.value_or(0));
  return detail::fit_classifier(cfg, d, fisher_inner(f),
                                {{"ratios", vector_json(f.ratios)}, {"class_means", matrix_json(f.means)}});
}

/// {algorithm_id, parameters, ...}: everything needed to rebuild the inner
/// representation, plus the label mapping and the fit summary.
inline nlohmann::json model_json(const FitConfig& cfg, const Dataset& d, const FittedModel& f) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& b : f.inner.parameters()) params[b.name] = matrix_json(b.values);
  nlohmann::json j{{"algorithm_id", f.inner.algorithm_id()},
                   {"box", to_string(f.inner.box())},
                   {"polarity", to_string(f.inner.polarity())},
                   {"categories", f.inner.categories()},
                   {"input_dim", f.inner.input_dim()},
                   {"hyperparameters", to_json(cfg)},
                   {"parameters", params},
                   {"summary", f.summary},
                   {"features", d.feature_names},
                   {"label_names", d.label_names}};
  auto types = nlohmann::json::array();
  for (auto t : d.feature_types) types.push_back(to_string(t));
  j["feature_types"] = types;
  j["label_column"] = d.label_name ? nlohmann::json(*d.label_name) : nlohmann::json(nullptr);
  if (cfg.algo == "naive-bayes") {
    std::vector<std::size_t> labels1;
    for (auto l : d.labels) labels1.push_back(l + 1);
    j["training"] = {{"data", matrix_json(d.X.values())}, {"labels", labels1}};
  }
  return j;
}

struct LoadedModel {
  nlohmann::json json;
  FitConfig config;
  std::vector<std::string> features;
  std::vector<ColumnType> feature_types;
  std::optional<std::string> label_column;
  std::vector<std::string> label_names;
};

inline LoadedModel load_model(const nlohmann::json& j) {
  LoadedModel m;
  m.json = j;
  try {
    m.config = fit_config_from_json(j.at("hyperparameters"));
    m.features = j.at("features").get<std::vector<std::string>>();
    for (const auto& t : j.at("feature_types"))
      m.feature_types.push_back(t.get<std::string>() == "categorical" ? ColumnType::categorical : ColumnType::real);
    if (!j.at("label_column").is_null()) m.label_column = j["label_column"].get<std::string>();
    m.label_names = j.at("label_names").get<std::vector<std::string>>();
    j.at("parameters");
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("model file: ") + e.what());
  }
  return m;
}

namespace detail {

inline Matrix param(const LoadedModel& m, const std::string& name) {
  const auto& p = m.json.at("parameters");
  if (!p.contains(name)) throw DomainError("model file: parameter block '" + name + "' missing");
  return matrix_from_json(p[name], "parameter '" + name + "'");
}

inline double scalar_param(const LoadedModel& m, const std::string& name) {
  const Matrix v = param(m, name);
  if (v.rows() != 1 || v.cols() != 1) throw ShapeError("parameter '" + name + "' must be 1x1");
  return v(0, 0);
}

inline Vector row_param(const LoadedModel& m, const std::string& name) {
  const Matrix v = param(m, name);
  if (v.rows() != 1) throw ShapeError("parameter '" + name + "' must be a single row");
  return v.row(0).transpose();
}

inline NaiveBayesModel stored_naive_bayes(const LoadedModel& m) {
  const auto& t = m.json.at("training");
  const DataMatrix X(matrix_from_json(t.at("data"), "training data"));
  std::vector<std::size_t> labels;
  for (const auto& l : t.at("labels")) labels.push_back(l.get<std::size_t>() - 1);
  return fit_naive_bayes(X, MembershipMatrix::from_labels(labels, m.label_names.size()),
                         naive_bayes_options(m.config, m.feature_types));
}

}  // namespace detail

/// The inner representation rebuilt from the stored parameters. Transductive
/// algorithms have none outside their training set.
inline InnerRepresentation inner_from_model(const LoadedModel& m) {
  const auto& a = m.config.algo;
  if (is_transductive(a)) throw DomainError("'" + a + "' has no representation for new objects; refit instead");
  if (a == "pca") {
    PcaRepresentation rep{detail::row_param(m, "origin"), detail::param(m, "basis"), Vector()};
    return pca_input_inner(rep);
  }
  if (a == "nmf") return nmf_input_inner({detail::param(m, "basis"), Matrix()});
  if (a == "gaussian") return gaussian_inner({detail::row_param(m, "mean"), detail::scalar_param(m, "variance")});
  if (a == "kde") return kde_inner(KdeEstimator(DataMatrix(detail::param(m, "samples")), detail::scalar_param(m, "bandwidth")));
  if (a == "regression") {
    RegressionModel r;
    r.w = detail::row_param(m, "w");
    r.b = detail::scalar_param(m, "b");
    r.penalty = detail::penalty_of(m.config);
    return regression_inner(r);
  }
  if (a == "prototypes") return prototype_inner(PrototypeSet(detail::param(m, "prototypes")));
  if (a == "knn") {
    KnnModel k;
    k.training = detail::param(m, "training");
    for (Index i = 0; i < k.training.rows(); ++i) {
      const double l = detail::param(m, "labels")(0, i);
      if (l < 1 || l > static_cast<double>(m.label_names.size())) throw DomainError("knn: stored label out of range");
      k.labels.push_back(static_cast<std::size_t>(l) - 1);
    }
    k.c = static_cast<Index>(m.label_names.size());
    k.K = m.config.k;
    return knn_inner(k);
  }
  if (a == "lda") {
    LinearDiscriminantModel l;
    l.weights = detail::param(m, "weights");
    l.offsets = detail::row_param(m, "offsets");
    return lda_inner(l);
  }
  if (a == "max-margin") {
    MaxMarginModel mm;
    mm.w = detail::row_param(m, "w");
    mm.b = detail::scalar_param(m, "b");
    return max_margin_inner(mm);
  }
  if (a == "logistic") {
    LogisticModel l;
    l.weights = detail::param(m, "weights");
    l.offsets = detail::row_param(m, "offsets");
    return logistic_inner(l);
  }
  if (a == "naive-bayes") return naive_bayes_inner(detail::stored_naive_bayes(m));
  // fisher
  FisherProjection f;
  f.directions = detail::param(m, "directions");
  f.means = matrix_from_json(m.json.at("summary").at("class_means"), "class_means");
  return fisher_inner(f);
}

/// Loads `path` with the model's label column and checks the feature columns match.
inline Dataset load_dataset_for(const LoadedModel& m, const std::filesystem::path& path) {
  const auto table = read_csv(path);
  DatasetOptions o;
  o.label_is_target = needs_target(m.config.algo);
  if (m.label_column && std::find(table.header.begin(), table.header.end(), *m.label_column) != table.header.end())
    o.label_col = m.label_column;
  std::optional<Schema> schema;
  if (std::filesystem::exists(schema_path_for(path)))
    schema = parse_schema(nlohmann::json::parse(read_text_file(schema_path_for(path))));
  if (schema) schema->label.reset();
  auto d = parse_dataset(table, schema, o);
  if (d.feature_names != m.features) {
    std::string got, want;
    for (const auto& s : d.feature_names) got += (got.empty() ? "" : ",") + s;
    for (const auto& s : m.features) want += (want.empty() ? "" : ",") + s;
    throw ShapeError("dataset features [" + got + "] do not match the model's [" + want + "]");
  }
  return d;
}

/// The output bundle the model produces on `d`.
inline CategorizationBundle apply_model(const LoadedModel& m, const Dataset& d) {
  const auto& a = m.config.algo;
  if (is_transductive(a)) return fit_model(m.config, d).output;
  if (a == "naive-bayes") return naive_bayes_bundle(d.X, detail::stored_naive_bayes(m));
  if (a == "regression") {
    if (!d.target) throw ShapeError("regression: dataset has no target column");
    Matrix z(d.X.n(), d.X.p() + 1);
    z << d.X.values(), *d.target;
    return referring_bundle(DataMatrix(z), inner_from_model(m));
  }
  return referring_bundle(d.X, inner_from_model(m));
}

}  // namespace axiocat
