// netclass: pattern-based classification by MST / SSSP perturbation.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 internal invariant
// violation.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "netclass/classifier/classifier.hpp"
#include "netclass/data/blobs.hpp"
#include "netclass/data/dataset.hpp"
#include "netclass/error.hpp"
#include "netclass/experiments/experiments.hpp"
#include "netclass/io/json_io.hpp"

namespace {

using namespace netclass;
using io::json;

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kInternal = 3 };

struct Options {
  std::string input;
  bool blobs = false;
  std::string label_col = "class";
  std::string measure = "mst";
  std::string variation = "abs";
  std::string normalize = "minmax";
  std::string graph = "complete";
  std::size_t folds = 10;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::size_t insertions = 5;
  std::size_t size = 300;
  std::size_t reps = 1000;
  std::size_t graphs = 3;
  std::string output;
  std::string csv_output;
  std::string model_path;
  std::string query;
};

ModelConfig model_config(const Options& o) {
  ModelConfig c;
  c.measure = parse_measure(o.measure);
  c.variation = parse_variation(o.variation);
  c.normalization = parse_normalization(o.normalize);
  c.graph = GraphMode::parse(o.graph);
  return c;
}

Dataset load_input(const Options& o) {
  if (o.blobs) {
    const auto specs = two_blob_specs(o.seed);
    return generate_blobs(specs);
  }
  if (o.input.empty()) throw ConfigError("--input is required (or --blobs)");
  Dataset data = load_csv(o.input, o.label_col);
  data.validate();
  return data;
}

json config_echo(const Options& o, const std::string& command) {
  json j = io::to_json(model_config(o));
  j["seed"] = o.seed;
  j["input"] = o.blobs ? std::string("blobs") : o.input;
  j["label_column"] = o.label_col;
  if (command == "crossval") j["folds"] = o.folds;
  if (command == "sensitivity") j["insertions"] = o.insertions;
  return j;
}

void emit(const Options& o, const json& report) {
  const std::string text = report.dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
  } else {
    io::write_file_atomic(o.output, text);
  }
}

int run_crossval(const Options& o) {
  const Dataset data = load_input(o);
  const CvReport cv = crossval_accuracy(data, model_config(o), o.folds, o.seed, o.threads);
  for (const auto& w : cv.warnings) std::cerr << "warning: " << w << '\n';
  emit(o, io::make_report("crossval", config_echo(o, "crossval"), io::dataset_fingerprint(data),
                          io::to_json(cv)));
  return kOk;
}

int run_sensitivity(const Options& o) {
  const Dataset data = load_input(o);
  const SensitivityReport rep = sensitivity_experiment(data, model_config(o), o.insertions, o.seed);
  const json report = io::make_report("sensitivity", config_echo(o, "sensitivity"),
                                      io::dataset_fingerprint(data), io::to_json(rep));
  const std::string csv = io::sensitivity_csv(rep);
  emit(o, report);
  if (!o.csv_output.empty()) io::write_file_atomic(o.csv_output, csv);
  return kOk;
}

int run_bench(const Options& o) {
  const TimingReport rep = timing_benchmark(o.size, o.reps, o.seed, o.graphs);
  json cfg = {{"size", o.size}, {"reps", o.reps}, {"graphs", o.graphs}, {"seed", o.seed}};
  emit(o, io::make_report("bench", cfg, json::object(), io::to_json(rep)));
  return kOk;
}

int run_fit(const Options& o) {
  if (o.model_path.empty()) throw ConfigError("fit: --model output path is required");
  const Dataset data = load_input(o);
  const Model model = fit(data, model_config(o));
  io::save_model(model, o.model_path);
  json summary = json::array();
  for (const auto& net : model.networks()) {
    summary.push_back({{"label", net.label()},
                       {"nodes", net.size()},
                       {"source", net.source()},
                       {"baseline_mst", net.baseline_mst()},
                       {"baseline_sssp", net.baseline_sssp()}});
  }
  emit(o, io::make_report("fit", config_echo(o, "fit"), io::dataset_fingerprint(data),
                          {{"model", o.model_path}, {"classes", summary}}));
  return kOk;
}

int run_predict(const Options& o) {
  if (o.model_path.empty() || o.query.empty()) {
    throw ConfigError("predict: --model and --query are required");
  }
  const Model model = io::load_model(o.model_path);
  const FeatureTable query = load_feature_csv(o.query, o.label_col);
  if (query.features.cols() != model.dimension()) {
    throw InputError("query has " + std::to_string(query.features.cols()) +
                     " feature columns, model expects " + std::to_string(model.dimension()));
  }
  const auto predictions = predict_batch(model, query.features, o.threads);
  json rows = json::array();
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    json r = io::to_json(predictions[i], model);
    r["row"] = i;
    rows.push_back(std::move(r));
  }
  json cfg = io::to_json(model.config());
  cfg["model"] = o.model_path;
  cfg["query"] = o.query;
  emit(o, io::make_report("predict", cfg,
                          {{"rows", query.features.rows()}, {"columns", query.features.cols()}},
                          {{"predictions", rows}}));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Pattern-based classification by MST / SSSP network perturbation"};
  app.require_subcommand(1);

  auto add_data_flags = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "Input CSV (header row, one label column)");
    sub->add_flag("--blobs", o.blobs, "Use the seeded two-blob synthetic dataset instead of --input");
    sub->add_option("--label-col", o.label_col, "Name of the label column")->capture_default_str();
  };
  auto add_model_flags = [&](CLI::App* sub) {
    sub->add_option("--measure", o.measure, "mst | sssp")->capture_default_str();
    sub->add_option("--variation", o.variation, "abs | rel")->capture_default_str();
    sub->add_option("--normalize", o.normalize, "none | minmax | zscore")->capture_default_str();
    sub->add_option("--graph", o.graph, "complete | knn:K")->capture_default_str();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Root seed")->capture_default_str();
    sub->add_option("--output", o.output, "Report path (default: stdout)");
    sub->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
  };

  auto* crossval = app.add_subcommand("crossval", "Stratified k-fold cross-validated accuracy");
  add_data_flags(crossval);
  add_model_flags(crossval);
  add_common(crossval);
  crossval->add_option("--folds", o.folds, "Number of folds")->capture_default_str();

  auto* sensitivity = app.add_subcommand("sensitivity", "Same- vs different-class insertion deltas");
  add_data_flags(sensitivity);
  add_model_flags(sensitivity);
  add_common(sensitivity);
  sensitivity->add_option("--insertions", o.insertions, "Insertions per class")->capture_default_str();
  sensitivity->add_option("--csv", o.csv_output, "Per-insertion CSV for plotting");

  auto* bench = app.add_subcommand("bench", "MST vs SSSP kernel timing statistics");
  add_common(bench);
  bench->add_option("--size", o.size, "Nodes per complete graph")->capture_default_str();
  bench->add_option("--reps", o.reps, "Timed repetitions per measure")->capture_default_str();
  bench->add_option("--graphs", o.graphs, "Distinct graphs cycled through")->capture_default_str();

  auto* fit_cmd = app.add_subcommand("fit", "Fit a model and write it to --model");
  add_data_flags(fit_cmd);
  add_model_flags(fit_cmd);
  add_common(fit_cmd);
  fit_cmd->add_option("--model", o.model_path, "Model output path");

  auto* predict_cmd = app.add_subcommand("predict", "Classify the rows of a query CSV");
  add_common(predict_cmd);
  predict_cmd->add_option("--model", o.model_path, "Model file written by fit");
  predict_cmd->add_option("--query", o.query, "Query CSV (feature columns)");
  predict_cmd->add_option("--label-col", o.label_col, "Column to ignore if present in the query")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*crossval) return run_crossval(o);
    if (*sensitivity) return run_sensitivity(o);
    if (*bench) return run_bench(o);
    if (*fit_cmd) return run_fit(o);
    if (*predict_cmd) return run_predict(o);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
