#include "netclass/io/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "netclass/error.hpp"

namespace netclass::io {

json to_json(const ModelConfig& config) {
  return {
      {"measure", to_string(config.measure)},
      {"variation", to_string(config.variation)},
      {"graph", config.graph.to_string()},
      {"normalize", to_string(config.normalization)},
  };
}

ModelConfig config_from_json(const json& j) {
  ModelConfig c;
  c.measure = parse_measure(j.at("measure").get<std::string>());
  c.variation = parse_variation(j.at("variation").get<std::string>());
  c.graph = GraphMode::parse(j.at("graph").get<std::string>());
  c.normalization = parse_normalization(j.at("normalize").get<std::string>());
  return c;
}

json dataset_fingerprint(const Dataset& data) {
  json hist = json::object();
  for (const auto& [label, count] : data.label_histogram()) hist[label] = count;
  return {{"rows", data.size()}, {"columns", data.dimension()}, {"labels", hist}};
}

json to_json(const Summary& s) {
  return {{"min", s.min},   {"q1", s.q1},     {"median", s.median}, {"q3", s.q3},
          {"max", s.max},   {"mean", s.mean}, {"std", s.std}};
}

json to_json(const TimingStats& t) {
  return {{"mean", t.mean}, {"std", t.std}, {"min", t.min}, {"max", t.max},
          {"25%", t.p25},   {"50%", t.p50}, {"75%", t.p75}};
}

json to_json(const TimingReport& r) {
  return {
      {"unit", "ms"},
      {"graph_size", r.graph_size},
      {"repetitions", r.repetitions},
      {"graph_count", r.graph_count},
      {"mst", to_json(r.mst)},
      {"sssp", to_json(r.sssp)},
      {"mean_ratio_mst_over_sssp", r.sssp.mean > 0.0 ? r.mst.mean / r.sssp.mean : 0.0},
  };
}

json to_json(const CvReport& r) {
  return {
      {"k", r.k},
      {"per_fold_accuracy", r.per_fold_accuracy},
      {"evaluated_folds", r.evaluated_folds},
      {"median", r.median},
      {"mean", r.mean},
      {"std", r.std},
      {"classes", r.classes},
      {"confusion", r.confusion},
      {"warnings", r.warnings},
      {"fold_assignments", r.plan.assignments},
  };
}

json to_json(const SensitivityReport& r) {
  return {
      {"measure", to_string(r.measure)},
      {"same_class_deltas", r.same_class_deltas},
      {"different_class_deltas", r.different_class_deltas},
      {"same_class_summary", to_json(r.same_summary)},
      {"different_class_summary", to_json(r.different_summary)},
  };
}

json to_json(const Prediction& p, const Model& model) {
  json deltas = json::object();
  for (std::size_t c = 0; c < p.deltas.size(); ++c) deltas[model.networks()[c].label()] = p.deltas[c];
  return {{"label", p.label}, {"deltas", deltas}};
}

json make_report(std::string_view command, json config, json dataset, json result) {
  return {
      {"format", kReportFormat}, {"version", kFormatVersion}, {"command", command},
      {"config", std::move(config)}, {"dataset", std::move(dataset)}, {"result", std::move(result)},
  };
}

std::string sensitivity_csv(const SensitivityReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "network,sample_label,sample_index,kind,delta\n";
  for (const auto& rec : r.records) {
    out << rec.network_label << ',' << rec.sample_label << ',' << rec.sample_index << ','
        << (rec.same_class ? "same" : "different") << ',' << rec.delta << '\n';
  }
  return out.str();
}

json model_to_json(const Model& model) {
  json classes = json::array();
  for (const auto& net : model.networks()) {
    json rows = json::array();
    for (std::size_t i = 0; i < net.size(); ++i) {
      const auto r = net.samples().row(i);
      rows.push_back(std::vector<double>(r.begin(), r.end()));
    }
    classes.push_back({
        {"label", net.label()},
        {"source", net.source()},
        {"baseline_mst", net.baseline_mst()},
        {"baseline_sssp", net.baseline_sssp()},
        {"samples", std::move(rows)},
    });
  }
  return {
      {"format", kModelFormat},
      {"version", kFormatVersion},
      {"config", to_json(model.config())},
      {"feature_names", model.feature_names()},
      {"normalization",
       {{"scheme", to_string(model.normalization().scheme)},
        {"center", model.normalization().center},
        {"spread", model.normalization().spread}}},
      {"classes", std::move(classes)},
  };
}

namespace {

bool close_rel(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

Model model_from_json(const json& j) {
  try {
    if (j.at("format").get<std::string>() != kModelFormat) throw InputError("not a netclass model file");
    if (j.at("version").get<int>() != kFormatVersion) {
      throw InputError("unsupported model version " + std::to_string(j.at("version").get<int>()));
    }
    const ModelConfig config = config_from_json(j.at("config"));
    NormalizationParams params;
    params.scheme = parse_normalization(j.at("normalization").at("scheme").get<std::string>());
    params.center = j.at("normalization").at("center").get<std::vector<double>>();
    params.spread = j.at("normalization").at("spread").get<std::vector<double>>();

    std::vector<ClassNetwork> networks;
    for (const auto& c : j.at("classes")) {
      const auto rows = c.at("samples").get<std::vector<std::vector<double>>>();
      ClassNetwork net(c.at("label").get<std::string>(), Matrix::from_rows(rows), config.graph,
                       c.at("source").get<NodeId>());
      if (!close_rel(net.baseline_mst(), c.at("baseline_mst").get<double>()) ||
          !close_rel(net.baseline_sssp(), c.at("baseline_sssp").get<double>())) {
        throw InvariantError("model file: cached baselines of class '" + net.label() +
                             "' do not match its samples");
      }
      networks.push_back(std::move(net));
    }
    return Model(std::move(networks), std::move(params), config,
                 j.value("feature_names", std::vector<std::string>{}));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed model file: ") + e.what());
  }
}

void save_model(const Model& model, const std::filesystem::path& path) {
  write_file_atomic(path, model_to_json(model).dump(1) + "\n");
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("model file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return model_from_json(j);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      std::filesystem::remove(tmp);
      throw InputError("failed writing '" + path.string() + "'");
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace netclass::io
