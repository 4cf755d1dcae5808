#include <iostream>
#include <sstream>

#include "affikd/error.hpp"
#include "affikd/fsio.hpp"
#include "affikd/manifest.hpp"
#include "affikd/strings.hpp"
#include "affikd/train/metrics.hpp"
#include "affikd/train/trainer.hpp"
#include "cli_common.hpp"

namespace affikd::cli {

int run_predict(const PredictArgs& args) {
    auto model = net::load_model(args.model_path);
    auto features = bio::load_descriptor_csv(args.features_path);
    auto preds = train::predict_table(model, features);

    std::string csv = "complex_id,y_pred\n";
    for (std::size_t i = 0; i < features.size(); ++i)
        csv += features.ids[i] + "," + format_double(preds[i]) + "\n";
    write_file_atomic(args.out_path, csv);

    RunManifest manifest("predict");
    manifest.add_input(args.model_path);
    manifest.add_input(args.features_path);
    manifest.set("out", args.out_path);
    manifest.write(args.out_path + ".manifest.json");
    std::cout << "wrote " << preds.size() << " prediction(s) to " << args.out_path << "\n";
    return 0;
}

namespace {

// `complex_id,y_pred` as written by the predict command.
std::vector<std::pair<std::string, double>> parse_predictions(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<std::string, double>> out;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        auto cells = split(line, ',');
        if (header) {
            if (cells.size() < 2 || trim(cells[0]) != "complex_id" || trim(cells[1]) != "y_pred")
                throw ParseError("predictions csv: header must be complex_id,y_pred");
            header = false;
            continue;
        }
        double v;
        if (cells.size() < 2 || !parse_double(cells[1], v))
            throw ParseError("predictions csv: bad row '" + line + "'");
        out.emplace_back(std::string(trim(cells[0])), v);
    }
    if (header) throw ParseError("predictions csv: empty file");
    return out;
}

}  // namespace

int run_eval(const EvalArgs& args) {
    auto preds = parse_predictions(read_file(args.pred_path));
    auto truth = bio::load_labels_csv(args.truth_path);
    if (preds.empty()) throw ValidationError("eval: no predictions");

    std::vector<double> y_true, y_pred;
    std::vector<train::PredictionRecord> records;
    for (const auto& [id, pred] : preds) {
        auto idx = truth.index_of(id);
        if (!idx) throw ValidationError("eval: no truth record for complex '" + id + "'");
        double yt = truth.records[*idx].delta_g;
        y_true.push_back(yt);
        y_pred.push_back(pred);
        records.push_back(train::PredictionRecord{id, 0, yt, pred});
    }

    auto report = train::aggregate_runs({train::compute_run_metrics(y_true, y_pred)},
                                        std::move(records), static_cast<int>(y_true.size()));
    write_file_atomic(args.out_path, train::metrics_to_json(report));

    RunManifest manifest("eval");
    manifest.add_input(args.pred_path);
    manifest.add_input(args.truth_path);
    manifest.set("out", args.out_path);
    manifest.write(args.out_path + ".manifest.json");
    std::cout << "P_r " << report.pearson_r << "  RMSE " << report.rmse << "  MAE "
              << report.mae << "\n";
    return 0;
}

}  // namespace affikd::cli
