#include <filesystem>
#include <iostream>

#include "affikd/error.hpp"
#include "affikd/fsio.hpp"
#include "affikd/manifest.hpp"
#include "affikd/train/loco.hpp"
#include "cli_common.hpp"

namespace fs = std::filesystem;

namespace affikd::cli {

int run_loco(const LocoArgs& args) {
    if (args.runs < 1) throw UsageError("--runs must be >= 1");
    train::KdConfig cfg = build_config(args.common);

    auto student = bio::load_descriptor_csv(args.common.student_features_path);
    auto labels = bio::load_labels_csv(args.common.labels_path);
    std::optional<bio::FeatureTable> teacher;
    if (!args.common.teacher_features_path.empty())
        teacher = bio::load_descriptor_csv(args.common.teacher_features_path);

    auto report = train::loco_cv(teacher, student, labels, cfg, args.runs);

    fs::create_directories(args.common.out_dir);
    auto out_file = [&](const char* name) {
        return (fs::path(args.common.out_dir) / name).string();
    };
    write_file_atomic(out_file("metrics.json"), train::metrics_to_json(report));
    write_file_atomic(out_file("predictions.csv"),
                      train::predictions_to_csv(report.per_complex_predictions));

    RunManifest manifest("loco");
    manifest.add_input(args.common.student_features_path);
    manifest.add_input(args.common.labels_path);
    if (!args.common.teacher_features_path.empty())
        manifest.add_input(args.common.teacher_features_path);
    manifest.set("config", nlohmann::json::parse(train::config_to_json(cfg)));
    manifest.set("runs", args.runs);
    manifest.set("out_dir", args.common.out_dir);
    manifest.write(out_file("manifest.json"));

    std::cout << "P_r " << report.pearson_r << "  RMSE " << report.rmse << "  MAE "
              << report.mae << "  over " << report.n_complexes << " complexes, "
              << report.runs_averaged << " run(s)\n";
    return 0;
}

}  // namespace affikd::cli
