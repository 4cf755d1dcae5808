#include <filesystem>
#include <iostream>

#include "affikd/error.hpp"
#include "affikd/fsio.hpp"
#include "affikd/manifest.hpp"
#include "affikd/train/trainer.hpp"
#include "cli_common.hpp"

namespace fs = std::filesystem;

namespace affikd::cli {

// Precedence: built-in defaults < --config file < explicit flags.
train::KdConfig build_config(const TrainCommonArgs& args) {
    train::KdConfig cfg;
    if (!args.config_path.empty())
        cfg = train::config_with_overrides(cfg, read_file(args.config_path));
    if (!args.mode.empty()) cfg.mode = train::mode_from_string(args.mode);
    if (args.seed) cfg.seed = *args.seed;
    if (args.epochs) cfg.epochs = *args.epochs;
    if (args.lambda_out) cfg.lambda_out = *args.lambda_out;
    if (args.lambda_feat) cfg.lambda_feat = *args.lambda_feat;
    cfg.validate();

    const bool needs_teacher =
        cfg.is_distill() || cfg.mode == train::Mode::BaselineTeacher;
    if (needs_teacher && args.teacher_features_path.empty())
        throw UsageError("mode " + train::to_string(cfg.mode) +
                         " requires --teacher-features");
    return cfg;
}

int run_train(const TrainCommonArgs& args) {
    train::KdConfig cfg = build_config(args);

    auto student = bio::load_descriptor_csv(args.student_features_path);
    auto labels = bio::load_labels_csv(args.labels_path);
    fs::create_directories(args.out_dir);

    RunManifest manifest("train");
    manifest.add_input(args.student_features_path);
    manifest.add_input(args.labels_path);
    if (!args.teacher_features_path.empty()) manifest.add_input(args.teacher_features_path);
    manifest.set("config", nlohmann::json::parse(train::config_to_json(cfg)));
    manifest.set("out_dir", args.out_dir);

    auto out_file = [&](const char* name) {
        return (fs::path(args.out_dir) / name).string();
    };

    if (cfg.is_distill()) {
        auto teacher_table = bio::load_descriptor_csv(args.teacher_features_path);
        train::check_label_coverage(student, labels);
        auto [teacher, student_model] = train::train_distill(teacher_table, student, labels, cfg);
        net::save_model(teacher, out_file("teacher.model.json"));
        net::save_model(student_model, out_file("student.model.json"));
        std::cout << "wrote " << out_file("student.model.json") << " and "
                  << out_file("teacher.model.json") << "\n";
    } else if (cfg.mode == train::Mode::BaselineTeacher) {
        auto teacher_table = bio::load_descriptor_csv(args.teacher_features_path);
        train::check_label_coverage(teacher_table, labels);
        auto model = train::train_baseline(teacher_table, labels, cfg, {}, train::Role::Teacher);
        net::save_model(model, out_file("teacher.model.json"));
        std::cout << "wrote " << out_file("teacher.model.json") << "\n";
    } else {
        train::check_label_coverage(student, labels);
        auto model = train::train_baseline(student, labels, cfg);
        net::save_model(model, out_file("student.model.json"));
        std::cout << "wrote " << out_file("student.model.json") << "\n";
    }
    manifest.write(out_file("manifest.json"));
    return 0;
}

}  // namespace affikd::cli
