#include "affikd/train/loco.hpp"

#include "affikd/error.hpp"

namespace affikd::train {

MetricsReport loco_cv(const std::optional<bio::FeatureTable>& teacher_features,
                      const bio::FeatureTable& student_features,
                      const bio::LabeledCorpus& labels, const KdConfig& cfg,
                      int n_runs) {
    cfg.validate();
    if (n_runs < 1) throw ValidationError("loco: n_runs must be >= 1");
    const bool needs_teacher = cfg.is_distill() || cfg.mode == Mode::BaselineTeacher;
    if (needs_teacher && !teacher_features)
        throw ValidationError("loco: mode " + to_string(cfg.mode) +
                              " needs a teacher feature table");

    // In baseline-teacher mode the teacher table is the sole model's input.
    const bio::FeatureTable& primary =
        cfg.mode == Mode::BaselineTeacher ? *teacher_features : student_features;
    if (cfg.is_distill()) check_id_alignment(*teacher_features, student_features);
    AlignedData data = align_features_labels(primary, labels);
    const std::size_t n = data.ids.size();
    if (n < 3) throw ValidationError("loco: need at least 3 complexes, got " +
                                     std::to_string(n));

    // Global scaler scope replicates dataset-wide standardization (leaky
    // under LOCO); per-fold is the default and fits inside train_*.
    std::optional<Scaler> global_primary, global_teacher;
    if (cfg.scaler_scope == ScalerScope::Global) {
        global_primary = fit_scaler(primary);
        if (cfg.is_distill()) global_teacher = fit_scaler(*teacher_features);
    }

    std::vector<RunMetrics> run_metrics;
    std::vector<PredictionRecord> predictions;
    for (int run = 0; run < n_runs; ++run) {
        const std::uint64_t run_seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(run));
        std::vector<double> y_true(n), y_pred(n);
        for (std::size_t fold = 0; fold < n; ++fold) {
            KdConfig fold_cfg = cfg;
            fold_cfg.seed = mix_seed(run_seed, fold);

            std::vector<std::size_t> train_rows;
            train_rows.reserve(n - 1);
            for (std::size_t i = 0; i < n; ++i)
                if (i != fold) train_rows.push_back(i);
            bio::FeatureTable primary_train = primary.subset(train_rows);

            double pred;
            if (cfg.is_distill()) {
                std::vector<std::size_t> teacher_rows;
                teacher_rows.reserve(n - 1);
                for (std::size_t i : train_rows)
                    teacher_rows.push_back(*teacher_features->index_of(data.ids[i]));
                bio::FeatureTable teacher_train = teacher_features->subset(teacher_rows);
                auto [teacher, student] = train_distill(
                    teacher_train, primary_train, labels, fold_cfg, {},
                    global_teacher ? &*global_teacher : nullptr,
                    global_primary ? &*global_primary : nullptr);
                pred = predict(student, data.x[fold]);
            } else {
                Role role = cfg.mode == Mode::BaselineTeacher ? Role::Teacher : Role::Student;
                auto model = train_baseline(primary_train, labels, fold_cfg, {}, role,
                                            global_primary ? &*global_primary : nullptr);
                pred = predict(model, data.x[fold]);
            }
            y_true[fold] = data.y[fold];
            y_pred[fold] = pred;
            predictions.push_back(PredictionRecord{data.ids[fold], run, data.y[fold], pred});
        }
        run_metrics.push_back(compute_run_metrics(y_true, y_pred));
    }
    return aggregate_runs(run_metrics, std::move(predictions), static_cast<int>(n));
}

}  // namespace affikd::train
