#ifndef AFFIKD_TRAIN_LOCO_HPP
#define AFFIKD_TRAIN_LOCO_HPP

#include <optional>

#include "affikd/train/metrics.hpp"
#include "affikd/train/trainer.hpp"

namespace affikd::train {

// Leave-one-complex-out cross-validation, averaged over n_runs independent
// runs. Run r uses seed mix_seed(cfg.seed, r); every fold retrains from
// scratch (fold f inside run r uses seed mix_seed(run_seed, f)), fits its
// scaler(s) on the N-1 training rows (per-fold scope), and predicts the
// held-out complex with the student (or the sole model in baseline modes) in
// Eval mode. Per-run metrics are computed over the N out-of-fold predictions
// and averaged metric-wise across runs. Deterministic given cfg.seed.
MetricsReport loco_cv(const std::optional<bio::FeatureTable>& teacher_features,
                      const bio::FeatureTable& student_features,
                      const bio::LabeledCorpus& labels, const KdConfig& cfg,
                      int n_runs = 3);

}  // namespace affikd::train

#endif
