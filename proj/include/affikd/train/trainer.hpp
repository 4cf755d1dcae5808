#ifndef AFFIKD_TRAIN_TRAINER_HPP
#define AFFIKD_TRAIN_TRAINER_HPP

#include <functional>
#include <optional>
#include <utility>

#include "affikd/bio/feature_table.hpp"
#include "affikd/net/model_io.hpp"
#include "affikd/train/config.hpp"

namespace affikd::train {

// Named RNG sub-streams derived from the config seed via mix_seed. The
// student streams are identical across baseline and distill training, so a
// distill run whose extra loss terms vanish reproduces the baseline student
// trajectory bit for bit; the teacher touches only its own streams.
enum StreamTag : std::uint64_t {
    kShuffleStream = 1,
    kStudentInitStream = 2,
    kStudentDropoutStream = 3,
    kTeacherInitStream = 4,
    kTeacherDropoutStream = 5,
};

enum class Role { Student, Teacher };

struct AlignedData {
    std::vector<std::string> ids;           // feature-table row order
    std::vector<std::vector<double>> x;     // raw (unscaled) features
    std::vector<double> y;                  // kcal/mol, never standardized
};

// Joins features with labels by complex_id, in feature-table row order;
// throws listing any feature row without a label. Label records without a
// feature row are ignored (training folds slice the feature table only).
AlignedData align_features_labels(const bio::FeatureTable& features,
                                  const bio::LabeledCorpus& labels);

// Two-way coverage check for whole-corpus commands: every labeled complex
// must also have features.
void check_label_coverage(const bio::FeatureTable& features,
                          const bio::LabeledCorpus& labels);

// Throws listing offending ids unless both tables cover the same id set.
void check_id_alignment(const bio::FeatureTable& a, const bio::FeatureTable& b);

using ArchFn = std::function<std::vector<net::LayerSpec>(int input_dim)>;

// Supervised training: derive architecture from the feature dim, Kaiming
// init from the seeded stream, then per epoch a seeded shuffle and per-sample
// forward/backward/Adam at batch size 1. Returns the model bundled with the
// scaler fitted on these rows (or `fixed_scaler` when given, e.g. global
// scaler scope).
net::TrainedModel train_baseline(const bio::FeatureTable& features,
                                 const bio::LabeledCorpus& labels,
                                 const KdConfig& cfg, const ArchFn& arch_fn = {},
                                 Role role = Role::Student,
                                 const Scaler* fixed_scaler = nullptr);

// Joint optimization; the teacher is not frozen. Per sample: (1) teacher
// Train-mode forward, (2) teacher backprop on its supervised loss + Adam
// step, (3) the step-(1) prediction/latent become detached targets, (4)
// student forward, total loss, backprop and Adam step on the student only.
std::pair<net::TrainedModel, net::TrainedModel> train_distill(
    const bio::FeatureTable& teacher_features, const bio::FeatureTable& student_features,
    const bio::LabeledCorpus& labels, const KdConfig& cfg, const ArchFn& arch_fn = {},
    const Scaler* teacher_fixed_scaler = nullptr,
    const Scaler* student_fixed_scaler = nullptr);

// Eval-mode inference on raw features (the model's scaler is applied here).
double predict(const net::TrainedModel& model, std::span<const double> raw_features);
std::vector<double> predict_table(const net::TrainedModel& model,
                                  const bio::FeatureTable& features);

}  // namespace affikd::train

#endif
