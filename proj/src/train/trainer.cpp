#include "affikd/train/trainer.hpp"

#include <algorithm>
#include <set>

#include "affikd/error.hpp"
#include "affikd/net/adam.hpp"
#include "affikd/train/loss.hpp"

namespace affikd::train {

using net::MlpModel;
using net::TrainedModel;

namespace {

std::string join_ids(const std::vector<std::string>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size() && i < 10; ++i) {
        if (i) out += ", ";
        out += ids[i];
    }
    if (ids.size() > 10) out += ", ...";
    return out;
}

std::vector<net::LayerSpec> make_arch(const ArchFn& arch_fn, int input_dim) {
    return arch_fn ? arch_fn(input_dim) : net::derive_architecture(input_dim);
}

}  // namespace

AlignedData align_features_labels(const bio::FeatureTable& features,
                                  const bio::LabeledCorpus& labels) {
    std::vector<std::string> missing;
    AlignedData data;
    for (std::size_t i = 0; i < features.size(); ++i) {
        auto idx = labels.index_of(features.ids[i]);
        if (!idx) {
            missing.push_back(features.ids[i]);
            continue;
        }
        data.ids.push_back(features.ids[i]);
        data.x.push_back(features.rows[i]);
        data.y.push_back(labels.records[*idx].delta_g);
    }
    if (!missing.empty())
        throw ValidationError("alignment: no label for complex(es): " + join_ids(missing));
    return data;
}

void check_label_coverage(const bio::FeatureTable& features,
                          const bio::LabeledCorpus& labels) {
    std::vector<std::string> unlabeled;
    for (const auto& rec : labels.records)
        if (!features.index_of(rec.complex_id)) unlabeled.push_back(rec.complex_id);
    if (!unlabeled.empty())
        throw ValidationError("alignment: no features for labeled complex(es): " +
                              join_ids(unlabeled));
}

void check_id_alignment(const bio::FeatureTable& a, const bio::FeatureTable& b) {
    std::vector<std::string> offending;
    std::set<std::string> a_ids(a.ids.begin(), a.ids.end());
    std::set<std::string> b_ids(b.ids.begin(), b.ids.end());
    for (const auto& id : a_ids)
        if (!b_ids.count(id)) offending.push_back(id);
    for (const auto& id : b_ids)
        if (!a_ids.count(id)) offending.push_back(id);
    if (!offending.empty())
        throw ValidationError("feature tables misaligned on complex(es): " +
                              join_ids(offending));
}

TrainedModel train_baseline(const bio::FeatureTable& features,
                            const bio::LabeledCorpus& labels, const KdConfig& cfg,
                            const ArchFn& arch_fn, Role role,
                            const Scaler* fixed_scaler) {
    cfg.validate();
    if (features.size() < 2)
        throw ValidationError("train: need at least 2 training samples, got " +
                              std::to_string(features.size()));
    AlignedData data = align_features_labels(features, labels);

    TrainedModel trained;
    trained.descriptor = features.descriptor;
    trained.scaler = fixed_scaler ? *fixed_scaler : fit_scaler(features);
    std::vector<std::vector<double>> xs(data.x.size());
    for (std::size_t i = 0; i < data.x.size(); ++i)
        xs[i] = trained.scaler.transform(data.x[i]);

    const std::uint64_t init_tag =
        role == Role::Student ? kStudentInitStream : kTeacherInitStream;
    const std::uint64_t drop_tag =
        role == Role::Student ? kStudentDropoutStream : kTeacherDropoutStream;

    trained.net = MlpModel::from_specs(make_arch(arch_fn, features.dim()));
    net::init_kaiming_uniform(trained.net, mix_seed(cfg.seed, init_tag));

    net::AdamState adam = net::AdamState::for_model(trained.net);
    net::AdamConfig adam_cfg{cfg.lr, cfg.weight_decay};
    Rng shuffle_rng(mix_seed(cfg.seed, kShuffleStream));
    Rng dropout_rng(mix_seed(cfg.seed, drop_tag));

    std::vector<std::size_t> order(data.x.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        shuffle_rng.shuffle(order);
        for (std::size_t idx : order) {
            auto trace = net::forward(trained.net, xs[idx], net::Mode::Train, &dropout_rng);
            double d_pred = 2.0 * (trace.prediction - data.y[idx]);
            auto grads = net::backward(trained.net, trace, d_pred);
            net::adam_step(trained.net, grads, adam, adam_cfg);
        }
    }
    return trained;
}

std::pair<TrainedModel, TrainedModel> train_distill(
    const bio::FeatureTable& teacher_features, const bio::FeatureTable& student_features,
    const bio::LabeledCorpus& labels, const KdConfig& cfg, const ArchFn& arch_fn,
    const Scaler* teacher_fixed_scaler, const Scaler* student_fixed_scaler) {
    cfg.validate();
    if (!cfg.is_distill())
        throw ValidationError("train distill: config mode is not a distill mode");
    if (student_features.size() < 2)
        throw ValidationError("train: need at least 2 training samples, got " +
                              std::to_string(student_features.size()));
    check_id_alignment(teacher_features, student_features);
    AlignedData student_data = align_features_labels(student_features, labels);

    // Teacher rows follow the student table's row order.
    std::vector<std::size_t> teacher_row(student_data.ids.size());
    for (std::size_t i = 0; i < student_data.ids.size(); ++i)
        teacher_row[i] = *teacher_features.index_of(student_data.ids[i]);

    TrainedModel teacher, student;
    teacher.descriptor = teacher_features.descriptor;
    student.descriptor = student_features.descriptor;
    teacher.scaler = teacher_fixed_scaler ? *teacher_fixed_scaler : fit_scaler(teacher_features);
    student.scaler = student_fixed_scaler ? *student_fixed_scaler : fit_scaler(student_features);

    std::vector<std::vector<double>> xt(student_data.ids.size()), xs(student_data.ids.size());
    for (std::size_t i = 0; i < student_data.ids.size(); ++i) {
        xt[i] = teacher.scaler.transform(teacher_features.rows[teacher_row[i]]);
        xs[i] = student.scaler.transform(student_data.x[i]);
    }

    teacher.net = MlpModel::from_specs(make_arch(arch_fn, teacher_features.dim()));
    student.net = MlpModel::from_specs(make_arch(arch_fn, student_features.dim()));
    if (cfg.mode == Mode::DistillOutFeat &&
        teacher.net.latent_dim() != student.net.latent_dim())
        throw ValidationError("train distill: teacher/student latent dims differ");
    net::init_kaiming_uniform(teacher.net, mix_seed(cfg.seed, kTeacherInitStream));
    net::init_kaiming_uniform(student.net, mix_seed(cfg.seed, kStudentInitStream));

    net::AdamState teacher_adam = net::AdamState::for_model(teacher.net);
    net::AdamState student_adam = net::AdamState::for_model(student.net);
    net::AdamConfig adam_cfg{cfg.lr, cfg.weight_decay};
    Rng shuffle_rng(mix_seed(cfg.seed, kShuffleStream));
    Rng teacher_drop_rng(mix_seed(cfg.seed, kTeacherDropoutStream));
    Rng student_drop_rng(mix_seed(cfg.seed, kStudentDropoutStream));

    std::vector<std::size_t> order(student_data.ids.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        shuffle_rng.shuffle(order);
        for (std::size_t idx : order) {
            const double y = student_data.y[idx];

            auto t_trace = net::forward(teacher.net, xt[idx], net::Mode::Train,
                                        &teacher_drop_rng);
            // Distillation targets, detached before the teacher's own update.
            double target_pred = t_trace.prediction;
            std::vector<double> target_latent = t_trace.latent;
            if (cfg.teacher_eval_targets) {
                auto clean = net::forward(teacher.net, xt[idx], net::Mode::Eval);
                target_pred = clean.prediction;
                target_latent = clean.latent;
            }
            double t_d_pred = 2.0 * (t_trace.prediction - y);
            auto t_grads = net::backward(teacher.net, t_trace, t_d_pred);
            net::adam_step(teacher.net, t_grads, teacher_adam, adam_cfg);

            auto s_trace = net::forward(student.net, xs[idx], net::Mode::Train,
                                        &student_drop_rng);
            TotalLoss loss = total_loss(s_trace.prediction, s_trace.latent, target_pred,
                                        std::optional<std::vector<double>>(target_latent),
                                        y, cfg);
            auto s_grads = net::backward(student.net, s_trace, loss.d_pred, loss.d_latent);
            net::adam_step(student.net, s_grads, student_adam, adam_cfg);
        }
    }
    return {std::move(teacher), std::move(student)};
}

double predict(const TrainedModel& model, std::span<const double> raw_features) {
    if (static_cast<int>(raw_features.size()) != model.net.input_dim())
        throw ValidationError("predict: feature dim " + std::to_string(raw_features.size()) +
                              " != model input dim " + std::to_string(model.net.input_dim()));
    auto scaled = model.scaler.transform(raw_features);
    return net::forward(model.net, scaled, net::Mode::Eval).prediction;
}

std::vector<double> predict_table(const TrainedModel& model,
                                  const bio::FeatureTable& features) {
    std::vector<double> out;
    out.reserve(features.size());
    for (const auto& row : features.rows) out.push_back(predict(model, row));
    return out;
}

}  // namespace affikd::train
