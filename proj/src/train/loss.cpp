#include "affikd/train/loss.hpp"

#include "affikd/error.hpp"
#include "affikd/net/mlp.hpp"

namespace affikd::train {

double supervised_loss(std::span<const double> pred, std::span<const double> target) {
    return net::mse(pred, target);
}

TotalLoss total_loss(double student_pred, std::span<const double> student_latent,
                     const std::optional<double>& teacher_pred,
                     const std::optional<std::vector<double>>& teacher_latent,
                     double target, const KdConfig& cfg) {
    TotalLoss out;
    out.d_latent.assign(student_latent.size(), 0.0);

    const double sup_err = student_pred - target;
    if (!cfg.is_distill()) {
        out.value = sup_err * sup_err;
        out.d_pred = 2.0 * sup_err;
        return out;
    }

    if (!teacher_pred)
        throw ValidationError("total loss: distill mode needs a teacher prediction");
    const double s = cfg.distill_sign;
    const double dist_err = student_pred - *teacher_pred;
    out.value = (1.0 - cfg.lambda_out) * sup_err * sup_err +
                s * cfg.lambda_out * dist_err * dist_err;
    out.d_pred = 2.0 * (1.0 - cfg.lambda_out) * sup_err +
                 2.0 * s * cfg.lambda_out * dist_err;

    if (cfg.mode == Mode::DistillOutFeat) {
        if (!teacher_latent)
            throw ValidationError("total loss: feat mode needs a teacher latent");
        if (teacher_latent->size() != student_latent.size())
            throw ValidationError("total loss: latent dims differ (student " +
                                  std::to_string(student_latent.size()) + ", teacher " +
                                  std::to_string(teacher_latent->size()) + ")");
        const double h = static_cast<double>(student_latent.size());
        double feat = 0;
        for (std::size_t i = 0; i < student_latent.size(); ++i) {
            double d = student_latent[i] - (*teacher_latent)[i];
            feat += d * d;
            out.d_latent[i] = 2.0 * s * cfg.lambda_feat * d / h;
        }
        out.value += s * cfg.lambda_feat * feat / h;
    }
    return out;
}

}  // namespace affikd::train
