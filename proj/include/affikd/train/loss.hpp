#ifndef AFFIKD_TRAIN_LOSS_HPP
#define AFFIKD_TRAIN_LOSS_HPP

#include <optional>
#include <span>
#include <vector>

#include "affikd/train/config.hpp"

namespace affikd::train {

// Supervised regression loss; delegates to the network-core MSE.
double supervised_loss(std::span<const double> pred, std::span<const double> target);

struct TotalLoss {
    double value = 0;
    double d_pred = 0;                  // d L / d student prediction
    std::vector<double> d_latent;       // d L / d student latent (zeros unless feat mode)
};

// Per-sample student objective:
//   baseline:         (y's - y)^2
//   distill-out:      (1-l_out)(y's - y)^2 + s*l_out*(y's - y't)^2
//   distill-out-feat: ... + s*l_feat * mean((h^s - h^t)^2)
// with s = cfg.distill_sign. Teacher quantities are detached constants:
// partials are taken w.r.t. the student outputs only.
TotalLoss total_loss(double student_pred, std::span<const double> student_latent,
                     const std::optional<double>& teacher_pred,
                     const std::optional<std::vector<double>>& teacher_latent,
                     double target, const KdConfig& cfg);

}  // namespace affikd::train

#endif
