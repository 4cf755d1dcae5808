#ifndef AFFIKD_NET_MODEL_IO_HPP
#define AFFIKD_NET_MODEL_IO_HPP

#include <string>

#include "affikd/net/mlp.hpp"
#include "affikd/train/scaler.hpp"

namespace affikd::net {

// A network bundled with the feature scaler it was trained with; inference
// applies the scaler to raw features before the forward pass.
struct TrainedModel {
    MlpModel net;
    train::Scaler scaler;
    std::string descriptor;
};

inline constexpr int kModelFormatVersion = 1;

// Versioned JSON: {"format_version":1,"descriptor":...,"layers":[{"in","out",
// "activation","dropout","w":[row-major],"b":[...]}],"distill_layer_index":...,
// "scaler":{"mean":[...],"std":[...]}}. Load rejects unknown format versions.
std::string model_to_json(const TrainedModel& model);
TrainedModel model_from_json(const std::string& json_text);

void save_model(const TrainedModel& model, const std::string& path);
TrainedModel load_model(const std::string& path);

}  // namespace affikd::net

#endif
