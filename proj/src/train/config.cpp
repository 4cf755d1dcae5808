#include "affikd/train/config.hpp"

#include <json.hpp>

#include "affikd/error.hpp"

namespace affikd::train {

using nlohmann::json;

Mode mode_from_string(const std::string& s) {
    if (s == "baseline-student") return Mode::BaselineStudent;
    if (s == "baseline-teacher") return Mode::BaselineTeacher;
    if (s == "distill-out") return Mode::DistillOut;
    if (s == "distill-out-feat") return Mode::DistillOutFeat;
    throw ValidationError("unknown mode '" + s + "'");
}

std::string to_string(Mode m) {
    switch (m) {
        case Mode::BaselineStudent: return "baseline-student";
        case Mode::BaselineTeacher: return "baseline-teacher";
        case Mode::DistillOut: return "distill-out";
        case Mode::DistillOutFeat: return "distill-out-feat";
    }
    return "?";
}

ScalerScope scope_from_string(const std::string& s) {
    if (s == "per-fold") return ScalerScope::PerFold;
    if (s == "global") return ScalerScope::Global;
    throw ValidationError("unknown scaler_scope '" + s + "'");
}

std::string to_string(ScalerScope s) {
    return s == ScalerScope::PerFold ? "per-fold" : "global";
}

void KdConfig::validate() const {
    if (lambda_out < 0.0 || lambda_out > 1.0)
        throw ValidationError("config: lambda_out must be in [0, 1]");
    if (lambda_feat < 0.0)
        throw ValidationError("config: lambda_feat must be >= 0");
    if (epochs < 1) throw ValidationError("config: epochs must be >= 1");
    if (batch_size != 1)
        throw ValidationError("config: only batch_size 1 is supported");
    if (lr <= 0.0) throw ValidationError("config: lr must be > 0");
    if (weight_decay < 0.0) throw ValidationError("config: weight_decay must be >= 0");
}

KdConfig config_with_overrides(const KdConfig& base, const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("config json: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("config json: top level must be an object");

    KdConfig cfg = base;
    for (const auto& [key, value] : j.items()) {
        if (key == "mode") cfg.mode = mode_from_string(value.get<std::string>());
        else if (key == "lambda_out") cfg.lambda_out = value.get<double>();
        else if (key == "lambda_feat") cfg.lambda_feat = value.get<double>();
        else if (key == "lr") cfg.lr = value.get<double>();
        else if (key == "weight_decay") cfg.weight_decay = value.get<double>();
        else if (key == "epochs") cfg.epochs = value.get<int>();
        else if (key == "batch_size") cfg.batch_size = value.get<int>();
        else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
        else if (key == "scaler_scope") cfg.scaler_scope = scope_from_string(value.get<std::string>());
        else if (key == "distill_sign") cfg.distill_sign = value.get<double>();
        else if (key == "teacher_eval_targets") cfg.teacher_eval_targets = value.get<bool>();
        else throw ValidationError("config json: unknown key '" + key + "'");
    }
    cfg.validate();
    return cfg;
}

std::string config_to_json(const KdConfig& cfg) {
    json j;
    j["mode"] = to_string(cfg.mode);
    j["lambda_out"] = cfg.lambda_out;
    j["lambda_feat"] = cfg.lambda_feat;
    j["lr"] = cfg.lr;
    j["weight_decay"] = cfg.weight_decay;
    j["epochs"] = cfg.epochs;
    j["batch_size"] = cfg.batch_size;
    j["seed"] = cfg.seed;
    j["scaler_scope"] = to_string(cfg.scaler_scope);
    j["distill_sign"] = cfg.distill_sign;
    j["teacher_eval_targets"] = cfg.teacher_eval_targets;
    return j.dump(2);
}

}  // namespace affikd::train
