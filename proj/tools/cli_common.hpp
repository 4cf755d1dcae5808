#ifndef AFFIKD_TOOLS_CLI_COMMON_HPP
#define AFFIKD_TOOLS_CLI_COMMON_HPP

#include <optional>
#include <string>

#include "affikd/train/config.hpp"

namespace affikd::cli {

struct FeaturizeSeqArgs {
    std::string fasta_dir;
    std::string pairs_path;
    std::string descriptor;  // kmer | kmer-g | blosum | protparam | pssm
    std::string pssm_dir;
    std::string out_path;
    int kmer_k = 2;
    int kmer_g_k = 0;  // 0 = concatenate k = 2..4
    bool blosum_set_average = false;
};

struct FeaturizeStructArgs {
    std::string pdb_dir;
    std::string pairs_path;
    std::string descriptor;  // nirp | blosum-iface
    double cutoff = 8.0;
    std::string out_path;
    bool nirp_raw_counts = false;
};

// Flags shared by train and loco; optional values override the config file,
// which overrides the built-in defaults.
struct TrainCommonArgs {
    std::string student_features_path;
    std::string teacher_features_path;  // empty = not given
    std::string labels_path;
    std::string mode;
    std::string config_path;  // empty = not given
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<int> epochs;
    std::optional<double> lambda_out;
    std::optional<double> lambda_feat;
};

struct LocoArgs {
    TrainCommonArgs common;
    int runs = 3;
};

struct PredictArgs {
    std::string model_path;
    std::string features_path;
    std::string out_path;
};

struct EvalArgs {
    std::string pred_path;
    std::string truth_path;
    std::string out_path;
};

train::KdConfig build_config(const TrainCommonArgs& args);

int run_featurize_seq(const FeaturizeSeqArgs& args);
int run_featurize_struct(const FeaturizeStructArgs& args);
int run_train(const TrainCommonArgs& args);
int run_loco(const LocoArgs& args);
int run_predict(const PredictArgs& args);
int run_eval(const EvalArgs& args);

}  // namespace affikd::cli

#endif
