#include <CLI11.hpp>

#include <iostream>

#include "affikd/error.hpp"
#include "affikd/version.hpp"
#include "cli_common.hpp"

using namespace affikd;
using namespace affikd::cli;

int main(int argc, char** argv) {
    CLI::App app{"Protein-protein binding affinity prediction via teacher-student "
                 "knowledge distillation: descriptor extraction, training, "
                 "leave-one-complex-out evaluation, and inference."};
    app.set_version_flag("--version", AFFIKD_VERSION);
    app.require_subcommand(1);
    int rc = 0;

    FeaturizeSeqArgs fs;
    auto* featurize_seq = app.add_subcommand(
        "featurize-seq", "Compute sequence descriptors per complex from FASTA files");
    featurize_seq->add_option("--fasta-dir", fs.fasta_dir, "Directory of <complex_id>.fasta files")
        ->required();
    featurize_seq->add_option("--pairs", fs.pairs_path, "Pairs CSV (complex_id,ligand_chains,receptor_chains)")
        ->required();
    featurize_seq->add_option("--descriptor", fs.descriptor, "Descriptor")
        ->required()
        ->check(CLI::IsMember({"kmer", "kmer-g", "blosum", "protparam", "pssm"}));
    featurize_seq->add_option("--pssm-dir", fs.pssm_dir,
                              "Directory of <complex_id>_<chain_id>.pssm files (pssm descriptor)");
    featurize_seq->add_option("--out", fs.out_path, "Output feature CSV")->required();
    featurize_seq->add_option("--kmer-k", fs.kmer_k, "k for the kmer descriptor")
        ->default_val(2);
    featurize_seq->add_option("--kmer-g-k", fs.kmer_g_k,
                              "Single k for kmer-g (default 0 = concatenate k=2..4)")
        ->default_val(0);
    featurize_seq->add_flag("--blosum-set-average", fs.blosum_set_average,
                            "Average over the set of distinct residues instead of occurrences");
    featurize_seq->callback([&] { rc = run_featurize_seq(fs); });

    FeaturizeStructArgs fx;
    auto* featurize_struct = app.add_subcommand(
        "featurize-struct", "Compute structure descriptors per complex from PDB files");
    featurize_struct->add_option("--pdb-dir", fx.pdb_dir, "Directory of <complex_id>.pdb files")
        ->required();
    featurize_struct->add_option("--pairs", fx.pairs_path, "Pairs CSV")->required();
    featurize_struct->add_option("--descriptor", fx.descriptor, "Descriptor")
        ->required()
        ->check(CLI::IsMember({"nirp", "blosum-iface"}));
    featurize_struct->add_option("--cutoff", fx.cutoff, "Interface distance cutoff in Angstrom")
        ->default_val(8.0);
    featurize_struct->add_option("--out", fx.out_path, "Output feature CSV")->required();
    featurize_struct->add_flag("--nirp-raw-counts", fx.nirp_raw_counts,
                               "Emit raw contact counts instead of frequencies");
    featurize_struct->callback([&] { rc = run_featurize_struct(fx); });

    auto add_train_common = [](CLI::App* cmd, TrainCommonArgs& args, bool mode_required) {
        cmd->add_option("--student-features", args.student_features_path, "Student feature CSV")
            ->required();
        cmd->add_option("--teacher-features", args.teacher_features_path,
                        "Teacher feature CSV (distill / baseline-teacher modes)");
        cmd->add_option("--labels", args.labels_path, "Labels CSV (complex_id,delta_g,...)")
            ->required();
        auto* mode = cmd->add_option("--mode", args.mode, "Training mode")
                         ->check(CLI::IsMember({"baseline-student", "baseline-teacher",
                                                "distill-out", "distill-out-feat"}));
        if (mode_required) mode->required();
        cmd->add_option("--config", args.config_path,
                        "JSON config; keys mirror the training-config fields");
        cmd->add_option("--out-dir", args.out_dir, "Output directory")->required();
        cmd->add_option("--seed", args.seed, "RNG seed (overrides config)");
        cmd->add_option("--epochs", args.epochs, "Training epochs (overrides config)");
        cmd->add_option("--lambda-out", args.lambda_out,
                        "Output-level distillation weight (overrides config)");
        cmd->add_option("--lambda-feat", args.lambda_feat,
                        "Feature-level distillation weight (overrides config)");
    };

    TrainCommonArgs tr;
    auto* train_cmd = app.add_subcommand("train", "Train on a full corpus and save model(s)");
    add_train_common(train_cmd, tr, true);
    train_cmd->callback([&] { rc = run_train(tr); });

    LocoArgs lc;
    auto* loco_cmd = app.add_subcommand(
        "loco", "Leave-one-complex-out cross-validation with run averaging");
    add_train_common(loco_cmd, lc.common, true);
    loco_cmd->add_option("--runs", lc.runs, "Independent LOCO runs to average")
        ->default_val(3);
    loco_cmd->callback([&] { rc = run_loco(lc); });

    PredictArgs pr;
    auto* predict_cmd = app.add_subcommand("predict", "Eval-mode inference with a saved model");
    predict_cmd->add_option("--model", pr.model_path, "Model JSON")->required();
    predict_cmd->add_option("--features", pr.features_path, "Feature CSV")->required();
    predict_cmd->add_option("--out", pr.out_path, "Output predictions CSV")->required();
    predict_cmd->callback([&] { rc = run_predict(pr); });

    EvalArgs ev;
    auto* eval_cmd = app.add_subcommand("eval", "Metrics from a predictions CSV and a labels CSV");
    eval_cmd->add_option("--pred", ev.pred_path, "Predictions CSV (complex_id,y_pred)")->required();
    eval_cmd->add_option("--truth", ev.truth_path, "Labels CSV")->required();
    eval_cmd->add_option("--out", ev.out_path, "Output metrics JSON")->required();
    eval_cmd->callback([&] { rc = run_eval(ev); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
