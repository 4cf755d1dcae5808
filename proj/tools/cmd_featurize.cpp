#include <filesystem>
#include <iostream>
#include <map>

#include "affikd/bio/fasta.hpp"
#include "affikd/bio/feature_table.hpp"
#include "affikd/bio/pairs.hpp"
#include "affikd/bio/pdb.hpp"
#include "affikd/bio/pssm.hpp"
#include "affikd/error.hpp"
#include "affikd/feat/sequence.hpp"
#include "affikd/feat/structure.hpp"
#include "affikd/fsio.hpp"
#include "affikd/manifest.hpp"
#include "cli_common.hpp"

namespace fs = std::filesystem;

namespace affikd::cli {

namespace {

std::vector<bio::PairsRecord> load_pairs_checked(const std::string& path) {
    auto pairs = bio::load_pairs_csv(path);
    if (pairs.empty()) throw UsageError("pairs file '" + path + "' lists no complexes");
    return pairs;
}

// Collect the named chains from a per-complex FASTA file.
std::vector<bio::ProteinChain> pick_chains(
    const std::map<std::string, bio::ProteinChain>& by_id,
    const std::vector<std::string>& wanted, const std::string& complex_id) {
    std::vector<bio::ProteinChain> out;
    for (const auto& chain_id : wanted) {
        auto it = by_id.find(chain_id);
        if (it == by_id.end())
            throw ValidationError("complex '" + complex_id + "': chain '" + chain_id +
                                  "' not present in FASTA file");
        out.push_back(it->second);
    }
    return out;
}

int emit_table(const bio::FeatureTable& table, const std::string& out_path,
               RunManifest& manifest, const std::vector<std::string>& errors) {
    if (!errors.empty()) {
        std::cerr << "featurize failed for " << errors.size() << " complex(es):\n";
        for (const auto& e : errors) std::cerr << "  " << e << "\n";
        return 1;
    }
    bio::save_feature_csv(table, out_path);
    manifest.set("descriptor", table.descriptor);
    manifest.set("dim", table.dim());
    manifest.write(out_path + ".manifest.json");
    return 0;
}

}  // namespace

int run_featurize_seq(const FeaturizeSeqArgs& args) {
    if (args.descriptor == "pssm" && args.pssm_dir.empty())
        throw UsageError("--descriptor pssm requires --pssm-dir");
    if (args.descriptor == "kmer-g" &&
        (args.kmer_g_k != 0 && (args.kmer_g_k < 2 || args.kmer_g_k > 4)))
        throw UsageError("--kmer-g-k must be 0 (concatenate 2..4) or in 2..4");

    auto pairs = load_pairs_checked(args.pairs_path);

    std::string tag;
    if (args.descriptor == "kmer") tag = "KMER";
    else if (args.descriptor == "kmer-g") tag = "KMER_G";
    else if (args.descriptor == "blosum") tag = "BLOSUM";
    else if (args.descriptor == "protparam") tag = "PROTPARAM";
    else tag = "PSSM";

    RunManifest manifest("featurize-seq");
    manifest.add_input(args.pairs_path);
    manifest.set("options", {{"descriptor", args.descriptor},
                             {"fasta_dir", args.fasta_dir},
                             {"pssm_dir", args.pssm_dir},
                             {"kmer_k", args.kmer_k},
                             {"kmer_g_k", args.kmer_g_k},
                             {"blosum_set_average", args.blosum_set_average},
                             {"out", args.out_path}});

    bio::FeatureTable table;
    table.descriptor = tag;
    std::vector<std::string> errors;
    int chain_dim = -1;
    for (const auto& rec : pairs) {
        try {
            std::string fasta_path =
                (fs::path(args.fasta_dir) / (rec.complex_id + ".fasta")).string();
            auto chains = bio::parse_fasta(read_file(fasta_path));
            manifest.add_input(fasta_path);
            std::map<std::string, bio::ProteinChain> by_id;
            for (auto& c : chains) by_id.emplace(c.chain_id, std::move(c));

            feat::ChainDescriptorFn fn;
            if (args.descriptor == "kmer") {
                fn = [&](const bio::ProteinChain& c) {
                    return feat::kmer_composition(c, args.kmer_k);
                };
            } else if (args.descriptor == "kmer-g") {
                fn = [&](const bio::ProteinChain& c) {
                    return args.kmer_g_k == 0 ? feat::grouped_kmer_concat(c)
                                              : feat::grouped_kmer(c, args.kmer_g_k);
                };
            } else if (args.descriptor == "blosum") {
                fn = [&](const bio::ProteinChain& c) {
                    return feat::blosum_mean(c.sequence, args.blosum_set_average);
                };
            } else if (args.descriptor == "protparam") {
                fn = [&](const bio::ProteinChain& c) { return feat::protparam(c); };
            } else {
                fn = [&](const bio::ProteinChain& c) {
                    std::string pssm_path =
                        (fs::path(args.pssm_dir) / (rec.complex_id + "_" + c.chain_id + ".pssm"))
                            .string();
                    auto profile = bio::parse_pssm(read_file(pssm_path));
                    if (profile.sequence_length != static_cast<int>(c.sequence.size()))
                        throw ValidationError(
                            "pssm length " + std::to_string(profile.sequence_length) +
                            " != chain length " + std::to_string(c.sequence.size()));
                    return feat::pssm_mean(profile);
                };
            }

            auto lig = pick_chains(by_id, rec.ligand_chains, rec.complex_id);
            auto rcp = pick_chains(by_id, rec.receptor_chains, rec.complex_id);
            auto fv = feat::complex_features(rec.complex_id, tag, lig, rcp, fn);
            if (chain_dim < 0) chain_dim = fv.dim() / 2;
            table.ids.push_back(fv.complex_id);
            table.rows.push_back(std::move(fv.values));
        } catch (const std::exception& e) {
            errors.push_back("complex '" + rec.complex_id + "': " + e.what());
        }
    }
    manifest.set("chain_dim", chain_dim);
    return emit_table(table, args.out_path, manifest, errors);
}

int run_featurize_struct(const FeaturizeStructArgs& args) {
    if (args.cutoff <= 0) throw UsageError("--cutoff must be positive");
    auto pairs = load_pairs_checked(args.pairs_path);
    const std::string tag = args.descriptor == "nirp" ? "NIRP" : "BLOSUM_IFACE";

    RunManifest manifest("featurize-struct");
    manifest.add_input(args.pairs_path);
    manifest.set("options", {{"descriptor", args.descriptor},
                             {"pdb_dir", args.pdb_dir},
                             {"cutoff", args.cutoff},
                             {"nirp_raw_counts", args.nirp_raw_counts},
                             {"out", args.out_path}});
    if (args.descriptor == "nirp")
        manifest.set("bin_order",
                     "210 unordered canonical residue pairs, lexicographic over "
                     "ACDEFGHIKLMNPQRSTVWY, then one bin for Unknown-involving pairs");

    bio::FeatureTable table;
    table.descriptor = tag;
    std::vector<std::string> errors;
    for (const auto& rec : pairs) {
        try {
            auto to_chain_set = [&](const std::vector<std::string>& ids) {
                std::set<char> out;
                for (const auto& id : ids) {
                    if (id.size() != 1)
                        throw ValidationError("chain id '" + id +
                                              "' is not a single character (PDB chain)");
                    out.insert(id[0]);
                }
                return out;
            };
            std::string pdb_path = (fs::path(args.pdb_dir) / (rec.complex_id + ".pdb")).string();
            auto structure =
                bio::parse_pdb(read_file(pdb_path), to_chain_set(rec.receptor_chains),
                               to_chain_set(rec.ligand_chains), rec.complex_id);
            manifest.add_input(pdb_path);
            std::vector<double> values =
                args.descriptor == "nirp"
                    ? feat::nirp(structure, args.cutoff, !args.nirp_raw_counts)
                    : feat::blosum_interface(structure, args.cutoff);
            table.ids.push_back(rec.complex_id);
            table.rows.push_back(std::move(values));
        } catch (const std::exception& e) {
            errors.push_back("complex '" + rec.complex_id + "': " + e.what());
        }
    }
    return emit_table(table, args.out_path, manifest, errors);
}

}  // namespace affikd::cli
