#ifndef AFFIKD_FEAT_SEQUENCE_HPP
#define AFFIKD_FEAT_SEQUENCE_HPP

#include <functional>
#include <string>
#include <vector>

#include "affikd/bio/pssm.hpp"
#include "affikd/bio/residue.hpp"

namespace affikd::feat {

// Complex-level descriptor vector.
struct FeatureVector {
    std::string complex_id;
    std::string descriptor;
    std::vector<double> values;

    int dim() const { return static_cast<int>(values.size()); }
};

// Ordered k-mer counts over canonical-only windows (windows containing an
// Unknown are skipped), divided by the full sequence length L. 20^k entries;
// k = 2 gives the standard 400-dim dipeptide composition.
std::vector<double> kmer_composition(const bio::ProteinChain& chain, int k = 2);

// k-mer counts over the seven Shen groups, divided by the number of valid
// (canonical-only) windows; all-zero when no window is valid. 7^k entries,
// k in 2..4.
std::vector<double> grouped_kmer(const bio::ProteinChain& chain, int k);

// Concatenation of grouped_kmer for k = 2, 3, 4 (49 + 343 + 2401 = 2793).
std::vector<double> grouped_kmer_concat(const bio::ProteinChain& chain);

// Mean of BLOSUM-62 columns over residue occurrences; Unknown residues are
// skipped. With unique_residues, each distinct residue present contributes
// once instead (set-based averaging).
std::vector<double> blosum_mean(const std::vector<bio::AminoAcid>& residues,
                                bool unique_residues = false);

// [molecular weight (Da), aromaticity, instability index, isoelectric point,
// helix fraction, turn fraction, sheet fraction]. Unknown residues are
// excluded throughout; needs at least 2 canonical residues.
std::vector<double> protparam(const bio::ProteinChain& chain);

// Net charge of the chain at a given pH (Henderson-Hasselbalch over the
// ProtParam pKa set). Strictly decreasing in pH; its zero is the pI.
double net_charge(const bio::ProteinChain& chain, double ph);

// Column-wise mean of the L x 20 score matrix.
std::vector<double> pssm_mean(const bio::PssmProfile& profile);

using ChainDescriptorFn = std::function<std::vector<double>(const bio::ProteinChain&)>;

// Element-wise mean of chain vectors per side, ligand mean first:
// output = ligand_mean ++ receptor_mean, dim = 2 x chain dim.
FeatureVector complex_features(const std::string& complex_id,
                               const std::string& descriptor,
                               const std::vector<bio::ProteinChain>& ligand,
                               const std::vector<bio::ProteinChain>& receptor,
                               const ChainDescriptorFn& chain_descriptor);

}  // namespace affikd::feat

#endif
