#include "affikd/feat/sequence.hpp"

#include <array>
#include <cmath>

#include "affikd/error.hpp"
#include "affikd/feat/tables.hpp"

namespace affikd::feat {

using bio::AminoAcid;
using bio::ProteinChain;

std::vector<double> kmer_composition(const ProteinChain& chain, int k) {
    if (k < 1 || k > 4)
        throw ValidationError("kmer: k must be in 1..4, got " + std::to_string(k));
    const auto& seq = chain.sequence;
    const int len = static_cast<int>(seq.size());
    if (len < k)
        throw ValidationError("kmer: sequence of length " + std::to_string(len) +
                              " shorter than k=" + std::to_string(k));

    std::size_t dim = 1;
    for (int i = 0; i < k; ++i) dim *= 20;
    std::vector<double> out(dim, 0.0);
    for (int i = 0; i + k <= len; ++i) {
        std::size_t idx = 0;
        bool canonical = true;
        for (int j = 0; j < k; ++j) {
            if (!bio::is_canonical(seq[i + j])) {
                canonical = false;
                break;
            }
            idx = idx * 20 + bio::index_of(seq[i + j]);
        }
        if (canonical) out[idx] += 1.0;
    }
    for (double& v : out) v /= len;
    return out;
}

std::vector<double> grouped_kmer(const ProteinChain& chain, int k) {
    if (k < 2 || k > 4)
        throw ValidationError("grouped kmer: k must be in 2..4, got " + std::to_string(k));
    const auto& seq = chain.sequence;
    const int len = static_cast<int>(seq.size());
    if (len < k)
        throw ValidationError("grouped kmer: sequence of length " + std::to_string(len) +
                              " shorter than k=" + std::to_string(k));

    std::size_t dim = 1;
    for (int i = 0; i < k; ++i) dim *= kNumAminoGroups;
    std::vector<double> out(dim, 0.0);
    double valid_windows = 0;
    for (int i = 0; i + k <= len; ++i) {
        std::size_t idx = 0;
        bool canonical = true;
        for (int j = 0; j < k; ++j) {
            if (!bio::is_canonical(seq[i + j])) {
                canonical = false;
                break;
            }
            idx = idx * kNumAminoGroups + amino_group(seq[i + j]);
        }
        if (canonical) {
            out[idx] += 1.0;
            valid_windows += 1.0;
        }
    }
    if (valid_windows > 0)
        for (double& v : out) v /= valid_windows;
    return out;
}

std::vector<double> grouped_kmer_concat(const ProteinChain& chain) {
    std::vector<double> out;
    out.reserve(49 + 343 + 2401);
    for (int k = 2; k <= 4; ++k) {
        auto part = grouped_kmer(chain, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<double> blosum_mean(const std::vector<AminoAcid>& residues,
                                bool unique_residues) {
    std::array<double, 20> counts{};
    for (AminoAcid aa : residues)
        if (bio::is_canonical(aa)) counts[bio::index_of(aa)] += 1.0;
    if (unique_residues)
        for (double& c : counts) c = c > 0 ? 1.0 : 0.0;

    double total = 0;
    for (double c : counts) total += c;
    if (total == 0)
        throw ValidationError("blosum mean: no canonical residues in input");

    std::vector<double> out(20, 0.0);
    for (int i = 0; i < 20; ++i) {
        if (counts[i] == 0) continue;
        const auto& col = blosum62_column(static_cast<AminoAcid>(i));
        for (int j = 0; j < 20; ++j) out[j] += counts[i] * col[j];
    }
    for (double& v : out) v /= total;
    return out;
}

double net_charge(const ProteinChain& chain, double ph) {
    std::array<int, 20> counts{};
    for (AminoAcid aa : chain.sequence)
        if (bio::is_canonical(aa)) counts[bio::index_of(aa)]++;

    const PkaSet& pka = kProtParamPka;
    auto positive = [ph](double pk) { return 1.0 / (1.0 + std::pow(10.0, ph - pk)); };
    auto negative = [ph](double pk) { return 1.0 / (1.0 + std::pow(10.0, pk - ph)); };

    double pos = positive(pka.n_terminus) +
                 counts[bio::index_of(AminoAcid::H)] * positive(pka.his) +
                 counts[bio::index_of(AminoAcid::K)] * positive(pka.lys) +
                 counts[bio::index_of(AminoAcid::R)] * positive(pka.arg);
    double neg = negative(pka.c_terminus) +
                 counts[bio::index_of(AminoAcid::D)] * negative(pka.asp) +
                 counts[bio::index_of(AminoAcid::E)] * negative(pka.glu) +
                 counts[bio::index_of(AminoAcid::C)] * negative(pka.cys) +
                 counts[bio::index_of(AminoAcid::Y)] * negative(pka.tyr);
    return pos - neg;
}

namespace {

double isoelectric_point(const ProteinChain& chain) {
    double lo = 0.0, hi = 14.0;
    while (hi - lo > 0.01) {
        double mid = 0.5 * (lo + hi);
        if (net_charge(chain, mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> protparam(const ProteinChain& chain) {
    std::vector<AminoAcid> canon;
    canon.reserve(chain.sequence.size());
    for (AminoAcid aa : chain.sequence)
        if (bio::is_canonical(aa)) canon.push_back(aa);
    const double n = static_cast<double>(canon.size());
    if (canon.size() < 2)
        throw ValidationError("protparam: need at least 2 canonical residues, got " +
                              std::to_string(canon.size()));

    double mass = 0;
    for (AminoAcid aa : canon) mass += amino_acid_mass(aa);
    mass -= (n - 1) * kWaterMass;

    double aromatic = 0, helix = 0, turn = 0, sheet = 0;
    for (AminoAcid aa : canon) {
        if (aa == AminoAcid::F || aa == AminoAcid::W || aa == AminoAcid::Y) aromatic += 1;
        if (is_helix_residue(aa)) helix += 1;
        if (is_turn_residue(aa)) turn += 1;
        if (is_sheet_residue(aa)) sheet += 1;
    }

    // Adjacent-in-sequence pairs where both residues are canonical.
    double diwv_sum = 0;
    for (std::size_t i = 0; i + 1 < chain.sequence.size(); ++i) {
        AminoAcid a = chain.sequence[i], b = chain.sequence[i + 1];
        if (bio::is_canonical(a) && bio::is_canonical(b)) diwv_sum += diwv(a, b);
    }
    double instability = 10.0 / (n - 1) * diwv_sum;

    return {mass,
            aromatic / n,
            instability,
            isoelectric_point(chain),
            helix / n,
            turn / n,
            sheet / n};
}

std::vector<double> pssm_mean(const bio::PssmProfile& profile) {
    if (profile.sequence_length < 1 ||
        profile.scores.size() != static_cast<std::size_t>(profile.sequence_length))
        throw ValidationError("pssm mean: profile has no rows");
    std::vector<double> out(20, 0.0);
    for (const auto& row : profile.scores) {
        if (row.size() != 20)
            throw ValidationError("pssm mean: profile row width != 20");
        for (int j = 0; j < 20; ++j) out[j] += row[j];
    }
    for (double& v : out) v /= profile.sequence_length;
    return out;
}

namespace {

std::vector<double> side_mean(const std::vector<ProteinChain>& chains,
                              const ChainDescriptorFn& fn, const char* side) {
    if (chains.empty())
        throw ValidationError(std::string("complex features: ") + side + " side is empty");
    std::vector<double> mean;
    for (const auto& chain : chains) {
        std::vector<double> v;
        try {
            v = fn(chain);
        } catch (const std::exception& e) {
            throw ValidationError(std::string("chain '") + chain.chain_id + "': " + e.what());
        }
        if (mean.empty()) {
            mean.assign(v.size(), 0.0);
        } else if (v.size() != mean.size()) {
            throw ValidationError(std::string("chain '") + chain.chain_id +
                                  "': descriptor dimension mismatch");
        }
        for (std::size_t i = 0; i < v.size(); ++i) mean[i] += v[i];
    }
    for (double& v : mean) v /= static_cast<double>(chains.size());
    return mean;
}

}  // namespace

FeatureVector complex_features(const std::string& complex_id,
                               const std::string& descriptor,
                               const std::vector<ProteinChain>& ligand,
                               const std::vector<ProteinChain>& receptor,
                               const ChainDescriptorFn& chain_descriptor) {
    auto lig = side_mean(ligand, chain_descriptor, "ligand");
    auto rec = side_mean(receptor, chain_descriptor, "receptor");
    FeatureVector fv;
    fv.complex_id = complex_id;
    fv.descriptor = descriptor;
    fv.values = std::move(lig);
    fv.values.insert(fv.values.end(), rec.begin(), rec.end());
    return fv;
}

}  // namespace affikd::feat
