#ifndef AFFIKD_BIO_RESIDUE_HPP
#define AFFIKD_BIO_RESIDUE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace affikd::bio {

// The 20 canonical amino acids in alphabetical one-letter order, plus an
// explicit Unknown for everything else (B, J, O, U, X, Z, digits, MSE, ...).
// Unknown is never dropped so sequence lengths are preserved; each descriptor
// defines its own handling.
enum class AminoAcid : std::uint8_t {
    A, C, D, E, F, G, H, I, K, L, M, N, P, Q, R, S, T, V, W, Y,
    Unknown
};

inline constexpr int kNumCanonical = 20;

inline constexpr std::array<char, 20> kOneLetter = {
    'A', 'C', 'D', 'E', 'F', 'G', 'H', 'I', 'K', 'L',
    'M', 'N', 'P', 'Q', 'R', 'S', 'T', 'V', 'W', 'Y'};

inline constexpr bool is_canonical(AminoAcid aa) {
    return aa != AminoAcid::Unknown;
}

inline constexpr int index_of(AminoAcid aa) { return static_cast<int>(aa); }

inline constexpr AminoAcid from_one_letter(char c) {
    switch (c) {
        case 'A': return AminoAcid::A;
        case 'C': return AminoAcid::C;
        case 'D': return AminoAcid::D;
        case 'E': return AminoAcid::E;
        case 'F': return AminoAcid::F;
        case 'G': return AminoAcid::G;
        case 'H': return AminoAcid::H;
        case 'I': return AminoAcid::I;
        case 'K': return AminoAcid::K;
        case 'L': return AminoAcid::L;
        case 'M': return AminoAcid::M;
        case 'N': return AminoAcid::N;
        case 'P': return AminoAcid::P;
        case 'Q': return AminoAcid::Q;
        case 'R': return AminoAcid::R;
        case 'S': return AminoAcid::S;
        case 'T': return AminoAcid::T;
        case 'V': return AminoAcid::V;
        case 'W': return AminoAcid::W;
        case 'Y': return AminoAcid::Y;
        default:  return AminoAcid::Unknown;
    }
}

inline constexpr char to_one_letter(AminoAcid aa) {
    return is_canonical(aa) ? kOneLetter[index_of(aa)] : 'X';
}

// Three-letter PDB residue codes for the 20 canonical amino acids; anything
// else (MSE, UNK, nucleotides, ...) maps to Unknown.
inline AminoAcid from_three_letter(std::string_view code) {
    struct Entry { std::string_view code; AminoAcid aa; };
    static constexpr std::array<Entry, 20> kTable = {{
        {"ALA", AminoAcid::A}, {"CYS", AminoAcid::C}, {"ASP", AminoAcid::D},
        {"GLU", AminoAcid::E}, {"PHE", AminoAcid::F}, {"GLY", AminoAcid::G},
        {"HIS", AminoAcid::H}, {"ILE", AminoAcid::I}, {"LYS", AminoAcid::K},
        {"LEU", AminoAcid::L}, {"MET", AminoAcid::M}, {"ASN", AminoAcid::N},
        {"PRO", AminoAcid::P}, {"GLN", AminoAcid::Q}, {"ARG", AminoAcid::R},
        {"SER", AminoAcid::S}, {"THR", AminoAcid::T}, {"VAL", AminoAcid::V},
        {"TRP", AminoAcid::W}, {"TYR", AminoAcid::Y},
    }};
    for (const auto& e : kTable)
        if (e.code == code) return e.aa;
    return AminoAcid::Unknown;
}

struct ProteinChain {
    std::string chain_id;
    std::vector<AminoAcid> sequence;  // length >= 1 once parsed

    std::string to_string() const {
        std::string s;
        s.reserve(sequence.size());
        for (AminoAcid aa : sequence) s.push_back(to_one_letter(aa));
        return s;
    }
};

}  // namespace affikd::bio

#endif
