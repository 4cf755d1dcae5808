#ifndef AFFIKD_FEAT_TABLES_HPP
#define AFFIKD_FEAT_TABLES_HPP

#include <array>

#include "affikd/bio/residue.hpp"

namespace affikd::feat {

// Embedded physicochemical constants. Values are data with external sources,
// not code logic:
//  - BLOSUM-62 substitution scores: Henikoff & Henikoff 1992, NCBI matrix.
//  - Free amino acid average masses (Da) and the 18.015 Da water loss per
//    peptide bond: ExPASy / standard IUPAC average masses.
//  - Dipeptide instability weight values (DIWV): Guruprasad, Reddy & Pandit
//    1990, Protein Eng 4:155-161.
//  - pKa set for the isoelectric point: ExPASy ProtParam convention
//    (Bjellqvist et al.), generic N-terminus 7.5 / C-terminus 3.55.
//  - Seven amino-acid groups by electrostatic and hydrophobic character:
//    Shen et al. 2007, PNAS 104:4337-4341.
// All 20-wide tables are indexed by index_of(AminoAcid), i.e. alphabetical
// one-letter order A C D E F G H I K L M N P Q R S T V W Y.

// Column of the BLOSUM-62 matrix for one canonical residue (20 entries over
// the standard amino acid rows).
const std::array<double, 20>& blosum62_column(bio::AminoAcid aa);

double amino_acid_mass(bio::AminoAcid aa);
inline constexpr double kWaterMass = 18.015;

// DIWV(first, second) for a dipeptide.
double diwv(bio::AminoAcid first, bio::AminoAcid second);

// Group index 0..6 for a canonical residue: {A,G,V} {I,L,F,P} {Y,M,T,S}
// {H,N,Q,W} {R,K} {D,E} {C}.
inline constexpr int kNumAminoGroups = 7;
int amino_group(bio::AminoAcid aa);

struct PkaSet {
    double n_terminus = 7.5;
    double c_terminus = 3.55;
    double asp = 4.05;
    double glu = 4.45;
    double cys = 9.0;
    double tyr = 10.0;
    double his = 5.98;
    double lys = 10.0;
    double arg = 12.0;
};
inline constexpr PkaSet kProtParamPka{};

// Secondary-structure residue classes (ExPASy ProtParam convention). The
// classes overlap: L is in both helix and sheet.
bool is_helix_residue(bio::AminoAcid aa);   // V I Y F W L
bool is_turn_residue(bio::AminoAcid aa);    // N P G S
bool is_sheet_residue(bio::AminoAcid aa);   // E M A L

}  // namespace affikd::feat

#endif
