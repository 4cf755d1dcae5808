#ifndef AFFIKD_FEAT_STRUCTURE_HPP
#define AFFIKD_FEAT_STRUCTURE_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "affikd/bio/pdb.hpp"

namespace affikd::feat {

inline constexpr double kInterfaceCutoff = 8.0;  // Angstrom

struct ResidueKey {
    char chain_id = ' ';
    int residue_seq = 0;

    auto operator<=>(const ResidueKey&) const = default;
};

// One residue's atoms, grouped from a parsed structure.
struct ResidueAtoms {
    ResidueKey key;
    bio::AminoAcid type = bio::AminoAcid::Unknown;
    std::vector<bio::Vec3> atoms;
};

// Residues of one side, in first-appearance order.
std::vector<ResidueAtoms> group_residues(const bio::ComplexStructure& structure,
                                         bool receptor_side);

// Minimum Euclidean distance over all cross atom pairs.
double residue_min_distance(const std::vector<bio::Vec3>& a,
                            const std::vector<bio::Vec3>& b);

struct InterfaceMap {
    std::string complex_id;
    std::set<ResidueKey> receptor_iface;
    std::set<ResidueKey> ligand_iface;
    std::vector<std::pair<ResidueKey, ResidueKey>> contact_pairs;  // (receptor, ligand)
};

// All (receptor residue, ligand residue) pairs with at least one atom of one
// within `cutoff` of an atom of the other; iface sets are the projections.
InterfaceMap interface_map(const bio::ComplexStructure& structure,
                           double cutoff = kInterfaceCutoff);

inline constexpr int kNirpDim = 211;

// Bin index for an unordered residue-type pair: the 210 canonical pairs in
// lexicographic order over the alphabetical one-letter alphabet
// ((A,A),(A,C),...,(A,Y),(C,C),...,(Y,Y)), then bin 210 for any pair
// involving an Unknown residue.
int nirp_bin(bio::AminoAcid a, bio::AminoAcid b);

// Histogram of interfacial residue-type pairs over the 211 bins; each contact
// pair counts once. Normalized by total contact count unless normalized is
// false (raw counts); all-zero when there are no contacts.
std::vector<double> nirp(const bio::ComplexStructure& structure,
                         double cutoff = kInterfaceCutoff, bool normalized = true);

// blosum_mean over ligand interface residue types ++ the same over receptor
// interface residue types (ligand first). Errors when there is no interface
// at the cutoff.
std::vector<double> blosum_interface(const bio::ComplexStructure& structure,
                                     double cutoff = kInterfaceCutoff);

}  // namespace affikd::feat

#endif
