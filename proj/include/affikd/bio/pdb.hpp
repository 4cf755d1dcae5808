#ifndef AFFIKD_BIO_PDB_HPP
#define AFFIKD_BIO_PDB_HPP

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "affikd/bio/residue.hpp"

namespace affikd::bio {

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

inline double distance(const Vec3& a, const Vec3& b) {
    double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

struct Atom {
    int serial = 0;
    std::string atom_name;
    std::string residue_name;  // 3-letter code
    int residue_seq = 0;
    char chain_id = ' ';
    Vec3 position;

    AminoAcid residue_type() const { return from_three_letter(residue_name); }
};

// A bound complex partitioned into a receptor side and a ligand side.
struct ComplexStructure {
    std::string complex_id;
    std::set<char> receptor_chains;
    std::set<char> ligand_chains;
    std::vector<Atom> atoms;

    bool is_receptor(char chain) const { return receptor_chains.count(chain) > 0; }
};

// Fixed-column ATOM-record parser. Reads the first model only (records after
// the first ENDMDL are ignored), keeps altloc ' ' or 'A', drops HETATM and
// atoms whose chain is in neither declared set. Throws ParseError with the
// line number on malformed numeric fields and ValidationError if a declared
// chain ends up with zero atoms.
ComplexStructure parse_pdb(const std::string& text,
                           const std::set<char>& receptor_chains,
                           const std::set<char>& ligand_chains,
                           const std::string& complex_id = "");

}  // namespace affikd::bio

#endif
