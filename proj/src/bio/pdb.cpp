#include "affikd/bio/pdb.hpp"

#include <sstream>

#include "affikd/error.hpp"
#include "affikd/strings.hpp"

namespace affikd::bio {

namespace {

// cols is 1-based inclusive [lo, hi] per the PDB format description.
std::string_view field(const std::string& line, std::size_t lo, std::size_t hi) {
    if (line.size() < lo) return {};
    return std::string_view(line).substr(lo - 1, std::min(hi, line.size()) - lo + 1);
}

double coord_field(const std::string& line, std::size_t lo, std::size_t hi,
                   std::size_t line_no) {
    double v;
    if (!parse_double(field(line, lo, hi), v) || !std::isfinite(v))
        throw ParseError("pdb: malformed coordinate field at line " + std::to_string(line_no));
    return v;
}

}  // namespace

ComplexStructure parse_pdb(const std::string& text,
                           const std::set<char>& receptor_chains,
                           const std::set<char>& ligand_chains,
                           const std::string& complex_id) {
    if (receptor_chains.empty() || ligand_chains.empty())
        throw ValidationError("pdb: receptor and ligand chain sets must be non-empty");
    for (char c : receptor_chains)
        if (ligand_chains.count(c))
            throw ValidationError(std::string("pdb: chain '") + c +
                                  "' declared on both receptor and ligand side");

    ComplexStructure cs;
    cs.complex_id = complex_id;
    cs.receptor_chains = receptor_chains;
    cs.ligand_chains = ligand_chains;

    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind("ENDMDL", 0) == 0) break;  // first model only
        if (field(line, 1, 6) != "ATOM  ") continue;

        char altloc = line.size() >= 17 ? line[16] : ' ';
        if (altloc != ' ' && altloc != 'A') continue;

        char chain = line.size() >= 22 ? line[21] : ' ';
        if (!receptor_chains.count(chain) && !ligand_chains.count(chain)) continue;

        Atom atom;
        long serial = 0;
        if (!parse_long(field(line, 7, 11), serial))
            throw ParseError("pdb: malformed atom serial at line " + std::to_string(line_no));
        atom.serial = static_cast<int>(serial);
        atom.atom_name = std::string(trim(field(line, 13, 16)));
        atom.residue_name = std::string(trim(field(line, 18, 20)));
        long res_seq = 0;
        if (!parse_long(field(line, 23, 26), res_seq))
            throw ParseError("pdb: malformed residue number at line " + std::to_string(line_no));
        atom.residue_seq = static_cast<int>(res_seq);
        atom.chain_id = chain;
        atom.position.x = coord_field(line, 31, 38, line_no);
        atom.position.y = coord_field(line, 39, 46, line_no);
        atom.position.z = coord_field(line, 47, 54, line_no);
        cs.atoms.push_back(std::move(atom));
    }

    std::set<char> seen;
    for (const auto& a : cs.atoms) seen.insert(a.chain_id);
    for (char c : receptor_chains)
        if (!seen.count(c))
            throw ValidationError(std::string("pdb: declared receptor chain '") + c +
                                  "' has no atoms");
    for (char c : ligand_chains)
        if (!seen.count(c))
            throw ValidationError(std::string("pdb: declared ligand chain '") + c +
                                  "' has no atoms");
    return cs;
}

}  // namespace affikd::bio
