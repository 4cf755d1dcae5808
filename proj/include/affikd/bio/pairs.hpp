#ifndef AFFIKD_BIO_PAIRS_HPP
#define AFFIKD_BIO_PAIRS_HPP

#include <string>
#include <vector>

namespace affikd::bio {

// Corpus spine: maps each complex to its ligand and receptor chain lists.
struct PairsRecord {
    std::string complex_id;
    std::vector<std::string> ligand_chains;
    std::vector<std::string> receptor_chains;
};

// CSV schema: `complex_id,ligand_chains,receptor_chains` with chain ids
// separated by ';' inside a cell (e.g. "1ABC,B;D,A"). Chain sets per complex
// must be non-empty and disjoint.
std::vector<PairsRecord> parse_pairs_csv(const std::string& text);
std::vector<PairsRecord> load_pairs_csv(const std::string& path);

}  // namespace affikd::bio

#endif
