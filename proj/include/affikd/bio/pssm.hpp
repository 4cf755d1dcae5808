#ifndef AFFIKD_BIO_PSSM_HPP
#define AFFIKD_BIO_PSSM_HPP

#include <string>
#include <vector>

namespace affikd::bio {

// Position-specific scoring matrix: one row of 20 substitution scores per
// sequence position. Columns keep the order of the source file (PSI-BLAST
// prints A R N D C Q E G H I L K M F P S T W Y V); the only downstream use is
// a column-wise mean, which is order-agnostic.
struct PssmProfile {
    int sequence_length = 0;
    std::vector<std::vector<int>> scores;  // sequence_length x 20
};

// Parses the PSI-BLAST ASCII PSSM layout: header lines, a score block of
// rows `pos aa s1..s20 p1..p20 [stats]`, trailing statistics. Keeps the
// first 20 score columns; the 20 weighted-percentage columns and per-row
// statistics are ignored. Throws ParseError if a score-block row does not
// carry exactly 40 integer columns.
PssmProfile parse_pssm(const std::string& text);

}  // namespace affikd::bio

#endif
