#ifndef AFFIKD_BIO_FASTA_HPP
#define AFFIKD_BIO_FASTA_HPP

#include <string>
#include <vector>

#include "affikd/bio/residue.hpp"

namespace affikd::bio {

// One chain per '>' header; the first whitespace-delimited token after '>'
// becomes the chain_id. Sequence letters are uppercased, whitespace stripped,
// non-canonical letters mapped to Unknown. Throws ParseError on text with no
// '>' or on an empty sequence under a header.
std::vector<ProteinChain> parse_fasta(const std::string& text);

std::string write_fasta(const std::vector<ProteinChain>& chains);

}  // namespace affikd::bio

#endif
