#include "affikd/bio/fasta.hpp"

#include <cctype>
#include <sstream>

#include "affikd/error.hpp"

namespace affikd::bio {

std::vector<ProteinChain> parse_fasta(const std::string& text) {
    if (text.empty()) throw ParseError("fasta: empty input");

    std::vector<ProteinChain> chains;
    std::istringstream in(text);
    std::string line;
    bool seen_header = false;
    std::string current_header;

    auto finish_chain = [&]() {
        if (seen_header && chains.back().sequence.empty())
            throw ParseError("fasta: empty sequence under header '" + current_header + "'");
    };

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            finish_chain();
            std::string header = line.substr(1);
            std::istringstream hs(header);
            std::string id;
            hs >> id;
            chains.push_back(ProteinChain{id, {}});
            seen_header = true;
            current_header = header;
        } else {
            if (!seen_header)
                throw ParseError("fasta: sequence data before any '>' header");
            for (char c : line) {
                if (std::isspace(static_cast<unsigned char>(c))) continue;
                chains.back().sequence.push_back(
                    from_one_letter(static_cast<char>(std::toupper(static_cast<unsigned char>(c)))));
            }
        }
    }
    if (!seen_header) throw ParseError("fasta: no '>' header found");
    finish_chain();
    return chains;
}

std::string write_fasta(const std::vector<ProteinChain>& chains) {
    std::string out;
    for (const auto& c : chains) {
        out += ">";
        out += c.chain_id;
        out += "\n";
        out += c.to_string();
        out += "\n";
    }
    return out;
}

}  // namespace affikd::bio
