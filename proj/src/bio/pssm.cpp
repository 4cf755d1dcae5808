#include "affikd/bio/pssm.hpp"

#include <cctype>
#include <sstream>

#include "affikd/error.hpp"
#include "affikd/strings.hpp"

namespace affikd::bio {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

bool is_residue_letter(const std::string& t) {
    return t.size() == 1 && std::isalpha(static_cast<unsigned char>(t[0]));
}

}  // namespace

PssmProfile parse_pssm(const std::string& text) {
    PssmProfile profile;
    std::istringstream in(text);
    std::string line;
    bool in_block = false;

    while (std::getline(in, line)) {
        auto toks = tokenize(line);
        long pos = 0;
        bool is_row = toks.size() >= 2 && parse_long(toks[0], pos) && pos > 0 &&
                      is_residue_letter(toks[1]);
        if (!is_row) {
            if (in_block) break;  // end of score block
            continue;
        }
        in_block = true;
        if (pos != profile.sequence_length + 1)
            throw ParseError("pssm: non-sequential position " + std::to_string(pos) +
                             " in score block (expected " +
                             std::to_string(profile.sequence_length + 1) + ")");

        // Integer columns are scores + weighted percentages; trailing float
        // tokens are the per-row information/weight statistics.
        std::vector<int> ints;
        for (std::size_t i = 2; i < toks.size(); ++i) {
            long v;
            if (parse_long(toks[i], v)) {
                ints.push_back(static_cast<int>(v));
                continue;
            }
            double d;
            if (!parse_double(toks[i], d))
                throw ParseError("pssm: non-numeric token '" + toks[i] +
                                 "' at position " + std::to_string(pos));
            break;  // first float token starts the trailing statistics
        }
        if (ints.size() != 40)
            throw ParseError("pssm: expected 40 numeric columns at position " +
                             std::to_string(pos) + ", got " + std::to_string(ints.size()));
        profile.scores.emplace_back(ints.begin(), ints.begin() + 20);
        ++profile.sequence_length;
    }

    if (profile.sequence_length == 0)
        throw ParseError("pssm: no score rows found");
    return profile;
}

}  // namespace affikd::bio
