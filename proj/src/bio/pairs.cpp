#include "affikd/bio/pairs.hpp"

#include <sstream>
#include <unordered_set>

#include "affikd/error.hpp"
#include "affikd/fsio.hpp"
#include "affikd/strings.hpp"

namespace affikd::bio {

namespace {

std::vector<std::string> chain_list(std::string_view cell) {
    std::vector<std::string> out;
    for (const auto& part : split(cell, ';')) {
        auto t = trim(part);
        if (!t.empty()) out.emplace_back(t);
    }
    return out;
}

}  // namespace

std::vector<PairsRecord> parse_pairs_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<PairsRecord> out;
    std::unordered_set<std::string> seen;
    bool header_done = false;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        auto cells = split(line, ',');
        if (!header_done) {
            if (cells.size() < 3 || trim(cells[0]) != "complex_id" ||
                trim(cells[1]) != "ligand_chains" || trim(cells[2]) != "receptor_chains")
                throw ParseError("pairs csv: header must be complex_id,ligand_chains,receptor_chains");
            header_done = true;
            continue;
        }
        ++row;
        if (cells.size() < 3)
            throw ParseError("pairs csv: row " + std::to_string(row) + " needs 3 columns");
        PairsRecord rec;
        rec.complex_id = std::string(trim(cells[0]));
        rec.ligand_chains = chain_list(cells[1]);
        rec.receptor_chains = chain_list(cells[2]);
        if (!seen.insert(rec.complex_id).second)
            throw ValidationError("pairs csv: duplicate complex_id '" + rec.complex_id + "'");
        if (rec.ligand_chains.empty() || rec.receptor_chains.empty())
            throw ValidationError("pairs csv: complex '" + rec.complex_id +
                                  "' has an empty chain list");
        for (const auto& lc : rec.ligand_chains)
            for (const auto& rc : rec.receptor_chains)
                if (lc == rc)
                    throw ValidationError("pairs csv: complex '" + rec.complex_id +
                                          "' lists chain '" + lc + "' on both sides");
        out.push_back(std::move(rec));
    }
    if (!header_done) throw ParseError("pairs csv: empty file");
    return out;
}

std::vector<PairsRecord> load_pairs_csv(const std::string& path) {
    try {
        return parse_pairs_csv(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

}  // namespace affikd::bio
