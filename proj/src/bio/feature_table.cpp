#include "affikd/bio/feature_table.hpp"

#include <cmath>
#include <sstream>
#include <unordered_set>

#include "affikd/error.hpp"
#include "affikd/fsio.hpp"
#include "affikd/strings.hpp"

namespace affikd::bio {

namespace {

// Comma-separated, '.' decimal point, UTF-8, no quoting. Strips a trailing
// '\r' so CRLF files load unchanged.
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        rows.push_back(split(line, ','));
    }
    return rows;
}

}  // namespace

FeatureTable FeatureTable::subset(const std::vector<std::size_t>& row_indices) const {
    FeatureTable out;
    out.descriptor = descriptor;
    out.ids.reserve(row_indices.size());
    out.rows.reserve(row_indices.size());
    for (std::size_t i : row_indices) {
        out.ids.push_back(ids.at(i));
        out.rows.push_back(rows.at(i));
    }
    return out;
}

std::optional<std::size_t> FeatureTable::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == id) return i;
    return std::nullopt;
}

std::optional<std::size_t> LabeledCorpus::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < records.size(); ++i)
        if (records[i].complex_id == id) return i;
    return std::nullopt;
}

FeatureTable parse_descriptor_csv(const std::string& text,
                                  std::optional<int> expected_dim) {
    auto rows = csv_rows(text);
    if (rows.empty()) throw ParseError("descriptor csv: empty file");
    const auto& header = rows[0];
    if (header.empty() || trim(header[0]) != "complex_id")
        throw ParseError("descriptor csv: header must start with 'complex_id'");
    std::size_t width = header.size() - 1;
    if (width == 0) throw ParseError("descriptor csv: no feature columns");

    FeatureTable table;
    std::unordered_set<std::string> seen;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& cells = rows[r];
        if (cells.size() != header.size())
            throw ParseError("descriptor csv: ragged row " + std::to_string(r) +
                             " has " + std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(header.size()));
        std::string id{trim(cells[0])};
        if (!seen.insert(id).second)
            throw ValidationError("descriptor csv: duplicate complex_id '" + id + "'");
        std::vector<double> values(width);
        for (std::size_t c = 0; c < width; ++c) {
            if (!parse_double(cells[c + 1], values[c]) || !std::isfinite(values[c]))
                throw ParseError("descriptor csv: non-numeric cell at row " +
                                 std::to_string(r) + ", column '" +
                                 std::string(trim(header[c + 1])) + "'");
        }
        table.ids.push_back(std::move(id));
        table.rows.push_back(std::move(values));
    }

    if (expected_dim && static_cast<int>(width) != *expected_dim)
        throw ValidationError("descriptor csv: dimension mismatch: file has " +
                              std::to_string(width) + " features, expected " +
                              std::to_string(*expected_dim));
    return table;
}

LabeledCorpus parse_labels_csv(const std::string& text) {
    auto rows = csv_rows(text);
    if (rows.empty()) throw ParseError("labels csv: empty file");
    const auto& header = rows[0];
    if (header.size() < 2 || trim(header[0]) != "complex_id" || trim(header[1]) != "delta_g")
        throw ParseError("labels csv: header must start with 'complex_id,delta_g'");
    bool has_meta = header.size() >= 5;
    if (header.size() != 2 && !has_meta)
        throw ParseError("labels csv: header must be complex_id,delta_g[,ph,temperature,method]");

    LabeledCorpus corpus;
    std::unordered_set<std::string> seen;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& cells = rows[r];
        if (cells.size() < 2)
            throw ParseError("labels csv: row " + std::to_string(r) + " is missing delta_g");
        LabelRecord rec;
        rec.complex_id = std::string(trim(cells[0]));
        if (!seen.insert(rec.complex_id).second)
            throw ValidationError("labels csv: duplicate complex_id '" + rec.complex_id + "'");
        if (!parse_double(cells[1], rec.delta_g) || !std::isfinite(rec.delta_g))
            throw ParseError("labels csv: row " + std::to_string(r) +
                             ": delta_g must be a finite number, got '" +
                             std::string(trim(cells[1])) + "'");
        if (cells.size() > 2 && !trim(cells[2]).empty()) {
            double ph;
            if (!parse_double(cells[2], ph))
                throw ParseError("labels csv: row " + std::to_string(r) + ": bad ph cell");
            rec.ph = ph;
        }
        if (cells.size() > 3 && !trim(cells[3]).empty()) {
            double t;
            if (!parse_double(cells[3], t))
                throw ParseError("labels csv: row " + std::to_string(r) + ": bad temperature cell");
            rec.temperature = t;
        }
        if (cells.size() > 4 && !trim(cells[4]).empty())
            rec.method = std::string(trim(cells[4]));
        corpus.records.push_back(std::move(rec));
    }
    return corpus;
}

std::string feature_csv_string(const FeatureTable& table) {
    std::string out = "complex_id";
    for (int c = 0; c < table.dim(); ++c) out += ",f" + std::to_string(c);
    out += "\n";
    for (std::size_t r = 0; r < table.size(); ++r) {
        out += table.ids[r];
        for (double v : table.rows[r]) {
            out += ",";
            out += format_double(v);
        }
        out += "\n";
    }
    return out;
}

FeatureTable load_descriptor_csv(const std::string& path, std::optional<int> expected_dim) {
    try {
        return parse_descriptor_csv(read_file(path), expected_dim);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

LabeledCorpus load_labels_csv(const std::string& path) {
    try {
        return parse_labels_csv(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void save_feature_csv(const FeatureTable& table, const std::string& path) {
    write_file_atomic(path, feature_csv_string(table));
}

}  // namespace affikd::bio
