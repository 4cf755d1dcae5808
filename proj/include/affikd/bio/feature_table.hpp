#ifndef AFFIKD_BIO_FEATURE_TABLE_HPP
#define AFFIKD_BIO_FEATURE_TABLE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace affikd::bio {

// Aligned matrix of complex ids x descriptor values. Row order always matches
// input order; every row has identical width.
struct FeatureTable {
    std::string descriptor;  // tag such as "KMER", "NIRP"; empty if unknown
    std::vector<std::string> ids;
    std::vector<std::vector<double>> rows;

    int dim() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
    std::size_t size() const { return ids.size(); }

    // Row subset in the given order; keeps the descriptor tag.
    FeatureTable subset(const std::vector<std::size_t>& row_indices) const;
    std::optional<std::size_t> index_of(const std::string& id) const;
};

struct LabelRecord {
    std::string complex_id;
    double delta_g = 0;  // kcal/mol
    std::optional<double> ph;
    std::optional<double> temperature;  // Celsius
    std::optional<std::string> method;
};

struct LabeledCorpus {
    std::vector<LabelRecord> records;

    std::optional<std::size_t> index_of(const std::string& id) const;
};

// CSV schema: `complex_id,f0,f1,...` with a mandatory header row. Throws on
// ragged rows (with row index), duplicate ids, non-numeric cells (with cell
// address), and on width != expected_dim when given.
FeatureTable parse_descriptor_csv(const std::string& text,
                                  std::optional<int> expected_dim = std::nullopt);
FeatureTable load_descriptor_csv(const std::string& path,
                                 std::optional<int> expected_dim = std::nullopt);

// CSV schema: `complex_id,delta_g[,ph,temperature,method]`, delta_g in
// kcal/mol. Missing or non-finite delta_g is an error; metadata columns are
// optional and may be empty per cell.
LabeledCorpus parse_labels_csv(const std::string& text);
LabeledCorpus load_labels_csv(const std::string& path);

std::string feature_csv_string(const FeatureTable& table);
void save_feature_csv(const FeatureTable& table, const std::string& path);

}  // namespace affikd::bio

#endif
