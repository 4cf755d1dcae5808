#include "affikd/train/scaler.hpp"

#include <cmath>

#include "affikd/error.hpp"

namespace affikd::train {

std::vector<double> Scaler::transform(std::span<const double> row) const {
    if (row.size() != mean.size())
        throw ValidationError("scaler: row width " + std::to_string(row.size()) +
                              " != fitted width " + std::to_string(mean.size()));
    std::vector<double> out(row.size());
    for (std::size_t c = 0; c < row.size(); ++c)
        out[c] = (row[c] - mean[c]) / std_dev[c];
    return out;
}

Scaler fit_scaler(const bio::FeatureTable& table, const std::vector<std::size_t>& rows) {
    if (rows.empty()) throw ValidationError("scaler: empty row subset");
    const std::size_t dim = static_cast<std::size_t>(table.dim());
    const double n = static_cast<double>(rows.size());

    Scaler scaler;
    scaler.mean.assign(dim, 0.0);
    scaler.std_dev.assign(dim, 0.0);
    for (std::size_t r : rows)
        for (std::size_t c = 0; c < dim; ++c) scaler.mean[c] += table.rows.at(r)[c];
    for (double& m : scaler.mean) m /= n;
    for (std::size_t r : rows)
        for (std::size_t c = 0; c < dim; ++c) {
            double d = table.rows[r][c] - scaler.mean[c];
            scaler.std_dev[c] += d * d;
        }
    for (std::size_t c = 0; c < dim; ++c) {
        scaler.std_dev[c] = std::sqrt(scaler.std_dev[c] / n);
        if (scaler.std_dev[c] == 0.0) {
            scaler.std_dev[c] = 1.0;
            scaler.constant_columns.push_back(c);
        }
    }
    return scaler;
}

Scaler fit_scaler(const bio::FeatureTable& table) {
    std::vector<std::size_t> rows(table.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return fit_scaler(table, rows);
}

bio::FeatureTable apply_scaler(const Scaler& scaler, const bio::FeatureTable& table) {
    bio::FeatureTable out;
    out.descriptor = table.descriptor;
    out.ids = table.ids;
    out.rows.reserve(table.rows.size());
    for (const auto& row : table.rows) out.rows.push_back(scaler.transform(row));
    return out;
}

}  // namespace affikd::train
