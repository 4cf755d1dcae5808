#ifndef AFFIKD_TRAIN_SCALER_HPP
#define AFFIKD_TRAIN_SCALER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "affikd/bio/feature_table.hpp"

namespace affikd::train {

// Per-column z-score standardization. Constant columns keep std = 1 so they
// pass through as zeros; the affected column indices are recorded so callers
// can warn.
struct Scaler {
    std::vector<double> mean;
    std::vector<double> std_dev;           // entries > 0
    std::vector<std::size_t> constant_columns;

    std::vector<double> transform(std::span<const double> row) const;
};

// Mean/std over the given row subset (population std). Targets are never
// scaled; this applies to feature tables only.
Scaler fit_scaler(const bio::FeatureTable& table, const std::vector<std::size_t>& rows);
Scaler fit_scaler(const bio::FeatureTable& table);  // all rows

bio::FeatureTable apply_scaler(const Scaler& scaler, const bio::FeatureTable& table);

}  // namespace affikd::train

#endif
