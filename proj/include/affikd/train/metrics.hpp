#ifndef AFFIKD_TRAIN_METRICS_HPP
#define AFFIKD_TRAIN_METRICS_HPP

#include <span>
#include <string>
#include <vector>

namespace affikd::train {

// Sample Pearson correlation. Throws ValidationError (never returns NaN)
// when either input has zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

// Two-tailed p-value of r under H0: rho = 0, via t = r*sqrt((n-2)/(1-r^2))
// against Student's t with n-2 df. Exactly 0 for |r| = 1; needs n >= 3.
double pearson_pvalue(double r, int n);

// I_x(a, b), evaluated by continued fraction; |error| < 1e-10.
double regularized_incomplete_beta(double x, double a, double b);

double rmse(std::span<const double> x, std::span<const double> y);
double mae(std::span<const double> x, std::span<const double> y);

struct BlandAltman {
    double mean_bias = 0;
    double loa_low = 0;   // mean_bias - 1.96 * sd(errors)
    double loa_high = 0;  // mean_bias + 1.96 * sd(errors)
};

// Over errors e = y_true - y_pred, with sample sd (n-1).
BlandAltman bland_altman(std::span<const double> y_true, std::span<const double> y_pred);

struct RunMetrics {
    double pearson_r = 0;
    double p_value = 0;
    double rmse = 0;  // kcal/mol
    double mae = 0;   // kcal/mol
    BlandAltman ba;
};

RunMetrics compute_run_metrics(std::span<const double> y_true,
                               std::span<const double> y_pred);

struct PredictionRecord {
    std::string complex_id;
    int run = 0;
    double y_true = 0;
    double y_pred = 0;
};

struct MetricsReport {
    double pearson_r = 0;
    double p_value = 0;
    double rmse = 0;
    double mae = 0;
    BlandAltman bland_altman;
    std::vector<RunMetrics> per_run;
    std::vector<PredictionRecord> per_complex_predictions;
    int n_complexes = 0;
    int runs_averaged = 0;
};

// Metric-wise average of per-run values.
MetricsReport aggregate_runs(const std::vector<RunMetrics>& runs,
                             std::vector<PredictionRecord> predictions,
                             int n_complexes);

std::string metrics_to_json(const MetricsReport& report);

// `complex_id,run,y_true,y_pred,abs_error` -- plot-ready data for scatter,
// Bland-Altman, error-distribution, residual, and cumulative-error plots.
std::string predictions_to_csv(const std::vector<PredictionRecord>& predictions);

}  // namespace affikd::train

#endif
