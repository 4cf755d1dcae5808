#include "affikd/train/metrics.hpp"

#include <json.hpp>

#include <cmath>

#include "affikd/error.hpp"
#include "affikd/strings.hpp"

namespace affikd::train {

namespace {

void check_lengths(std::span<const double> x, std::span<const double> y,
                   const char* what) {
    if (x.size() != y.size() || x.empty())
        throw ValidationError(std::string(what) +
                              ": vectors must be non-empty and of equal length");
}

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Modified Lentz evaluation of the incomplete-beta continued fraction.
double incbeta_cf(double x, double a, double b) {
    const double tiny = 1e-300;
    const double tol = 1e-15;
    double c = 1.0;
    double d = 1.0 - (a + b) * x / (a + 1.0);
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double result = d;
    for (int m = 1; m <= 200000; ++m) {
        double md = static_cast<double>(m);
        // even term
        double numer = md * (b - md) * x / ((a + 2.0 * md - 1.0) * (a + 2.0 * md));
        d = 1.0 + numer * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + numer / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        result *= d * c;
        // odd term
        numer = -(a + md) * (a + b + md) * x / ((a + 2.0 * md) * (a + 2.0 * md + 1.0));
        d = 1.0 + numer * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + numer / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double mult = d * c;
        result *= mult;
        if (std::fabs(mult - 1.0) <= tol) break;
    }
    return result;
}

}  // namespace

double regularized_incomplete_beta(double x, double a, double b) {
    if (!(x >= 0.0 && x <= 1.0 && a > 0.0 && b > 0.0))
        throw ValidationError("regularized incomplete beta: bad arguments");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    double front = std::exp(a * std::log(x) + b * std::log(1.0 - x) - log_beta(a, b));
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * incbeta_cf(x, a, b) / a;
    return 1.0 - std::exp(b * std::log(1.0 - x) + a * std::log(x) - log_beta(a, b)) *
                     incbeta_cf(1.0 - x, b, a) / b;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    check_lengths(x, y, "pearson");
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw ValidationError("pearson: undefined correlation (zero variance input)");
    return sxy / std::sqrt(sxx * syy);
}

double pearson_pvalue(double r, int n) {
    if (n < 3) throw ValidationError("pearson p-value: need n >= 3");
    if (!(r >= -1.0 && r <= 1.0))
        throw ValidationError("pearson p-value: r outside [-1, 1]");
    if (r == 1.0 || r == -1.0) return 0.0;
    const double df = static_cast<double>(n - 2);
    double t = r * std::sqrt(df / (1.0 - r * r));
    // two-tailed: P(|T| >= |t|) = I_{df/(df+t^2)}(df/2, 1/2)
    return regularized_incomplete_beta(df / (df + t * t), df / 2.0, 0.5);
}

double rmse(std::span<const double> x, std::span<const double> y) {
    check_lengths(x, y, "rmse");
    double acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double d = x[i] - y[i];
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(x.size()));
}

double mae(std::span<const double> x, std::span<const double> y) {
    check_lengths(x, y, "mae");
    double acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::fabs(x[i] - y[i]);
    return acc / static_cast<double>(x.size());
}

BlandAltman bland_altman(std::span<const double> y_true, std::span<const double> y_pred) {
    check_lengths(y_true, y_pred, "bland-altman");
    if (y_true.size() < 2)
        throw ValidationError("bland-altman: need at least 2 points");
    const double n = static_cast<double>(y_true.size());
    double mean = 0;
    for (std::size_t i = 0; i < y_true.size(); ++i) mean += y_true[i] - y_pred[i];
    mean /= n;
    double ss = 0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        double d = (y_true[i] - y_pred[i]) - mean;
        ss += d * d;
    }
    double sd = std::sqrt(ss / (n - 1.0));
    return {mean, mean - 1.96 * sd, mean + 1.96 * sd};
}

RunMetrics compute_run_metrics(std::span<const double> y_true,
                               std::span<const double> y_pred) {
    RunMetrics m;
    m.pearson_r = pearson(y_true, y_pred);
    m.p_value = pearson_pvalue(m.pearson_r, static_cast<int>(y_true.size()));
    m.rmse = rmse(y_true, y_pred);
    m.mae = mae(y_true, y_pred);
    m.ba = bland_altman(y_true, y_pred);
    return m;
}

MetricsReport aggregate_runs(const std::vector<RunMetrics>& runs,
                             std::vector<PredictionRecord> predictions,
                             int n_complexes) {
    if (runs.empty()) throw ValidationError("aggregate runs: no runs");
    MetricsReport report;
    report.per_run = runs;
    report.per_complex_predictions = std::move(predictions);
    report.n_complexes = n_complexes;
    report.runs_averaged = static_cast<int>(runs.size());
    const double n = static_cast<double>(runs.size());
    for (const auto& r : runs) {
        report.pearson_r += r.pearson_r;
        report.p_value += r.p_value;
        report.rmse += r.rmse;
        report.mae += r.mae;
        report.bland_altman.mean_bias += r.ba.mean_bias;
        report.bland_altman.loa_low += r.ba.loa_low;
        report.bland_altman.loa_high += r.ba.loa_high;
    }
    report.pearson_r /= n;
    report.p_value /= n;
    report.rmse /= n;
    report.mae /= n;
    report.bland_altman.mean_bias /= n;
    report.bland_altman.loa_low /= n;
    report.bland_altman.loa_high /= n;
    return report;
}

std::string metrics_to_json(const MetricsReport& report) {
    using nlohmann::json;
    auto ba_json = [](const BlandAltman& ba) {
        return json{{"mean_bias", ba.mean_bias},
                    {"loa_low", ba.loa_low},
                    {"loa_high", ba.loa_high}};
    };
    json j;
    j["pearson_r"] = report.pearson_r;
    j["p_value"] = report.p_value;
    j["rmse"] = report.rmse;
    j["mae"] = report.mae;
    j["bland_altman"] = ba_json(report.bland_altman);
    j["per_run"] = json::array();
    for (std::size_t i = 0; i < report.per_run.size(); ++i) {
        const auto& r = report.per_run[i];
        j["per_run"].push_back(json{{"run", i},
                                    {"pearson_r", r.pearson_r},
                                    {"p_value", r.p_value},
                                    {"rmse", r.rmse},
                                    {"mae", r.mae},
                                    {"bland_altman", ba_json(r.ba)}});
    }
    j["n_complexes"] = report.n_complexes;
    j["n_runs"] = report.runs_averaged;
    return j.dump(2) + "\n";
}

std::string predictions_to_csv(const std::vector<PredictionRecord>& predictions) {
    std::string out = "complex_id,run,y_true,y_pred,abs_error\n";
    for (const auto& p : predictions) {
        out += p.complex_id;
        out += "," + std::to_string(p.run);
        out += "," + format_double(p.y_true);
        out += "," + format_double(p.y_pred);
        out += "," + format_double(std::fabs(p.y_true - p.y_pred));
        out += "\n";
    }
    return out;
}

}  // namespace affikd::train
