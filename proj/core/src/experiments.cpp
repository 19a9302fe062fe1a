#include "gab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace gab {

namespace {

constexpr double kTolerance = 1e-9;

void mean_std(std::span<const double> xs, double& mean, double& stddev) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    mean = sum / static_cast<double>(xs.size());
    double sq = 0.0;
    for (double x : xs) sq += (x - mean) * (x - mean);
    stddev = std::sqrt(sq / static_cast<double>(xs.size()));
}

}  // namespace

BatchStats aggregate(std::span<const std::vector<TraceRecord>> runs) {
    if (runs.empty()) throw InvalidInput("cannot aggregate zero runs");
    std::size_t length = 0;
    for (const auto& r : runs) {
        if (r.empty()) throw InvalidInput("cannot aggregate an empty trace");
        length = std::max(length, r.size());
    }
    BatchStats s;
    for (const auto& r : runs) s.forward_filled |= r.size() < length;
    const std::size_t k = runs.size();
    for (auto* v : {&s.mean_fitness, &s.std_fitness, &s.mean_fevals, &s.std_fevals, &s.mean_time, &s.std_time})
        v->resize(length);

    std::vector<double> fit(k), fev(k), tim(k);
    for (std::size_t i = 0; i < length; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const auto& rec = runs[j][std::min(i, runs[j].size() - 1)];
            fit[j] = rec.fitness;
            fev[j] = static_cast<double>(rec.fevals);
            tim[j] = rec.time_s;
        }
        mean_std(fit, s.mean_fitness[i], s.std_fitness[i]);
        mean_std(fev, s.mean_fevals[i], s.std_fevals[i]);
        mean_std(tim, s.mean_time[i], s.std_time[i]);
    }
    return s;
}

ConvergenceReport detect_convergence(std::span<const double> mean_curve, double target) {
    if (mean_curve.empty()) throw InvalidInput("cannot detect convergence on an empty curve");
    ConvergenceReport report;
    report.target = target;
    // Scan backwards keeping the suffix minimum; the earliest qualifying index wins.
    double suffix_min = mean_curve.back();
    for (std::size_t i = mean_curve.size(); i-- > 0;) {
        suffix_min = std::min(suffix_min, mean_curve[i]);
        if (mean_curve[i] >= target - kTolerance && suffix_min >= target - kConvergenceSlack - kTolerance)
            report.converged_at = i;
        if (suffix_min >= target - kSemiConvergenceSlack - kTolerance) report.semi_converged_at = i;
    }
    return report;
}

ElbowPoint detect_elbow(std::span<const double> mean_curve) {
    if (mean_curve.size() < 3) throw InvalidInput("elbow detection needs at least three points");
    const auto [lo_it, hi_it] = std::minmax_element(mean_curve.begin(), mean_curve.end());
    const double lo = *lo_it;
    const double range = *hi_it - lo;
    ElbowPoint p;
    if (range <= 0.0) {
        p.fitness = mean_curve.front();
        p.degenerate = true;
        return p;
    }
    const double last = static_cast<double>(mean_curve.size() - 1);
    const double y0 = (mean_curve.front() - lo) / range;
    const double dy = (mean_curve.back() - lo) / range - y0;
    const double norm = std::sqrt(1.0 + dy * dy);
    double best = -1.0;
    for (std::size_t i = 0; i < mean_curve.size(); ++i) {
        const double x = static_cast<double>(i) / last;
        const double y = (mean_curve[i] - lo) / range;
        const double d = std::abs(dy * x - (y - y0)) / norm;
        if (d > best + kTolerance) {
            best = d;
            p.index = i;
        }
    }
    if (best <= kTolerance) p.index = 0;
    p.degenerate = best <= kTolerance;
    p.fitness = mean_curve[p.index];
    return p;
}

ElbowPoint detect_elbow(const BatchStats& stats) {
    ElbowPoint p = detect_elbow(stats.mean_fitness);
    p.std_dev = stats.std_fitness[p.index];
    return p;
}

ConvergenceSummary summarize(const BatchStats& stats, double target) {
    ConvergenceSummary s;
    s.report = detect_convergence(stats.mean_fitness, target);
    s.max_mean_fitness = *std::max_element(stats.mean_fitness.begin(), stats.mean_fitness.end());
    if (s.report.converged_at) {
        s.mean_fevals = stats.mean_fevals[*s.report.converged_at];
        s.mean_time = stats.mean_time[*s.report.converged_at];
    }
    return s;
}

GridResult rank_grid(std::vector<GridRow> rows) {
    const auto key = [](const GridRow& r) { return std::make_tuple(-r.best_fitness, r.fevals, r.iterations); };
    std::stable_sort(rows.begin(), rows.end(), [&](const GridRow& a, const GridRow& b) { return key(a) < key(b); });
    GridResult result;
    for (const auto& r : rows) {
        if (!result.winners.empty() && key(r) != key(result.winners.front())) break;
        result.winners.push_back(r);
    }
    result.rows = std::move(rows);
    return result;
}

}  // namespace gab
