#include "smoothbench/series.hpp"

#include <cmath>
#include <string>

namespace smoothbench {

Series Series::validate(std::vector<double> values) {
    if (values.size() < 2) {
        fail(ErrorCode::EmptyOrTooShort, "need at least 2 samples, got " + std::to_string(values.size()));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            fail(ErrorCode::NonFinite, "non-finite sample at index " + std::to_string(i));
        }
    }
    return Series(std::move(values));
}

PointSet PointSet::from_indices(const Series& source, const std::vector<std::size_t>& indices) {
    PointSet ps;
    ps.points.reserve(indices.size());
    std::size_t previous = 0;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        const std::size_t idx = indices[k];
        if (k == 0) {
            if (idx != 0) fail(ErrorCode::GridMismatch, "first retained index must be 0");
        } else if (idx <= previous) {
            fail(ErrorCode::GridMismatch, "retained indices must be strictly increasing");
        }
        if (idx >= source.size()) fail(ErrorCode::GridMismatch, "retained index out of range");
        ps.points.push_back({idx, source[idx]});
        previous = idx;
    }
    if (ps.points.empty() || ps.points.back().index != source.size() - 1) {
        fail(ErrorCode::GridMismatch, "last retained index must be n-1");
    }
    return ps;
}

Series resample_to_grid(const PointSet& ps, std::size_t n) {
    if (ps.points.empty() || ps.points.front().index != 0 || ps.points.back().index != n - 1) {
        fail(ErrorCode::GridMismatch, "point set must span indices 0..n-1");
    }
    std::vector<double> out(n, 0.0);
    for (std::size_t k = 0; k + 1 < ps.points.size(); ++k) {
        const auto& left = ps.points[k];
        const auto& right = ps.points[k + 1];
        out[left.index] = left.value;
        const double span = static_cast<double>(right.index - left.index);
        for (std::size_t i = left.index + 1; i < right.index; ++i) {
            const double t = static_cast<double>(i - left.index) / span;
            out[i] = left.value + t * (right.value - left.value);
        }
    }
    out[n - 1] = ps.points.back().value;
    return Series::validate(std::move(out));
}

double mean_of(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += v;
    return sum / static_cast<double>(x.size());
}

double population_sd(std::span<const double> x) {
    const double m = mean_of(x);
    double ss = 0.0;
    for (double v : x) {
        const double d = v - m;
        ss += d * d;
    }
    return std::sqrt(ss / static_cast<double>(x.size()));
}

} // namespace smoothbench
