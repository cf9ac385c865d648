#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "smoothbench/error.hpp"

namespace smoothbench {

/// A uniformly sampled sequence of finite values on integer positions
/// 0..n-1. Instances are immutable once constructed; they can be shared
/// freely across threads.
class Series {
public:
    /// Checks length (>= 2) and finiteness of every sample. Throws
    /// EmptyOrTooShort or NonFinite (message carries the offending index).
    static Series validate(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::span<const double> view() const noexcept { return values_; }

    double front() const noexcept { return values_.front(); }
    double back() const noexcept { return values_.back(); }

    bool operator==(const Series& other) const noexcept { return values_ == other.values_; }

private:
    explicit Series(std::vector<double> values) : values_(std::move(values)) {}

    std::vector<double> values_;
};

/// Retained samples of a subsampled series, ordered by index. The first
/// point is always index 0 and the last index n-1 of the source series.
struct PointSet {
    struct Point {
        std::size_t index;
        double value;
    };

    std::vector<Point> points;

    /// Builds a PointSet from sorted, deduplicated indices into `source`.
    /// Indices must start at 0 and end at source.size()-1.
    static PointSet from_indices(const Series& source, const std::vector<std::size_t>& indices);

    std::size_t size() const noexcept { return points.size(); }
};

/// Reconstructs a full-length series from retained points by linear
/// interpolation. Retained values are reproduced exactly. Throws
/// GridMismatch when the point set does not span indices 0..n-1.
Series resample_to_grid(const PointSet& ps, std::size_t n);

/// Convenience passthrough for the validation entry point.
inline Series validate(std::vector<double> values) { return Series::validate(std::move(values)); }

/// Population mean.
double mean_of(std::span<const double> x);

/// Population standard deviation (divides by n).
double population_sd(std::span<const double> x);

} // namespace smoothbench
