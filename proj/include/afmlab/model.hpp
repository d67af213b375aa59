#pragma once

#include <vector>

#include "afmlab/errors.hpp"

namespace afmlab {

constexpr int kMaxSpins = 32;

// Symmetric q x q matrix of nonnegative vertex-pair weights ("spin model").
class WeightedModel {
public:
    WeightedModel() = default;

    // `flat` is row-major q*q; must be exactly symmetric and nonnegative
    static WeightedModel from_flat(int q, std::vector<double> flat);

    int spin_count() const { return q_; }
    double at(int i, int j) const { return w_[std::size_t(i) * std::size_t(q_) + std::size_t(j)]; }
    void set(int i, int j, double v) {
        w_[std::size_t(i) * std::size_t(q_) + std::size_t(j)] = v;
        w_[std::size_t(j) * std::size_t(q_) + std::size_t(i)] = v;
    }
    const std::vector<double>& flat() const { return w_; }

    double max_abs_entry() const;
    bool has_zero_row() const;

private:
    int q_ = 0;
    std::vector<double> w_;
};

} // namespace afmlab
