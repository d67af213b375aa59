#include "afmlab/model.hpp"

#include <cmath>
#include <string>

namespace afmlab {

WeightedModel WeightedModel::from_flat(int q, std::vector<double> flat) {
    if (q < 1) throw InvalidParameter("model needs at least 1 spin");
    if (q > kMaxSpins)
        throw TooLarge("at most " + std::to_string(kMaxSpins) + " spins supported, got " +
                       std::to_string(q));
    if (flat.size() != std::size_t(q) * std::size_t(q))
        throw InvalidParameter("model matrix has wrong size");
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            double v = flat[std::size_t(i) * std::size_t(q) + std::size_t(j)];
            if (!(v >= 0.0) || std::isnan(v))
                throw NegativeWeight("weight (" + std::to_string(i) + ", " + std::to_string(j) +
                                     ") is negative or not a number");
            if (v != flat[std::size_t(j) * std::size_t(q) + std::size_t(i)])
                throw AsymmetryError("weights (" + std::to_string(i) + ", " + std::to_string(j) +
                                     ") and transpose differ");
        }
    WeightedModel m;
    m.q_ = q;
    m.w_ = std::move(flat);
    return m;
}

double WeightedModel::max_abs_entry() const {
    double best = 0.0;
    for (double v : w_) best = std::max(best, std::fabs(v));
    return best;
}

bool WeightedModel::has_zero_row() const {
    for (int i = 0; i < q_; ++i) {
        bool all_zero = true;
        for (int j = 0; j < q_; ++j)
            if (at(i, j) != 0.0) {
                all_zero = false;
                break;
            }
        if (all_zero) return true;
    }
    return false;
}

} // namespace afmlab
