#include "afmlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace afmlab {

int Spectrum::positive_count() const {
    int c = 0;
    for (double v : eigenvalues)
        if (v > zero_tolerance) ++c;
    return c;
}

int Spectrum::negative_count() const {
    int c = 0;
    for (double v : eigenvalues)
        if (v < -zero_tolerance) ++c;
    return c;
}

bool Spectrum::has_near_zero() const {
    for (double v : eigenvalues)
        if (std::fabs(v) < 10.0 * zero_tolerance) return true;
    return false;
}

namespace {

double off_diagonal_sq(const std::vector<double>& a, int q) {
    double s = 0.0;
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            if (i != j) s += a[std::size_t(i) * std::size_t(q) + std::size_t(j)] *
                             a[std::size_t(i) * std::size_t(q) + std::size_t(j)];
    return s;
}

} // namespace

Spectrum eigenvalues(const WeightedModel& m) {
    const int q = m.spin_count();
    std::vector<double> a = m.flat();
    auto at = [&](int i, int j) -> double& {
        return a[std::size_t(i) * std::size_t(q) + std::size_t(j)];
    };

    double fro_sq = 0.0;
    for (double v : a) fro_sq += v * v;
    const double off_target = 1e-24 * fro_sq; // (1e-12 * frobenius)^2

    if (q > 1 && fro_sq > 0.0) {
        bool converged = off_diagonal_sq(a, q) <= off_target;
        int sweep = 0;
        while (!converged) {
            if (++sweep > 100)
                throw NumericalFailure("Jacobi eigensolver did not converge in 100 sweeps");
            for (int p = 0; p < q - 1; ++p)
                for (int r = p + 1; r < q; ++r) {
                    double apr = at(p, r);
                    if (apr == 0.0) continue;
                    double app = at(p, p), arr = at(r, r);
                    double theta = (arr - app) / (2.0 * apr);
                    double t = (theta >= 0.0 ? 1.0 : -1.0) /
                               (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                    double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                    for (int k = 0; k < q; ++k) {
                        double akp = at(k, p), akr = at(k, r);
                        at(k, p) = c * akp - s * akr;
                        at(k, r) = s * akp + c * akr;
                    }
                    for (int k = 0; k < q; ++k) {
                        double apk = at(p, k), ark = at(r, k);
                        at(p, k) = c * apk - s * ark;
                        at(r, k) = s * apk + c * ark;
                    }
                }
            converged = off_diagonal_sq(a, q) <= off_target;
        }
    }

    Spectrum spec;
    spec.eigenvalues.resize(std::size_t(q));
    for (int i = 0; i < q; ++i) spec.eigenvalues[std::size_t(i)] = at(i, i);
    std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end(), std::greater<>());
    spec.zero_tolerance = 1e-10 * q * m.max_abs_entry();

    // sanity: rotations preserve trace and Frobenius norm
    double tr_in = 0.0, tr_out = 0.0, fro_out = 0.0;
    for (int i = 0; i < q; ++i) tr_in += m.at(i, i);
    for (double v : spec.eigenvalues) {
        tr_out += v;
        fro_out += v * v;
    }
    double scale = std::max(1.0, fro_sq);
    if (std::fabs(tr_in - tr_out) > 1e-9 * std::max(1.0, std::fabs(tr_in)) ||
        std::fabs(fro_sq - fro_out) > 1e-9 * scale)
        throw NumericalFailure("eigenvalue invariants (trace/Frobenius) drifted");

    return spec;
}

AfmClassification classify_antiferromagnetic(const WeightedModel& m) {
    AfmClassification out;
    out.spectrum = eigenvalues(m);
    out.antiferromagnetic = out.spectrum.positive_count() == 1;
    return out;
}

WeightedModel blow_up_hardcore(int p, int r) {
    if (p < 1 || r < 1) throw InvalidParameter("blow-up needs p >= 1 and r >= 1");
    if (p + r > kMaxSpins) throw TooLarge("blow-up would exceed the spin limit");
    const int q = p + r;
    std::vector<double> w(std::size_t(q) * std::size_t(q), 1.0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) w[std::size_t(i) * std::size_t(q) + std::size_t(j)] = 0.0;
    return WeightedModel::from_flat(q, std::move(w));
}

WeightedModel looped_clique(int q) {
    if (q < 1) throw InvalidParameter("looped clique needs q >= 1");
    if (q + 1 > kMaxSpins) throw TooLarge("looped clique would exceed the spin limit");
    int n = q + 1;
    std::vector<double> w(std::size_t(n) * std::size_t(n), 1.0);
    for (int i = 1; i < n; ++i) w[std::size_t(i) * std::size_t(n) + std::size_t(i)] = 0.0;
    return WeightedModel::from_flat(n, std::move(w));
}

double walk_homomorphisms(WalkKind kind, int length, const WeightedModel& m) {
    const int q = m.spin_count();
    if (kind == WalkKind::path_edges) {
        if (length < 0) throw InvalidParameter("path length must be >= 0");
        std::vector<double> u(std::size_t(q), 1.0);
        for (int step = 0; step < length; ++step) {
            std::vector<double> next(std::size_t(q), 0.0);
            for (int i = 0; i < q; ++i)
                for (int j = 0; j < q; ++j) next[std::size_t(i)] += m.at(i, j) * u[std::size_t(j)];
            u.swap(next);
        }
        double total = 0.0;
        for (double v : u) total += v;
        return total;
    }
    if (length < 3) throw InvalidParameter("cycle length must be >= 3");
    std::vector<double> pw = m.flat();
    for (int step = 1; step < length; ++step) {
        std::vector<double> next(std::size_t(q) * std::size_t(q), 0.0);
        for (int i = 0; i < q; ++i)
            for (int k = 0; k < q; ++k) {
                double mik = m.at(i, k);
                if (mik == 0.0) continue;
                for (int j = 0; j < q; ++j)
                    next[std::size_t(i) * std::size_t(q) + std::size_t(j)] +=
                        mik * pw[std::size_t(k) * std::size_t(q) + std::size_t(j)];
            }
        pw.swap(next);
    }
    double tr = 0.0;
    for (int i = 0; i < q; ++i) tr += pw[std::size_t(i) * std::size_t(q) + std::size_t(i)];
    return tr;
}

} // namespace afmlab
