#pragma once

#include <vector>

#include "afmlab/model.hpp"

namespace afmlab {

struct Spectrum {
    std::vector<double> eigenvalues; // descending
    double zero_tolerance = 0.0;     // band below which an eigenvalue counts as zero

    int positive_count() const;
    int negative_count() const;
    bool has_near_zero() const; // anything within 10x of the zero band — worth flagging
};

// Eigenvalues by cyclic Jacobi rotations. Converged when the off-diagonal
// Frobenius mass drops below 1e-12 times the full Frobenius norm; gives up
// (NumericalFailure) after 100 sweeps.
Spectrum eigenvalues(const WeightedModel& m);

struct AfmClassification {
    bool antiferromagnetic = false; // exactly one eigenvalue above the zero band
    Spectrum spectrum;
};

AfmClassification classify_antiferromagnetic(const WeightedModel& m);

// Two-spin hard-core model blown up to realize fugacity r/p through plain
// homomorphism counting: r pairwise-incompatible "occupied" spins (the
// leading r x r zero block, diagonal included) followed by p looped spins
// compatible with everything. p + r spins in total.
// Satisfies hom(G, .) = p^n * Z_G(r/p) for every graph G on n vertices.
WeightedModel blow_up_hardcore(int p, int r);

// Complete graph on q+1 spins with one loop added at spin 0:
// hom(G, .) equals the q-colour semiproper partition function at all-ones.
WeightedModel looped_clique(int q);

enum class WalkKind { path_edges, cycle };

// hom(P_len, m) = 1^T m^len 1  (len counts edges, len >= 1)
// hom(C_len, m) = tr(m^len)    (len >= 3)
// Computed directly from matrix powers.
double walk_homomorphisms(WalkKind kind, int length, const WeightedModel& m);

} // namespace afmlab
