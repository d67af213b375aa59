#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "afmlab/bounds.hpp"
#include "afmlab/graph.hpp"
#include "afmlab/model.hpp"
#include "afmlab/partition.hpp"
#include "afmlab/spectral.hpp"

namespace afmlab {

struct NotAntiferromagnetic : Error {
    using Error::Error;
};

constexpr std::uint64_t kDefaultSeed = 0xA1E7;

struct VerificationReport {
    std::string check;
    double lhs_log = 0.0;
    double rhs_log = 0.0;
    double slack = 0.0; // lhs_log - rhs_log
    bool pass = true;   // slack >= -tolerance
    bool asserted = true; // informational reports don't drive exit codes
    std::string witness; // enough parameters to re-run this one check
    std::vector<std::string> flags;
};

VerificationReport make_report(std::string check, double lhs_log, double rhs_log,
                               std::string witness, std::vector<std::string> flags = {},
                               double tolerance = kSlackTolerance, bool asserted = true);

// ---- single-instance checkers ----

VerificationReport check_thm_main(const SimpleGraph& g, std::span<const double> acts,
                                  double tolerance = kSlackTolerance);

enum class ComponentLabel { zero, constant_clique, strict };

struct EqualityClassification {
    std::vector<ComponentLabel> labels; // one per connected component
    double slack = 0.0;                 // main-bound slack
    bool any_strict = false;
    bool consistent = true; // slack <= 1e-10 iff no strict component
};

EqualityClassification classify_equality(const SimpleGraph& g, std::span<const double> acts);

VerificationReport check_thm_2spin(const SimpleGraph& g, double lambda, double alpha,
                                   double tolerance = kSlackTolerance);

// main two-colour bound; when max degree is 1 an extra per-edge report for the
// degree-one branch inequality is appended
std::vector<VerificationReport> check_thm_semiproper(const SimpleGraph& g,
                                                     std::span<const double> lam,
                                                     std::span<const double> mu,
                                                     double tolerance = kSlackTolerance);

// main inequality plus its two proof steps (per-degree component bound, AM-GM
// step); lambda0 is the distinguished activity, lambdas has delta entries
std::vector<VerificationReport> check_lemma_key(int delta, std::span<const int> ds,
                                                double lambda0, std::span<const double> lambdas,
                                                double tolerance = kSlackTolerance);

VerificationReport check_deg2_conjecture(WalkKind kind, int length, const WeightedModel& model,
                                         double tolerance = kSlackTolerance);

// weak bound (asserted) followed by the conjectured stronger bound (informational)
std::vector<VerificationReport> check_weak_semiproper(const SimpleGraph& g,
                                                      const ActivityMatrix<double>& acts,
                                                      double tolerance = kSlackTolerance);

// exact rational equality of the two colouring-count routes; slack is an
// exactness flag: 0 on equality, -1 on mismatch
VerificationReport check_bijection(const SimpleGraph& g, const ActivityMatrix<Rational>& acts);

// occupancy-fraction lower bound; asserted for regular graphs, reported-only
// otherwise (open conjecture in the irregular case)
VerificationReport check_davies_kang(const SimpleGraph& g, double lambda,
                                     double tolerance = kSlackTolerance);

// ---- sweeps (each returns one report per sub-check, min slack over the sweep) ----

std::vector<VerificationReport> sweep_lemma_key(int delta_max, std::uint64_t points,
                                                std::uint64_t seed,
                                                double tolerance = kSlackTolerance);

std::vector<VerificationReport> sweep_chain(int d_max, int grid_points,
                                            double tolerance = 1e-10);

std::vector<VerificationReport> sweep_dual_set(int delta_max, int samples, std::uint64_t seed,
                                               double tolerance = kSlackTolerance);

std::vector<VerificationReport> sweep_basic_ineq(int d_max, int grid_points,
                                                 double tolerance = 1e-12);

VerificationReport sweep_negative_fugacity(int delta, std::span<const int> ds, double step);

// ---- randomized counterexample hunt ----

struct ExplorerConfig {
    std::uint64_t trials = 1000;
    std::uint64_t seed = kDefaultSeed;
    int n_max = 10; // <= 10
    int q_max = 3;  // <= 5
};

struct ExplorationWitness {
    std::uint64_t seed = 0;
    std::uint64_t trial_index = 0;
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    int q = 0;
    std::vector<double> weights; // row-major q x q
    double slack = 0.0;
};

struct ExplorationSummary {
    ExplorerConfig config;
    double min_slack = 0.0; // over non-degenerate trials; +inf if all degenerate
    std::vector<ExplorationWitness> worst; // up to 10, ascending slack
    std::uint64_t near_tight = 0;          // slack < 1e-6
    std::uint64_t degenerate = 0;          // clique bound vanished, nothing to compare
    std::uint64_t afm_rejections = 0;
    std::uint64_t zero_row_exclusions = 0;
};

ExplorationSummary explore_conjecture(const ExplorerConfig& cfg);

// re-run a single explorer trial; reproduces the recorded slack bit-for-bit
ExplorationWitness explore_single_trial(std::uint64_t seed, std::uint64_t trial_index,
                                        const ExplorerConfig& cfg);

} // namespace afmlab
