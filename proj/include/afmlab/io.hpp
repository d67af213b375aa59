#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "afmlab/graph.hpp"
#include "afmlab/model.hpp"
#include "afmlab/partition.hpp"
#include "afmlab/rational.hpp"
#include "afmlab/verify.hpp"

namespace afmlab {

// Graph file: '#' comments, one 'n <count>' line, then 'e <u> <v>' lines.
SimpleGraph parse_graph_file(const std::string& path);

// Model file: 'q <count>' then q rows of q weights. Entries may differ from
// their transpose by at most 1e-12 (then symmetrized); beyond that is an error.
WeightedModel parse_model_file(const std::string& path);

// One activity per line, decimal or p/q form; exact rationals.
std::vector<Rational> parse_activity_file(const std::string& path);

// q rows (colours) by n columns (vertices); shape inferred from the rows.
ActivityMatrix<Rational> parse_activity_matrix_file(const std::string& path);

enum class ReportFormat { json, tsv };

// %.17g — shortest round-trippable; non-finite values by name (inf/-inf/nan)
std::string format_double(double v);

std::string tsv_header();
std::string serialize_report(const VerificationReport& r, ReportFormat f);

// Accumulates serialized records plus the closing summary line and overall
// pass/fail (only asserted records count toward the exit status).
class ReportStream {
public:
    explicit ReportStream(ReportFormat f) : format_(f) {}

    void add(const VerificationReport& r);
    void add(const std::vector<VerificationReport>& rs);
    void finish(); // appends the summary record

    const std::string& text() const { return out_; }
    bool ok() const { return failures_ == 0; }

private:
    ReportFormat format_;
    std::string out_;
    std::uint64_t records_ = 0, failures_ = 0;
    double min_slack_ = 0.0;
    bool any_slack_ = false, finished_ = false;
};

// Explorer output as report records: up to ten worst witnesses then a summary.
std::vector<VerificationReport> exploration_reports(const ExplorationSummary& s);

} // namespace afmlab
