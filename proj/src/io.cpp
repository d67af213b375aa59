#include "afmlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace afmlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string at_line(int lineno) { return "line " + std::to_string(lineno) + ": "; }

// strip '#' comments and surrounding whitespace
std::string clean(const std::string& raw) {
    std::string s = raw.substr(0, raw.find('#'));
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return in;
}

} // namespace

SimpleGraph parse_graph_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::string raw;
    int lineno = 0;
    long long n = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = clean(raw);
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "n") {
            if (n >= 0) throw ParseError(at_line(lineno) + "duplicate vertex count");
            if (!(ss >> n)) throw ParseError(at_line(lineno) + "expected 'n <count>'");
            if (n < 0) throw InvalidParameter(at_line(lineno) + "vertex count must be nonnegative");
            if (n > kMaxVertices)
                throw TooLarge(at_line(lineno) + "at most " + std::to_string(kMaxVertices) +
                               " vertices supported");
        } else if (tag == "e") {
            if (n < 0) throw ParseError(at_line(lineno) + "edge listed before the 'n' line");
            long long u, v;
            if (!(ss >> u >> v)) throw ParseError(at_line(lineno) + "expected 'e <u> <v>'");
            std::string extra;
            if (ss >> extra) throw ParseError(at_line(lineno) + "trailing tokens after edge");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw VertexOutOfRange(at_line(lineno) + "edge endpoint outside [0, " +
                                       std::to_string(n) + ")");
            if (u == v) throw InvalidEdge(at_line(lineno) + "self-loops are not allowed");
            std::pair<int, int> key{int(std::min(u, v)), int(std::max(u, v))};
            if (!seen.insert(key).second)
                throw DuplicateEdge(at_line(lineno) + "edge repeated");
            edges.push_back(key);
        } else {
            throw ParseError(at_line(lineno) + "unknown directive '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError("missing 'n <count>' line in " + path);
    return SimpleGraph::from_edge_list(int(n), edges);
}

WeightedModel parse_model_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::string raw;
    int lineno = 0;
    long long q = -1;
    std::vector<double> flat;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = clean(raw);
        if (line.empty()) continue;
        std::istringstream ss(line);
        if (q < 0) {
            std::string tag;
            ss >> tag;
            if (tag != "q" || !(ss >> q) || q < 1)
                throw ParseError(at_line(lineno) + "expected 'q <count>' first");
            if (q > kMaxSpins)
                throw TooLarge(at_line(lineno) + "at most " + std::to_string(kMaxSpins) +
                               " spins supported");
            flat.reserve(std::size_t(q) * std::size_t(q));
            continue;
        }
        double w;
        while (ss >> w) {
            if (std::isnan(w)) throw ParseError(at_line(lineno) + "weight is not a number");
            if (w < 0.0) throw NegativeWeight(at_line(lineno) + "weights must be nonnegative");
            if (flat.size() == std::size_t(q) * std::size_t(q))
                throw ParseError(at_line(lineno) + "more than q*q weights");
            flat.push_back(w);
        }
        if (!ss.eof()) throw ParseError(at_line(lineno) + "malformed weight");
    }
    if (q < 0) throw ParseError("missing 'q <count>' line in " + path);
    if (flat.size() != std::size_t(q) * std::size_t(q))
        throw ParseError("expected " + std::to_string(q * q) + " weights, got " +
                         std::to_string(flat.size()) + " in " + path);

    for (long long i = 0; i < q; ++i)
        for (long long j = i + 1; j < q; ++j) {
            double a = flat[std::size_t(i * q + j)], b = flat[std::size_t(j * q + i)];
            if (std::fabs(a - b) > 1e-12)
                throw AsymmetryError("entries (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") and transpose differ by more than 1e-12 in " + path);
            double avg = 0.5 * (a + b);
            flat[std::size_t(i * q + j)] = avg;
            flat[std::size_t(j * q + i)] = avg;
        }
    return WeightedModel::from_flat(int(q), std::move(flat));
}

std::vector<Rational> parse_activity_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::string raw;
    int lineno = 0;
    std::vector<Rational> out;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = clean(raw);
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tok, extra;
        ss >> tok;
        if (ss >> extra) throw ParseError(at_line(lineno) + "expected one activity per line");
        try {
            out.push_back(rational_from_decimal(tok));
        } catch (const ParseError& e) {
            throw ParseError(at_line(lineno) + e.what());
        }
    }
    return out;
}

ActivityMatrix<Rational> parse_activity_matrix_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::string raw;
    int lineno = 0;
    std::vector<std::vector<Rational>> rows;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = clean(raw);
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::vector<Rational> row;
        std::string tok;
        while (ss >> tok) {
            try {
                row.push_back(rational_from_decimal(tok));
            } catch (const ParseError& e) {
                throw ParseError(at_line(lineno) + e.what());
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError(at_line(lineno) + "row length differs from the first row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("no activity rows in " + path);
    ActivityMatrix<Rational> m;
    m.q = int(rows.size());
    m.n = int(rows.front().size());
    m.v.reserve(std::size_t(m.q) * std::size_t(m.n));
    for (auto& row : rows)
        for (auto& x : row) m.v.push_back(std::move(x));
    return m;
}

// ---------------------------------------------------------------------------
// serialization

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

// numbers stay bare JSON numbers; non-finite values become quoted names
std::string json_number(double v) {
    if (!std::isfinite(v)) return "\"" + format_double(v) + "\"";
    return format_double(v);
}

std::string joined_flags(const VerificationReport& r) {
    std::string out;
    for (std::size_t i = 0; i < r.flags.size(); ++i) {
        if (i) out += ",";
        out += r.flags[i];
    }
    return out;
}

bool has_info_flag(const VerificationReport& r) {
    for (const auto& f : r.flags)
        if (f == "informational" || f == "reported-only" || f == "exploratory") return true;
    return false;
}

} // namespace

std::string tsv_header() {
    return "check\tlhs_log\trhs_log\tslack\tpass\twitness\tflags";
}

std::string serialize_report(const VerificationReport& r, ReportFormat f) {
    VerificationReport rec = r;
    if (!rec.asserted && !has_info_flag(rec)) rec.flags.push_back("informational");

    if (f == ReportFormat::tsv) {
        std::string out = rec.check;
        out += "\t" + format_double(rec.lhs_log);
        out += "\t" + format_double(rec.rhs_log);
        out += "\t" + format_double(rec.slack);
        out += rec.pass ? "\ttrue" : "\tfalse";
        out += "\t" + (rec.witness.empty() ? std::string("-") : rec.witness);
        std::string fl = joined_flags(rec);
        out += "\t" + (fl.empty() ? std::string("-") : fl);
        return out;
    }

    std::string out = "{\"check\":\"" + json_escape(rec.check) + "\"";
    out += ",\"lhs_log\":" + json_number(rec.lhs_log);
    out += ",\"rhs_log\":" + json_number(rec.rhs_log);
    out += ",\"slack\":" + json_number(rec.slack);
    out += rec.pass ? ",\"pass\":true" : ",\"pass\":false";
    out += ",\"witness\":\"" + json_escape(rec.witness) + "\"";
    out += ",\"flags\":[";
    for (std::size_t i = 0; i < rec.flags.size(); ++i) {
        if (i) out += ",";
        out += "\"" + json_escape(rec.flags[i]) + "\"";
    }
    out += "]}";
    return out;
}

void ReportStream::add(const VerificationReport& r) {
    if (out_.empty() && format_ == ReportFormat::tsv) out_ = tsv_header() + "\n";
    out_ += serialize_report(r, format_) + "\n";
    ++records_;
    if (r.asserted) {
        if (!r.pass) ++failures_;
        if (std::isfinite(r.slack)) {
            min_slack_ = any_slack_ ? std::min(min_slack_, r.slack) : r.slack;
            any_slack_ = true;
        }
    }
}

void ReportStream::add(const std::vector<VerificationReport>& rs) {
    for (const auto& r : rs) add(r);
}

void ReportStream::finish() {
    if (finished_) return;
    finished_ = true;
    VerificationReport s;
    s.check = "summary";
    s.lhs_log = any_slack_ ? min_slack_ : kInf;
    s.rhs_log = 0.0;
    s.slack = s.lhs_log;
    s.pass = failures_ == 0;
    s.witness = "records=" + std::to_string(records_) + ";failures=" + std::to_string(failures_);
    add(s);
    if (!s.pass) --failures_; // the summary echoes failures, it is not one itself
}

std::vector<VerificationReport> exploration_reports(const ExplorationSummary& s) {
    std::vector<VerificationReport> out;
    for (const ExplorationWitness& w : s.worst) {
        VerificationReport r;
        r.check = "explore-witness";
        r.lhs_log = w.slack;
        r.rhs_log = 0.0;
        r.slack = w.slack;
        r.pass = w.slack >= -kSlackTolerance;
        std::string wit = "seed=" + std::to_string(w.seed) +
                          ";trial=" + std::to_string(w.trial_index) + ";n=" + std::to_string(w.n) +
                          ";edges=";
        for (std::size_t i = 0; i < w.edges.size(); ++i) {
            if (i) wit += ",";
            wit += std::to_string(w.edges[i].first) + "-" + std::to_string(w.edges[i].second);
        }
        wit += ";q=" + std::to_string(w.q) + ";w=";
        for (std::size_t i = 0; i < w.weights.size(); ++i) {
            if (i) wit += ",";
            wit += format_double(w.weights[i]);
        }
        r.witness = wit;
        r.flags = {"explorer"};
        out.push_back(std::move(r));
    }

    VerificationReport sum;
    sum.check = "explore";
    sum.lhs_log = s.min_slack;
    sum.rhs_log = 0.0;
    sum.slack = s.min_slack;
    sum.pass = s.min_slack >= -kSlackTolerance; // +inf (all degenerate) passes
    sum.witness = "trials=" + std::to_string(s.config.trials) +
                  ";seed=" + std::to_string(s.config.seed) +
                  ";n_max=" + std::to_string(s.config.n_max) +
                  ";q_max=" + std::to_string(s.config.q_max) +
                  ";near_tight=" + std::to_string(s.near_tight) +
                  ";degenerate=" + std::to_string(s.degenerate) +
                  ";afm_rejections=" + std::to_string(s.afm_rejections) +
                  ";zero_row_exclusions=" + std::to_string(s.zero_row_exclusions);
    sum.flags = {"explorer"};
    if (s.worst.empty()) sum.flags.push_back("all-degenerate");
    out.push_back(std::move(sum));
    return out;
}

} // namespace afmlab
