#pragma once

#include "ldp/report.hpp"

#include <istream>
#include <string>
#include <vector>

namespace ldp {

/// One line of a regression corpus.
struct CorpusCase {
    std::string id;
    std::string kind;
    Json params = Json::object();
    /// Dotted paths into the report outputs (e.g. "curve.self_intersection"
    /// under "model") mapped to expected values. Null when absent.
    Json expected;
    /// Expected exit status of the case: 0 ok, 1 check failure.
    int expected_status = 0;
};

/// Throws ParseError with the offending line number.
std::vector<CorpusCase> read_corpus(std::istream& in);

struct CaseOutcome {
    std::string id;
    std::string kind;
    bool passed = false;
    std::string message;
};

struct CorpusSummary {
    std::vector<CaseOutcome> outcomes;
    std::size_t passed() const;
    bool all_passed() const { return passed() == outcomes.size(); }
    std::string table() const;
    Json to_json() const;
};

CorpusSummary run_corpus(const std::vector<CorpusCase>& cases, std::uint64_t seed);

/// Value at a dotted path ("model.beta", "pairs.0.a"); null if missing.
Json lookup_path(const Json& root, const std::string& path);

} // namespace ldp
