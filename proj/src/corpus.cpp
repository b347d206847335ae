#include "ldp/corpus.hpp"

#include "ldp/error.hpp"

#include <iomanip>
#include <sstream>

namespace ldp {

std::vector<CorpusCase> read_corpus(std::istream& in)
{
    std::vector<CorpusCase> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        const std::string where = "corpus line " + std::to_string(number);
        Json j = Json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw Error(Errc::ParseError, where + ": not a JSON object");
        CorpusCase c;
        try {
            c.id = j.at("id").get<std::string>();
            c.kind = j.at("kind").get<std::string>();
            if (j.contains("params"))
                c.params = j.at("params");
            if (j.contains("expected"))
                c.expected = j.at("expected");
            if (j.contains("status"))
                c.expected_status = j.at("status").get<int>();
        } catch (const Json::exception& e) {
            throw Error(Errc::ParseError, where + ": " + e.what());
        }
        out.push_back(std::move(c));
    }
    return out;
}

Json lookup_path(const Json& root, const std::string& path)
{
    const Json* node = &root;
    std::stringstream ss(path);
    std::string part;
    while (std::getline(ss, part, '.')) {
        if (node->is_object()) {
            if (!node->contains(part))
                return nullptr;
            node = &(*node)[part];
        } else if (node->is_array()) {
            std::size_t used = 0;
            std::size_t index = 0;
            try {
                index = std::stoul(part, &used);
            } catch (const std::logic_error&) {
                return nullptr;
            }
            if (used != part.size() || index >= node->size())
                return nullptr;
            node = &(*node)[index];
        } else {
            return nullptr;
        }
    }
    return *node;
}

std::size_t CorpusSummary::passed() const
{
    std::size_t n = 0;
    for (const auto& o : outcomes)
        n += o.passed;
    return n;
}

std::string CorpusSummary::table() const
{
    std::size_t width = 2;
    for (const auto& o : outcomes)
        width = std::max(width, o.id.size());
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(width)) << "id" << "  " << std::setw(12) << "kind"
       << "  result\n";
    for (const auto& o : outcomes) {
        os << std::setw(static_cast<int>(width)) << o.id << "  " << std::setw(12) << o.kind << "  "
           << (o.passed ? "pass" : "FAIL");
        if (!o.message.empty())
            os << "  " << o.message;
        os << "\n";
    }
    os << passed() << "/" << outcomes.size() << " cases passed\n";
    return os.str();
}

Json CorpusSummary::to_json() const
{
    Json cases = Json::array();
    for (const auto& o : outcomes)
        cases.push_back({{"id", o.id}, {"kind", o.kind}, {"passed", o.passed}, {"message", o.message}});
    return {{"schema_version", kSchemaVersion},
            {"passed", passed()},
            {"total", outcomes.size()},
            {"cases", cases}};
}

CorpusSummary run_corpus(const std::vector<CorpusCase>& cases, std::uint64_t seed)
{
    CorpusSummary summary;
    for (const auto& c : cases) {
        CaseOutcome o{c.id, c.kind, true, {}};
        try {
            Report r = run_operation(c.kind, c.params, seed, c.id);
            const int status = r.failed() ? 1 : 0;
            if (status != c.expected_status) {
                o.passed = false;
                o.message = "status " + std::to_string(status) + ", expected " + std::to_string(c.expected_status);
            }
            if (c.expected.is_object()) {
                for (const auto& [path, want] : c.expected.items()) {
                    Json got = lookup_path(r.outputs, path);
                    if (got != want) {
                        o.passed = false;
                        o.message += (o.message.empty() ? "" : "; ") + path + " = " + got.dump() + ", expected " +
                                     want.dump();
                    }
                }
            }
        } catch (const Error& e) {
            o.passed = c.expected_status == 2;
            if (!o.passed)
                o.message = std::string(to_string(e.code())) + ": " + e.what();
        }
        summary.outcomes.push_back(std::move(o));
    }
    return summary;
}

} // namespace ldp
