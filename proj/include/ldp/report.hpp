#pragma once

#include "ldp/birational.hpp"
#include "ldp/compactify.hpp"
#include "ldp/singularity.hpp"
#include "ldp/tianyau.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ldp {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

enum class CheckStatus { Pass, Fail, NotApplicable };
const char* to_string(CheckStatus s);

struct Diagnostic {
    std::string tag;
    CheckStatus status = CheckStatus::NotApplicable;
    std::string detail;
};

enum class OutputFormat { Text, Json, Dot };
OutputFormat parse_format(const std::string& text);

struct Report {
    std::string id;
    std::string kind;
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::vector<Diagnostic> diagnostics;
    /// DOT rendering; an empty graph when the operation has nothing to draw.
    std::string dot;

    bool failed() const;
    Json to_json() const;
    std::string to_text() const;
    std::string render(OutputFormat format) const;
};

/// Condition tags present in every report.
inline const std::vector<std::string>& standard_condition_tags()
{
    static const std::vector<std::string> tags{"hom", "action", "div", "man-cond", "beta>1", "adjunction-residual"};
    return tags;
}

Json to_json(const Rational& r);
/// {"order": r, "weights": [q1, q2]}.
Json to_json(const QuotientSingularity& s);
Json to_json(const CyclicT& t);
Json to_json(const ClassTDescriptor& d);
Json to_json(const CompactificationModel& model);
Json to_json(const TopologyInvariants& t);
Json to_json(const TianYauReport& r);
Json to_json(const ResolvedModel& r);
Json to_json(const BlowupModel& b);
Json to_json(const BlowupSurfaceDescription& b);

std::vector<Diagnostic> model_diagnostics(const CompactificationModel& model);

std::string dot_chain(const std::string& name, const HJChain& chain);
std::string dot_resolution(const std::string& name, const std::vector<ExceptionalConfiguration>& configs);
std::string dot_blowup(const BlowupModel& blowup, const BlowupSurfaceDescription& description);

/// Operation kinds: classify, enumerate, build-cyclic, build-rdp, check,
/// birational, resolve.
const std::vector<std::string>& operation_kinds();

/// Run one operation from its parameter map. Condition violations become a
/// failing report; malformed parameters throw Error (BadInput/ParseError/...).
Report run_operation(const std::string& kind, const Json& params, std::uint64_t seed, const std::string& id = {});

} // namespace ldp
