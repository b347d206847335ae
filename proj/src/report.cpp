#include "ldp/report.hpp"

#include "ldp/error.hpp"
#include "ldp/rdp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ldp {

const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not-applicable";
    }
    return "?";
}

OutputFormat parse_format(const std::string& text)
{
    if (text == "text")
        return OutputFormat::Text;
    if (text == "json")
        return OutputFormat::Json;
    if (text == "dot")
        return OutputFormat::Dot;
    throw Error(Errc::BadInput, "unknown format '" + text + "' (expected text, json or dot)");
}

bool Report::failed() const
{
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.status == CheckStatus::Fail; });
}

Json Report::to_json() const
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["id"] = id;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    Json diags = Json::array();
    for (const auto& d : diagnostics)
        diags.push_back({{"tag", d.tag}, {"status", to_string(d.status)}, {"detail", d.detail}});
    j["diagnostics"] = diags;
    return j;
}

namespace {

std::string scalar_text(const Json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_null())
        return "none";
    return j.dump();
}

bool is_flat(const Json& j)
{
    if (!j.is_array())
        return false;
    return std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

void write_text(std::ostream& os, const Json& j, int indent)
{
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_primitive() || (is_flat(value))) {
                os << pad << key << ": ";
                if (value.is_array()) {
                    os << "[";
                    for (std::size_t i = 0; i < value.size(); ++i)
                        os << (i ? ", " : "") << scalar_text(value[i]);
                    os << "]\n";
                } else {
                    os << scalar_text(value) << "\n";
                }
            } else {
                os << pad << key << ":\n";
                write_text(os, value, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_primitive() || is_flat(value)) {
                os << pad << "- " << (value.is_primitive() ? scalar_text(value) : value.dump()) << "\n";
            } else {
                std::ostringstream inner;
                write_text(inner, value, indent + 2);
                std::string s = inner.str();
                // Put the first line next to the dash.
                s.replace(0, std::min<std::size_t>(indent + 2, s.size()), pad + "- ");
                os << s;
            }
        }
    } else {
        os << pad << scalar_text(j) << "\n";
    }
}

} // namespace

std::string Report::to_text() const
{
    std::ostringstream os;
    os << "id: " << id << "\n";
    os << "kind: " << kind << "\n";
    if (!inputs.empty()) {
        os << "inputs:\n";
        write_text(os, inputs, 2);
    }
    os << "outputs:\n";
    write_text(os, outputs, 2);
    os << "diagnostics:\n";
    for (const auto& d : diagnostics)
        os << "  [" << to_string(d.status) << "] " << d.tag << (d.detail.empty() ? "" : ": " + d.detail) << "\n";
    return os.str();
}

std::string Report::render(OutputFormat format) const
{
    switch (format) {
    case OutputFormat::Json: return to_json().dump(2) + "\n";
    case OutputFormat::Dot: return dot;
    case OutputFormat::Text: break;
    }
    return to_text();
}

// ---------------------------------------------------------------------------
// Serialization

Json to_json(const Rational& r)
{
    return r.to_string();
}

Json to_json(const QuotientSingularity& s)
{
    return {{"order", s.order}, {"weights", {s.q1, s.q2}}};
}

Json to_json(const CyclicT& t)
{
    return {{"variant", "CyclicT"}, {"d", t.d},         {"n", t.n},
            {"m", t.m},             {"u", t.u},         {"a_type", t.is_a_type()},
            {"singularity", to_json(normalize(t.singularity()))}};
}

Json to_json(const ClassTDescriptor& d)
{
    Json j;
    if (d.is_cyclic()) {
        j = to_json(d.cyclic());
    } else {
        const auto& t = d.rdp();
        j = {{"variant", "RDP"}, {"type", t.name()}, {"family", to_string(t.family)}, {"index", t.rank}};
    }
    Json decompositions = Json::array();
    for (const auto& c : d.decompositions)
        decompositions.push_back({{"d", c.d}, {"n", c.n}, {"m", c.m}, {"u", c.u}});
    j["decompositions"] = decompositions;
    return j;
}

Json to_json(const TopologyInvariants& t)
{
    return {{"pi1_order_M", t.pi1_order_M}, {"b2_M", t.b2_M},           {"b2_Mbar", t.b2_Mbar},
            {"chi_M", t.chi_M},             {"chi_Mbar", t.chi_Mbar}};
}

Json to_json(const CompactificationModel& model)
{
    static const std::vector<std::string> names4{"x", "y", "z", "w"};
    static const std::vector<std::string> names3{"X", "Y", "Z"};
    Json j;
    j["variant"] = model.is_cyclic() ? "cyclic" : "rdp";
    j["descriptor"] = to_json(model.descriptor);
    j["ambient"] = model.ambient.weights;
    j["degree"] = model.degree;
    if (model.roots) {
        Json roots = Json::array();
        for (const auto& [root, k] : model.roots->entries())
            roots.push_back({{"root", to_json(root)}, {"multiplicity", k}});
        j["roots"] = roots;
    } else {
        Json coeffs = Json::array();
        for (const auto& c : model.coefficients)
            coeffs.push_back(to_json(c));
        j["coefficients"] = coeffs;
    }
    j["equation"] = model.equation.to_string(names4);
    j["affine_equation"] = model.affine_equation.to_string(names3);

    Json infinity = Json::array();
    for (const auto& p : model.infinity_singularities)
        infinity.push_back({{"label", p.label},
                            {"local", to_json(p.local)},
                            {"type", to_json(p.type)},
                            {"smooth", p.type.is_smooth()}});
    j["infinity_singularities"] = infinity;

    Json interior = Json::array();
    for (const auto& p : model.interior_singularities) {
        Json e{{"label", p.label}, {"type", p.type.name()}};
        e["root"] = p.root ? to_json(*p.root) : Json(nullptr);
        e["multiplicity"] = p.multiplicity;
        interior.push_back(e);
    }
    j["interior_singularities"] = interior;
    j["interior_status"] = to_string(model.interior_status);

    j["beta"] = to_json(model.beta);
    j["curve"] = {{"self_intersection", to_json(model.curve.self_intersection)},
                  {"orbifold_points", model.curve.orbifold_points},
                  {"genus", model.curve.genus},
                  {"divisor_degree", model.curve.divisor_degree}};
    j["topology"] = to_json(topology(model));
    return j;
}

Json to_json(const TianYauReport& r)
{
    return {{"beta", to_json(r.beta)},
            {"beta_gt_one", r.beta_gt_one},
            {"singularities_on_divisor", r.singularities_on_divisor},
            {"divisor_almost_ample", r.divisor_almost_ample},
            {"divisor_admissible", r.divisor_admissible},
            {"C_squared", to_json(r.C_squared)},
            {"decay_rhs", to_json(r.decay_rhs)},
            {"adjunction_residual", to_json(r.adjunction_residual)}};
}

Json to_json(const ResolvedModel& r)
{
    Json configs = Json::array();
    for (const auto& e : r.exceptional) {
        Json edges = Json::array();
        for (const auto& [u, v] : e.graph.edges)
            edges.push_back({u, v});
        configs.push_back({{"label", e.label},
                           {"type", e.type.name()},
                           {"self_intersections", e.graph.self_intersections},
                           {"edges", edges}});
    }
    Json remaining = Json::array();
    for (const auto& p : r.singularities())
        if (!p.type.is_smooth())
            remaining.push_back({{"label", p.label}, {"type", to_json(p.type)}});
    return {{"beta", to_json(r.beta)},
            {"configurations_known", r.configurations_known},
            {"exceptional", configs},
            {"remaining_singularities", remaining}};
}

Json to_json(const BlowupModel& b)
{
    return {{"exceptional_curve", b.exceptional_curve},
            {"chart_s_action", to_json(b.chart_s_action)},
            {"chart_t_action", to_json(b.chart_t_action)},
            {"new_singularities", {to_json(b.new_singularities.first), to_json(b.new_singularities.second)}},
            {"exceptional_orbifold_points", b.exceptional_orbifold_points}};
}

Json to_json(const BlowupSurfaceDescription& b)
{
    Json centers = Json::array();
    for (const auto& c : b.centers)
        centers.push_back({{"label", c.label}, {"root", to_json(c.root)}, {"iterations", c.iterations}});
    return {{"base_plane", b.base_plane.weights},
            {"centers", centers},
            {"removed_divisors", b.removed_divisors},
            {"euler_characteristic", b.euler_characteristic},
            {"single_point", b.single_point}};
}

namespace {

Diagnostic from_check(const ConditionCheck& c)
{
    return {c.tag, c.passed ? CheckStatus::Pass : CheckStatus::Fail, c.detail};
}

std::vector<Diagnostic> not_applicable(const std::string& why)
{
    std::vector<Diagnostic> out;
    for (const auto& tag : standard_condition_tags())
        out.push_back({tag, CheckStatus::NotApplicable, why});
    return out;
}

Diagnostic beta_diagnostic(const Rational& beta)
{
    return {"beta>1", beta > Rational(1) ? CheckStatus::Pass : CheckStatus::Fail, "beta = " + beta.pretty()};
}

} // namespace

std::vector<Diagnostic> model_diagnostics(const CompactificationModel& model)
{
    std::vector<Diagnostic> out;
    for (const auto& c : model.conditions)
        out.push_back(from_check(c));
    out.push_back(beta_diagnostic(model.beta));
    Rational residual = orbifold_adjunction_residual(model);
    out.push_back({"adjunction-residual", residual.is_zero() ? CheckStatus::Pass : CheckStatus::Fail,
                   "K.C + C^2 - deg K_C^orb = " + residual.to_string()});
    return out;
}

// ---------------------------------------------------------------------------
// DOT

namespace {

void dot_configuration(std::ostream& os, const std::string& cluster, const std::string& label,
                       const std::vector<std::int64_t>& self, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
{
    os << "  subgraph \"cluster_" << cluster << "\" {\n";
    os << "    label=\"" << label << "\";\n";
    for (std::size_t i = 0; i < self.size(); ++i)
        os << "    \"" << cluster << "_" << i << "\" [label=\"" << self[i] << "\"];\n";
    for (const auto& [u, v] : edges)
        os << "    \"" << cluster << "_" << u << "\" -- \"" << cluster << "_" << v << "\";\n";
    os << "  }\n";
}

std::string empty_graph(const std::string& name)
{
    return "graph \"" + name + "\" {\n}\n";
}

} // namespace

std::string dot_chain(const std::string& name, const HJChain& chain)
{
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n  node [shape=circle];\n";
    std::vector<std::int64_t> self;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < chain.entries.size(); ++i) {
        self.push_back(-chain.entries[i]);
        if (i)
            edges.emplace_back(i - 1, i);
    }
    dot_configuration(os, "chain", name, self, edges);
    os << "}\n";
    return os.str();
}

std::string dot_resolution(const std::string& name, const std::vector<ExceptionalConfiguration>& configs)
{
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n  node [shape=circle];\n";
    for (const auto& c : configs)
        dot_configuration(os, c.label, c.label + " (" + c.type.name() + ")", c.graph.self_intersections, c.graph.edges);
    os << "}\n";
    return os.str();
}

std::string dot_blowup(const BlowupModel& blowup, const BlowupSurfaceDescription& description)
{
    std::ostringstream os;
    os << "graph \"blowup\" {\n  node [shape=circle];\n";
    os << "  label=\"" << description.base_plane.to_string() << "\";\n";
    os << "  \"" << blowup.exceptional_curve << "\" [shape=box, label=\"" << blowup.exceptional_curve << " "
       << blowup.new_singularities.first.to_string() << ", " << blowup.new_singularities.second.to_string()
       << "\"];\n";
    // Iterating the blow-up k times at s_j leaves a chain (-2, ..., -2, -1).
    for (const auto& c : description.centers) {
        std::vector<std::int64_t> self(c.iterations, -2);
        self.back() = -1;
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 1; i < self.size(); ++i)
            edges.emplace_back(i - 1, i);
        dot_configuration(os, c.label, c.label + " (a = " + c.root.pretty() + ")", self, edges);
    }
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Operations

const std::vector<std::string>& operation_kinds()
{
    static const std::vector<std::string> kinds{"classify", "enumerate", "build-cyclic", "build-rdp",
                                                "check",    "birational", "resolve"};
    return kinds;
}

namespace {

class Params {
public:
    explicit Params(const Json& j) : j_(j)
    {
        if (!j_.is_object())
            throw Error(Errc::BadInput, "parameters must be a JSON object");
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    std::int64_t integer(const std::string& key)
    {
        const Json& v = get(key);
        if (v.is_number_integer())
            return v.get<std::int64_t>();
        if (v.is_string()) {
            Rational r = Rational::parse(v.get<std::string>());
            if (r.is_integer() && r.num().fits_slong_p())
                return r.num().get_si();
        }
        throw Error(Errc::BadInput, "parameter '" + key + "' must be an integer");
    }

    std::int64_t integer_or(const std::string& key, std::int64_t fallback)
    {
        return has(key) ? integer(key) : fallback;
    }

    std::string string(const std::string& key)
    {
        const Json& v = get(key);
        if (!v.is_string())
            throw Error(Errc::BadInput, "parameter '" + key + "' must be a string");
        return v.get<std::string>();
    }

    std::vector<Rational> rationals(const std::string& key)
    {
        const Json& v = get(key);
        std::vector<Rational> out;
        auto one = [&](const Json& e) {
            if (e.is_number_integer())
                return Rational(e.get<long>());
            if (e.is_string())
                return Rational::parse(e.get<std::string>());
            throw Error(Errc::BadInput, "parameter '" + key + "' must list integers or \"p/q\" strings");
        };
        if (v.is_array()) {
            for (const auto& e : v)
                out.push_back(one(e));
        } else if (v.is_string()) {
            std::stringstream ss(v.get<std::string>());
            std::string item;
            while (std::getline(ss, item, ','))
                out.push_back(Rational::parse(item));
        } else {
            throw Error(Errc::BadInput, "parameter '" + key + "' must be a list");
        }
        return out;
    }

    std::vector<std::int64_t> integers(const std::string& key)
    {
        std::vector<std::int64_t> out;
        for (const auto& r : rationals(key)) {
            if (!r.is_integer() || !r.num().fits_slong_p())
                throw Error(Errc::BadInput, "parameter '" + key + "' must list integers");
            out.push_back(r.num().get_si());
        }
        return out;
    }

    void finish() const
    {
        for (const auto& [key, value] : j_.items())
            if (!used_.count(key))
                throw Error(Errc::BadInput, "unexpected parameter '" + key + "'");
    }

private:
    const Json& get(const std::string& key)
    {
        if (!j_.contains(key))
            throw Error(Errc::BadInput, "missing parameter '" + key + "'");
        used_.insert(key);
        return j_.at(key);
    }

    const Json& j_;
    std::set<std::string> used_;
};

std::string default_id(const std::string& kind, const Json& params)
{
    std::string id = kind;
    for (const auto& [key, value] : params.items())
        id += (id.size() == kind.size() ? ":" : ",") + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    return id;
}

QuotientSingularity read_singularity(Params& p)
{
    const std::int64_t order = p.integer("order");
    const auto weights = p.integers("weights");
    if (weights.size() != 2)
        throw Error(Errc::BadInput, "weights must be a pair q1,q2");
    if (order < 1)
        throw Error(Errc::BadInput, "order must be positive");
    return {order, weights[0], weights[1]};
}

struct CyclicParams {
    std::int64_t d, n, m, c, a;
    std::string roots;
};

CyclicParams read_cyclic(Params& p)
{
    CyclicParams out;
    out.d = p.integer("d");
    out.n = p.integer("n");
    out.m = p.integer_or("m", 1);
    out.c = p.integer_or("c", 1);
    out.a = p.integer("a");
    if (p.has("roots")) {
        out.roots = p.string("roots");
    } else {
        if (out.d < 1)
            throw Error(Errc::BadInput, "d must be positive");
        out.roots = RootConfig::simple(static_cast<int>(out.d)).to_string();
    }
    return out;
}

AdeType read_ade(Params& p)
{
    std::string type = p.string("type");
    if (p.has("index"))
        type += std::to_string(p.integer("index"));
    return AdeType::parse(type);
}

std::vector<Rational> read_coefficients(Params& p, const AdeType& type)
{
    if (p.has("coeffs"))
        return p.rationals("coeffs");
    return std::vector<Rational>(rdp_data(type).milnor_basis.size(), Rational(0));
}

/// Either a model or the report explaining which condition failed.
struct BuildOutcome {
    std::optional<CompactificationModel> model;
    std::vector<Diagnostic> failure;
    Json failure_outputs;
};

BuildOutcome build_from(Params& p)
{
    BuildOutcome out;
    if (p.has("type")) {
        AdeType type = read_ade(p);
        out.model = build_rdp(type, read_coefficients(p, type));
        return out;
    }
    CyclicParams cp = read_cyclic(p);
    auto raw = parse_root_entries(cp.roots);
    try {
        out.model = build_cyclic(cp.d, cp.n, cp.m, cp.c, cp.a, RootConfig::make(raw));
    } catch (const Error& e) {
        if (e.code() != Errc::ConditionViolated && e.code() != Errc::RootsInvalid)
            throw;
        for (const auto& c : cyclic_conditions(cp.d, cp.n, cp.m, cp.c, cp.a, raw))
            out.failure.push_back(from_check(c));
        out.failure.push_back(beta_diagnostic(Rational(cp.c + cp.n) / Rational(cp.n)));
        out.failure.push_back({"adjunction-residual", CheckStatus::NotApplicable, "no model built"});
        out.failure_outputs = {{"status", "condition-violated"}, {"violated", e.tag()}, {"message", e.what()}};
    }
    return out;
}

Report classify(Params& p)
{
    Report r;
    QuotientSingularity s = read_singularity(p);
    p.finish();
    QuotientSingularity n = normalize(s);
    r.outputs["singularity"] = to_json(n);
    auto desc = detect_class_T(n);
    r.outputs["class_T"] = desc.has_value();
    r.outputs["descriptor"] = desc ? to_json(*desc) : Json(nullptr);
    r.diagnostics = not_applicable("classification only");
    r.dot = n.is_smooth() ? empty_graph("classify") : dot_chain(n.to_string(), hj_resolution(n));
    return r;
}

Report enumerate(Params& p)
{
    Report r;
    const std::int64_t d = p.integer("d"), n = p.integer("n"), m = p.integer_or("m", 1), c = p.integer_or("c", 1);
    p.finish();
    WeightEnumeration e = enumerate_weights(d, n, m, c);
    r.outputs["data"] = to_json(e.data);
    r.outputs["c"] = c;
    Json pairs = Json::array();
    bool hom = true, action = true, div = true;
    for (const auto& w : e.pairs) {
        pairs.push_back({{"a", w.a},
                         {"b", w.b},
                         {"k", w.k},
                         {"normalized_family", w.normalized_family},
                         {"natural_family", w.natural_family}});
        auto checks = cyclic_conditions(d, n, m, c, w.a, {});
        hom = hom && checks[0].passed;
        action = action && checks[1].passed;
        div = div && checks[2].passed;
    }
    r.outputs["pairs"] = pairs;
    r.outputs["count"] = e.pairs.size();
    r.outputs["raw_count"] = e.raw_count;
    Json reduced = Json::array();
    for (const auto& t : e.reduced)
        reduced.push_back({t.a, t.b, t.c});
    r.outputs["reduced"] = reduced;

    const std::string scope = "every listed pair";
    r.diagnostics = {{"hom", hom ? CheckStatus::Pass : CheckStatus::Fail, scope},
                     {"action", action ? CheckStatus::Pass : CheckStatus::Fail, scope},
                     {"div", div ? CheckStatus::Pass : CheckStatus::Fail, scope},
                     {"man-cond", CheckStatus::NotApplicable, "no roots given"},
                     beta_diagnostic(Rational(c + n) / Rational(n)),
                     {"adjunction-residual", CheckStatus::NotApplicable, "no model built"}};
    r.dot = empty_graph("enumerate");
    return r;
}

Report build(Params& p, bool rdp)
{
    Report r;
    if (rdp != p.has("type"))
        throw Error(Errc::BadInput, rdp ? "build-rdp needs 'type'" : "build-cyclic does not take 'type'");
    BuildOutcome b = build_from(p);
    p.finish();
    if (!b.model) {
        r.outputs = b.failure_outputs;
        r.diagnostics = b.failure;
        r.dot = empty_graph("build");
        return r;
    }
    r.outputs["model"] = to_json(*b.model);
    r.diagnostics = model_diagnostics(*b.model);
    r.dot = dot_resolution("resolution", minimal_resolution(*b.model).exceptional);
    return r;
}

Report check(Params& p)
{
    Report r;
    BuildOutcome b = build_from(p);
    p.finish();
    if (!b.model) {
        r.outputs = b.failure_outputs;
        r.diagnostics = b.failure;
        r.dot = empty_graph("check");
        return r;
    }
    ResolvedModel resolved = minimal_resolution(*b.model);
    TianYauReport ty = check_hypotheses(resolved);
    r.outputs["model"] = to_json(*b.model);
    r.outputs["resolution"] = to_json(resolved);
    r.outputs["tian_yau"] = to_json(ty);
    r.diagnostics = model_diagnostics(*b.model);
    auto flag = [](const char* tag, bool ok, const char* detail) {
        return Diagnostic{tag, ok ? CheckStatus::Pass : CheckStatus::Fail, detail};
    };
    r.diagnostics.push_back(flag("sing-on-divisor", ty.singularities_on_divisor,
                                 "after resolution every singular point lies on C"));
    r.diagnostics.push_back(flag("almost-ample", ty.divisor_almost_ample, "C^2 > 0"));
    r.diagnostics.push_back(flag("admissible", ty.divisor_admissible, "C lifts to a smooth curve in every chart"));
    r.dot = dot_resolution("resolution", resolved.exceptional);
    return r;
}

Report birational(Params& p, std::uint64_t seed)
{
    Report r;
    std::int64_t samples = p.integer_or("samples", 100);
    if (samples < 0)
        throw Error(Errc::BadInput, "samples must be non-negative");
    if (p.has("type"))
        throw Error(Errc::NotCyclicVariant, "the blow-up description exists for the cyclic construction only");
    BuildOutcome b = build_from(p);
    p.finish();
    if (!b.model) {
        r.outputs = b.failure_outputs;
        r.diagnostics = b.failure;
        r.dot = empty_graph("birational");
        return r;
    }
    const CompactificationModel& model = *b.model;
    BlowupModel blowup = blowup_at_R2(model);
    BlowupSurfaceDescription desc = blowup_description(model);
    RoundtripResult rt = roundtrip_check(model, static_cast<std::size_t>(samples), seed);
    const std::int64_t rhs = topology(model).chi_Mbar + 1;

    r.outputs["model"] = to_json(model);
    r.outputs["blowup"] = to_json(blowup);
    r.outputs["description"] = to_json(desc);
    r.outputs["roundtrip"] = {{"passed", rt.passed},
                              {"samples", rt.samples},
                              {"redrawn", rt.redrawn},
                              {"seed", seed},
                              {"first_failure", rt.first_failure}};
    r.outputs["euler"] = {{"blowup_description", desc.euler_characteristic}, {"chi_Mbar_plus_one", rhs}};
    r.diagnostics = model_diagnostics(model);
    r.diagnostics.push_back({"roundtrip", rt.passed ? CheckStatus::Pass : CheckStatus::Fail,
                             std::to_string(rt.samples) + " samples" +
                                 (rt.passed ? "" : ", first failure at " + rt.first_failure)});
    r.diagnostics.push_back({"euler", desc.euler_characteristic == rhs ? CheckStatus::Pass : CheckStatus::Fail,
                             "3 + d = " + std::to_string(desc.euler_characteristic) +
                                 ", chi(M̄) + 1 = " + std::to_string(rhs)});
    r.dot = dot_blowup(blowup, desc);
    return r;
}

Report resolve(Params& p)
{
    Report r;
    if (p.has("order")) {
        QuotientSingularity s = normalize(read_singularity(p));
        p.finish();
        HJChain chain = hj_resolution(s);
        r.outputs["singularity"] = to_json(s);
        r.outputs["chain"] = chain.entries;
        r.outputs["value"] = to_json(chain.value());
        r.outputs["length"] = chain.entries.size();
        r.diagnostics = not_applicable("resolution of a single point");
        r.dot = dot_chain(s.to_string(), chain);
        return r;
    }
    BuildOutcome b = build_from(p);
    p.finish();
    if (!b.model) {
        r.outputs = b.failure_outputs;
        r.diagnostics = b.failure;
        r.dot = empty_graph("resolve");
        return r;
    }
    ResolvedModel resolved = minimal_resolution(*b.model);
    r.outputs["resolution"] = to_json(resolved);
    r.diagnostics = model_diagnostics(*b.model);
    r.dot = dot_resolution("resolution", resolved.exceptional);
    return r;
}

} // namespace

Report run_operation(const std::string& kind, const Json& params, std::uint64_t seed, const std::string& id)
{
    Params p(params);
    Report r;
    if (kind == "classify")
        r = classify(p);
    else if (kind == "enumerate")
        r = enumerate(p);
    else if (kind == "build-cyclic")
        r = build(p, false);
    else if (kind == "build-rdp")
        r = build(p, true);
    else if (kind == "check")
        r = check(p);
    else if (kind == "birational")
        r = birational(p, seed);
    else if (kind == "resolve")
        r = resolve(p);
    else
        throw Error(Errc::BadInput, "unknown operation '" + kind + "'");
    r.kind = kind;
    r.id = id.empty() ? default_id(kind, params) : id;
    r.inputs = params;
    return r;
}

} // namespace ldp
