#include "ldp/cli.hpp"

#include "ldp/corpus.hpp"
#include "ldp/error.hpp"
#include "ldp/report.hpp"
#include "ldp/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace ldp {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsage = 2;

/// Flags of one subcommand collected as strings; only the ones given end up
/// in the parameter map.
struct FlagSet {
    std::map<std::string, std::string> values;
    std::vector<std::pair<std::string, CLI::Option*>> options;

    CLI::Option* add(CLI::App* app, const std::string& names, const std::string& key, const std::string& help)
    {
        auto* opt = app->add_option(names, values[key], help);
        options.emplace_back(key, opt);
        return opt;
    }

    Json params(const std::vector<std::string>& integer_keys) const
    {
        Json j = Json::object();
        for (const auto& [key, opt] : options) {
            if (opt->count() == 0)
                continue;
            const std::string& v = values.at(key);
            bool integer = std::find(integer_keys.begin(), integer_keys.end(), key) != integer_keys.end();
            if (integer) {
                Rational r = Rational::parse(v);
                if (!r.is_integer() || !r.num().fits_slong_p())
                    throw Error(Errc::BadInput, "--" + key + " expects an integer, got '" + v + "'");
                j[key] = r.num().get_si();
            } else {
                j[key] = v;
            }
        }
        return j;
    }
};

void add_cyclic_flags(FlagSet& f, CLI::App* app)
{
    f.add(app, "-d", "d", "Index d of 1/(dn^2)(1, dnm - 1)");
    f.add(app, "-n", "n", "Index n");
    f.add(app, "-m", "m", "Index m, coprime to n (default 1)");
    f.add(app, "-c", "c", "Weight c of z (default 1)");
    f.add(app, "-a", "a", "Weight a of x; b = dnc - a");
    f.add(app, "--roots", "roots", "Roots of P as \"a1:k1,a2:k2,...\" (default 1:1,...,d:1)");
}

void add_rdp_flags(FlagSet& f, CLI::App* app)
{
    f.add(app, "--type", "type", "D or E");
    f.add(app, "--index", "index", "Index k of D_k or E_k");
    f.add(app, "--coeffs", "coeffs", "Deformation coefficients a_i, comma separated (default all 0)");
}

void add_singularity_flags(FlagSet& f, CLI::App* app, bool required)
{
    auto* order = app->add_option("--order", f.values["order"], "Order r of 1/r(q1, q2)");
    auto* weights = app->add_option("--weights", f.values["weights"], "Weights q1,q2");
    if (required) {
        order->required();
        weights->required();
    }
    f.options.emplace_back("order", order);
    f.options.emplace_back("weights", weights);
}

const std::vector<std::string> kIntegerKeys{"d", "n", "m", "c", "a", "index", "order", "samples"};

Json params_of(const FlagSet& f)
{
    Json j = f.params(kIntegerKeys);
    if (j.contains("weights")) {
        // "1,1" -> [1, 1]
        Json list = Json::array();
        std::stringstream ss(j["weights"].get<std::string>());
        std::string item;
        while (std::getline(ss, item, ',')) {
            Rational r = Rational::parse(item);
            if (!r.is_integer() || !r.num().fits_slong_p())
                throw Error(Errc::BadInput, "--weights expects integers, got '" + item + "'");
            list.push_back(r.num().get_si());
        }
        j["weights"] = list;
    }
    return j;
}

Report sweep_report(const SweepOptions& o)
{
    SweepResult result = run_sweep(o);
    Report r;
    r.kind = "sweep";
    r.id = "sweep:max-d=" + std::to_string(o.max_d) + ",max-n=" + std::to_string(o.max_n) +
           ",max-c=" + std::to_string(o.max_c);
    r.inputs = {{"max_d", o.max_d}, {"max_n", o.max_n}, {"max_c", o.max_c}, {"samples", o.samples}, {"seed", o.seed}};
    Json suites = Json::array();
    std::map<std::string, const SuiteResult*> by_name;
    for (const auto& s : result.suites) {
        by_name[s.name] = &s;
        suites.push_back({{"name", s.name},
                          {"cases", s.cases},
                          {"failures", s.failures},
                          {"passed", s.passed()},
                          {"examples", s.examples}});
    }
    r.outputs["suites"] = suites;
    r.outputs["passed"] = result.passed();

    auto status = [&](const std::string& suite) {
        return by_name.at(suite)->passed() ? CheckStatus::Pass : CheckStatus::Fail;
    };
    for (const char* tag : {"hom", "action", "div", "man-cond"})
        r.diagnostics.push_back({tag, status("conditions"), "every model in the sweep"});
    r.diagnostics.push_back({"beta>1", status("adjunction"), "every model in the sweep"});
    r.diagnostics.push_back({"adjunction-residual", status("adjunction"), "every model in the sweep"});
    for (const auto& s : result.suites)
        r.diagnostics.push_back({"suite:" + s.name, s.passed() ? CheckStatus::Pass : CheckStatus::Fail,
                                 std::to_string(s.cases - s.failures) + "/" + std::to_string(s.cases) + " cases"});
    r.dot = "graph \"sweep\" {\n}\n";
    return r;
}

int emit(const std::string& text, const std::string& out_path, std::ostream& out, std::ostream& err)
{
    if (out_path.empty()) {
        out << text;
        return kOk;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot write " << out_path << "\n";
        return kUsage;
    }
    file << text;
    return kOk;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Class-T singularities, log del Pezzo compactifications and their invariants", "ldp"};
    app.fallthrough();
    app.require_subcommand(0, 1);

    std::string format = "text";
    std::uint64_t seed = 1;
    std::string out_path;
    std::string corpus_path;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--seed", seed, "Seed for sampled checks");
    app.add_option("--out", out_path, "Write the output to FILE");
    app.add_option("--corpus", corpus_path, "Run every case of a JSONL corpus");

    std::map<std::string, FlagSet> flags;
    std::map<CLI::App*, std::string> kinds;

    auto* classify = app.add_subcommand("classify", "Normalize 1/r(q1,q2) and detect class T");
    add_singularity_flags(flags["classify"], classify, true);
    kinds[classify] = "classify";

    auto* enumerate = app.add_subcommand("enumerate", "List the weights (a, b) for (d, n, m, c)");
    {
        auto& f = flags["enumerate"];
        f.add(enumerate, "-d", "d", "Index d")->required();
        f.add(enumerate, "-n", "n", "Index n")->required();
        f.add(enumerate, "-m", "m", "Index m (default 1)");
        f.add(enumerate, "-c", "c", "Weight c (default 1)");
    }
    kinds[enumerate] = "enumerate";

    auto* build = app.add_subcommand("build", "Build a compactification");
    build->require_subcommand(1);
    auto* build_cyclic_cmd = build->add_subcommand("cyclic", "xy = prod (z^n - a_j w^c)^{k_j} in P(a, b, c, n)");
    add_cyclic_flags(flags["build-cyclic"], build_cyclic_cmd);
    kinds[build_cyclic_cmd] = "build-cyclic";
    auto* build_rdp_cmd = build->add_subcommand("rdp", "D/E compactification in P(a, b, c, 1)");
    add_rdp_flags(flags["build-rdp"], build_rdp_cmd);
    kinds[build_rdp_cmd] = "build-rdp";

    auto* check = app.add_subcommand("check", "Build, resolve and check the Tian-Yau hypotheses");
    add_cyclic_flags(flags["check"], check);
    add_rdp_flags(flags["check"], check);
    kinds[check] = "check";

    auto* birational = app.add_subcommand("birational", "Blow-up description and degree-one roundtrip");
    add_cyclic_flags(flags["birational"], birational);
    flags["birational"].add(birational, "--samples", "samples", "Roundtrip samples (default 100)");
    kinds[birational] = "birational";

    auto* resolve = app.add_subcommand("resolve", "Hirzebruch-Jung chains of a point or of a model");
    add_singularity_flags(flags["resolve"], resolve, false);
    add_cyclic_flags(flags["resolve"], resolve);
    add_rdp_flags(flags["resolve"], resolve);
    kinds[resolve] = "resolve";

    SweepOptions sweep_options;
    bool serial = false;
    auto* sweep = app.add_subcommand("sweep", "Run every invariant suite");
    sweep->add_option("--max-d", sweep_options.max_d, "Largest d")->capture_default_str();
    sweep->add_option("--max-n", sweep_options.max_n, "Largest n")->capture_default_str();
    sweep->add_option("--max-c", sweep_options.max_c, "Largest c")->capture_default_str();
    sweep->add_option("--samples", sweep_options.samples, "Roundtrip samples per model")->capture_default_str();
    sweep->add_flag("--serial", serial, "Run the suites one after another");

    std::vector<std::string> argv_copy(args.rbegin(), args.rend());
    try {
        app.parse(argv_copy);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const OutputFormat fmt = parse_format(format);
        if (!corpus_path.empty()) {
            if (!app.get_subcommands().empty()) {
                err << "error: --corpus cannot be combined with a subcommand\n";
                return kUsage;
            }
            std::ifstream in(corpus_path);
            if (!in) {
                err << "error: cannot read " << corpus_path << "\n";
                return kUsage;
            }
            CorpusSummary summary = run_corpus(read_corpus(in), seed);
            std::string text = fmt == OutputFormat::Json ? summary.to_json().dump(2) + "\n" : summary.table();
            int rc = emit(text, out_path, out, err);
            return rc != kOk ? rc : (summary.all_passed() ? kOk : kCheckFailure);
        }

        if (sweep->parsed()) {
            sweep_options.seed = seed;
            sweep_options.parallel = !serial;
            Report r = sweep_report(sweep_options);
            int rc = emit(r.render(fmt), out_path, out, err);
            return rc != kOk ? rc : (r.failed() ? kCheckFailure : kOk);
        }

        for (const auto& [cmd, kind] : kinds) {
            if (!cmd->parsed())
                continue;
            Report r = run_operation(kind, params_of(flags.at(kind)), seed);
            int rc = emit(r.render(fmt), out_path, out, err);
            if (rc != kOk)
                return rc;
            if (r.failed()) {
                for (const auto& d : r.diagnostics)
                    if (d.status == CheckStatus::Fail)
                        err << "check failed: (" << d.tag << ") " << d.detail << "\n";
                return kCheckFailure;
            }
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    out << app.help();
    return kUsage;
}

int run_command(int argc, char** argv)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run_command(args, std::cout, std::cerr);
}

} // namespace ldp
