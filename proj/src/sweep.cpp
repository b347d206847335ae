#include "ldp/sweep.hpp"

#include "ldp/birational.hpp"
#include "ldp/error.hpp"
#include "ldp/rdp.hpp"
#include "ldp/tianyau.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <sstream>

namespace ldp {

std::vector<CyclicSample> cyclic_sweep(std::int64_t max_d, std::int64_t max_n, std::int64_t max_c)
{
    std::vector<CyclicSample> out;
    for (std::int64_t d = 1; d <= max_d; ++d)
        for (std::int64_t n = 1; n <= max_n; ++n)
            for (std::int64_t m = 1; m <= std::max<std::int64_t>(1, n - 1); ++m) {
                if (gcd(m, n) != 1)
                    continue;
                for (std::int64_t c = 1; c <= max_c; ++c) {
                    if (gcd(c, n) != 1)
                        continue;
                    for (const auto& p : enumerate_weights(d, n, m, c).pairs)
                        out.push_back({d, n, m, c, p.a});
                }
            }
    return out;
}

bool SweepResult::passed() const
{
    for (const auto& s : suites)
        if (!s.passed())
            return false;
    return true;
}

namespace {

std::string describe(const CyclicSample& s)
{
    std::ostringstream os;
    os << "(d,n,m,c,a)=(" << s.d << "," << s.n << "," << s.m << "," << s.c << "," << s.a << ")";
    return os.str();
}

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& what)
    {
        ++result_.cases;
        if (ok)
            return;
        ++result_.failures;
        if (result_.examples.size() < 5)
            result_.examples.push_back(what());
    }

    SuiteResult finish(std::chrono::steady_clock::time_point start)
    {
        result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result_;
    }

private:
    SuiteResult result_;
};

using Clock = std::chrono::steady_clock;

std::vector<AdeType> rdp_types(int max_dk)
{
    std::vector<AdeType> out;
    for (int k = 4; k <= max_dk; ++k)
        out.push_back(AdeType::make(AdeFamily::D, k));
    for (int k = 6; k <= 8; ++k)
        out.push_back(AdeType::make(AdeFamily::E, k));
    return out;
}

CompactificationModel simple_model(const CyclicSample& s)
{
    return build_cyclic(s.d, s.n, s.m, s.c, s.a, RootConfig::simple(static_cast<int>(s.d)));
}

SuiteResult weights_suite(const SweepOptions& o)
{
    auto start = Clock::now();
    Suite suite("weights");
    for (std::int64_t d = 1; d <= o.max_d; ++d)
        for (std::int64_t n = 2; n <= o.max_n; ++n)
            for (std::int64_t m = 1; m < n; ++m) {
                if (gcd(m, n) != 1)
                    continue;
                const std::int64_t u = mod_inverse(m, n);
                auto e = enumerate_weights(d, n, m, 1);
                bool ok = static_cast<std::int64_t>(e.pairs.size()) == d;
                for (std::int64_t k = 0; ok && k < d; ++k)
                    ok = e.pairs[k].a == u + k * n && e.pairs[k].b == (d - k) * n - u && e.pairs[k].normalized_family;
                suite.expect(ok, [&] {
                    return "c = 1 list mismatch at (d,n,m)=(" + std::to_string(d) + "," + std::to_string(n) + "," +
                           std::to_string(m) + ")";
                });

                // Natural weights (1 + knm, (d-k)nm - 1, m).
                auto natural = enumerate_weights(d, n, m, m);
                for (std::int64_t k = 0; k < d; ++k) {
                    const std::int64_t a = 1 + k * n * m;
                    bool listed = false;
                    for (const auto& p : natural.pairs)
                        listed = listed || (p.a == a && p.b == (d - k) * n * m - 1 && p.natural_family);
                    bool conditions = true;
                    for (const auto& c : cyclic_conditions(d, n, m, m, a, {{Rational(1), static_cast<int>(d)}}))
                        conditions = conditions && c.passed;
                    suite.expect(listed && conditions, [&] {
                        return "natural weights fail at " + describe({d, n, m, m, a});
                    });
                }
            }
    return suite.finish(start);
}

SuiteResult conditions_suite(const SweepOptions& o, const std::vector<CyclicSample>& samples)
{
    auto start = Clock::now();
    Suite suite("conditions");
    for (const auto& s : samples) {
        auto model = simple_model(s);
        bool ok = model.a + model.b == s.d * s.n * s.c && mod(model.a * s.m - s.c, s.n) == 0 &&
                  gcd(s.c, s.n) == 1 && gcd(model.a, s.c) == 1 && model.degree == s.d * s.n * s.c;
        for (const auto& c : model.conditions)
            ok = ok && c.passed;
        suite.expect(ok, [&] { return describe(s); });
    }
    for (const auto& t : rdp_types(o.max_dk)) {
        auto model = build_rdp(t, std::vector<Rational>(t.milnor_number(), Rational(0)));
        bool ok = model.degree == model.a + model.b + model.c - 1;
        for (const auto& c : model.conditions)
            ok = ok && c.passed;
        suite.expect(ok, [&] { return t.name(); });
    }
    return suite.finish(start);
}

SuiteResult adjunction_suite(const SweepOptions& o, const std::vector<CyclicSample>& samples)
{
    auto start = Clock::now();
    Suite suite("adjunction");
    for (const auto& s : samples) {
        auto model = simple_model(s);
        auto resolved = minimal_resolution(model);
        auto ty = check_hypotheses(resolved);
        bool ok = orbifold_adjunction_residual(model).is_zero() && ty.beta_gt_one && ty.singularities_on_divisor &&
                  model.beta == Rational(s.c + s.n) / Rational(s.n);
        suite.expect(ok, [&] { return describe(s); });
    }
    for (const auto& t : rdp_types(o.max_dk)) {
        auto model = build_rdp(t, std::vector<Rational>(t.milnor_number(), Rational(0)));
        bool ok = orbifold_adjunction_residual(model).is_zero() && model.beta == Rational(2);
        suite.expect(ok, [&] { return t.name(); });
    }
    return suite.finish(start);
}

SuiteResult rdp_table_suite(const SweepOptions& o)
{
    auto start = Clock::now();
    Suite suite("rdp-table");
    for (const auto& t : rdp_types(o.max_dk)) {
        auto model = build_rdp(t, std::vector<Rational>(t.milnor_number(), Rational(0)));
        Rational c2;
        std::vector<std::int64_t> orders;
        std::int64_t degree = 0;
        if (t.family == AdeFamily::D) {
            c2 = Rational(1, t.rank - 2);
            orders = {2, 2, t.rank - 2};
            degree = 2 * t.rank - 2;
        } else if (t.rank == 6) {
            c2 = Rational(1, 6), orders = {3, 3, 2}, degree = 12;
        } else if (t.rank == 7) {
            c2 = Rational(1, 12), orders = {2, 3, 4}, degree = 18;
        } else {
            c2 = Rational(1, 30), orders = {2, 3, 5}, degree = 30;
        }
        std::vector<std::int64_t> got;
        for (const auto& p : model.infinity_singularities)
            got.push_back(p.type.order);
        std::sort(got.begin(), got.end());
        std::sort(orders.begin(), orders.end());
        bool ok = model.curve.self_intersection == c2 && got == orders && model.degree == degree;
        suite.expect(ok, [&] { return t.name(); });
    }
    return suite.finish(start);
}

SuiteResult topology_suite(const SweepOptions& o, const std::vector<CyclicSample>& samples)
{
    auto start = Clock::now();
    Suite suite("topology");
    for (const auto& s : samples) {
        auto model = simple_model(s);
        auto t = topology(model);
        auto desc = blowup_description(model);
        bool ok = t.chi_Mbar == s.d + 2 && t.b2_Mbar == s.d && t.pi1_order_M == s.n && t.chi_Mbar == 2 + t.b2_Mbar &&
                  t.chi_Mbar == t.chi_M + 2 && desc.euler_characteristic == 3 + s.d &&
                  desc.euler_characteristic == t.chi_Mbar + 1;
        suite.expect(ok, [&] { return describe(s); });
    }
    for (const auto& type : rdp_types(o.max_dk)) {
        auto t = topology(build_rdp(type, std::vector<Rational>(type.milnor_number(), Rational(0))));
        bool ok = t.b2_Mbar == type.rank + 1 && t.chi_Mbar == t.b2_Mbar + 2 && t.chi_Mbar == t.chi_M + 2;
        suite.expect(ok, [&] { return type.name(); });
    }
    return suite.finish(start);
}

// Roots t^n so that S_j has rational coordinate Z = t.
SuiteResult jacobian_suite(const SweepOptions& o, const std::vector<CyclicSample>& samples)
{
    auto start = Clock::now();
    Suite suite("jacobian");
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    for (const auto& s : samples) {
        if (s.d < 2 || s.c != 1)
            continue;
        // First root doubled, the rest simple.
        std::vector<RootConfig::Entry> entries{{Rational(1), 2}};
        for (std::int64_t j = 2; j < s.d; ++j)
            entries.emplace_back(pow(Rational(j), s.n), 1);
        auto model = build_cyclic(s.d, s.n, s.m, s.c, s.a, RootConfig::make(entries));
        for (std::size_t j = 0; j < entries.size(); ++j) {
            std::array<Rational, 3> p{0, 0, Rational(static_cast<long>(j + 1))};
            auto g = affine_gradient(model, p);
            bool singular = g[0].is_zero() && g[1].is_zero() && g[2].is_zero();
            bool on_surface = model.affine_equation.evaluate(p).is_zero();
            suite.expect(on_surface && singular == (entries[j].second >= 2), [&] { return describe(s); });
        }
        const UniPoly P = model.roots->polynomial();
        for (int i = 0; i < 50; ++i) {
            Rational X(Integer(num(rng)), Integer(den(rng)));
            if (X.is_zero())
                X = 1;
            Rational Z(Integer(num(rng)), Integer(den(rng)));
            Rational Y = eval_poly(P, pow(Z, s.n)) / X;
            std::array<Rational, 3> p{X, Y, Z};
            auto g = affine_gradient(model, p);
            bool ok = model.affine_equation.evaluate(p).is_zero() && g[0] == Y && g[1] == X &&
                      g[2] == -(Rational(s.n) * pow(Z, s.n - 1) * eval_poly(P.derivative(), pow(Z, s.n)));
            suite.expect(ok, [&] { return describe(s) + " random point"; });
        }
    }
    return suite.finish(start);
}

SuiteResult birational_suite(const SweepOptions& o, const std::vector<CyclicSample>& samples)
{
    auto start = Clock::now();
    Suite suite("birational");
    for (const auto& s : samples) {
        auto model = simple_model(s);
        auto rt = roundtrip_check(model, o.samples, o.seed);
        suite.expect(rt.passed && rt.samples == o.samples, [&] { return describe(s) + " " + rt.first_failure; });

        auto blowup = blowup_at_R2(model);
        bool ok = normalize(blowup.chart_s_action) == blowup.new_singularities.first &&
                  normalize(blowup.chart_t_action) == blowup.new_singularities.second;
        suite.expect(ok, [&] { return describe(s) + " blow-up charts"; });

        // Overlap of the chart maps at v = t^n.
        for (long t : {2L, -3L}) {
            Rational tt(t);
            Rational u(3, 2);
            auto viaS = evaluate_pi_chart(model, PiChart::S, {u, pow(tt, s.n)});
            auto viaT = evaluate_pi_chart(model, PiChart::T, chart_s_to_t(model, u, tt));
            suite.expect(viaS == viaT, [&] { return describe(s) + " chart overlap"; });
        }
        auto line = evaluate_pi_chart(model, PiChart::T, {0, Rational(5, 7)});
        suite.expect(line[0].is_zero(), [&] { return describe(s) + " E not on (x = 0)"; });
    }
    return suite.finish(start);
}

SuiteResult hj_suite()
{
    auto start = Clock::now();
    Suite suite("hj");
    for (std::int64_t r = 2; r <= 200; ++r)
        for (std::int64_t q = 1; q < r; ++q) {
            if (gcd(q, r) != 1)
                continue;
            auto chain = hj_resolution({r, 1, q});
            bool ok = chain.value() == Rational(r) / Rational(q) &&
                      static_cast<std::int64_t>(chain.entries.size()) <= r - 1;
            for (auto b : chain.entries)
                ok = ok && b >= 2;
            if (q == r - 1)
                ok = ok && chain.entries == std::vector<std::int64_t>(r - 1, 2);
            suite.expect(ok, [&] { return "1/" + std::to_string(r) + "(1," + std::to_string(q) + ")"; });
        }
    return suite.finish(start);
}

} // namespace

SweepResult run_sweep(const SweepOptions& options)
{
    if (options.max_d < 1 || options.max_n < 1 || options.max_c < 1)
        throw Error(Errc::BadInput, "sweep bounds must be positive");
    const auto samples = cyclic_sweep(options.max_d, options.max_n, options.max_c);
    std::vector<std::function<SuiteResult()>> jobs{
        [&] { return weights_suite(options); },
        [&] { return conditions_suite(options, samples); },
        [&] { return adjunction_suite(options, samples); },
        [&] { return rdp_table_suite(options); },
        [&] { return topology_suite(options, samples); },
        [&] { return jacobian_suite(options, samples); },
        [&] { return birational_suite(options, samples); },
        [] { return hj_suite(); },
    };
    SweepResult out;
    if (options.parallel) {
        std::vector<std::future<SuiteResult>> futures;
        for (auto& job : jobs)
            futures.push_back(std::async(std::launch::async, job));
        for (auto& f : futures)
            out.suites.push_back(f.get());
    } else {
        for (auto& job : jobs)
            out.suites.push_back(job());
    }
    return out;
}

} // namespace ldp
