// Acceptance gate: the full battery of structure checks, run end to end over
// two coefficient fields.  One PASS/FAIL line per criterion and per field;
// failing criteria dump their first offending report lines.  Time limits are
// pinned in code where the criterion demands a bound.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dinfty/suites.hpp"

using namespace dinfty;

namespace {

constexpr std::uint64_t kBaseSeed = 20260814;

std::string tsv_of(const Report& r) {
    std::ostringstream os;
    render_tsv(r, os);
    return os.str();
}

struct Criterion {
    std::string name;
    double limit_seconds;  // 0 = unpinned
    std::function<Report()> run;
};

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    std::cout << std::fixed << std::setprecision(1);

    const long long primes[2] = {1009, 65521};
    std::vector<std::string> digests[2];
    bool all_pass = true;

    for (int pi = 0; pi < 2; ++pi) {
        const long long prime = primes[pi];
        const std::string tag = "GF(" + std::to_string(prime) + ")";
        HomEngine e(make_oracle("gfp", prime, 24));
        const Window w13{13};

        const std::vector<Criterion> criteria = {
            {"1 closed forms match the solver on every covered pair (window 13)", 60.0,
             [&] { return check_formulas(e, w13); }},
            {"2 almost-split sequence catalog validates against the solver (bound 15)", 0,
             [&] { return check_ar_catalog(e.oracle(), 15); }},
            {"3 extension pairing is symmetric (window 13)", 0,
             [&] { return check_two_cy(e, w13); }},
            {"4 translation invariance and orbit-category agreement (window 13)", 0,
             [&] { return check_uf(e, w13); }},
            {"5 unique regular partner table t=0..7 with one-dimensional crossings", 0,
             [&] {
                 Report r;
                 const std::vector<std::optional<Label>> expected = {
                     std::nullopt,  std::nullopt,  std::nullopt,  label_a(2, 3),
                     label_a(2, 5), label_b(2, 5), label_b(2, 7), label_b(4, 7)};
                 for (int t = 0; t <= 7; ++t) {
                     r.add("cdetr", "closed form t=" + std::to_string(t),
                           unique_regular_partner(t) == expected[t],
                           expected[t] ? to_string(*expected[t]) : "NONE");
                     r.merge(check_cdetr(e, t, w13));
                 }
                 return r;
             }},
            {"6 path region equals extension region, t=0..8 element-exact", 0,
             [&] {
                 Report r;
                 r.merge(check_coincide(e, 0, w13));
                 r.merge(check_coincide(e, 1, w13));
                 for (int t = 2; t <= 8; ++t)
                     r.merge(check_coincide(e, t, Window{std::max(13, 2 * t + 6)}));
                 return r;
             }},
            {"7 boundary escapes tile into the seven families, t=3,5,7,9", 0,
             [&] {
                 Report r;
                 for (int t : {3, 5, 7, 9}) r.merge(check_in_t(e, t, w13));
                 return r;
             }},
            {"8 one-way and boundary-forcing sweeps are violation-free (window 13)", 0,
             [&] {
                 Report r = check_rok(e, w13);
                 r.merge(check_force_bo(e, w13));
                 return r;
             }},
            {"9 boundary factorizations compose to nonzero maps, t=3,5,7", 0,
             [&] {
                 Report r;
                 for (int t : {3, 5, 7}) r.merge(check_compositions(e, t));
                 return r;
             }},
            {"10 100 seeded maximal orthogonal sets pass all pair obligations", 300.0,
             [&] { return rigid_suite(e, w13, {}, 100, kBaseSeed); }},
        };

        for (const Criterion& c : criteria) {
            const auto start = Clock::now();
            Report r;
            std::string thrown;
            try {
                r = c.run();
            } catch (const std::exception& ex) {
                thrown = ex.what();
            }
            const double secs =
                std::chrono::duration<double>(Clock::now() - start).count();
            bool pass = thrown.empty() && r.pass();
            std::string detail =
                thrown.empty() ? std::to_string(r.lines.size()) + " checks, " +
                                     std::to_string(r.fail_count()) + " failures"
                               : "exception: " + thrown;
            if (c.limit_seconds > 0 && thrown.empty()) {
                if (secs > c.limit_seconds) pass = false;
                std::ostringstream lim;
                lim << std::fixed << std::setprecision(1) << ", limit "
                    << c.limit_seconds << "s";
                detail += lim.str();
            }
            if (c.name[0] == '1' && c.name[1] == '0')
                detail += ", seeds " + std::to_string(kBaseSeed) + ".." +
                          std::to_string(kBaseSeed + 99);
            std::cout << "criterion " << c.name << " [" << tag << "]: "
                      << (pass ? "PASS" : "FAIL") << " (" << secs << "s, " << detail
                      << ")\n";
            if (!pass && thrown.empty()) {
                int shown = 0;
                for (const auto& l : r.lines) {
                    if (l.pass) continue;
                    std::cout << "    FAIL " << l.suite << " | " << l.instance << " | "
                              << l.detail << "\n";
                    if (++shown == 10) break;
                }
            }
            digests[pi].push_back(thrown.empty() ? tsv_of(r) : "exception: " + thrown);
            all_pass = all_pass && pass;
        }
    }

    const bool same = digests[0] == digests[1];
    std::cout << "criterion 11 identical results over GF(1009) and GF(65521): "
              << (same ? "PASS" : "FAIL") << "\n";
    if (!same)
        for (std::size_t i = 0; i < digests[0].size(); ++i)
            if (digests[0][i] != digests[1][i])
                std::cout << "    criterion " << (i + 1) << " differs between fields\n";

    return all_pass && same ? 0 : 1;
}
