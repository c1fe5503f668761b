// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons
// throughout. A criterion with a time budget also fails when it runs over.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "nilzeta/analysis.hpp"
#include "nilzeta/lieoracle.hpp"
#include "nilzeta/qseries.hpp"
#include "nilzeta/zetacore.hpp"

using namespace nilzeta;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double budget;  // seconds, 0 for none
    std::function<Verdict()> run;
};

std::string str(const CountTable& t) {
    std::string s;
    for (const auto& c : t.counts) s += (s.empty() ? "" : " ") + c.get_str();
    return s;
}

Verdict heisenberg() {
    Verdict v;
    v.require(same_value(local_zeta(ZetaParams(2)), FactoredRat(1, {{0, 1, 1}, {1, 1, 1}, {2, 3, 1}})),
              "W_2 differs from 1/((1-T)(1-PT)(1-P^2T^3))");
    return v;
}

Verdict oracle_direct() {
    Verdict v;
    const FactoredRat w = local_zeta(ZetaParams(2));
    for (long p : {2L, 3L}) {
        const CountTable oracle = count_ideals_direct(2, p, 6);
        const CountTable formula = series_at_prime(w, p, 6);
        v.require(oracle == formula, "d=2 p=" + std::to_string(p) + " oracle " + str(oracle) + " vs " + str(formula));
    }
    return v;
}

Verdict oracle_pairs() {
    Verdict v;
    struct Case {
        int d;
        long p;
        int n;
    };
    for (const Case c : {Case{2, 2, 10}, Case{2, 3, 10}, Case{2, 5, 10}, Case{3, 2, 6}, Case{3, 3, 6}}) {
        const CountTable oracle = count_ideals_pairs(c.d, c.p, c.n);
        const CountTable formula = series_at_prime(local_zeta(ZetaParams(c.d)), c.p, c.n);
        v.require(oracle == formula, "d=" + std::to_string(c.d) + " p=" + std::to_string(c.p) + " oracle " +
                                         str(oracle) + " vs " + str(formula));
    }
    v.require(count_ideals_direct(3, 2, 3) == count_ideals_pairs(3, 2, 3), "direct vs pairs d=3 p=2 n=3");
    return v;
}

Verdict funeq() {
    Verdict v;
    for (int d = 2; d <= 5; ++d) {
        const auto start = std::chrono::steady_clock::now();
        const ZetaParams params(d);
        const FuneqCertificate c = verify_funeq(d);
        const int h = params.hirsch;
        v.require(c.verdict && c.sign == (h % 2 ? -1 : 1) && c.pExp == h * (h - 1) / 2 && c.tExp == h + d,
                  "whole function d=" + std::to_string(d));
        int bad = 0;
        const auto pairs = enumerate_pairs(params);
        for (const auto& pair : pairs)
            if (!verify_funeq_summand(pair, params)) ++bad;
        v.require(bad == 0, std::to_string(bad) + " summands fail at d=" + std::to_string(d));
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        v.require(secs < 60, "d=" + std::to_string(d) + " took " + std::to_string(secs) + " s");
    }
    return v;
}

Verdict abscissa_table() {
    Verdict v;
    const std::vector<std::string> expect = {"2", "3", "4", "51/10", "99/13"};
    std::string got;
    for (int d = 2; d <= 6; ++d) {
        const AbscissaResult r = abscissa(d);
        got += (got.empty() ? "" : " ") + to_string(r.alpha);
        v.require(to_string(r.alpha) == expect[static_cast<std::size_t>(d - 2)] && r.unique,
                  "d=" + std::to_string(d) + " gives " + to_string(r.alpha));
    }
    v.require(abscissa(5).alpha.get_den() != 1, "d=5 value is an integer");
    v.require(abscissa(4).alpha.get_den() == 1 && abscissa(3).alpha.get_den() == 1, "d<5 value not integral");
    if (v.ok) v.detail = got;
    return v;
}

Verdict gss_bounds() {
    Verdict v;
    for (int d = 2; d <= 100; ++d) v.require(gss_bounds_check(d), "d=" + std::to_string(d));
    return v;
}

Verdict dominance() {
    Verdict v;
    for (int d = 2; d <= 5; ++d) {
        const DominanceReport r = dominance_check(d);
        const std::string at = "d=" + std::to_string(d);
        v.require(r.cyclotomicDen, at + " denominator not a product of (1-P^aT^b)");
        v.require(r.matchesAbscissa, at + " max ratio " + to_string(r.denMax) + " != abscissa");
        v.require(r.attainedInA0, at + " max not attained in A0");
        v.require(r.strict, at + " numerator ratio " + to_string(r.numMax) + " >= " + to_string(r.denMax));
    }
    return v;
}

Verdict grid() {
    Verdict v;
    std::vector<int> failing;
    for (int d = 3; d <= 50; ++d)
        if (!grid_argmax_check(d)) failing.push_back(d);
    for (int d : failing) {
        const GridMax g = grid_max(d);
        RationalNumber line = f_d(0, 1, d);
        for (int j = 2; j <= d * (d - 1) / 2 - 1; ++j) line = std::max(line, f_d(0, j, d));
        std::ostringstream os;
        os << "d=" << d << ": max " << to_string(g.value) << " at (" << g.i << "," << g.j << ") exceeds "
           << to_string(line) << " on i=0";
        if (grid_below_abscissa(d)) os << ", still below abscissa " << to_string(abscissa(d).alpha);
        v.require(false, os.str());
    }
    return v;
}

Verdict squares() {
    Verdict v;
    const auto failures = square_check(1000000);
    v.require(failures.empty(), std::to_string(failures.size()) + " odd squares found");
    for (long d = 3; d <= 1000; ++d) {
        const bool square = std::find(failures.begin(), failures.end(), d) != failures.end();
        v.require(adjacent_equality_check(d) != square, "criteria disagree at d=" + std::to_string(d));
    }
    return v;
}

Verdict hall() {
    Verdict v;
    int cases = 0;
    for (long p : {2L, 3L})
        for (int n = 0; n <= 6; ++n)
            for (const auto& lambda : partitions_of(n))
                for (int m = 0; m <= n; ++m)
                    for (const auto& mu : partitions_of(m)) {
                        if (!mu.contained_in(lambda)) continue;
                        ++cases;
                        v.require(hall_alpha(lambda, mu).evaluate_int(p) == hall_alpha_brute(lambda, mu, p),
                                  to_string(lambda) + " / " + to_string(mu) + " p=" + std::to_string(p));
                    }
    if (v.ok) v.detail = std::to_string(cases) + " pairs";
    return v;
}

Verdict phi_type() {
    Verdict v;
    for (int d : {3, 4}) {
        const PhiTypeReport r = phi_type_law_check(d, 100);
        v.require(r.passed() && r.trials == 100, "d=" + std::to_string(d) + ": " + r.first_failure);
    }
    return v;
}

Verdict stratified() {
    Verdict v;
    const int n = 5;
    for (int d = 2; d <= 3; ++d)
        for (long p : {2L, 3L}) {
            CountTable total{p, std::vector<mpz_class>(n + 1, 0)};
            for (const auto& [key, t] : stratified_counts(d, p, n))
                for (int k = 0; k <= n; ++k) total.counts[static_cast<std::size_t>(k)] += t.counts[static_cast<std::size_t>(k)];
            const CountTable lhs = convolve_centre_factor(total, d, n);
            const CountTable rhs = count_ideals_pairs(d, p, n);
            v.require(lhs == rhs, "d=" + std::to_string(d) + " p=" + std::to_string(p) + ": " + str(lhs) + " vs " + str(rhs));
        }
    return v;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Heisenberg closed form", 1, heisenberg},
        {2, "oracle agreement, direct enumeration (d=2, p=2,3, n<=6)", 30, oracle_direct},
        {3, "oracle agreement, pair enumeration (d=2 n<=10, d=3 n<=6)", 300, oracle_pairs},
        {4, "functional equation, whole and per summand (d=2..5)", 240, funeq},
        {5, "abscissa table d=2..6", 1, abscissa_table},
        {6, "abscissa within the earlier bounds (d<=100)", 0, gss_bounds},
        {7, "dominance of the denominator ratios (d=2..5)", 0, dominance},
        {8, "grid maximum on the line i=0 (3<=d<=50)", 0, grid},
        {9, "no odd square 2d^3+6d^2-3 (d<=10^6), adjacency agrees (d<=1000)", 10, squares},
        {10, "Hall polynomial vs brute force (|lambda|<=6, p=2,3)", 120, hall},
        {11, "phi type law, 100 trials at d=3 and d=4", 0, phi_type},
        {12, "strata convolved with the centre factor equal pair counts (d<=3, n<=5)", 0, stratified},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget > 0 && secs >= c.budget) v.require(false, "over budget of " + std::to_string(static_cast<int>(c.budget)) + " s");
        if (!v.ok) ++failed;
        std::printf("%s %2d %s [%.2f s]%s%s\n", v.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    v.detail.empty() ? "" : " -- ", v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
