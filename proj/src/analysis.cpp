#include "nilzeta/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilzeta/parallel.hpp"

namespace nilzeta {

RationalNumber make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    RationalNumber q(num, 1);
    q /= den;
    return q;
}

std::string to_string(const RationalNumber& q) {
    RationalNumber c = q;
    c.canonicalize();
    return c.get_str();
}

RationalNumber parse_rational(const std::string& s) {
    RationalNumber q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: '" + s + "'");
    q.canonicalize();
    return q;
}

namespace {

FactoredRat scaled(const FactoredRat& x, int sign, Monomial m) {
    return FactoredRat(LaurentPoly::monomial(m, sign) * x.num(), x.den());
}

int binom2(int n) { return n * (n - 1) / 2; }

}  // namespace

FuneqCertificate verify_funeq(int d, int workers) {
    const ZetaParams params(d);
    const FactoredRat w = local_zeta(params, workers);
    FuneqCertificate cert;
    cert.d = d;
    cert.sign = params.hirsch % 2 == 0 ? 1 : -1;
    cert.pExp = binom2(params.hirsch);
    cert.tExp = params.hirsch + d;
    cert.left = invert_vars(w);
    cert.right = scaled(w, cert.sign, {cert.pExp, cert.tExp});
    cert.verdict = same_value(cert.left, cert.right);
    return cert;
}

bool verify_funeq_summand(const SubsetPair& pair, const ZetaParams& params) {
    const FactoredRat a = term_A_IJ(pair, params);
    const int sign = (params.dPrime - 1) % 2 == 0 ? 1 : -1;
    return same_value(invert_vars(a), scaled(a, sign, {binom2(params.dPrime), 0}));
}

AbscissaResult abscissa(int d) {
    const ZetaParams params(d);
    AbscissaResult r;
    r.alpha = d;
    int ties = 1;
    for (int j = 1; j <= params.dPrime - 1; ++j) {
        const RationalNumber v = f_d(0, j, d);
        if (v > r.alpha) {
            r.alpha = v;
            r.argmax = j;
            ties = 1;
        } else if (v == r.alpha) {
            ++ties;
        }
    }
    r.unique = ties == 1;
    return r;
}

bool gss_bounds_check(int d) {
    const RationalNumber alpha = abscissa(d).alpha;
    const RationalNumber lower = make_rational(d * d * d - d * d + 2, 4 * d);
    const RationalNumber upper = std::max<RationalNumber>(d, make_rational((d - 1) * (d + 1), 2));
    return lower <= alpha && alpha <= upper;
}

RationalNumber f_d(const RationalNumber& i, const RationalNumber& j, int d) {
    const ZetaParams params(d);
    const RationalNumber dd = d;
    const RationalNumber dp = params.dPrime;
    const RationalNumber den = dd + dp - j - i;
    if (den == 0) throw std::domain_error("f_d: zero denominator");
    const RationalNumber phi_i = i * dd - i * (i + 1) / 2;
    RationalNumber v = (i * (dd - i) + (dp - j) * (dd + j - phi_i) + 1) / den;
    v.canonicalize();
    return v;
}

GridMax grid_max(int d) {
    if (d < 3) throw std::invalid_argument("grid_max: grid is empty for d < 3");
    const ZetaParams params(d);
    GridMax g;
    bool first = true;
    for (int i = 0; i <= d - 2; ++i)
        for (int j = 1; j <= params.dPrime - 1; ++j) {
            const RationalNumber v = f_d(i, j, d);
            if (first || v > g.value) {
                g = {v, i, j, i == 0};
                first = false;
            } else if (v == g.value && i == 0) {
                g.onLineZero = true;
            }
        }
    return g;
}

bool grid_argmax_check(int d) { return grid_max(d).onLineZero; }

bool grid_below_abscissa(int d) { return grid_max(d).value <= abscissa(d).alpha; }

DominanceReport dominance_check(int d, int workers) {
    const ZetaParams params(d);
    const auto pairs = enumerate_pairs(params);
    const auto terms = all_terms(params, workers);

    std::vector<CycloFactor> prefactors;
    for (int i = 0; i < d; ++i) prefactors.push_back({i, 1, 1});
    prefactors.push_back({d * params.dPrime, d + params.dPrime, 1});

    DominanceReport rep;
    rep.d = d;
    rep.cyclotomicDen = true;
    rep.summands.resize(pairs.size());
    parallel_for(pairs.size(), resolve_workers(workers), [&](std::size_t k) {
        SummandRatios& s = rep.summands[k];
        s.pair = pairs[k];
        for (const auto& f : normalize_den([&] {
                 auto all = prefactors;
                 all.insert(all.end(), terms[k].den().begin(), terms[k].den().end());
                 return all;
             }()))
            s.den.push_back({f.a, f.b, make_rational(f.a + 1, f.b)});
        for (const auto& [m, c] : terms[k].num().terms())
            if (m.eT >= 1) s.num.push_back({m.eP, m.eT, make_rational(m.eP + 1, m.eT)});
    });

    bool haveDen = false, haveNum = false;
    for (const auto& s : rep.summands) {
        for (const auto& e : s.den) {
            if (e.a < 0 || e.b < 1) rep.cyclotomicDen = false;
            rep.denMax = haveDen ? std::max(rep.denMax, e.ratio) : e.ratio;
            haveDen = true;
        }
        for (const auto& e : s.num) {
            rep.numMax = haveNum ? std::max(rep.numMax, e.ratio) : e.ratio;
            haveNum = true;
        }
    }
    for (const auto& s : rep.summands)
        if (std::any_of(s.den.begin(), s.den.end(), [&](const RatioEntry& e) { return e.ratio == rep.denMax; }))
            rep.denArgmax.push_back(pair_key(s.pair));

    // enumerate_pairs lists (empty, empty) first.
    rep.attainedInA0 = !rep.denArgmax.empty() && rep.denArgmax.front() == pair_key(SubsetPair{});
    rep.strict = !haveNum || rep.numMax < rep.denMax;
    rep.matchesAbscissa = rep.denMax == abscissa(d).alpha;
    return rep;
}

std::vector<long> square_check(long d_max) {
    if (d_max < 2) throw std::invalid_argument("square_check: d_max must be at least 2");
    std::vector<long> failures;
    mpz_class v;
    for (long d = 2; d <= d_max; ++d) {
        const mpz_class dz = d;
        v = 2 * dz * dz * dz + 6 * dz * dz - 3;
        if (mpz_odd_p(v.get_mpz_t()) && mpz_perfect_square_p(v.get_mpz_t())) failures.push_back(d);
    }
    return failures;
}

bool adjacent_equality_check(long d) {
    if (d < 3) throw std::invalid_argument("adjacent_equality_check: d must be at least 3");
    using i128 = __int128;
    const long dp = d * (d - 1) / 2;
    const long h = d + dp;
    auto num = [&](long j) { return static_cast<i128>(dp - j) * (d + j) + 1; };
    for (long j = 1; j <= dp - 2; ++j)
        if (num(j) * (h - j - 1) == num(j + 1) * (h - j)) return false;
    return true;
}

}  // namespace nilzeta
