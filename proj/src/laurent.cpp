#include "nilzeta/laurent.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace nilzeta {

namespace {

int checked_add(int x, int y) {
    int r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("monomial exponent overflow");
    return r;
}

int checked_mul(int x, int y) {
    int r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("monomial exponent overflow");
    return r;
}

std::uint64_t pack(Monomial m) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(m.eT)) << 32) |
           static_cast<std::uint32_t>(m.eP);
}

Monomial unpack(std::uint64_t key) {
    return {static_cast<int>(static_cast<std::uint32_t>(key & 0xffffffffu)),
            static_cast<int>(static_cast<std::uint32_t>(key >> 32))};
}

// Merge two sorted term lists; sign = +1 adds, -1 subtracts.
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& x,
                                     const std::vector<LaurentPoly::Term>& y, int sign) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(x.size() + y.size());
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() && j != y.end()) {
        if (i->first < j->first) {
            out.push_back(*i++);
        } else if (j->first < i->first) {
            out.emplace_back(j->first, sign > 0 ? j->second : mpz_class(-j->second));
            ++j;
        } else {
            mpz_class c = sign > 0 ? mpz_class(i->second + j->second)
                                   : mpz_class(i->second - j->second);
            if (c != 0) out.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    for (; i != x.end(); ++i) out.push_back(*i);
    for (; j != y.end(); ++j)
        out.emplace_back(j->first, sign > 0 ? j->second : mpz_class(-j->second));
    return out;
}

}  // namespace

Monomial operator*(Monomial x, Monomial y) {
    return {checked_add(x.eP, y.eP), checked_add(x.eT, y.eT)};
}

Monomial pow(Monomial x, int k) { return {checked_mul(x.eP, k), checked_mul(x.eT, k)}; }

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.emplace_back(Monomial{}, mpz_class(c));
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
    if (c != 0) terms_.emplace_back(Monomial{}, c);
}

LaurentPoly::LaurentPoly(std::initializer_list<Term> terms)
    : LaurentPoly(from_terms(std::vector<Term>(terms))) {}

LaurentPoly LaurentPoly::monomial(Monomial m, const mpz_class& c) {
    LaurentPoly r;
    if (c != 0) r.terms_.emplace_back(m, c);
    return r;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly r;
    for (auto& t : terms) {
        if (!r.terms_.empty() && r.terms_.back().first == t.first) {
            r.terms_.back().second += t.second;
        } else {
            if (!r.terms_.empty() && r.terms_.back().second == 0) r.terms_.pop_back();
            r.terms_.push_back(std::move(t));
        }
    }
    if (!r.terms_.empty() && r.terms_.back().second == 0) r.terms_.pop_back();
    return r;
}

mpz_class LaurentPoly::coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Monomial k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    terms_ = merge(terms_, o.terms_, +1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    terms_ = merge(terms_, o.terms_, -1);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (x.size() == 1) {
        LaurentPoly r = y.shifted(x.terms_[0].first);
        if (x.terms_[0].second != 1)
            for (auto& t : r.terms_) t.second *= x.terms_[0].second;
        return r;
    }
    if (y.size() == 1) return y * x;

    std::unordered_map<std::uint64_t, mpz_class> acc;
    acc.reserve(x.size() * y.size() / 2 + 16);
    mpz_class prod;
    for (const auto& [mx, cx] : x.terms_) {
        for (const auto& [my, cy] : y.terms_) {
            mpz_mul(prod.get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
            acc[pack(mx * my)] += prod;
        }
    }
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (c != 0) terms.emplace_back(unpack(k), std::move(c));
    std::sort(terms.begin(), terms.end(),
              [](const LaurentPoly::Term& a, const LaurentPoly::Term& b) {
                  return a.first < b.first;
              });
    LaurentPoly r;
    r.terms_ = std::move(terms);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::shifted(Monomial m) const {
    LaurentPoly r = *this;
    if (!m.is_one())
        for (auto& t : r.terms_) t.first = t.first * m;
    return r;
}

LaurentPoly LaurentPoly::times_one_minus(Monomial m, int k) const {
    LaurentPoly r = *this;
    for (int i = 0; i < k; ++i) r -= r.shifted(m);
    return r;
}

LaurentPoly LaurentPoly::negated() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentPoly LaurentPoly::invert_vars() const {
    std::vector<Term> terms(terms_.rbegin(), terms_.rend());
    for (auto& t : terms) t.first = inverse(t.first);
    LaurentPoly r;
    r.terms_ = std::move(terms);
    return r;
}

LaurentPoly LaurentPoly::invert_p() const {
    std::vector<Term> terms = terms_;
    for (auto& t : terms) t.first.eP = -t.first.eP;
    return from_terms(std::move(terms));
}

int LaurentPoly::min_eP() const {
    int r = std::numeric_limits<int>::max();
    for (const auto& t : terms_) r = std::min(r, t.first.eP);
    return r;
}

int LaurentPoly::max_eP() const {
    int r = std::numeric_limits<int>::min();
    for (const auto& t : terms_) r = std::max(r, t.first.eP);
    return r;
}

int LaurentPoly::min_eT() const {
    return terms_.empty() ? std::numeric_limits<int>::max() : terms_.front().first.eT;
}

int LaurentPoly::max_eT() const {
    return terms_.empty() ? std::numeric_limits<int>::min() : terms_.back().first.eT;
}

LaurentPoly LaurentPoly::t_slice(int eT) const {
    LaurentPoly r;
    for (const auto& t : terms_)
        if (t.first.eT == eT) r.terms_.emplace_back(Monomial{t.first.eP, 0}, t.second);
    return r;
}

mpq_class LaurentPoly::evaluate(const mpq_class& p, const mpq_class& t) const {
    auto power = [](const mpq_class& base, int e) {
        mpq_class r = 1;
        mpq_class b = e < 0 ? mpq_class(1 / base) : base;
        for (int i = 0; i < std::abs(e); ++i) r *= b;
        return r;
    };
    mpq_class r = 0;
    for (const auto& [m, c] : terms_) r += c * power(p, m.eP) * power(t, m.eT);
    return r;
}

mpz_class LaurentPoly::evaluate_int(long p) const {
    mpz_class r = 0;
    mpz_class pw;
    for (const auto& [m, c] : terms_) {
        if (m.eT != 0 || m.eP < 0)
            throw std::domain_error("evaluate_int: not a polynomial in P alone: " +
                                    to_string(*this));
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(m.eP));
        r += c * pw;
    }
    return r;
}

LaurentPoly pow(const LaurentPoly& x, int k) {
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    LaurentPoly r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

std::string to_string(const LaurentPoly& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool coef = a != 1 || m.is_one();
        if (coef) os << a;
        auto var = [&](const char* name, int e) {
            if (e == 0) return;
            if (coef) os << "*";
            os << name;
            if (e != 1) os << "^" << e;
            coef = true;
        };
        var("P", m.eP);
        var("T", m.eT);
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& x) { return os << to_string(x); }

// ---------------------------------------------------------------------------
// FactoredRat

std::vector<CycloFactor> normalize_den(std::vector<CycloFactor> den) {
    for (const auto& f : den)
        if (f.a < 0 || f.b < 1 || f.mult < 1)
            throw std::invalid_argument("invalid cyclotomic factor (a=" + std::to_string(f.a) +
                                        ", b=" + std::to_string(f.b) +
                                        ", m=" + std::to_string(f.mult) + ")");
    std::sort(den.begin(), den.end(), [](const CycloFactor& x, const CycloFactor& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    std::vector<CycloFactor> out;
    for (const auto& f : den) {
        if (!out.empty() && out.back().a == f.a && out.back().b == f.b)
            out.back().mult += f.mult;
        else
            out.push_back(f);
    }
    return out;
}

std::vector<CycloFactor> den_lcm(const std::vector<CycloFactor>& x,
                                 const std::vector<CycloFactor>& y) {
    std::map<std::pair<int, int>, int> m;
    for (const auto& f : x) m[{f.a, f.b}] = f.mult;
    for (const auto& f : y) {
        auto& slot = m[{f.a, f.b}];
        slot = std::max(slot, f.mult);
    }
    std::vector<CycloFactor> out;
    for (const auto& [k, v] : m) out.push_back({k.first, k.second, v});
    return out;
}

namespace {

// Factors of `big` not accounted for by `small`; requires small | big.
std::vector<CycloFactor> den_quotient(const std::vector<CycloFactor>& big,
                                      const std::vector<CycloFactor>& small) {
    std::map<std::pair<int, int>, int> m;
    for (const auto& f : big) m[{f.a, f.b}] += f.mult;
    for (const auto& f : small) {
        auto it = m.find({f.a, f.b});
        if (it == m.end() || it->second < f.mult)
            throw std::logic_error("den_quotient: not a divisor");
        it->second -= f.mult;
    }
    std::vector<CycloFactor> out;
    for (const auto& [k, v] : m)
        if (v > 0) out.push_back({k.first, k.second, v});
    return out;
}

LaurentPoly times_factors(LaurentPoly x, const std::vector<CycloFactor>& fs) {
    for (const auto& f : fs) x = x.times_one_minus(f.base(), f.mult);
    return x;
}

}  // namespace

FactoredRat::FactoredRat(LaurentPoly num) : num_(std::move(num)) {}

FactoredRat::FactoredRat(LaurentPoly num, std::vector<CycloFactor> den)
    : num_(std::move(num)), den_(normalize_den(std::move(den))) {}

FactoredRat FactoredRat::geometric(Monomial m) { return FactoredRat(1, {{m.eP, m.eT, 1}}); }

LaurentPoly FactoredRat::expanded_den() const { return times_factors(1, den_); }

int FactoredRat::den_degree_t() const {
    int r = 0;
    for (const auto& f : den_) r += f.b * f.mult;
    return r;
}

FactoredRat& FactoredRat::operator*=(const FactoredRat& o) {
    num_ *= o.num_;
    std::vector<CycloFactor> den = den_;
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    den_ = normalize_den(std::move(den));
    return *this;
}

FactoredRat operator+(const FactoredRat& x, const FactoredRat& y) { return sum({x, y}); }

FactoredRat sum(const std::vector<FactoredRat>& terms) {
    std::vector<CycloFactor> lcm;
    for (const auto& t : terms) lcm = den_lcm(lcm, t.den());
    LaurentPoly num;
    for (const auto& t : terms) num += times_factors(t.num(), den_quotient(lcm, t.den()));
    return FactoredRat(std::move(num), std::move(lcm));
}

bool same_value(const FactoredRat& x, const FactoredRat& y) {
    std::map<std::pair<int, int>, int> mx, my;
    for (const auto& f : x.den()) mx[{f.a, f.b}] = f.mult;
    for (const auto& f : y.den()) my[{f.a, f.b}] = f.mult;
    std::vector<CycloFactor> only_x, only_y;
    for (const auto& [k, v] : mx) {
        int w = my.count(k) ? my[k] : 0;
        if (v > w) only_x.push_back({k.first, k.second, v - w});
    }
    for (const auto& [k, v] : my) {
        int w = mx.count(k) ? mx[k] : 0;
        if (v > w) only_y.push_back({k.first, k.second, v - w});
    }
    return times_factors(x.num(), only_y) == times_factors(y.num(), only_x);
}

FactoredRat invert_vars(const FactoredRat& x) {
    Monomial shift;
    int sign_flips = 0;
    for (const auto& f : x.den()) {
        shift = shift * pow(f.base(), f.mult);
        sign_flips += f.mult;
    }
    LaurentPoly num = x.num().invert_vars().shifted(shift);
    if (sign_flips % 2) num = -num;
    return FactoredRat(std::move(num), x.den());
}

std::vector<LaurentPoly> series(const FactoredRat& x, int n) {
    if (n < 0) throw std::invalid_argument("series: negative order");
    if (!x.num().is_zero() && x.num().min_eT() < 0)
        throw std::domain_error("series: numerator has negative powers of T");
    std::vector<LaurentPoly> s(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) s[k] = x.num().t_slice(k);
    for (const auto& f : x.den()) {
        Monomial pa{f.a, 0};
        for (int m = 0; m < f.mult; ++m)
            for (int k = f.b; k <= n; ++k) s[k] += s[k - f.b].shifted(pa);
    }
    return s;
}

std::string to_string(const FactoredRat& x) {
    std::ostringstream os;
    os << "(" << to_string(x.num()) << ")";
    if (x.den().empty()) return os.str();
    os << " / (";
    bool first = true;
    for (const auto& f : x.den()) {
        if (!first) os << "*";
        first = false;
        os << "(1 - " << to_string(LaurentPoly::monomial(f.base())) << ")";
        if (f.mult != 1) os << "^" << f.mult;
    }
    os << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FactoredRat& x) { return os << to_string(x); }

}  // namespace nilzeta
