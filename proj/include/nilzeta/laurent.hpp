#ifndef NILZETA_LAURENT_HPP
#define NILZETA_LAURENT_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace nilzeta {

// P stands for the prime p and T for p^{-s}.
struct Monomial {
    int eP = 0;
    int eT = 0;

    bool operator==(const Monomial&) const = default;
    // Storage order: by T-degree first, then P-degree.
    std::strong_ordering operator<=>(const Monomial& o) const {
        if (auto c = eT <=> o.eT; c != 0) return c;
        return eP <=> o.eP;
    }

    bool is_one() const { return eP == 0 && eT == 0; }
};

// Exponent arithmetic is checked; overflow throws std::overflow_error.
Monomial operator*(Monomial x, Monomial y);
Monomial pow(Monomial x, int k);
inline Monomial inverse(Monomial x) { return {-x.eP, -x.eT}; }

// Exact bivariate Laurent polynomial with integer coefficients.
// Terms are kept sorted by Monomial order with no zero coefficients.
class LaurentPoly {
public:
    using Term = std::pair<Monomial, mpz_class>;

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT: implicit constant
    LaurentPoly(const mpz_class& c);  // NOLINT
    LaurentPoly(std::initializer_list<Term> terms);

    static LaurentPoly monomial(Monomial m, const mpz_class& c = 1);
    // Accepts unsorted input with repeated monomials and zeros.
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    mpz_class coefficient(Monomial m) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    // this * m
    LaurentPoly shifted(Monomial m) const;
    // this * (1 - m)^k, computed by repeated merges
    LaurentPoly times_one_minus(Monomial m, int k = 1) const;
    LaurentPoly negated() const;

    // (P, T) -> (P^-1, T^-1)
    LaurentPoly invert_vars() const;
    // P -> P^-1 only
    LaurentPoly invert_p() const;

    int min_eP() const;
    int max_eP() const;
    int min_eT() const;
    int max_eT() const;

    // Restricts to the terms of a given T-degree, returned with eT = 0.
    LaurentPoly t_slice(int eT) const;
    mpq_class evaluate(const mpq_class& p, const mpq_class& t) const;
    // Value at P = p of a polynomial with no T and no negative P powers.
    mpz_class evaluate_int(long p) const;

    bool operator==(const LaurentPoly& o) const = default;

    friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
    friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
    friend LaurentPoly operator-(const LaurentPoly& x) { return x.negated(); }

private:
    std::vector<Term> terms_;
};

LaurentPoly pow(const LaurentPoly& x, int k);

std::string to_string(const LaurentPoly& x);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& x);

// (1 - P^a T^b)^mult
struct CycloFactor {
    int a = 0;
    int b = 1;
    int mult = 1;

    bool operator==(const CycloFactor&) const = default;
    Monomial base() const { return {a, b}; }
};

// Numerator over a product of (1 - P^a T^b)^m factors. The denominator is
// never expanded; it is stored sorted by (a, b) with repeated bases merged.
class FactoredRat {
public:
    FactoredRat() : num_(1) {}
    FactoredRat(LaurentPoly num);  // NOLINT
    FactoredRat(LaurentPoly num, std::vector<CycloFactor> den);

    // 1 / (1 - P^a T^b)
    static FactoredRat geometric(Monomial m);

    const LaurentPoly& num() const { return num_; }
    const std::vector<CycloFactor>& den() const { return den_; }
    LaurentPoly expanded_den() const;
    int den_degree_t() const;

    FactoredRat& operator*=(const FactoredRat& o);
    friend FactoredRat operator*(FactoredRat x, const FactoredRat& y) { return x *= y; }
    friend FactoredRat operator+(const FactoredRat& x, const FactoredRat& y);

    // Structural equality (same numerator, same denominator multiset).
    bool operator==(const FactoredRat& o) const = default;

private:
    LaurentPoly num_;
    std::vector<CycloFactor> den_;
};

std::vector<CycloFactor> normalize_den(std::vector<CycloFactor> den);
// Elementwise max of multiplicities.
std::vector<CycloFactor> den_lcm(const std::vector<CycloFactor>& x,
                                 const std::vector<CycloFactor>& y);

// Sum over a shared least common denominator, one numerator expansion per
// summand. Equivalent to folding operator+ left to right.
FactoredRat sum(const std::vector<FactoredRat>& terms);

// Semantic equality by cross-multiplication; factors common to both
// denominators are cancelled first.
bool same_value(const FactoredRat& x, const FactoredRat& y);

// x(P^-1, T^-1), rewritten over the same denominator via
// 1/(1 - Z^-1) = -Z/(1 - Z).
FactoredRat invert_vars(const FactoredRat& x);

// Coefficients of T^0..T^n of the power series in T. Each coefficient has
// eT = 0. Throws if the numerator has negative T powers.
std::vector<LaurentPoly> series(const FactoredRat& x, int n);

std::string to_string(const FactoredRat& x);
std::ostream& operator<<(std::ostream& os, const FactoredRat& x);

}  // namespace nilzeta

#endif
