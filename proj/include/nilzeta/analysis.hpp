#ifndef NILZETA_ANALYSIS_HPP
#define NILZETA_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nilzeta/laurent.hpp"
#include "nilzeta/zetacore.hpp"

namespace nilzeta {

using RationalNumber = mpq_class;

// num/den in canonical form; mpq comparisons assume canonical operands.
RationalNumber make_rational(long num, long den);

// "51/10", or "3" for integers.
std::string to_string(const RationalNumber& q);
RationalNumber parse_rational(const std::string& s);

struct FuneqCertificate {
    int d = 0;
    FactoredRat left;   // W(P^-1, T^-1)
    FactoredRat right;  // sign * P^pExp * T^tExp * W(P, T)
    int sign = 1;
    int pExp = 0;
    int tExp = 0;
    bool verdict = false;
};

// W(P^-1, T^-1) = (-1)^h P^binom(h,2) T^(h+d) W(P, T).
FuneqCertificate verify_funeq(int d, int workers = 0);

// A(P^-1, T^-1) = (-1)^(d'-1) P^binom(d',2) A(P, T) for a single summand.
bool verify_funeq_summand(const SubsetPair& pair, const ZetaParams& params);

struct AbscissaResult {
    RationalNumber alpha;
    std::optional<int> argmax;  // the j attaining alpha; empty means d itself
    bool unique = true;
};

// max{ d, ((d'-j)(d+j)+1)/(h-j) : 1 <= j <= d'-1 }
AbscissaResult abscissa(int d);

// (d^3-d^2+2)/(4d) <= alpha <= max{d, (d-1)(d+1)/2}
bool gss_bounds_check(int d);

// (i(d-i) + (d'-j)(d+j-phi(i)) + 1) / (d+d'-j-i); phi extended to rational i
// by the same polynomial. Throws std::domain_error on a zero denominator.
RationalNumber f_d(const RationalNumber& i, const RationalNumber& j, int d);

struct GridMax {
    RationalNumber value;
    int i = 0;
    int j = 0;
    bool onLineZero = false;  // some maximizer has i = 0
};

// Maximum of f_d over [0, d-2] x [1, d'-1]; d >= 3.
GridMax grid_max(int d);
bool grid_argmax_check(int d);
// Weaker form: the grid maximum does not exceed abscissa(d).
bool grid_below_abscissa(int d);

struct RatioEntry {
    int a = 0;  // P-exponent (c for numerator monomials)
    int b = 0;  // T-exponent
    RationalNumber ratio;  // (a+1)/b
};

struct SummandRatios {
    SubsetPair pair;
    std::vector<RatioEntry> den;  // includes the prefactors
    std::vector<RatioEntry> num;  // monomials with positive T-degree
};

struct DominanceReport {
    int d = 0;
    std::vector<SummandRatios> summands;
    RationalNumber denMax;
    RationalNumber numMax;
    std::vector<std::string> denArgmax;  // pair keys attaining denMax
    bool cyclotomicDen = false;  // every denominator factor has a >= 0, b >= 1
    bool attainedInA0 = false;
    bool strict = false;         // numMax < denMax
    bool matchesAbscissa = false;

    bool passed() const { return cyclotomicDen && attainedInA0 && strict && matchesAbscissa; }
};

DominanceReport dominance_check(int d, int workers = 0);

// d in [2, d_max] with 2d^3 + 6d^2 - 3 an odd perfect square.
std::vector<long> square_check(long d_max);

// No j in [1, d'-2] with f_d(0, j) = f_d(0, j+1); d >= 3.
bool adjacent_equality_check(long d);

}  // namespace nilzeta

#endif
