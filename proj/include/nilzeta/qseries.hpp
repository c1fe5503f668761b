#ifndef NILZETA_QSERIES_HPP
#define NILZETA_QSERIES_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "nilzeta/laurent.hpp"

namespace nilzeta {

// Gaussian binomial [a choose b]_P as a polynomial in P. Throws unless
// a >= b >= 0.
LaurentPoly gauss_binom(int a, int b);
// Same with P replaced by P^-1.
LaurentPoly gauss_binom_inv(int a, int b);

// Number of flags of dimension type I in F_p^n:
// [n, i_m] [i_m, i_{m-1}] ... [i_2, i_1], optionally at P^-1.
// I must be strictly increasing inside [1, n-1].
LaurentPoly flag_count(int n, const std::vector<int>& I, bool inverted = false);

// F_n(p, Z) = sum over I in [n-1] of b_{n,I}(p^-1) prod_{i in I} Z_i/(1 - Z_i),
// returned over the denominator prod (1 - Z_i). Requires zs.size() == n - 1
// and every Z_i with eT >= 1, eP >= 0.
FactoredRat igusa_F(int n, const std::vector<Monomial>& zs);
// Term-by-term summation over all 2^(n-1) subsets; reference for igusa_F.
FactoredRat igusa_F_by_subsets(int n, const std::vector<Monomial>& zs);

// Integer partition, parts stored in weakly decreasing order. Abelian
// p-group types written with increasing parts are normalized on input.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    // "3,2,1"; empty string is the zero partition.
    static Partition parse(const std::string& s);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    // i-th part, 1-based; zero past the end.
    int part(int i) const;
    Partition conjugate() const;
    // Young-diagram containment: this inside other.
    bool contained_in(const Partition& other) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

std::string to_string(const Partition& p);

// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

// Number of subgroups of type mu in an abelian p-group of type lambda, as a
// polynomial in P. Throws unless mu is contained in lambda.
LaurentPoly hall_alpha(const Partition& lambda, const Partition& mu);

// Exhaustive count of the same quantity for a concrete prime, by walking
// the sublattices between diag(p^lambda) and Z^n. Requires |lambda| <= 7
// and p in {2, 3}.
mpz_class hall_alpha_brute(const Partition& lambda, const Partition& mu, long p);

}  // namespace nilzeta

#endif
