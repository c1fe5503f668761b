#ifndef NILZETA_ZETACORE_HPP
#define NILZETA_ZETACORE_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "nilzeta/laurent.hpp"

namespace nilzeta {

// Free class-2 nilpotent group on d generators: d' = d(d-1)/2 central
// generators, Hirsch length h = d + d'.
struct ZetaParams {
    int d = 2;
    int dPrime = 1;
    int hirsch = 3;

    explicit ZetaParams(int d);
};

// phi(i) = i*d - i(i+1)/2 for 0 <= i <= d - 1.
int phi(int i, const ZetaParams& params);

// Index sets I in [d-2], J in [d'-1], |I| = |J|, phi(i_r) <= j_r.
struct SubsetPair {
    std::vector<int> I;
    std::vector<int> J;

    int height() const { return static_cast<int>(I.size()); }
    auto operator<=>(const SubsetPair&) const = default;
};

std::string to_string(const SubsetPair& pair);
// "I=1,2|J=3,5"
std::string pair_key(const SubsetPair& pair);
SubsetPair parse_pair_key(const std::string& key);

bool is_admissible(const SubsetPair& pair, const ZetaParams& params);

// All admissible pairs, ordered by |I| and then lexicographically.
std::vector<SubsetPair> enumerate_pairs(const ZetaParams& params);

// The order on phi([d-2]_0) (side A) and [d'-1]_0 u {d'} (side B) induced by
// (phi(I), J). The zeros are minimal and d' on side B is maximal.
enum class Side { A, B };

struct Tagged {
    int value = 0;
    Side side = Side::A;
    bool operator==(const Tagged&) const = default;
};

// Case rules of the order, evaluated directly.
bool merged_order_less(Tagged x, Tagged y, const SubsetPair& pair, const ZetaParams& params);

class MergedOrder {
public:
    MergedOrder(const SubsetPair& pair, const ZetaParams& params);

    // Ascending list of the whole tagged domain.
    const std::vector<Tagged>& ascending() const { return elems_; }
    int rank(Tagged x) const;
    bool less(Tagged x, Tagged y) const { return rank(x) < rank(y); }

    // min { j in J u {d'} : phi(i) < j }
    int j_of_i(int i) const;
    // max { i in I u {0} : phi(i) < j }
    int i_of_j(int j) const;

private:
    SubsetPair pair_;
    ZetaParams params_;
    std::vector<Tagged> elems_;
    std::map<std::pair<int, int>, int> rank_;
};

// p^{i(d-i) + (d'-j)(d+j-phi(i))} T^{d-i+d'-j}: every piece of numerical data
// has this shape for some (i, j).
Monomial numerical_monomial(int i, int j, const ZetaParams& params);

struct NumericalData {
    std::map<int, Monomial> X;       // j in [d'-1]
    std::map<int, Monomial> Y;       // i in [d-2]
    std::map<int, Monomial> Yprime;  // r in [h]
};

NumericalData numerical_data(const SubsetPair& pair, const ZetaParams& params);

// Summand A_{I,J}(P, T).
FactoredRat term_A_IJ(const SubsetPair& pair, const ZetaParams& params);

// All summands, in enumerate_pairs order. workers <= 0 picks a default.
std::vector<FactoredRat> all_terms(const ZetaParams& params, int workers = 0);

// A(P, T) = sum of the summands over a common denominator.
FactoredRat sum_A(const ZetaParams& params, int workers = 0);

// prod_{i<n} 1/(1 - P^i T)
FactoredRat zeta_free_abelian(int n);

// 1 / (1 - P^{dd'} T^{d+d'})
FactoredRat zeta_centre_factor(const ZetaParams& params);

// W_d(P, T) = zeta_free_abelian(d) * zeta_centre_factor * A.
FactoredRat local_zeta(const ZetaParams& params, int workers = 0);

// Number of worker threads: explicit value if positive, else NILZETA_WORKERS,
// else hardware concurrency.
int resolve_workers(int requested);

}  // namespace nilzeta

#endif
