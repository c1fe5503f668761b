#ifndef NILZETA_LIEORACLE_HPP
#define NILZETA_LIEORACLE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nilzeta/laurent.hpp"
#include "nilzeta/lattice.hpp"
#include "nilzeta/zetacore.hpp"

namespace nilzeta {

// Free class-2 nilpotent Lie ring on x_1..x_d. Coordinates are ordered
// x_1..x_d, then y_kl (k < l) lexicographically; [x_k, x_l] = y_kl and the
// y_kl are central.
class LieStructure {
public:
    explicit LieStructure(int d);

    int d() const { return d_; }
    int centre_rank() const { return d_ * (d_ - 1) / 2; }
    int rank() const { return d_ + centre_rank(); }
    // Position of y_kl inside the centre, 0-based k < l.
    int centre_index(int k, int l) const;

    // Structure constant: [x_k, x_l] = sign * y_{centre}; sign 0 when k == l.
    struct Bracket {
        int sign = 0;
        int centre = -1;
    };
    Bracket bracket_of_generators(int k, int l) const;

    // [u, v] for full-rank coordinate vectors; the result lies in the centre
    // and is returned in full coordinates.
    IntVec bracket(std::span<const std::int64_t> u, std::span<const std::int64_t> v) const;
    // [u, x_k] in centre coordinates, u given by its first d coordinates.
    IntVec bracket_with_generator(std::span<const std::int64_t> u, int k) const;

private:
    int d_;
};

LieStructure build_lie_ring(int d);

// [lbar, L] inside the centre, for a full-rank lbar in Z^d.
LatticeBasis commutator_image(const LatticeBasis& lbar, const LieStructure& lie);

struct PhiTypeReport {
    int trials = 0;
    int failures = 0;
    std::string first_failure;
    bool passed() const { return failures == 0; }
};

// Random sublattices lbar of Z^d (p alternating 2, 3; diagonal exponents
// up to 3): the divisor exponents of [lbar, L] must be those obtained by
// moving every jump s of type(lbar) to phi(s) with unchanged heights.
PhiTypeReport phi_type_law_check(int d, int trials, std::uint64_t seed = 20061);

struct CountTable {
    long p = 0;
    std::vector<mpz_class> counts;  // counts[n] for index p^n

    bool operator==(const CountTable&) const = default;
};

// Series coefficients of x at P = p, through T^n.
CountTable series_at_prime(const FactoredRat& x, long p, int n);

// Ideals of index p^n, n <= N, of the rank-h Lie ring by exhaustive HNF
// enumeration. Allowed for d = 2 (N <= 10) and d = 3 (N <= 3), and only
// while the enumeration stays under 2e8 lattices.
CountTable count_ideals_direct(int d, long p, int N, int workers = 0);

// Same counts from pairs (lbar, M), phi(lbar) in M, weighted by
// [centre : M]^d. Allowed for d <= 4 while the lbar enumeration stays under
// 5e7 lattices.
CountTable count_ideals_pairs(int d, long p, int N, int workers = 0);

// Pair counts restricted to maximal M, split by the overlap invariant
// (I(lbar, M), J(lbar, M)); keys are pair_key strings. Allowed for d <= 3
// with N <= 6 and for d = 4 with N <= 5.
std::map<std::string, CountTable> stratified_counts(int d, long p, int N, int workers = 0);

// Overlap invariant for types of lbar (rank d) and a maximal M.
SubsetPair overlap_invariant(const LatticeType& lbar_type, const LatticeType& m_type);

// Convolution of a stratified total with the geometric series of
// p^{dd'} T^{d+d'}.
CountTable convolve_centre_factor(const CountTable& t, int d, int N);

}  // namespace nilzeta

#endif
