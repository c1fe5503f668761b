#ifndef NILZETA_LATTICE_HPP
#define NILZETA_LATTICE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilzeta {

using IntVec = std::vector<std::int64_t>;

// Thrown when an enumeration would exceed its size budget.
class ResourceGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Full-rank sublattice of Z^n in column Hermite normal form. Column j is a
// basis vector supported on rows 0..j; the diagonal is positive and every
// entry H(i, j), j > i, lies in [0, H(i, i)).
class LatticeBasis {
public:
    LatticeBasis() = default;
    // Row-major entries; throws if they are not in Hermite normal form.
    LatticeBasis(int n, std::vector<std::int64_t> entries);

    static LatticeBasis identity(int n);
    static LatticeBasis scaled(int n, std::int64_t c);
    static LatticeBasis diagonal(const IntVec& diag);

    int rank() const { return n_; }
    std::int64_t at(int i, int j) const { return h_[static_cast<std::size_t>(i * n_ + j)]; }
    IntVec column(int j) const;
    const std::vector<std::int64_t>& entries() const { return h_; }
    // Product of the diagonal.
    std::int64_t index() const;

    bool contains(std::span<const std::int64_t> v) const;
    bool contains(const LatticeBasis& sub) const;
    // Integer coordinates of v in this basis; throws if v is not a member.
    IntVec coordinates(std::span<const std::int64_t> v) const;

    bool operator==(const LatticeBasis&) const = default;

private:
    friend class HnfOdometer;
    int n_ = 0;
    std::vector<std::int64_t> h_;
};

std::string to_string(const LatticeBasis& b);

// HNF of the lattice spanned by `gens` (vectors of length n). `modulus` must
// satisfy modulus * Z^n contained in the lattice; arithmetic is reduced
// modulo it.
LatticeBasis hnf_from_generators(int n, const std::vector<IntVec>& gens, std::int64_t modulus);

int p_valuation(std::int64_t x, long p);
std::int64_t ipow(long p, int e);

// Elementary divisor exponents (ascending) of a square integer matrix whose
// determinant is +-p^det_valuation.
std::vector<int> elementary_divisor_exponents(int n, std::vector<std::int64_t> matrix, long p,
                                              int det_valuation);
std::vector<int> elementary_divisor_exponents(const LatticeBasis& b, long p);

// Elementary-divisor type (I, r): r0 is the smallest exponent, and each jump
// position i in I (1-based count of divisors below the jump) carries the
// height of the jump. Position n is permitted and contributes no divisors.
struct LatticeType {
    std::vector<int> jumps;
    int r0 = 0;
    std::vector<int> heights;  // parallel to jumps

    bool maximal() const { return r0 == 0; }
    bool operator==(const LatticeType&) const = default;
};

LatticeType type_from_exponents(const std::vector<int>& ascending);
std::vector<int> exponents_from_type(const LatticeType& t, int n);
// Rejects lattices whose index is not a prime power.
LatticeType lattice_type(const LatticeBasis& b);
LatticeType lattice_type(const LatticeBasis& b, long p);

// Exponent vectors (e_0..e_{n-1}) with sum e and e_i <= bound[i].
std::vector<IntVec> diagonal_compositions(int n, int e, const IntVec& bound);

// Visits every HNF with the given diagonal p^{exps[i]}.
void for_each_hnf(long p, const IntVec& exps,
                  const std::function<void(const LatticeBasis&)>& visit);

// Every sublattice of Z^n of index p^e, each exactly once.
void for_each_sublattice(int n, long p, int e,
                         const std::function<void(const LatticeBasis&)>& visit);
std::vector<LatticeBasis> sublattices(int n, long p, int e);

// Number of HNFs for the given diagonal, i.e. prod p^{e_i (n - 1 - i)}.
double hnf_count(long p, const IntVec& exps);
double sublattice_count(int n, long p, int e);

// Every lattice M with sub contained in M, [Z^n : M] = p^e.
void for_each_superlattice(const LatticeBasis& sub, long p, int e,
                           const std::function<void(const LatticeBasis&)>& visit);

}  // namespace nilzeta

#endif
