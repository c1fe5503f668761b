#include "nilzeta/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nilzeta {

using i128 = __int128;

namespace {

std::int64_t mod(i128 x, std::int64_t m) {
    i128 r = x % m;
    if (r < 0) r += m;
    return static_cast<std::int64_t>(r);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// g = s*a + t*b, g >= 0
void ext_gcd(i128 a, i128 b, i128& g, i128& s, i128& t) {
    i128 s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        i128 q = a / b;
        i128 r = a - q * b;
        a = b;
        b = r;
        i128 ns = s0 - q * s1;
        s0 = s1;
        s1 = ns;
        i128 nt = t0 - q * t1;
        t0 = t1;
        t1 = nt;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    g = a;
    s = s0;
    t = t0;
}

std::int64_t inverse_mod(std::int64_t u, std::int64_t m) {
    i128 g, s, t;
    ext_gcd(u, m, g, s, t);
    if (g != 1) throw std::logic_error("inverse_mod: not invertible");
    return mod(s, m);
}

}  // namespace

std::int64_t ipow(long p, int e) {
    if (e < 0) throw std::invalid_argument("ipow: negative exponent");
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(r, static_cast<std::int64_t>(p), &r))
            throw std::overflow_error("ipow: overflow for " + std::to_string(p) + "^" +
                                      std::to_string(e));
    }
    return r;
}

int p_valuation(std::int64_t x, long p) {
    if (x == 0) throw std::domain_error("p_valuation of zero");
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// ---------------------------------------------------------------------------
// LatticeBasis

LatticeBasis::LatticeBasis(int n, std::vector<std::int64_t> entries)
    : n_(n), h_(std::move(entries)) {
    if (n < 0 || h_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("LatticeBasis: wrong entry count");
    for (int i = 0; i < n; ++i) {
        if (at(i, i) <= 0) throw std::invalid_argument("LatticeBasis: nonpositive diagonal");
        for (int j = 0; j < n; ++j) {
            if (j < i && at(i, j) != 0)
                throw std::invalid_argument("LatticeBasis: not upper triangular");
            if (j > i && (at(i, j) < 0 || at(i, j) >= at(i, i)))
                throw std::invalid_argument("LatticeBasis: entry not reduced");
        }
    }
}

LatticeBasis LatticeBasis::identity(int n) { return scaled(n, 1); }

LatticeBasis LatticeBasis::scaled(int n, std::int64_t c) {
    return diagonal(IntVec(static_cast<std::size_t>(n), c));
}

LatticeBasis LatticeBasis::diagonal(const IntVec& diag) {
    int n = static_cast<int>(diag.size());
    std::vector<std::int64_t> h(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) h[static_cast<std::size_t>(i * n + i)] = diag[i];
    return LatticeBasis(n, std::move(h));
}

IntVec LatticeBasis::column(int j) const {
    IntVec c(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i <= j; ++i) c[i] = at(i, j);
    return c;
}

std::int64_t LatticeBasis::index() const {
    std::int64_t r = 1;
    for (int i = 0; i < n_; ++i)
        if (__builtin_mul_overflow(r, at(i, i), &r))
            throw std::overflow_error("LatticeBasis::index overflow");
    return r;
}

bool LatticeBasis::contains(std::span<const std::int64_t> v) const {
    const std::int64_t det = index();
    IntVec w(v.begin(), v.end());
    for (auto& x : w) x = mod(x, det);
    for (int i = n_ - 1; i >= 0; --i) {
        const std::int64_t d = at(i, i);
        if (w[i] % d != 0) return false;
        const std::int64_t c = w[i] / d;
        if (c == 0) continue;
        for (int k = 0; k < i; ++k) w[k] = mod(static_cast<i128>(w[k]) - static_cast<i128>(c) * at(k, i), det);
    }
    return true;
}

bool LatticeBasis::contains(const LatticeBasis& sub) const {
    for (int j = 0; j < sub.rank(); ++j) {
        IntVec c = sub.column(j);
        if (!contains(c)) return false;
    }
    return true;
}

IntVec LatticeBasis::coordinates(std::span<const std::int64_t> v) const {
    IntVec w(v.begin(), v.end());
    IntVec c(static_cast<std::size_t>(n_), 0);
    for (int i = n_ - 1; i >= 0; --i) {
        const std::int64_t d = at(i, i);
        if (w[i] % d != 0) throw std::domain_error("coordinates: vector not in lattice");
        c[i] = w[i] / d;
        for (int k = 0; k <= i; ++k) w[k] -= c[i] * at(k, i);
    }
    return c;
}

std::string to_string(const LatticeBasis& b) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < b.rank(); ++i) {
        if (i) os << "; ";
        for (int j = 0; j < b.rank(); ++j) os << (j ? " " : "") << b.at(i, j);
    }
    os << "]";
    return os.str();
}

LatticeBasis hnf_from_generators(int n, const std::vector<IntVec>& gens, std::int64_t modulus) {
    if (modulus <= 0) throw std::invalid_argument("hnf_from_generators: modulus must be positive");
    std::vector<IntVec> work;
    work.reserve(gens.size());
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != n)
            throw std::invalid_argument("hnf_from_generators: generator length mismatch");
        IntVec r(g.size());
        bool nonzero = false;
        for (std::size_t k = 0; k < g.size(); ++k) {
            r[k] = mod(g[k], modulus);
            nonzero |= r[k] != 0;
        }
        if (nonzero) work.push_back(std::move(r));
    }

    std::vector<std::int64_t> h(static_cast<std::size_t>(n * n), 0);
    for (int i = n - 1; i >= 0; --i) {
        IntVec pv(static_cast<std::size_t>(n), 0);
        pv[i] = modulus;
        for (auto& c : work) {
            if (c[i] == 0) continue;
            i128 g, s, t;
            ext_gcd(pv[i], c[i], g, s, t);
            const i128 a = pv[i] / g;
            const i128 b = c[i] / g;
            for (int k = 0; k < i; ++k) {
                i128 x = pv[k], y = c[k];
                pv[k] = mod(s * x + t * y, modulus);
                c[k] = mod(b * x - a * y, modulus);
            }
            pv[i] = static_cast<std::int64_t>(g);
            c[i] = 0;
        }
        for (int k = 0; k <= i; ++k) h[static_cast<std::size_t>(k * n + i)] = pv[k];
    }
    // Reduce entries above the diagonal modulo the row pivot.
    for (int j = 0; j < n; ++j) {
        for (int i = j - 1; i >= 0; --i) {
            const std::int64_t d = h[static_cast<std::size_t>(i * n + i)];
            const std::int64_t q = floor_div(h[static_cast<std::size_t>(i * n + j)], d);
            if (q == 0) continue;
            for (int k = 0; k <= i; ++k)
                h[static_cast<std::size_t>(k * n + j)] -= q * h[static_cast<std::size_t>(k * n + i)];
        }
    }
    return LatticeBasis(n, std::move(h));
}

// ---------------------------------------------------------------------------
// Smith normal form over Z_p, computed modulo p^(det_valuation + 1).

std::vector<int> elementary_divisor_exponents(int n, std::vector<std::int64_t> a, long p,
                                              int det_valuation) {
    if (a.size() != static_cast<std::size_t>(n * n))
        throw std::invalid_argument("elementary_divisor_exponents: wrong entry count");
    const std::int64_t m = ipow(p, det_valuation + 1);
    for (auto& x : a) x = mod(x, m);
    auto A = [&](int i, int j) -> std::int64_t& { return a[static_cast<std::size_t>(i * n + j)]; };

    std::vector<int> exps;
    int total = 0;
    for (int t = 0; t < n; ++t) {
        int bi = -1, bj = -1, bv = det_valuation + 1;
        for (int i = t; i < n && bv > 0; ++i)
            for (int j = t; j < n; ++j) {
                if (A(i, j) == 0) continue;
                int v = p_valuation(A(i, j), p);
                if (v < bv) {
                    bv = v;
                    bi = i;
                    bj = j;
                    if (v == 0) break;
                }
            }
        if (bi < 0)
            throw std::domain_error("elementary_divisor_exponents: determinant valuation too small");
        if (bi != t)
            for (int j = 0; j < n; ++j) std::swap(A(bi, j), A(t, j));
        if (bj != t)
            for (int i = 0; i < n; ++i) std::swap(A(i, bj), A(i, t));
        const std::int64_t pv = ipow(p, bv);
        const std::int64_t uinv = inverse_mod(A(t, t) / pv, m);
        for (int i = t + 1; i < n; ++i) {
            if (A(i, t) == 0) continue;
            const std::int64_t f = mod(static_cast<i128>(A(i, t) / pv) * uinv, m);
            for (int j = t; j < n; ++j) A(i, j) = mod(A(i, j) - static_cast<i128>(f) * A(t, j), m);
        }
        for (int j = t + 1; j < n; ++j) {
            if (A(t, j) == 0) continue;
            const std::int64_t f = mod(static_cast<i128>(A(t, j) / pv) * uinv, m);
            for (int i = t; i < n; ++i) A(i, j) = mod(A(i, j) - static_cast<i128>(f) * A(i, t), m);
        }
        exps.push_back(bv);
        total += bv;
    }
    if (total != det_valuation)
        throw std::domain_error("elementary_divisor_exponents: determinant is not p^" +
                                std::to_string(det_valuation));
    std::sort(exps.begin(), exps.end());
    return exps;
}

std::vector<int> elementary_divisor_exponents(const LatticeBasis& b, long p) {
    int v = 0;
    for (int i = 0; i < b.rank(); ++i) {
        std::int64_t d = b.at(i, i);
        int e = p_valuation(d, p);
        if (ipow(p, e) != d)
            throw std::domain_error("lattice index is not a power of " + std::to_string(p));
        v += e;
    }
    return elementary_divisor_exponents(b.rank(), b.entries(), p, v);
}

// ---------------------------------------------------------------------------
// Types

LatticeType type_from_exponents(const std::vector<int>& e) {
    LatticeType t;
    if (e.empty()) return t;
    t.r0 = e.front();
    for (std::size_t k = 1; k < e.size(); ++k) {
        if (e[k] < e[k - 1]) throw std::invalid_argument("type_from_exponents: not ascending");
        if (e[k] > e[k - 1]) {
            t.jumps.push_back(static_cast<int>(k));
            t.heights.push_back(e[k] - e[k - 1]);
        }
    }
    return t;
}

std::vector<int> exponents_from_type(const LatticeType& t, int n) {
    if (t.jumps.size() != t.heights.size())
        throw std::invalid_argument("exponents_from_type: jumps/heights mismatch");
    std::vector<int> e;
    int level = t.r0;
    int pos = 0;
    for (std::size_t k = 0; k < t.jumps.size(); ++k) {
        if (t.jumps[k] <= pos || t.jumps[k] > n || t.heights[k] < 1)
            throw std::invalid_argument("exponents_from_type: malformed type");
        e.insert(e.end(), static_cast<std::size_t>(t.jumps[k] - pos), level);
        pos = t.jumps[k];
        level += t.heights[k];
    }
    e.insert(e.end(), static_cast<std::size_t>(n - pos), level);
    return e;
}

LatticeType lattice_type(const LatticeBasis& b, long p) {
    return type_from_exponents(elementary_divisor_exponents(b, p));
}

LatticeType lattice_type(const LatticeBasis& b) {
    std::int64_t idx = b.index();
    if (idx == 1) return {};
    long p = 2;
    while (idx % p != 0) ++p;
    std::int64_t r = idx;
    while (r % p == 0) r /= p;
    if (r != 1) throw std::domain_error("lattice_type: index " + std::to_string(idx) +
                                        " is not a prime power");
    return lattice_type(b, p);
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<IntVec> diagonal_compositions(int n, int e, const IntVec& bound) {
    std::vector<IntVec> out;
    IntVec cur(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            if (left <= bound[i]) {
                cur[i] = left;
                out.push_back(cur);
            }
            return;
        }
        for (int v = 0; v <= std::min<std::int64_t>(left, bound[i]); ++v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
    };
    if (n == 0) {
        if (e == 0) out.emplace_back();
        return out;
    }
    rec(0, e);
    return out;
}

class HnfOdometer {
public:
    static void run(long p, const IntVec& exps,
                    const std::function<void(const LatticeBasis&)>& visit) {
        const int n = static_cast<int>(exps.size());
        LatticeBasis b;
        b.n_ = n;
        b.h_.assign(static_cast<std::size_t>(n * n), 0);
        std::vector<std::size_t> slots;
        std::vector<std::int64_t> limits;
        for (int i = 0; i < n; ++i) {
            const std::int64_t d = ipow(p, static_cast<int>(exps[i]));
            b.h_[static_cast<std::size_t>(i * n + i)] = d;
            if (d == 1) continue;
            for (int j = i + 1; j < n; ++j) {
                slots.push_back(static_cast<std::size_t>(i * n + j));
                limits.push_back(d);
            }
        }
        for (;;) {
            visit(b);
            std::size_t k = 0;
            for (; k < slots.size(); ++k) {
                if (++b.h_[slots[k]] < limits[k]) break;
                b.h_[slots[k]] = 0;
            }
            if (k == slots.size()) return;
        }
    }
};

void for_each_hnf(long p, const IntVec& exps,
                  const std::function<void(const LatticeBasis&)>& visit) {
    HnfOdometer::run(p, exps, visit);
}

void for_each_sublattice(int n, long p, int e,
                         const std::function<void(const LatticeBasis&)>& visit) {
    if (n < 1 || e < 0) throw std::invalid_argument("for_each_sublattice: need n >= 1, e >= 0");
    for (const auto& c : diagonal_compositions(n, e, IntVec(static_cast<std::size_t>(n), e)))
        for_each_hnf(p, c, visit);
}

std::vector<LatticeBasis> sublattices(int n, long p, int e) {
    if (sublattice_count(n, p, e) > 2e7)
        throw ResourceGuardError("sublattices: more than 2e7 lattices requested");
    std::vector<LatticeBasis> out;
    for_each_sublattice(n, p, e, [&](const LatticeBasis& b) { out.push_back(b); });
    return out;
}

double hnf_count(long p, const IntVec& exps) {
    double r = 1;
    const int n = static_cast<int>(exps.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r *= static_cast<double>(ipow(p, static_cast<int>(exps[i])));
    return r;
}

double sublattice_count(int n, long p, int e) {
    double r = 0;
    for (const auto& c : diagonal_compositions(n, e, IntVec(static_cast<std::size_t>(n), e)))
        r += hnf_count(p, c);
    return r;
}

void for_each_superlattice(const LatticeBasis& sub, long p, int e,
                           const std::function<void(const LatticeBasis&)>& visit) {
    const int n = sub.rank();
    IntVec bound(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const std::int64_t d = sub.at(i, i);
        bound[i] = p_valuation(d, p);
        if (ipow(p, static_cast<int>(bound[i])) != d)
            throw std::domain_error("for_each_superlattice: index is not a power of p");
    }
    for (const auto& c : diagonal_compositions(n, e, bound))
        for_each_hnf(p, c, [&](const LatticeBasis& m) {
            if (m.contains(sub)) visit(m);
        });
}

}  // namespace nilzeta
