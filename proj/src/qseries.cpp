#include "nilzeta/qseries.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "nilzeta/lattice.hpp"

namespace nilzeta {

LaurentPoly gauss_binom(int a, int b) {
    if (a < 0 || b < 0 || b > a)
        throw std::invalid_argument("gauss_binom: need a >= b >= 0, got (" + std::to_string(a) +
                                    "," + std::to_string(b) + ")");
    // row[k] = [r choose k]; [r, k] = [r-1, k-1] + P^k [r-1, k]
    std::vector<LaurentPoly> row{LaurentPoly(1)};
    for (int r = 1; r <= a; ++r) {
        std::vector<LaurentPoly> next(static_cast<std::size_t>(r) + 1);
        next[0] = 1;
        next[r] = 1;
        for (int k = 1; k < r; ++k) next[k] = row[k - 1] + row[k].shifted({k, 0});
        row = std::move(next);
    }
    return row[b];
}

LaurentPoly gauss_binom_inv(int a, int b) { return gauss_binom(a, b).invert_p(); }

LaurentPoly flag_count(int n, const std::vector<int>& I, bool inverted) {
    if (n < 1) throw std::invalid_argument("flag_count: n must be positive");
    for (std::size_t k = 0; k < I.size(); ++k) {
        if (I[k] < 1 || I[k] > n - 1 || (k > 0 && I[k] <= I[k - 1]))
            throw std::invalid_argument("flag_count: index set must be increasing in [1, n-1]");
    }
    LaurentPoly r = 1;
    int top = n;
    for (auto it = I.rbegin(); it != I.rend(); ++it) {
        r *= inverted ? gauss_binom_inv(top, *it) : gauss_binom(top, *it);
        top = *it;
    }
    return r;
}

namespace {

void check_igusa_args(int n, const std::vector<Monomial>& zs) {
    if (n < 1) throw std::invalid_argument("igusa_F: n must be positive");
    if (static_cast<int>(zs.size()) != n - 1)
        throw std::invalid_argument("igusa_F: expected " + std::to_string(n - 1) +
                                    " variables, got " + std::to_string(zs.size()));
    for (const auto& z : zs)
        if (z.eT < 1 || z.eP < 0)
            throw std::invalid_argument("igusa_F: variables need eT >= 1 and eP >= 0");
}

std::vector<CycloFactor> window_den(const std::vector<Monomial>& zs) {
    std::vector<CycloFactor> den;
    for (const auto& z : zs) den.push_back({z.eP, z.eT, 1});
    return den;
}

}  // namespace

FactoredRat igusa_F(int n, const std::vector<Monomial>& zs) {
    check_igusa_args(n, zs);
    // G[k] is the numerator of F_k(p, (Z_1..Z_{k-1})) over prod_{i<k} (1 - Z_i),
    // grouped by the largest element m of I:
    // G[k] = prod_{i<k} (1 - Z_i) + sum_m [k, m]_{p^-1} Z_m prod_{m<i<k} (1 - Z_i) G[m].
    std::vector<LaurentPoly> G(static_cast<std::size_t>(n) + 1);
    G[1] = 1;
    for (int k = 2; k <= n; ++k) {
        LaurentPoly acc;
        LaurentPoly tail = 1;  // prod_{m<i<k} (1 - Z_i)
        for (int m = k - 1; m >= 1; --m) {
            acc += (gauss_binom_inv(k, m) * G[m]).shifted(zs[m - 1]) * tail;
            tail = tail.times_one_minus(zs[m - 1]);
        }
        G[k] = acc + tail;
    }
    return FactoredRat(G[n], window_den(zs));
}

FactoredRat igusa_F_by_subsets(int n, const std::vector<Monomial>& zs) {
    check_igusa_args(n, zs);
    LaurentPoly num;
    const int k = n - 1;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> I;
        LaurentPoly term = 1;
        for (int i = 1; i <= k; ++i) {
            if (mask & (1u << (i - 1))) {
                I.push_back(i);
                term = term.shifted(zs[i - 1]);
            } else {
                term = term.times_one_minus(zs[i - 1]);
            }
        }
        num += flag_count(n, I, true) * term;
    }
    return FactoredRat(num, window_den(zs));
}

// ---------------------------------------------------------------------------
// Partitions

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_)
        if (x < 0) throw std::invalid_argument("Partition: negative part");
    std::erase(parts_, 0);
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (tok.find_first_not_of(" \t", used) != std::string::npos)
            throw std::invalid_argument("Partition::parse: bad part '" + tok + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

int Partition::size() const {
    int s = 0;
    for (int x : parts_) s += x;
    return s;
}

int Partition::part(int i) const {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int x : parts_)
        for (int j = 0; j < x; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

bool Partition::contained_in(const Partition& other) const {
    if (length() > other.length()) return false;
    for (int i = 1; i <= length(); ++i)
        if (part(i) > other.part(i)) return false;
    return true;
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (int i = 0; i < p.length(); ++i) s += (i ? "," : "") + std::to_string(p.parts()[i]);
    return s + ")";
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int x = std::min(left, maxp); x >= 1; --x) {
            cur.push_back(x);
            rec(left - x, x);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// ---------------------------------------------------------------------------
// Subgroup counts of abelian p-groups

LaurentPoly hall_alpha(const Partition& lambda, const Partition& mu) {
    if (!mu.contained_in(lambda))
        throw std::invalid_argument("hall_alpha: " + to_string(mu) + " is not contained in " +
                                    to_string(lambda));
    const Partition lc = lambda.conjugate();
    const Partition mc = mu.conjugate();
    LaurentPoly r = 1;
    for (int j = 1; j <= lc.length(); ++j) {
        const int l = lc.part(j);
        const int m = mc.part(j);
        const int m_next = mc.part(j + 1);
        r = (r * gauss_binom_inv(l - m_next, l - m)).shifted({m * (l - m), 0});
    }
    return r;
}

mpz_class hall_alpha_brute(const Partition& lambda, const Partition& mu, long p) {
    if (lambda.size() > 7) throw ResourceGuardError("hall_alpha_brute: |lambda| > 7");
    if (p != 2 && p != 3) throw std::invalid_argument("hall_alpha_brute: p must be 2 or 3");
    if (!mu.contained_in(lambda))
        throw std::invalid_argument("hall_alpha_brute: " + to_string(mu) +
                                    " is not contained in " + to_string(lambda));
    const int n = lambda.length();
    if (n == 0) return 1;

    IntVec diag;
    for (int x : lambda.parts()) diag.push_back(ipow(p, x));
    const LatticeBasis defining = LatticeBasis::diagonal(diag);

    // Subgroups H of Z^n / K correspond to lattices K <= L <= Z^n, and
    // H = L / K has the type given by the Smith form of L^-1 K.
    mpz_class count = 0;
    for_each_superlattice(defining, p, lambda.size() - mu.size(), [&](const LatticeBasis& l) {
        std::vector<std::int64_t> rel(static_cast<std::size_t>(n * n));
        for (int j = 0; j < n; ++j) {
            IntVec c = l.coordinates(defining.column(j));
            for (int i = 0; i < n; ++i) rel[static_cast<std::size_t>(i * n + j)] = c[i];
        }
        std::vector<int> e = elementary_divisor_exponents(n, std::move(rel), p, mu.size());
        if (Partition(e) == mu) ++count;
    });
    return count;
}

}  // namespace nilzeta
