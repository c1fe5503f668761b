#include "nilzeta/lieoracle.hpp"

#include <mutex>
#include <random>
#include <sstream>

#include "nilzeta/parallel.hpp"

namespace nilzeta {

using u128 = unsigned __int128;

LieStructure::LieStructure(int d) : d_(d) {
    if (d < 2) throw std::invalid_argument("LieStructure: d must be at least 2");
}

int LieStructure::centre_index(int k, int l) const {
    if (k < 0 || l >= d_ || k >= l) throw std::out_of_range("centre_index: need 0 <= k < l < d");
    // pairs (k', l') with k' < k come first: sum_{k'<k} (d - 1 - k')
    return k * (2 * d_ - k - 1) / 2 + (l - k - 1);
}

LieStructure::Bracket LieStructure::bracket_of_generators(int k, int l) const {
    if (k == l) return {};
    if (k < l) return {1, centre_index(k, l)};
    return {-1, centre_index(l, k)};
}

IntVec LieStructure::bracket(std::span<const std::int64_t> u, std::span<const std::int64_t> v) const {
    if (static_cast<int>(u.size()) != rank() || static_cast<int>(v.size()) != rank())
        throw std::invalid_argument("LieStructure::bracket: wrong vector length");
    IntVec w(static_cast<std::size_t>(rank()), 0);
    for (int k = 0; k < d_; ++k) {
        if (u[k] == 0) continue;
        for (int l = 0; l < d_; ++l) {
            if (v[l] == 0 || k == l) continue;
            const Bracket b = bracket_of_generators(k, l);
            w[static_cast<std::size_t>(d_ + b.centre)] += b.sign * u[k] * v[l];
        }
    }
    return w;
}

IntVec LieStructure::bracket_with_generator(std::span<const std::int64_t> u, int k) const {
    IntVec w(static_cast<std::size_t>(centre_rank()), 0);
    for (int i = 0; i < d_; ++i) {
        if (u[i] == 0 || i == k) continue;
        const Bracket b = bracket_of_generators(i, k);
        w[static_cast<std::size_t>(b.centre)] += b.sign * u[i];
    }
    return w;
}

LieStructure build_lie_ring(int d) { return LieStructure(d); }

LatticeBasis commutator_image(const LatticeBasis& lbar, const LieStructure& lie) {
    if (lbar.rank() != lie.d())
        throw std::invalid_argument("commutator_image: lattice rank must equal d");
    std::vector<IntVec> gens;
    gens.reserve(static_cast<std::size_t>(lie.d() * lie.d()));
    for (int j = 0; j < lie.d(); ++j) {
        const IntVec v = lbar.column(j);
        for (int k = 0; k < lie.d(); ++k) gens.push_back(lie.bracket_with_generator(v, k));
    }
    // [Z^d, L] is the whole centre, so [lbar, L] contains index(lbar) * centre.
    return hnf_from_generators(lie.centre_rank(), gens, lbar.index());
}

PhiTypeReport phi_type_law_check(int d, int trials, std::uint64_t seed) {
    if (d < 3 || d > 5) throw std::invalid_argument("phi_type_law_check: d must be 3, 4 or 5");
    const LieStructure lie(d);
    const ZetaParams params(d);
    std::mt19937_64 rng(seed);
    PhiTypeReport report;
    for (int t = 0; t < trials; ++t) {
        const long p = t % 2 == 0 ? 2 : 3;
        std::uniform_int_distribution<int> ex(0, 3);
        std::vector<std::int64_t> h(static_cast<std::size_t>(d * d), 0);
        for (int i = 0; i < d; ++i) {
            const std::int64_t di = ipow(p, ex(rng));
            h[static_cast<std::size_t>(i * d + i)] = di;
            std::uniform_int_distribution<std::int64_t> off(0, di - 1);
            for (int j = i + 1; j < d; ++j) h[static_cast<std::size_t>(i * d + j)] = off(rng);
        }
        const LatticeBasis lbar(d, std::move(h));
        const LatticeType type = lattice_type(lbar, p);

        LatticeType predicted;
        predicted.r0 = type.r0;
        predicted.heights = type.heights;
        for (int s : type.jumps) predicted.jumps.push_back(phi(s, params));
        const std::vector<int> expected = exponents_from_type(predicted, params.dPrime);
        const std::vector<int> actual =
            elementary_divisor_exponents(commutator_image(lbar, lie), p);

        ++report.trials;
        if (expected != actual) {
            ++report.failures;
            if (report.first_failure.empty()) {
                std::ostringstream os;
                os << "p=" << p << " lbar=" << to_string(lbar);
                report.first_failure = os.str();
            }
        }
    }
    return report;
}

CountTable series_at_prime(const FactoredRat& x, long p, int n) {
    CountTable t{p, {}};
    for (const auto& c : series(x, n)) t.counts.push_back(c.evaluate_int(p));
    return t;
}

namespace {

void check_prime(long p) {
    if (p < 2) throw std::invalid_argument("prime must be at least 2");
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

// Work items: (exponent total, diagonal composition).
struct WorkItem {
    int total;
    IntVec exps;
};

std::vector<WorkItem> work_items(int n, int N) {
    std::vector<WorkItem> items;
    for (int e = 0; e <= N; ++e)
        for (auto& c : diagonal_compositions(n, e, IntVec(static_cast<std::size_t>(n), e)))
            items.push_back({e, std::move(c)});
    return items;
}

double total_count(int n, long p, int N) {
    double r = 0;
    for (int e = 0; e <= N; ++e) r += sublattice_count(n, p, e);
    return r;
}

std::string key_of(const LatticeBasis& b) {
    std::string s;
    s.reserve(b.entries().size() * 4);
    for (auto x : b.entries()) s += std::to_string(x) + ',';
    return s;
}

mpz_class to_mpz(u128 x) {
    mpz_class r = static_cast<unsigned long>(x >> 64);
    r <<= 64;
    r += static_cast<unsigned long>(x & 0xffffffffffffffffULL);
    return r;
}

u128 upow(long p, int e) {
    u128 r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<u128>(p);
    return r;
}

}  // namespace

CountTable count_ideals_direct(int d, long p, int N, int workers) {
    check_prime(p);
    if (N < 0) throw std::invalid_argument("count_ideals_direct: negative N");
    if (!((d == 2 && N <= 10) || (d == 3 && N <= 3)))
        throw ResourceGuardError("count_ideals_direct: only d=2 (N<=10) or d=3 (N<=3) supported");
    const LieStructure lie(d);
    const int h = lie.rank();
    if (total_count(h, p, N) > 2e8)
        throw ResourceGuardError("count_ideals_direct: more than 2e8 lattices to enumerate");

    const auto items = work_items(h, N);
    std::vector<std::uint64_t> per_item(items.size(), 0);
    parallel_for(items.size(), resolve_workers(workers), [&](std::size_t k) {
        std::uint64_t count = 0;
        IntVec w(static_cast<std::size_t>(h));
        for_each_hnf(p, items[k].exps, [&](const LatticeBasis& lat) {
            for (int j = 0; j < h; ++j) {
                const IntVec v = lat.column(j);
                for (int g = 0; g < d; ++g) {
                    const IntVec c = lie.bracket_with_generator(v, g);
                    std::fill(w.begin(), w.begin() + d, 0);
                    std::copy(c.begin(), c.end(), w.begin() + d);
                    if (!lat.contains(w)) return;
                }
            }
            ++count;
        });
        per_item[k] = count;
    });

    CountTable t{p, std::vector<mpz_class>(static_cast<std::size_t>(N) + 1, 0)};
    for (std::size_t k = 0; k < items.size(); ++k) t.counts[items[k].total] += static_cast<unsigned long>(per_item[k]);
    return t;
}

CountTable count_ideals_pairs(int d, long p, int N, int workers) {
    check_prime(p);
    if (N < 0) throw std::invalid_argument("count_ideals_pairs: negative N");
    if (d < 2 || d > 4) throw ResourceGuardError("count_ideals_pairs: only 2 <= d <= 4 supported");
    if (total_count(d, p, N) > 5e7)
        throw ResourceGuardError("count_ideals_pairs: more than 5e7 lattices to enumerate");
    const LieStructure lie(d);

    const auto items = work_items(d, N);
    std::vector<std::vector<u128>> per_item(items.size());
    parallel_for(items.size(), resolve_workers(workers), [&](std::size_t k) {
        const int a = items[k].total;
        std::vector<u128> acc(static_cast<std::size_t>(N) + 1, 0);
        // [centre : M]^d-weighted counts of M containing a given image.
        std::map<std::string, std::vector<u128>> cache;
        for_each_hnf(p, items[k].exps, [&](const LatticeBasis& lbar) {
            const LatticeBasis image = commutator_image(lbar, lie);
            auto [it, fresh] = cache.try_emplace(key_of(image));
            if (fresh) {
                it->second.assign(static_cast<std::size_t>(N - a) + 1, 0);
                for (int b = 0; b <= N - a; ++b) {
                    u128 count = 0;
                    for_each_superlattice(image, p, b, [&](const LatticeBasis&) { ++count; });
                    it->second[b] = count * upow(p, b * d);
                }
            }
            for (int b = 0; b <= N - a; ++b) acc[a + b] += it->second[b];
        });
        per_item[k] = std::move(acc);
    });

    std::vector<u128> total(static_cast<std::size_t>(N) + 1, 0);
    for (const auto& v : per_item)
        for (std::size_t n = 0; n < v.size(); ++n) total[n] += v[n];
    CountTable t{p, {}};
    for (auto x : total) t.counts.push_back(to_mpz(x));
    return t;
}

SubsetPair overlap_invariant(const LatticeType& lt, const LatticeType& mt) {
    if (!mt.maximal()) throw std::invalid_argument("overlap_invariant: M must be maximal");
    const int m = static_cast<int>(lt.jumps.size());
    const int n = static_cast<int>(mt.jumps.size());
    std::vector<int> Q(static_cast<std::size_t>(m) + 1), R(static_cast<std::size_t>(n) + 1);
    Q[0] = lt.r0;
    for (int k = 1; k <= m; ++k) Q[k] = Q[k - 1] + lt.heights[k - 1];
    R[0] = 0;
    for (int l = 1; l <= n; ++l) R[l] = R[l - 1] + mt.heights[l - 1];

    SubsetPair out;
    std::vector<bool> in_j(static_cast<std::size_t>(n) + 1, false);
    // Jump s_k is tested at the level Q_{k-1} reached just below it.
    for (int k = 1; k <= m; ++k) {
        bool hit = false;
        for (int l = 1; l <= n; ++l) {
            if (R[l - 1] <= Q[k - 1] && Q[k - 1] < R[l]) {
                hit = true;
                in_j[l] = true;
            }
        }
        if (hit) out.I.push_back(lt.jumps[k - 1]);
    }
    for (int l = 1; l <= n; ++l)
        if (in_j[l]) out.J.push_back(mt.jumps[l - 1]);
    return out;
}

std::map<std::string, CountTable> stratified_counts(int d, long p, int N, int workers) {
    check_prime(p);
    if (d < 2 || d > 4 || N < 0 || N > (d == 4 ? 5 : 6))
        throw ResourceGuardError("stratified_counts: only d in {2,3} with N <= 6, or d = 4 with N <= 5");
    const LieStructure lie(d);

    const auto items = work_items(d, N);
    using Table = std::map<std::string, std::vector<u128>>;
    std::vector<Table> per_item(items.size());
    parallel_for(items.size(), resolve_workers(workers), [&](std::size_t k) {
        const int a = items[k].total;
        Table acc;
        // For each image: the maximal M containing it, as (b, type).
        std::map<std::string, std::vector<std::pair<int, LatticeType>>> cache;
        for_each_hnf(p, items[k].exps, [&](const LatticeBasis& lbar) {
            const LatticeType lt = lattice_type(lbar, p);
            const LatticeBasis image = commutator_image(lbar, lie);
            auto [it, fresh] = cache.try_emplace(key_of(image));
            if (fresh) {
                for (int b = 0; b <= N - a; ++b)
                    for_each_superlattice(image, p, b, [&](const LatticeBasis& m) {
                        LatticeType mt = lattice_type(m, p);
                        if (mt.maximal()) it->second.emplace_back(b, std::move(mt));
                    });
            }
            for (const auto& [b, mt] : it->second) {
                auto& row = acc[pair_key(overlap_invariant(lt, mt))];
                row.resize(static_cast<std::size_t>(N) + 1, 0);
                row[a + b] += upow(p, b * d);
            }
        });
        per_item[k] = std::move(acc);
    });

    std::map<std::string, std::vector<u128>> merged;
    for (const auto& t : per_item)
        for (const auto& [key, row] : t) {
            auto& dst = merged[key];
            dst.resize(static_cast<std::size_t>(N) + 1, 0);
            for (std::size_t n = 0; n < row.size(); ++n) dst[n] += row[n];
        }
    std::map<std::string, CountTable> out;
    for (const auto& [key, row] : merged) {
        CountTable t{p, {}};
        for (auto x : row) t.counts.push_back(to_mpz(x));
        out.emplace(key, std::move(t));
    }
    return out;
}

CountTable convolve_centre_factor(const CountTable& t, int d, int N) {
    const ZetaParams params(d);
    const int step = params.d + params.dPrime;
    mpz_class weight;
    mpz_ui_pow_ui(weight.get_mpz_t(), static_cast<unsigned long>(t.p),
                  static_cast<unsigned long>(params.d * params.dPrime));
    CountTable out{t.p, std::vector<mpz_class>(static_cast<std::size_t>(N) + 1, 0)};
    for (int n = 0; n <= N; ++n) {
        mpz_class w = 1;
        for (int k = 0; n - k * step >= 0; ++k) {
            const int src = n - k * step;
            if (src < static_cast<int>(t.counts.size())) out.counts[n] += w * t.counts[src];
            w *= weight;
        }
    }
    return out;
}

}  // namespace nilzeta
