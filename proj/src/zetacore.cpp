#include "nilzeta/zetacore.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nilzeta/parallel.hpp"
#include "nilzeta/qseries.hpp"

namespace nilzeta {

ZetaParams::ZetaParams(int d_) : d(d_), dPrime(d_ * (d_ - 1) / 2), hirsch(d_ * (d_ + 1) / 2) {
    if (d_ < 2) throw std::invalid_argument("ZetaParams: d must be at least 2");
}

int phi(int i, const ZetaParams& params) {
    if (i < 0 || i > params.d - 1)
        throw std::out_of_range("phi: argument " + std::to_string(i) + " outside [0, d-1]");
    return i * params.d - i * (i + 1) / 2;
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

std::vector<int> split_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

}  // namespace

std::string to_string(const SubsetPair& pair) {
    return "({" + join(pair.I) + "}, {" + join(pair.J) + "})";
}

std::string pair_key(const SubsetPair& pair) { return "I=" + join(pair.I) + "|J=" + join(pair.J); }

SubsetPair parse_pair_key(const std::string& key) {
    auto bar = key.find('|');
    if (key.rfind("I=", 0) != 0 || bar == std::string::npos || key.compare(bar + 1, 2, "J=") != 0)
        throw std::invalid_argument("parse_pair_key: malformed key '" + key + "'");
    return {split_ints(key.substr(2, bar - 2)), split_ints(key.substr(bar + 3))};
}

bool is_admissible(const SubsetPair& pair, const ZetaParams& params) {
    if (pair.I.size() != pair.J.size()) return false;
    for (std::size_t r = 0; r < pair.I.size(); ++r) {
        if (pair.I[r] < 1 || pair.I[r] > params.d - 2) return false;
        if (pair.J[r] < 1 || pair.J[r] > params.dPrime - 1) return false;
        if (r > 0 && (pair.I[r] <= pair.I[r - 1] || pair.J[r] <= pair.J[r - 1])) return false;
        if (phi(pair.I[r], params) > pair.J[r]) return false;
    }
    return true;
}

std::vector<SubsetPair> enumerate_pairs(const ZetaParams& params) {
    std::vector<SubsetPair> out;
    const int maxh = std::max(0, params.d - 2);
    for (int h = 0; h <= maxh; ++h) {
        std::vector<SubsetPair> level;
        SubsetPair cur;
        // Choose i_r and j_r together, both strictly increasing.
        std::function<void(int, int)> rec = [&](int min_i, int min_j) {
            if (cur.height() == h) {
                level.push_back(cur);
                return;
            }
            for (int i = min_i; i <= params.d - 2; ++i) {
                for (int j = std::max(min_j, phi(i, params)); j <= params.dPrime - 1; ++j) {
                    cur.I.push_back(i);
                    cur.J.push_back(j);
                    rec(i + 1, j + 1);
                    cur.I.pop_back();
                    cur.J.pop_back();
                }
            }
        };
        rec(1, 1);
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Merged order

bool merged_order_less(Tagged x, Tagged y, const SubsetPair& pair, const ZetaParams& params) {
    if (x == y) return false;
    const Tagged top{params.dPrime, Side::B};
    if (x == top) return false;
    if (y == top) return true;
    if (x.value == 0 && y.value == 0) return x.side == Side::B;  // tie between the two zeros
    if (x.value == 0) return true;
    if (y.value == 0) return false;
    if (x.side == y.side) return x.value < y.value;
    const std::size_t h = pair.I.size();
    if (x.side == Side::A) {
        for (std::size_t r = 0; r < h; ++r)
            if (x.value <= phi(pair.I[r], params) && y.value >= pair.J[r]) return true;
        return false;
    }
    for (std::size_t r = 0; r < h; ++r)
        if (pair.J[r] <= x.value && !(phi(pair.I[r], params) < y.value)) return false;
    return true;
}

MergedOrder::MergedOrder(const SubsetPair& pair, const ZetaParams& params)
    : pair_(pair), params_(params) {
    if (!is_admissible(pair, params))
        throw std::invalid_argument("MergedOrder: inadmissible pair " + to_string(pair));
    for (int i = 0; i <= params.d - 2; ++i) elems_.push_back({phi(i, params), Side::A});
    for (int j = 0; j <= params.dPrime; ++j) elems_.push_back({j, Side::B});
    std::sort(elems_.begin(), elems_.end(), [&](Tagged x, Tagged y) {
        return merged_order_less(x, y, pair_, params_);
    });
    for (std::size_t k = 0; k < elems_.size(); ++k)
        rank_[{elems_[k].value, static_cast<int>(elems_[k].side)}] = static_cast<int>(k);
}

int MergedOrder::rank(Tagged x) const {
    auto it = rank_.find({x.value, static_cast<int>(x.side)});
    if (it == rank_.end())
        throw std::out_of_range("MergedOrder: element " + std::to_string(x.value) +
                                (x.side == Side::A ? "_A" : "_B") + " outside the domain");
    return it->second;
}

int MergedOrder::j_of_i(int i) const {
    const Tagged a{phi(i, params_), Side::A};
    for (int j : pair_.J)
        if (less(a, {j, Side::B})) return j;
    return params_.dPrime;
}

int MergedOrder::i_of_j(int j) const {
    const Tagged b{j, Side::B};
    for (auto it = pair_.I.rbegin(); it != pair_.I.rend(); ++it)
        if (less({phi(*it, params_), Side::A}, b)) return *it;
    return 0;
}

// ---------------------------------------------------------------------------
// Numerical data and summands

Monomial numerical_monomial(int i, int j, const ZetaParams& params) {
    const int d = params.d;
    const int dp = params.dPrime;
    return {i * (d - i) + (dp - j) * (d + j - phi(i, params)), d - i + dp - j};
}

NumericalData numerical_data(const SubsetPair& pair, const ZetaParams& params) {
    const MergedOrder order(pair, params);
    NumericalData nd;
    for (int j = 1; j <= params.dPrime - 1; ++j)
        nd.X[j] = numerical_monomial(order.i_of_j(j), j, params);
    for (int i = 1; i <= params.d - 2; ++i)
        nd.Y[i] = numerical_monomial(i, order.j_of_i(i), params);
    for (int r = 1; r <= pair.height(); ++r) {
        const int prev = r == 1 ? 0 : pair.I[r - 2];
        nd.Yprime[r] = numerical_monomial(prev, order.j_of_i(pair.I[r - 1]), params);
    }
    return nd;
}

namespace {

// F_{b-a}(p, (Z_{a+1}, ..., Z_{b-1}))
FactoredRat window_F(const std::map<int, Monomial>& z, int a, int b) {
    std::vector<Monomial> zs;
    for (int k = a + 1; k <= b - 1; ++k) zs.push_back(z.at(k));
    return igusa_F(b - a, zs);
}

}  // namespace

FactoredRat term_A_IJ(const SubsetPair& pair, const ZetaParams& params) {
    const NumericalData nd = numerical_data(pair, params);
    const int d = params.d;
    const int dp = params.dPrime;
    const int h = pair.height();
    auto i_at = [&](int r) { return r == 0 ? 0 : pair.I[r - 1]; };
    auto j_at = [&](int r) { return r == 0 ? 0 : (r == h + 1 ? dp : pair.J[r - 1]); };

    FactoredRat result = window_F(nd.X, j_at(h), dp);

    LaurentPoly inv_zeta = 1;  // 1 / zeta_{Z_p^{i_h}}(s)
    for (int i = 0; i < i_at(h); ++i) inv_zeta = inv_zeta.times_one_minus({i, 1});
    LaurentPoly coeff = inv_zeta;

    for (int r = 1; r <= h; ++r) {
        const int ir = i_at(r);
        const int phi_r = phi(ir, params);
        coeff *= gauss_binom_inv(j_at(r + 1) - phi_r, j_at(r) - phi_r);
        coeff *= gauss_binom_inv(d - i_at(r - 1), d - ir);
        const Monomial y = nd.Y.at(ir);
        const Monomial yp = nd.Yprime.at(r);
        result *= FactoredRat(LaurentPoly::monomial(y), {{y.eP, y.eT, 1}, {yp.eP, yp.eT, 1}});
        result *= window_F(nd.X, j_at(r - 1), j_at(r));
        result *= window_F(nd.Y, i_at(r - 1), ir);
    }
    return FactoredRat(coeff * result.num(), result.den());
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("NILZETA_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<FactoredRat> all_terms(const ZetaParams& params, int workers) {
    const auto pairs = enumerate_pairs(params);
    std::vector<FactoredRat> terms(pairs.size());
    parallel_for(pairs.size(), resolve_workers(workers),
                 [&](std::size_t k) { terms[k] = term_A_IJ(pairs[k], params); });
    return terms;
}

FactoredRat sum_A(const ZetaParams& params, int workers) {
    return sum(all_terms(params, workers));
}

FactoredRat zeta_free_abelian(int n) {
    if (n < 0) throw std::invalid_argument("zeta_free_abelian: negative rank");
    std::vector<CycloFactor> den;
    for (int i = 0; i < n; ++i) den.push_back({i, 1, 1});
    return FactoredRat(1, den);
}

FactoredRat zeta_centre_factor(const ZetaParams& params) {
    return FactoredRat::geometric({params.d * params.dPrime, params.d + params.dPrime});
}

FactoredRat local_zeta(const ZetaParams& params, int workers) {
    return zeta_free_abelian(params.d) * zeta_centre_factor(params) * sum_A(params, workers);
}

}  // namespace nilzeta
