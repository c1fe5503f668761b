#include "nilzeta/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nilzeta {

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "latex") return Format::Latex;
    if (s == "text") return Format::Text;
    throw std::invalid_argument("unknown format '" + s + "'");
}

Json to_json(const FactoredRat& x) {
    Json num = Json::array();
    for (const auto& [m, c] : x.num().terms())
        num.push_back({{"p", m.eP}, {"t", m.eT}, {"c", c.get_str()}});
    Json den = Json::array();
    for (const auto& f : x.den()) den.push_back({{"a", f.a}, {"b", f.b}, {"m", f.mult}});
    return {{"numerator", num}, {"denominator", den}};
}

FactoredRat factored_from_json(const Json& j) {
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j.at("numerator"))
        terms.push_back({{t.at("p").get<int>(), t.at("t").get<int>()},
                         mpz_class(t.at("c").get<std::string>())});
    std::vector<CycloFactor> den;
    for (const auto& f : j.at("denominator"))
        den.push_back({f.at("a").get<int>(), f.at("b").get<int>(), f.at("m").get<int>()});
    return FactoredRat(LaurentPoly::from_terms(std::move(terms)), std::move(den));
}

Json to_json(const CountTable& t) {
    Json counts = Json::array();
    for (const auto& c : t.counts) counts.push_back(c.get_str());
    return {{"p", t.p}, {"counts", counts}};
}

Json to_json(const AbscissaResult& r) {
    Json out = {{"alpha", to_string(r.alpha)}};
    if (r.argmax) out["argmax"] = *r.argmax;
    else out["argmax"] = "d";
    out["unique"] = r.unique;
    return out;
}

Json to_json(const FuneqCertificate& c) {
    return {{"d", c.d},
            {"verdict", c.verdict},
            {"sign", c.sign},
            {"pExp", c.pExp},
            {"tExp", c.tExp},
            {"left", to_json(c.left)},
            {"right", to_json(c.right)}};
}

namespace {

Json ratios(const std::vector<RatioEntry>& v) {
    Json out = Json::array();
    for (const auto& e : v) out.push_back({{"a", e.a}, {"b", e.b}, {"ratio", to_string(e.ratio)}});
    return out;
}

std::string s_exponent(int a, int b) {
    // exponent a - b s
    std::string out;
    if (a != 0) out = std::to_string(a);
    if (b != 0) {
        if (b > 0) out += "-";
        else if (!out.empty()) out += "+";
        const int ab = std::abs(b);
        if (ab != 1) out += std::to_string(ab);
        out += "s";
    }
    return out.empty() ? "0" : out;
}

std::string zeta_arg(const CycloFactor& f) {
    // 1/(1 - p^{a - bs}) = zeta_p(bs - a)
    std::string s = f.b == 1 ? "s" : std::to_string(f.b) + "s";
    if (f.a > 0) s += "-" + std::to_string(f.a);
    if (f.a < 0) s += "+" + std::to_string(-f.a);
    return s;
}

}  // namespace

Json to_json(const DominanceReport& r) {
    Json summands = Json::array();
    for (const auto& s : r.summands)
        summands.push_back({{"pair", pair_key(s.pair)}, {"denominator", ratios(s.den)}, {"numerator", ratios(s.num)}});
    return {{"d", r.d},
            {"verdict", r.passed()},
            {"denMax", to_string(r.denMax)},
            {"numMax", to_string(r.numMax)},
            {"denArgmax", r.denArgmax},
            {"cyclotomicDen", r.cyclotomicDen},
            {"attainedInA0", r.attainedInA0},
            {"strict", r.strict},
            {"matchesAbscissa", r.matchesAbscissa},
            {"summands", summands}};
}

Json to_json(const Partition& p) {
    Json out = Json::array();
    for (int k = 1; k <= p.length(); ++k) out.push_back(p.part(k));
    return out;
}

std::string latex(const LaurentPoly& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        const bool neg = sgn(c) < 0;
        const mpz_class mag = abs(c);
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        first = false;
        if (m.is_one()) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str();
        out += "p^{" + s_exponent(m.eP, m.eT) + "}";
    }
    return out;
}

std::string latex(const FactoredRat& x) {
    if (x.den().empty()) return latex(x.num());
    std::string den;
    for (const auto& f : x.den()) {
        den += "(1-p^{" + s_exponent(f.a, f.b) + "})";
        if (f.mult != 1) den += "^{" + std::to_string(f.mult) + "}";
    }
    return "\\frac{" + latex(x.num()) + "}{" + den + "}";
}

std::string latex_local_zeta(const ZetaParams& params, const FactoredRat& a) {
    std::string out;
    for (int i = 0; i < params.d; ++i) out += "\\zeta_p(" + zeta_arg({i, 1, 1}) + ")";
    out += "\\zeta_p(" + zeta_arg({params.d * params.dPrime, params.d + params.dPrime, 1}) + ")";
    if (a.den().empty() && a.num() == LaurentPoly(1)) return out;
    return out + "\\cdot" + latex(a);
}

std::string text_table(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
            width[c] = std::max(width[c], row[c].size());

    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < width.size(); ++c) {
            const std::string cell = c < cells.size() ? cells[c] : "";
            s += cell;
            if (c + 1 < width.size()) s += std::string(width[c] - cell.size() + 2, ' ');
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        os << s << '\n';
    };
    line(header);
    std::size_t total = 0;
    for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c + 1 < width.size() ? 2 : 0);
    os << std::string(total, '-') << '\n';
    for (const auto& row : rows) line(row);
    return os.str();
}

}  // namespace nilzeta
