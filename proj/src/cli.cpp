#include "nilzeta/cli.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "nilzeta/lattice.hpp"

namespace nilzeta {

const std::vector<std::string>& verbs() {
    static const std::vector<std::string> v = {"compute", "series",      "funeq",  "abscissa",
                                               "dominance", "gridmax",   "squarecheck", "oracle",
                                               "verify",  "hall",        "selftest"};
    return v;
}

namespace {

struct Outcome {
    std::string payload;
    int exitCode = kExitPass;
};

const char* verdict_word(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int need_d(const CommandRequest& req) {
    if (req.d == 0) throw std::invalid_argument(req.verb + ": -d is required");
    if (req.d < 2) throw std::invalid_argument(req.verb + ": d must be at least 2");
    return req.d;
}

long need_prime(const CommandRequest& req) {
    if (req.prime == 0) throw std::invalid_argument(req.verb + ": -p/--prime is required");
    const mpz_class p = req.prime;
    if (req.prime < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument(req.verb + ": " + std::to_string(req.prime) + " is not prime");
    return req.prime;
}

int need_max_exp(const CommandRequest& req) {
    if (req.maxExp < 0) throw std::invalid_argument(req.verb + ": -n must be non-negative");
    return req.maxExp;
}

std::string count_table_text(const std::vector<const CountTable*>& cols, const std::vector<std::string>& names) {
    std::vector<std::string> header = {"n"};
    header.insert(header.end(), names.begin(), names.end());
    std::vector<std::vector<std::string>> rows;
    const std::size_t len = cols.empty() ? 0 : cols.front()->counts.size();
    for (std::size_t n = 0; n < len; ++n) {
        std::vector<std::string> row = {std::to_string(n)};
        for (const auto* c : cols) row.push_back(n < c->counts.size() ? c->counts[n].get_str() : "");
        rows.push_back(std::move(row));
    }
    return text_table(header, rows);
}

// W = zeta_{Z^d} * centre * A, keeping A for the LaTeX form.
FactoredRat with_prefactors(const ZetaParams& params, const FactoredRat& a) {
    return zeta_free_abelian(params.d) * zeta_centre_factor(params) * a;
}

Outcome run_compute(const CommandRequest& req) {
    const ZetaParams params(need_d(req));
    const FactoredRat a = sum_A(params, req.workers);
    const FactoredRat w = with_prefactors(params, a);
    switch (req.format) {
        case Format::Json: return {dump(to_json(w))};
        case Format::Latex: return {latex_local_zeta(params, a) + "\n"};
        case Format::Text: break;
    }
    return {to_string(w) + "\n"};
}

Outcome run_series(const CommandRequest& req) {
    const ZetaParams params(need_d(req));
    const int n = need_max_exp(req);
    const FactoredRat w = local_zeta(params, req.workers);
    if (req.prime != 0) {
        const CountTable t = series_at_prime(w, need_prime(req), n);
        if (req.format == Format::Json) return {dump(to_json(t))};
        return {count_table_text({&t}, {"a_{p^n}"})};
    }
    const auto coeffs = series(w, n);
    if (req.format == Format::Json) {
        Json arr = Json::array();
        for (const auto& c : coeffs) arr.push_back(to_string(c));
        return {dump(Json{{"d", params.d}, {"coefficients", arr}})};
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < coeffs.size(); ++k) rows.push_back({std::to_string(k), to_string(coeffs[k])});
    return {text_table({"n", "coefficient of T^n"}, rows)};
}

Outcome run_funeq(const CommandRequest& req) {
    const ZetaParams params(need_d(req));
    const FuneqCertificate cert = verify_funeq(params.d, req.workers);
    int checked = 0, passed = 0;
    for (const auto& pair : enumerate_pairs(params)) {
        ++checked;
        if (verify_funeq_summand(pair, params)) ++passed;
    }
    const bool ok = cert.verdict && passed == checked;
    Outcome out;
    out.exitCode = ok ? kExitPass : kExitFail;
    if (req.format == Format::Json) {
        Json j = to_json(cert);
        j["verdict"] = ok;
        j["summands"] = {{"checked", checked}, {"passed", passed}};
        out.payload = dump(j);
        return out;
    }
    std::ostringstream os;
    os << verdict_word(ok) << " (-1)^" << params.hirsch << " P^" << cert.pExp << " T^" << cert.tExp << "\n"
       << "summands " << passed << "/" << checked << "\n";
    out.payload = os.str();
    return out;
}

Json abscissa_row(int d) {
    Json j = {{"d", d}};
    const Json r = to_json(abscissa(d));
    for (const auto& [k, v] : r.items()) j[k] = v;
    return j;
}

Outcome run_abscissa(const CommandRequest& req) {
    if (req.maxD != 0) {
        if (req.maxD < 2) throw std::invalid_argument("abscissa: --max-d must be at least 2");
        Json arr = Json::array();
        std::vector<std::vector<std::string>> rows;
        for (int d = 2; d <= req.maxD; ++d) {
            const AbscissaResult r = abscissa(d);
            arr.push_back(abscissa_row(d));
            rows.push_back({std::to_string(d), to_string(r.alpha),
                            r.argmax ? std::to_string(*r.argmax) : "d", r.unique ? "yes" : "no"});
        }
        if (req.format == Format::Json) return {dump(arr)};
        return {text_table({"d", "alpha", "argmax", "unique"}, rows)};
    }
    const int d = need_d(req);
    const AbscissaResult r = abscissa(d);
    if (req.format == Format::Json) return {dump(to_json(r))};
    if (req.format == Format::Latex) {
        mpz_class num = r.alpha.get_num(), den = r.alpha.get_den();
        return {"\\alpha = " + (den == 1 ? num.get_str() : "\\frac{" + num.get_str() + "}{" + den.get_str() + "}") + "\n"};
    }
    return {"alpha " + to_string(r.alpha) + " argmax " + (r.argmax ? "j=" + std::to_string(*r.argmax) : "d") +
            (r.unique ? " unique" : " not unique") + "\n"};
}

Outcome run_dominance(const CommandRequest& req) {
    const int d = need_d(req);
    const DominanceReport rep = dominance_check(d, req.workers);
    Outcome out;
    out.exitCode = rep.passed() ? kExitPass : kExitFail;
    if (req.format == Format::Json) {
        out.payload = dump(to_json(rep));
        return out;
    }
    std::ostringstream os;
    os << verdict_word(rep.passed()) << " d=" << d << " denominator max " << to_string(rep.denMax)
       << " numerator max " << to_string(rep.numMax) << (rep.attainedInA0 ? " attained in A0" : " not attained in A0")
       << "\n";
    out.payload = os.str();
    return out;
}

Outcome run_gridmax(const CommandRequest& req) {
    int lo = 0, hi = 0;
    if (req.maxD != 0) {
        lo = 3;
        hi = static_cast<int>(req.maxD);
        if (hi < 3) throw std::invalid_argument("gridmax: --max-d must be at least 3");
    } else {
        lo = hi = need_d(req);
        if (lo < 3) throw std::invalid_argument("gridmax: d must be at least 3");
    }
    bool ok = true;
    Json arr = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (int d = lo; d <= hi; ++d) {
        const GridMax g = grid_max(d);
        ok = ok && g.onLineZero;
        arr.push_back({{"d", d}, {"max", to_string(g.value)}, {"i", g.i}, {"j", g.j}, {"verdict", g.onLineZero}});
        rows.push_back({std::to_string(d), to_string(g.value), "(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")",
                        verdict_word(g.onLineZero)});
    }
    Outcome out;
    out.exitCode = ok ? kExitPass : kExitFail;
    if (req.format == Format::Json) {
        out.payload = dump(Json{{"verdict", ok}, {"results", arr}});
        return out;
    }
    if (lo == hi) {
        out.payload = std::string(verdict_word(ok)) + " d=" + rows[0][0] + " max " + rows[0][1] + " at " + rows[0][2] + "\n";
        return out;
    }
    out.payload = text_table({"d", "max", "at (i,j)", "verdict"}, rows) + verdict_word(ok) + "\n";
    return out;
}

Outcome run_squarecheck(const CommandRequest& req) {
    const long maxD = req.maxD != 0 ? req.maxD : 1000000;
    if (maxD < 2) throw std::invalid_argument("squarecheck: --max-d must be at least 2");
    const auto failures = square_check(maxD);
    const long adjMax = std::min<long>(maxD, 1000);
    bool agree = true;
    for (long d = 3; d <= adjMax; ++d) {
        const bool square = std::find(failures.begin(), failures.end(), d) != failures.end();
        if (adjacent_equality_check(d) == square) agree = false;
    }
    const bool ok = failures.empty() && agree;
    Outcome out;
    out.exitCode = ok ? kExitPass : kExitFail;
    if (req.format == Format::Json) {
        out.payload = dump(Json{{"maxD", maxD}, {"failures", failures}, {"adjacentMaxD", adjMax},
                                {"agree", agree}, {"verdict", ok}});
        return out;
    }
    std::ostringstream os;
    os << verdict_word(ok) << " " << failures.size() << " odd squares 2d^3+6d^2-3 for d <= " << maxD
       << "; adjacent check " << (agree ? "agrees" : "disagrees") << " for d <= " << adjMax << "\n";
    out.payload = os.str();
    return out;
}

CountTable stratified_total(const std::map<std::string, CountTable>& strata, long p, int n) {
    CountTable total{p, std::vector<mpz_class>(static_cast<std::size_t>(n) + 1, 0)};
    for (const auto& [key, t] : strata)
        for (std::size_t k = 0; k < t.counts.size() && k < total.counts.size(); ++k) total.counts[k] += t.counts[k];
    return total;
}

CountTable oracle_counts(const CommandRequest& req, int d, long p, int n) {
    if (req.method == "direct") return count_ideals_direct(d, p, n, req.workers);
    if (req.method == "pairs") return count_ideals_pairs(d, p, n, req.workers);
    if (req.method == "stratified")
        return convolve_centre_factor(stratified_total(stratified_counts(d, p, n, req.workers), p, n), d, n);
    throw std::invalid_argument("unknown method '" + req.method + "'");
}

Outcome run_oracle(const CommandRequest& req) {
    const int d = need_d(req);
    const long p = need_prime(req);
    const int n = need_max_exp(req);
    if (req.method == "stratified") {
        const auto strata = stratified_counts(d, p, n, req.workers);
        if (req.format == Format::Json) {
            Json j = Json::object();
            for (const auto& [key, t] : strata) j[key] = to_json(t);
            return {dump(j)};
        }
        std::vector<const CountTable*> cols;
        std::vector<std::string> names;
        for (const auto& [key, t] : strata) {
            cols.push_back(&t);
            names.push_back(key);
        }
        return {count_table_text(cols, names)};
    }
    const CountTable t = oracle_counts(req, d, p, n);
    if (req.format == Format::Json) return {dump(to_json(t))};
    return {count_table_text({&t}, {"a_{p^n}"})};
}

Outcome run_verify(const CommandRequest& req) {
    const int d = need_d(req);
    const long p = need_prime(req);
    const int n = need_max_exp(req);
    const CountTable oracle = oracle_counts(req, d, p, n);
    const CountTable formula = series_at_prime(local_zeta(ZetaParams(d), req.workers), p, n);
    const bool ok = oracle == formula;
    Outcome out;
    out.exitCode = ok ? kExitPass : kExitFail;
    if (req.format == Format::Json) {
        out.payload = dump(Json{{"d", d}, {"method", req.method}, {"series", to_json(formula)},
                                {"oracle", to_json(oracle)}, {"verdict", ok}});
        return out;
    }
    std::vector<std::vector<std::string>> rows;
    for (int k = 0; k <= n; ++k) {
        const auto& s = formula.counts[static_cast<std::size_t>(k)];
        const auto& o = oracle.counts[static_cast<std::size_t>(k)];
        rows.push_back({std::to_string(k), s.get_str(), o.get_str(), s == o ? "ok" : "MISMATCH"});
    }
    out.payload = text_table({"n", "series", "oracle", "match"}, rows) + verdict_word(ok) + "\n";
    return out;
}

Outcome run_hall(const CommandRequest& req) {
    if (req.lambda.empty()) throw std::invalid_argument("hall: --lambda is required");
    const Partition lambda = Partition::parse(req.lambda);
    const Partition mu = Partition::parse(req.mu);
    if (!mu.contained_in(lambda)) throw std::invalid_argument("hall: mu is not contained in lambda");
    const LaurentPoly alpha = hall_alpha(lambda, mu);
    Json j = {{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"alpha", to_string(alpha)}};
    Outcome out;
    std::string text = "alpha " + to_string(alpha) + "\n";
    if (req.prime != 0) {
        const long p = need_prime(req);
        const mpz_class value = alpha.evaluate_int(p);
        const mpz_class brute = hall_alpha_brute(lambda, mu, p);
        const bool ok = value == brute;
        out.exitCode = ok ? kExitPass : kExitFail;
        j["p"] = p;
        j["value"] = value.get_str();
        j["brute"] = brute.get_str();
        j["verdict"] = ok;
        text += std::string(verdict_word(ok)) + " p=" + std::to_string(p) + " formula " + value.get_str() + " brute " +
                brute.get_str() + "\n";
    }
    out.payload = req.format == Format::Json ? dump(j) : text;
    return out;
}

Outcome run_selftest(const CommandRequest& req) {
    std::vector<std::pair<std::string, bool>> checks;

    const FactoredRat w2 = local_zeta(ZetaParams(2), req.workers);
    checks.emplace_back("heisenberg closed form",
                        same_value(w2, FactoredRat(1, {{0, 1, 1}, {1, 1, 1}, {2, 3, 1}})));
    for (long p : {2L, 3L})
        checks.emplace_back("oracle d=2 p=" + std::to_string(p) + " n<=6",
                            count_ideals_direct(2, p, 6, req.workers) == series_at_prime(w2, p, 6));
    for (int d = 2; d <= 4; ++d) {
        const ZetaParams params(d);
        bool ok = verify_funeq(d, req.workers).verdict;
        for (const auto& pair : enumerate_pairs(params)) ok = ok && verify_funeq_summand(pair, params);
        checks.emplace_back("funeq d=" + std::to_string(d), ok);
    }
    {
        const std::vector<std::string> expect = {"2", "3", "4", "51/10", "99/13"};
        bool ok = true;
        for (int d = 2; d <= 6; ++d) {
            const AbscissaResult r = abscissa(d);
            ok = ok && to_string(r.alpha) == expect[static_cast<std::size_t>(d - 2)] && r.unique;
        }
        checks.emplace_back("abscissa table d=2..6", ok);
    }
    {
        bool ok = true;
        for (long p : {2L, 3L})
            for (int n = 0; n <= 4; ++n)
                for (const auto& lambda : partitions_of(n))
                    for (int m = 0; m <= n; ++m)
                        for (const auto& mu : partitions_of(m))
                            if (mu.contained_in(lambda))
                                ok = ok && hall_alpha(lambda, mu).evaluate_int(p) == hall_alpha_brute(lambda, mu, p);
        checks.emplace_back("hall formula vs brute |lambda|<=4", ok);
    }

    bool all = true;
    Json arr = Json::array();
    std::string text;
    for (const auto& [name, ok] : checks) {
        all = all && ok;
        arr.push_back({{"check", name}, {"verdict", ok}});
        text += std::string(verdict_word(ok)) + " " + name + "\n";
    }
    Outcome out;
    out.exitCode = all ? kExitPass : kExitFail;
    out.payload = req.format == Format::Json ? dump(Json{{"verdict", all}, {"checks", arr}}) : text;
    return out;
}

std::string echo(const CommandRequest& req) {
    std::ostringstream os;
    if (req.d) os << " d=" << req.d;
    if (req.prime) os << " p=" << req.prime;
    if (req.verb == "series" || req.verb == "oracle" || req.verb == "verify") os << " n=" << req.maxExp;
    if (req.maxD) os << " max-d=" << req.maxD;
    if (!req.lambda.empty()) os << " lambda=" << req.lambda;
    if (!req.mu.empty()) os << " mu=" << req.mu;
    if (req.verb == "oracle" || req.verb == "verify") os << " method=" << req.method;
    std::string s = os.str();
    return s.empty() ? s : s.substr(1);
}

}  // namespace

RunReport dispatch(const CommandRequest& req) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    if (req.verb == "compute") out = run_compute(req);
    else if (req.verb == "series") out = run_series(req);
    else if (req.verb == "funeq") out = run_funeq(req);
    else if (req.verb == "abscissa") out = run_abscissa(req);
    else if (req.verb == "dominance") out = run_dominance(req);
    else if (req.verb == "gridmax") out = run_gridmax(req);
    else if (req.verb == "squarecheck") out = run_squarecheck(req);
    else if (req.verb == "oracle") out = run_oracle(req);
    else if (req.verb == "verify") out = run_verify(req);
    else if (req.verb == "hall") out = run_hall(req);
    else if (req.verb == "selftest") out = run_selftest(req);
    else throw std::invalid_argument("unknown verb '" + req.verb + "'");

    RunReport rep;
    rep.verb = req.verb;
    rep.params = echo(req);
    rep.payload = std::move(out.payload);
    rep.exitCode = out.exitCode;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal zeta functions of free class-2 nilpotent groups", "nilzeta"};
    app.set_version_flag("--version", std::string(NILZETA_VERSION));
    app.require_subcommand(1);

    CommandRequest req;
    std::string format = "text";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json, latex or text")->check(CLI::IsMember({"json", "latex", "text"}));
        sub->add_option("--workers", req.workers, "worker threads (default NILZETA_WORKERS, then all cores)")
            ->check(CLI::NonNegativeNumber);
    };
    auto add_d = [&](CLI::App* sub) { sub->add_option("-d", req.d, "number of generators"); };
    auto add_p = [&](CLI::App* sub) { sub->add_option("-p,--prime", req.prime, "prime"); };
    auto add_n = [&](CLI::App* sub) { sub->add_option("-n,--max-exp", req.maxExp, "largest exponent of p"); };
    auto add_max_d = [&](CLI::App* sub) { sub->add_option("--max-d", req.maxD, "scan bound on d"); };
    auto add_method = [&](CLI::App* sub) {
        sub->add_option("--method", req.method, "direct, pairs or stratified")
            ->check(CLI::IsMember({"direct", "pairs", "stratified"}));
    };

    auto* compute = app.add_subcommand("compute", "W_d(P, T) as a factored rational function");
    add_d(compute);
    auto* ser = app.add_subcommand("series", "coefficients of W_d in T, optionally at P = p");
    add_d(ser), add_n(ser), add_p(ser);
    auto* funeq = app.add_subcommand("funeq", "check the functional equation, whole and per summand");
    add_d(funeq);
    auto* absc = app.add_subcommand("abscissa", "abscissa of convergence");
    add_d(absc), add_max_d(absc);
    auto* dom = app.add_subcommand("dominance", "denominator and numerator ratio report");
    add_d(dom);
    auto* grid = app.add_subcommand("gridmax", "maximum of f_d on the integer grid");
    add_d(grid), add_max_d(grid);
    auto* sq = app.add_subcommand("squarecheck", "scan 2d^3+6d^2-3 for odd squares");
    add_max_d(sq);
    auto* orc = app.add_subcommand("oracle", "ideal counts by lattice enumeration");
    add_d(orc), add_p(orc), add_n(orc), add_method(orc);
    auto* ver = app.add_subcommand("verify", "compare series coefficients with the oracle");
    add_d(ver), add_p(ver), add_n(ver), add_method(ver);
    auto* hall = app.add_subcommand("hall", "subgroups of type mu in an abelian p-group of type lambda");
    hall->add_option("--lambda", req.lambda, "comma-separated parts");
    hall->add_option("--mu", req.mu, "comma-separated parts");
    add_p(hall);
    auto* self = app.add_subcommand("selftest", "fast acceptance subset");
    for (auto* sub : {compute, ser, funeq, absc, dom, grid, sq, orc, ver, hall, self}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }
    req.verb = app.get_subcommands().front()->get_name();
    req.format = parse_format(format);

    try {
        const RunReport rep = dispatch(req);
        out << rep.payload;
        out.flush();
        err << "nilzeta " << rep.version << " " << rep.verb << (rep.params.empty() ? "" : " " + rep.params)
            << " exit=" << rep.exitCode << " time=" << std::fixed << std::setprecision(3) << rep.seconds << "s\n";
        return rep.exitCode;
    } catch (const ResourceGuardError& e) {
        err << "nilzeta: guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        err << "nilzeta: usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "nilzeta: usage: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace nilzeta
