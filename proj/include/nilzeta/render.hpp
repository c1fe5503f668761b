#ifndef NILZETA_RENDER_HPP
#define NILZETA_RENDER_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "nilzeta/analysis.hpp"
#include "nilzeta/laurent.hpp"
#include "nilzeta/lieoracle.hpp"
#include "nilzeta/qseries.hpp"

namespace nilzeta {

// Insertion-ordered so that documents follow the schemas field by field.
using Json = nlohmann::ordered_json;

enum class Format { Json, Latex, Text };

Format parse_format(const std::string& s);

// {"numerator": [{"p", "t", "c"}], "denominator": [{"a", "b", "m"}]}
Json to_json(const FactoredRat& x);
FactoredRat factored_from_json(const Json& j);
// {"p": int, "counts": ["1", "7", ...]}
Json to_json(const CountTable& t);
// {"alpha": "51/10", "argmax": 5 | "d", "unique": bool}
Json to_json(const AbscissaResult& r);
Json to_json(const FuneqCertificate& c);
Json to_json(const DominanceReport& r);
Json to_json(const Partition& p);

// p^{a - bs} notation with t = p^{-s}.
std::string latex(const LaurentPoly& x);
std::string latex(const FactoredRat& x);
// Prefactors as zeta_p(s - i) and zeta_p((d+d')s - dd'), then A as a fraction.
std::string latex_local_zeta(const ZetaParams& params, const FactoredRat& a);

// Left-aligned columns separated by two spaces, with a header rule.
std::string text_table(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows);

}  // namespace nilzeta

#endif
