#pragma once

#include <variant>

#include <json.hpp>

#include "sbrep/irreducibility.hpp"

namespace sbrep {

using nlohmann::json;

// scalars
json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const GaussianRational& g);
// accepts {"re":..,"im":..}, a bare integer, or a literal string like "1/2+i"
GaussianRational gaussian_from_json(const json& j);

json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json to_json(const QuadExt& q);

// matrices: {"ring": "gaussian"|"laurent", "size": m, "entries": [[..]]}
json to_json(const SquareMatrix<GaussianRational>& m);
json to_json(const SquareMatrix<LaurentPoly>& m);

using MatrixVariant = std::variant<SquareMatrix<GaussianRational>, SquareMatrix<LaurentPoly>>;
MatrixVariant matrix_from_json(const json& j);

// representations
json to_json(const GaussianRep& rep);
json to_json(const LaurentRep& rep);

using RepVariant = std::variant<GaussianRep, LaurentRep>;
json rep_to_json(const RepVariant& rep);
RepVariant rep_from_json(const json& j);

// verdicts and reports
json to_json(const Verdict& v);

template <class R>
json violations_to_json(const std::vector<Violation<R>>& violations) {
    json arr = json::array();
    for (const auto& v : violations) {
        json item{{"family", v.family}, {"i", v.i}};
        if (v.j != 0) item["j"] = v.j;
        item["residual"] = to_json(v.residual);
        arr.push_back(std::move(item));
    }
    return json{{"violations", std::move(arr)}};
}

json to_json(const DiscrepancyRecord& rec);

json params_to_json(const Params& params);
Params params_from_json(const json& j);

}  // namespace sbrep
