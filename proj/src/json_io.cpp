#include "sbrep/json_io.hpp"

namespace sbrep {

json to_json(const Rational& q) {
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return rational_from_literal(j.get<std::string>());
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        fail(Errc::parse_error, "rational must be {\"num\", \"den\"}");
    return rational_from_strings(j["num"].get<std::string>(), j["den"].get<std::string>());
}

json to_json(const GaussianRational& g) {
    return json{{"re", to_json(g.re())}, {"im", to_json(g.im())}};
}

GaussianRational gaussian_from_json(const json& j) {
    if (j.is_number_integer()) return GaussianRational(Rational(j.get<long>()));
    if (j.is_string()) return gaussian_from_literal(j.get<std::string>());
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        fail(Errc::parse_error, "gaussian scalar must be {\"re\", \"im\"}");
    return {rational_from_json(j["re"]), rational_from_json(j["im"])};
}

json to_json(const LaurentPoly& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.coeffs())  // std::map iterates exponents ascending
        arr.push_back(json{{"exp", e}, {"coeff", to_json(c)}});
    return arr;
}

LaurentPoly laurent_from_json(const json& j) {
    if (!j.is_array()) fail(Errc::parse_error, "laurent scalar must be an array of terms");
    LaurentPoly p;
    for (const auto& term : j) {
        if (!term.contains("exp") || !term.contains("coeff"))
            fail(Errc::parse_error, "laurent term must be {\"exp\", \"coeff\"}");
        p += LaurentPoly::monomial(term["exp"].get<long>(), gaussian_from_json(term["coeff"]));
    }
    return p;
}

json to_json(const QuadExt& q) {
    if (q.is_plain()) return to_json(q.base());
    return json{{"base", to_json(q.base())},
                {"coeff", to_json(q.coeff())},
                {"radicand", to_json(q.radicand())}};
}

namespace {

template <class R>
json matrix_json(const SquareMatrix<R>& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"ring", RingTraits<R>::name}, {"size", m.size()}, {"entries", std::move(rows)}};
}

template <class R, class ScalarParse>
SquareMatrix<R> parse_matrix(const json& j, ScalarParse&& parse) {
    int m = j.at("size").get<int>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != m)
        fail(Errc::parse_error, "matrix entries must be an m x m array");
    std::vector<R> data;
    data.reserve(static_cast<std::size_t>(m) * m);
    for (const auto& row : entries) {
        if (!row.is_array() || static_cast<int>(row.size()) != m)
            fail(Errc::parse_error, "matrix entries must be an m x m array");
        for (const auto& cell : row) data.push_back(parse(cell));
    }
    return SquareMatrix<R>(m, std::move(data));
}

}  // namespace

json to_json(const SquareMatrix<GaussianRational>& m) { return matrix_json(m); }
json to_json(const SquareMatrix<LaurentPoly>& m) { return matrix_json(m); }

MatrixVariant matrix_from_json(const json& j) {
    std::string ring = j.at("ring").get<std::string>();
    if (ring == "gaussian")
        return parse_matrix<GaussianRational>(j, [](const json& c) { return gaussian_from_json(c); });
    if (ring == "laurent")
        return parse_matrix<LaurentPoly>(j, [](const json& c) { return laurent_from_json(c); });
    fail(Errc::ring_mismatch, "unknown ring tag '" + ring + "'");
}

json params_to_json(const Params& params) {
    json out = json::object();
    for (const auto& [k, v] : params) out[k] = to_json(v);
    return out;
}

Params params_from_json(const json& j) {
    Params p;
    if (j.is_null()) return p;
    if (!j.is_object()) fail(Errc::parse_error, "params must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "base" || it.key() == "k") continue;  // structural, not scalars
        p[it.key()] = gaussian_from_json(it.value());
    }
    return p;
}

namespace {

template <class R>
json rep_json(const Representation<R>& rep) {
    json out{{"family", family_name(rep.family)},
             {"n", rep.n},
             {"dim", rep.dim},
             {"ring", RingTraits<R>::name},
             {"params", params_to_json(rep.params)}};
    if (rep.family == Family::wada || rep.wada_k != 0) out["k"] = rep.wada_k;
    if (rep.family == Family::phi) out["base"] = family_name(rep.base_family);
    if (!rep.advisories.empty()) out["advisories"] = rep.advisories;
    json sig = json::array(), ta = json::array();
    for (const auto& m : rep.images.sigma) sig.push_back(to_json(m));
    for (const auto& m : rep.images.tau) ta.push_back(to_json(m));
    out["sigma"] = std::move(sig);
    out["tau"] = std::move(ta);
    return out;
}

template <class R, class ScalarParse>
Representation<R> parse_rep(const json& j, ScalarParse&& parse) {
    Representation<R> rep;
    rep.family = j.contains("family") ? family_from_name(j["family"].get<std::string>())
                                      : Family::custom;
    rep.n = j.at("n").get<int>();
    if (j.contains("params")) rep.params = params_from_json(j["params"]);
    if (j.contains("k")) rep.wada_k = j["k"].get<int>();
    if (j.contains("base")) rep.base_family = family_from_name(j["base"].get<std::string>());
    if (j.contains("advisories"))
        rep.advisories = j["advisories"].get<std::vector<std::string>>();
    for (const auto& m : j.value("sigma", json::array()))
        rep.images.sigma.push_back(parse_matrix<R>(m, parse));
    for (const auto& m : j.value("tau", json::array()))
        rep.images.tau.push_back(parse_matrix<R>(m, parse));
    if (rep.images.sigma.empty()) fail(Errc::missing_generator, "representation has no sigma images");
    rep.dim = j.contains("dim") ? j["dim"].get<int>() : rep.images.sigma.front().size();
    for (const auto& m : rep.images.sigma)
        if (m.size() != rep.dim) fail(Errc::size_mismatch, "sigma image size differs from dim");
    for (const auto& m : rep.images.tau)
        if (m.size() != rep.dim) fail(Errc::size_mismatch, "tau image size differs from dim");
    if (static_cast<int>(rep.images.sigma.size()) != rep.n - 1)
        fail(Errc::missing_generator, "expected n-1 sigma images");
    if (!rep.images.tau.empty() && static_cast<int>(rep.images.tau.size()) != rep.n - 1)
        fail(Errc::missing_generator, "expected n-1 tau images");
    return rep;
}

}  // namespace

json to_json(const GaussianRep& rep) { return rep_json(rep); }
json to_json(const LaurentRep& rep) { return rep_json(rep); }

json rep_to_json(const RepVariant& rep) {
    return std::visit([](const auto& r) { return to_json(r); }, rep);
}

RepVariant rep_from_json(const json& j) {
    std::string ring = j.value("ring", "gaussian");
    if (ring == "gaussian")
        return parse_rep<GaussianRational>(j, [](const json& c) { return gaussian_from_json(c); });
    if (ring == "laurent")
        return parse_rep<LaurentPoly>(j, [](const json& c) { return laurent_from_json(c); });
    fail(Errc::ring_mismatch, "unknown ring tag '" + ring + "'");
}

json to_json(const Verdict& v) {
    json out{{"status", verdict_status_name(v.status)},
             {"oracle", oracle_name(v.oracle)},
             {"notes", v.notes}};
    if (v.witness) {
        json w = json::array();
        for (const auto& x : *v.witness) w.push_back(to_json(x));
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

json to_json(const DiscrepancyRecord& rec) {
    return json{{"predicate", rec.predicate_name},
                {"predicate_verdict", verdict_status_name(rec.predicate_verdict)},
                {"oracle_verdict", verdict_status_name(rec.oracle_verdict)},
                {"params", params_to_json(rec.params)},
                {"notes", rec.notes}};
}

}  // namespace sbrep
