#include "bigalg/json_io.hpp"

namespace bigalg {

Json qpoly_to_json(const QPolynomial& q)
{
    Json out = Json::array();
    for (const auto& [e, c] : q.terms()) {
        Json exp = is_integer(e) ? Json(e.get_num().get_si()) : Json(to_string(e));
        out.push_back(Json::array({exp, c.get_si()}));
    }
    return out;
}

Json qmatrix_to_json(const QMatrix& m)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        out.push_back(row);
    }
    return out;
}

namespace {

Json terms_of(const MultiPoly& p, std::size_t nv)
{
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json exps = Json::array();
        for (std::size_t v = 0; v < nv; ++v) exps.push_back(m.exp[v]);
        terms.push_back(Json::array({exps, to_string(c)}));
    }
    return terms;
}

}  // namespace

Json poly_to_json(const MultiPoly& p)
{
    Json out;
    std::size_t nv = p.vars() ? p.vars()->size() : 0;
    out["variables"] = p.vars() ? p.vars()->names() : std::vector<std::string>{};
    out["terms"] = terms_of(p, nv);
    return out;
}

Json polymatrix_to_json(const PolyMatrix& m)
{
    Json out;
    std::size_t nv = m.vars() ? m.vars()->size() : 0;
    out["variables"] = m.vars() ? m.vars()->names() : std::vector<std::string>{};
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(terms_of(m(i, j), nv));
        rows.push_back(row);
    }
    out["entries"] = rows;
    return out;
}

Json relation_to_json(const MultiPoly& p)
{
    Json out = Json::array();
    // Largest monomial first, matching the printed order.
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        Json monos = Json::array();
        for (std::size_t v = 0; v < p.vars()->size(); ++v)
            if (it->first.exp[v] != 0) monos.push_back(Json::array({p.vars()->name(v), it->first.exp[v]}));
        out.push_back({{"monomials", monos}, {"coeff", to_string(it->second)}});
    }
    return out;
}

MultiPoly relation_from_json(const Json& j, const VarSetPtr& vars)
{
    if (j.is_string()) return parse_polynomial(vars, j.get<std::string>());
    if (!j.is_array()) throw Error("relation must be a string or a list of terms");
    MultiPoly p(vars);
    for (const auto& t : j) {
        Monomial m;
        for (const auto& f : t.at("monomials")) {
            std::size_t v = vars->require(f.at(0).get<std::string>());
            m.exp[v] = static_cast<std::int16_t>(m.exp[v] + f.at(1).get<int>());
        }
        const auto& c = t.at("coeff");
        Rational coeff = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
        p += MultiPoly::term(vars, m, coeff);
    }
    return p;
}

}  // namespace bigalg
