#pragma once

// Deterministic text and JSON forms for polynomials and series.
// Text polynomials are written by descending power of the main variable with
// coefficients in the other variable ascending, explicit * and ^ throughout:
//   (1-4*t)*D^2 - 1
// JSON schemas:
//   polynomial: {"vars": ["t","D"], "terms": [[i, j, "num/den"], ...]}
//   series:     {"var": "t", "order": N, "coeffs": ["num/den", ...]}

#include <string>
#include <vector>

#include <json.hpp>

#include "diagon/bipoly.hpp"
#include "diagon/series.hpp"

namespace diagon {

namespace detail_fmt {

// c * v^k with unit coefficients dropped; the sign is handled by the caller
inline std::string monomial_text(const Rational& c, const std::string& var, std::size_t k) {
    std::string tail;
    if (k == 1)
        tail = var;
    else if (k > 1)
        tail = var + "^" + std::to_string(k);
    if (tail.empty()) return c.str();
    if (c.is_one()) return tail;
    return c.str() + "*" + tail;
}

inline std::string unipoly_text(const Poly<Rational>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const Rational& c = p[k];
        if (c.is_zero()) continue;
        Rational mag = c.is_negative() ? -c : c;
        if (out.empty())
            out += c.is_negative() ? "-" : "";
        else
            out += c.is_negative() ? "-" : "+";
        out += monomial_text(mag, var, k);
    }
    return out;
}

}  // namespace detail_fmt

// main variable is the second index of the BiPoly
inline std::string poly_to_text(const BiPoly& p, const std::string& xname,
                                const std::string& yname) {
    if (p.is_zero()) return "0";
    YOverX rows = p.poly_in_y();
    std::string out;
    for (std::size_t jp = rows.size(); jp-- > 0;) {
        const Poly<Rational>& cj = rows[jp];
        if (cj.is_zero()) continue;
        std::size_t nterms = 0;
        for (const auto& c : cj.coeffs())
            if (!c.is_zero()) ++nterms;

        std::string mainpart;
        if (jp == 1)
            mainpart = yname;
        else if (jp > 1)
            mainpart = yname + "^" + std::to_string(jp);

        if (nterms > 1) {
            std::string grp = "(" + detail_fmt::unipoly_text(cj, xname) + ")";
            if (!mainpart.empty()) grp += "*" + mainpart;
            out += out.empty() ? grp : " + " + grp;
        } else {
            std::size_t k = 0;
            while (cj[k].is_zero()) ++k;
            const Rational& c = cj[k];
            Rational mag = c.is_negative() ? -c : c;
            std::string body = detail_fmt::monomial_text(mag, xname, k);
            if (!mainpart.empty()) {
                if (body == "1")
                    body = mainpart;
                else
                    body += "*" + mainpart;
            }
            if (out.empty())
                out += (c.is_negative() ? "-" : "") + body;
            else
                out += (c.is_negative() ? " - " : " + ") + body;
        }
    }
    return out;
}

inline std::string series_to_text(const Series<Rational>& s, const std::string& var) {
    Poly<Rational> p(s.coeffs());
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const Rational& c = p[k];
        if (c.is_zero()) continue;
        Rational mag = c.is_negative() ? -c : c;
        std::string body = detail_fmt::monomial_text(mag, var, k);
        if (out.empty())
            out += (c.is_negative() ? "-" : "") + body;
        else
            out += (c.is_negative() ? " - " : " + ") + body;
    }
    return out;
}

inline nlohmann::json poly_to_json(const BiPoly& p, const std::string& xname,
                                   const std::string& yname) {
    nlohmann::json terms = nlohmann::json::array();
    for (std::size_t i = 0; i <= static_cast<std::size_t>(p.degree_x().value_or(0)); ++i)
        for (std::size_t j = 0; j <= static_cast<std::size_t>(p.degree_y().value_or(0)); ++j)
            if (!p.coeff(i, j).is_zero())
                terms.push_back({i, j, p.coeff(i, j).str()});
    return {{"vars", {xname, yname}}, {"terms", terms}};
}

inline nlohmann::json series_to_json(const Series<Rational>& s, const std::string& var) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t i = 0; i < s.order(); ++i) coeffs.push_back(s[i].str());
    return {{"var", var}, {"order", s.order()}, {"coeffs", coeffs}};
}

// exact integers, arbitrary precision, as a bare JSON array
inline std::string integer_series_to_json(const Series<Rational>& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.order(); ++i) {
        if (i) out += ",";
        out += s[i].num().get_str();
    }
    return out + "]";
}

}  // namespace diagon
