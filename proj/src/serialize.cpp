#include "cycmzv/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace cycmzv {

Json to_json(const CycloElem& x) {
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(format_rational(c));
    return Json{{"n", x.level()}, {"coeffs", std::move(coeffs)}};
}

CycloElem cyclo_from_json(const Json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
        return CycloElem::from_coeffs(n, coeffs);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("cyclotomic element: ") + e.what());
    }
}

Json to_json(const HPoly& w) {
    Json out = Json::array();
    for (const auto& [m, c] : w.terms())
        out.push_back(Json{{"index", format_index(m.index)}, {"hbar", m.hbar}, {"coeff", format_rational(c)}});
    return out;
}

HPoly hpoly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("relation: expected a JSON list of terms");
    HPoly out;
    try {
        for (const auto& t : j) {
            const Index k = parse_index(t.at("index").get<std::string>());
            const int hbar = t.contains("hbar") ? t.at("hbar").get<int>() : 0;
            if (hbar < 0) throw ParseError("relation: negative hbar exponent");
            Rational c(1);
            if (t.contains("coeff")) {
                const auto& cj = t.at("coeff");
                c = cj.is_string() ? parse_rational(cj.get<std::string>()) : Rational(cj.get<long>());
            }
            out.add(k, hbar, c);
        }
    } catch (const Json::exception& e) {
        throw ParseError(std::string("relation: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    return out;
}

HPoly parse_hpoly(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("relation: ") + e.what());
    }
    return hpoly_from_json(j);
}

std::string to_string(Ring r) { return r == Ring::A ? "A" : "Acyc"; }

Json to_json(const RelationReport& r) {
    Json primes = Json::object();
    for (const auto& [p, res] : r.primes) {
        Json e{{"status", to_string(res.status)}};
        if (res.status == PrimeStatus::Nonzero) e["residue"] = res.residue;
        if (res.status == PrimeStatus::Excluded) e["reason"] = res.reason;
        primes[std::to_string(p)] = std::move(e);
    }
    return Json{{"ring", to_string(r.ring)},
                {"star", r.mode == SumMode::Star},
                {"homogeneous", r.homogeneous},
                {"holds", r.holds()},
                {"zero", r.count(PrimeStatus::Zero)},
                {"nonzero", r.count(PrimeStatus::Nonzero)},
                {"excluded", r.count(PrimeStatus::Excluded)},
                {"primes", std::move(primes)}};
}

Json to_json(const KerPhiReport& r) {
    Json primes = Json::object();
    for (const auto& [p, res] : r.primes) {
        Json e{{"finite_image", to_string(res.finite_image)}};
        if (res.finite_image == PrimeStatus::Excluded)
            e["reason"] = res.reason;
        else
            e["in_varpi_span"] = res.in_varpi_span;
        primes[std::to_string(p)] = std::move(e);
    }
    return Json{{"weight", r.weight},
                {"finite_image_zero", r.finite_image_zero()},
                {"varpi_span_member", r.varpi_span_member()},
                {"primes", std::move(primes)}};
}

std::string format_float(const BigFloat& x, int digits) { return x.to_string(digits); }

Json to_json(const BigComplex& z, int digits) {
    return Json{{"re", format_float(z.re, digits)}, {"im", format_float(z.im, digits)}};
}

Json to_json(const XiEstimate& e, int digits) {
    char buf[32];
    auto sci = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.6e", v);
        return std::string(buf);
    };
    Json window = Json::array();
    for (double w : e.window_errors) window.push_back(sci(w));
    Json values = Json::array();
    for (std::size_t i = 0; i < e.values.size(); ++i)
        values.push_back(Json{{"n", e.schedule[i]}, {"value", to_json(e.values[i], digits)}});
    return Json{{"estimate", to_json(e.estimate, digits)},
                {"error_bar", sci(e.error_bar)},
                {"converged", e.converged},
                {"log_order", e.log_order},
                {"window_errors", std::move(window)},
                {"values", std::move(values)}};
}

std::string dimension_table_csv(const std::vector<DimensionRow>& rows) {
    std::ostringstream os;
    os << "k,num_indices,relation_rank,upper_bound\n";
    for (const auto& r : rows) os << r.k << ',' << r.num_indices << ',' << r.relation_rank << ',' << r.upper_bound << '\n';
    return os.str();
}

Json dimension_table_json(const std::vector<DimensionRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows)
        out.push_back(Json{{"k", r.k},
                           {"num_indices", r.num_indices},
                           {"relation_rank", r.relation_rank},
                           {"upper_bound", r.upper_bound},
                           {"certified", r.certified}});
    return out;
}

}  // namespace cycmzv
