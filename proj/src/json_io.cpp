#include "sc/json_io.hpp"

namespace sc {

namespace {

// Split one QSeries component into per-lambda-power term objects.
void emit_terms(nlohmann::json& terms, int z_exp, const char* monomial,
                const QSeries& s) {
    if (s.is_zero_known()) return;
    // gather the lambda exponents that occur
    std::map<int, std::vector<std::string>> by_lambda;
    for (int n = 0; n <= s.known_degree(); ++n) {
        Scalar cn = s.coeff(n);
        for (const auto& [k, v] : cn.terms()) by_lambda.try_emplace(k);
    }
    for (auto& [k, coeffs] : by_lambda) {
        coeffs.resize(s.known_degree() + 1, "0");
        for (int n = 0; n <= s.known_degree(); ++n) {
            Rat v = s.coeff(n).coeff(k);
            if (v != 0) coeffs[n] = v.get_str();
        }
        terms.push_back({{"z_exp", z_exp},
                         {"monomial", monomial},
                         {"lambda_exp", k},
                         {"q_coeffs", coeffs}});
    }
}

}  // namespace

nlohmann::json superfield_to_json(const SuperField& f) {
    nlohmann::json j;
    int qmin = QSeries::kExact;
    int zmin = 0, zmax = 0;
    if (!f.terms().empty()) {
        zmin = f.terms().begin()->first;
        zmax = f.terms().rbegin()->first;
    }
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [n, g] : f.terms()) {
        emit_terms(terms, n, "1", g.c1);
        emit_terms(terms, n, "theta", g.cth);
        emit_terms(terms, n, "phi", g.cph);
        emit_terms(terms, n, "thetaphi", g.cthph);
        qmin = std::min(qmin, g.accuracy());
    }
    j["q_order"] = qmin == QSeries::kExact ? -1 : qmin;
    j["z_min"] = zmin;
    j["z_max"] = f.z_exact() ? zmax : f.zacc();
    j["terms"] = terms;
    return j;
}

nlohmann::json verdict_to_json(const Verdict& v) {
    const char* s = v.status == Verdict::Status::holds     ? "holds"
                    : v.status == Verdict::Status::fails   ? "fails"
                                                           : "insufficient";
    return {{"status", s},
            {"z_order", v.z_order},
            {"q_order", v.q_order},
            {"detail", v.detail}};
}

}  // namespace sc
