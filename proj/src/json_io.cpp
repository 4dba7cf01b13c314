#include "ospbi/json_io.hpp"

#include <algorithm>

namespace ospbi {

namespace {

ordered_json rational_array(const std::vector<Rational>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

}  // namespace

ordered_json report_json(const IdentityReport& r) {
    ordered_json j;
    j["identity"] = r.identity;
    j["pass"] = r.pass;
    j["residual"] = r.residual;
    j["rule_applications"] = r.rule_applications;
    return j;
}

ordered_json suite_json(const std::vector<IdentityReport>& reports) {
    ordered_json j;
    j["pass"] = std::all_of(reports.begin(), reports.end(),
                            [](const IdentityReport& r) { return r.pass; });
    ordered_json list = ordered_json::array();
    for (const auto& r : reports) list.push_back(report_json(r));
    j["reports"] = std::move(list);
    return j;
}

ordered_json params_json(const Params& p) {
    ordered_json j;
    j["mu1"] = p.mu1.str();
    j["mu2"] = p.mu2.str();
    j["mu3"] = p.mu3.str();
    j["mu4"] = p.mu4.str();
    if (p.N.has_value())
        j["N"] = *p.N;
    else
        j["N"] = nullptr;
    return j;
}

ordered_json matrix_json(const ColumnMatrix& m) {
    if (!(m.src == m.dst))
        throw std::invalid_argument("matrix serialization expects a square window");
    ordered_json j;
    j["window"] = {{"lo", m.dst.lo}, {"hi", m.dst.hi}};
    ordered_json cols = ordered_json::array();
    for (const auto& col : m.cols) cols.push_back(rational_array(col));
    j["cols"] = std::move(cols);
    return j;
}

ordered_json jacobi_table_json(const TTRCoeffs& coeffs, const std::vector<LaurentPoly>& polys) {
    ordered_json j;
    j["alpha"] = coeffs.alpha.str();
    j["beta"] = coeffs.beta.str();
    ordered_json ps = ordered_json::array();
    for (const auto& p : polys) ps.push_back(to_string(p));
    j["polys"] = std::move(ps);
    j["b"] = rational_array(coeffs.b);
    j["u"] = rational_array(coeffs.u);
    return j;
}

std::string jacobi_table_csv(const std::vector<LaurentPoly>& polys) {
    long nmax = static_cast<long>(polys.size()) - 1;
    std::string out = "n";
    for (long d = 0; d <= nmax; ++d) out += ",c" + std::to_string(d);
    out += "\n";
    for (long n = 0; n <= nmax; ++n) {
        out += std::to_string(n);
        for (long d = 0; d <= nmax; ++d) {
            out += ",";
            if (d <= n) out += csv_field(polys[static_cast<size_t>(n)].coeff(d).str());
        }
        out += "\n";
    }
    return out;
}

ordered_json overlap_json(const Params& p, const OverlapTable& t) {
    ordered_json j;
    j["params"] = params_json(p);
    j["N"] = t.N;
    j["Omega"] = rational_array(t.omega);
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.B) rows.push_back(rational_array(row));
    j["B"] = std::move(rows);
    if (!t.warnings.empty()) j["warnings"] = t.warnings;
    return j;
}

std::string overlap_csv(const OverlapTable& t) {
    std::string out = "n,k,B\n";
    for (size_t n = 0; n < t.B.size(); ++n)
        for (size_t k = 0; k < t.B[n].size(); ++k)
            out += std::to_string(n) + "," + std::to_string(k) + "," +
                   csv_field(t.B[n][k].str()) + "\n";
    return out;
}

ordered_json bi_table_json(const Params& p, const BICoeffs& c,
                           const std::vector<Rational>& omega) {
    ordered_json j;
    j["params"] = params_json(p);
    j["N"] = p.N.has_value() ? ordered_json(*p.N) : ordered_json(nullptr);
    j["Omega"] = rational_array(omega);
    j["A"] = rational_array(c.A);
    j["C"] = rational_array(c.C);
    j["U"] = rational_array(c.U);
    j["r"] = rational_array(c.r);
    return j;
}

std::string bi_table_csv(const BICoeffs& c, const std::vector<Rational>& omega) {
    std::string out = "n,Omega,A,C,U,r\n";
    for (size_t n = 0; n < c.A.size(); ++n)
        out += std::to_string(n) + "," + csv_field(omega[n].str()) + "," +
               csv_field(c.A[n].str()) + "," + csv_field(c.C[n].str()) + "," +
               csv_field(c.U[n].str()) + "," + csv_field(c.r[n].str()) + "\n";
    return out;
}

ordered_json erratum_json(const std::vector<ErratumFinding>& findings) {
    ordered_json list = ordered_json::array();
    for (const auto& f : findings) {
        ordered_json j;
        j["id"] = f.id;
        j["statement"] = f.statement;
        j["correction"] = f.correction;
        j["context"] = f.context;
        j["printed_value"] = f.printed_value;
        j["computed_value"] = f.computed_value;
        list.push_back(std::move(j));
    }
    ordered_json out;
    out["findings"] = std::move(list);
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += "\"\"";
        else q += ch;
    }
    q += "\"";
    return q;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace ospbi
