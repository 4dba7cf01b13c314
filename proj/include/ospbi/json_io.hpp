#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ospbi/biortho.hpp"
#include "ospbi/erratum.hpp"
#include "ospbi/ncalgebra.hpp"

namespace ospbi {

using ordered_json = nlohmann::ordered_json;

// All rationals cross the serialization boundary as "p/q" strings.

ordered_json report_json(const IdentityReport& r);
ordered_json suite_json(const std::vector<IdentityReport>& reports);

ordered_json params_json(const Params& p);

// {window:{lo,hi}, cols:[[...]]}; requires a square matrix (src == dst),
// columns by ascending source exponent, entries by ascending destination
// exponent.
ordered_json matrix_json(const ColumnMatrix& m);

ordered_json jacobi_table_json(const TTRCoeffs& coeffs, const std::vector<LaurentPoly>& polys);
// Header n,c0..c{nmax}; row n holds the coefficients of J_n by ascending
// degree, trailing cells empty.
std::string jacobi_table_csv(const std::vector<LaurentPoly>& polys);

ordered_json overlap_json(const Params& p, const OverlapTable& t);
std::string overlap_csv(const OverlapTable& t);

ordered_json bi_table_json(const Params& p, const BICoeffs& c, const std::vector<Rational>& omega);
std::string bi_table_csv(const BICoeffs& c, const std::vector<Rational>& omega);

ordered_json erratum_json(const std::vector<ErratumFinding>& findings);

// RFC-style: quotes a field iff it contains a comma, a quote, or a newline.
std::string csv_field(const std::string& s);

// Two-space indented dump with a trailing newline; the single formatting used
// for every artifact so outputs are byte-stable.
std::string dump_json(const ordered_json& j);

}  // namespace ospbi
