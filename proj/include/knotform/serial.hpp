#pragma once

// File formats. All writers are deterministic: fixed key order, fixed
// 2-space indentation, trailing newline, integers that fit in a double's
// exact range emitted as JSON numbers and larger ones as decimal strings
// (readers accept both).
//
//   matrix       {"matrix": [[...], ...]}
//   polynomial   {"min_exp": e, "coeffs": [c_e, ..., c_max]}  (no zero ends)
//   certificate  {"n_power", "a", "d", "final_form", "genus_bound":
//                 {"num", "den"}, "realizability_attested", "transcript"}
//   census       CSV with one row per word

#include <knotform/census.hpp>
#include <knotform/laurent.hpp>
#include <knotform/matrix.hpp>
#include <knotform/seifert.hpp>
#include <knotform/stable.hpp>

#include <string>
#include <vector>

namespace knotform {
namespace serial {

std::string matrix_to_json(const seifert::SeifertMatrix& v);
seifert::SeifertMatrix matrix_from_json(const std::string& text);  // validates; ParseError / InvalidSeifertMatrix

std::string polynomial_to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(const std::string& text);

std::string certificate_to_json(const stable::SliceCertificate& cert);
stable::SliceCertificate certificate_from_json(const std::string& text);

std::string census_to_csv(const census::ScanReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace serial
}  // namespace knotform
