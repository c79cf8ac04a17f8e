#include <knotform/serial.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace knotform {
namespace serial {

namespace {

using Json = nlohmann::ordered_json;

// Integers that a double cannot hold exactly travel as decimal strings.
const Int kJsonIntMax = (Int(1) << 53) - 1;

Json int_to_json(const Int& x) {
  if (boost::multiprecision::abs(x) <= kJsonIntMax) return Json(x.convert_to<long long>());
  return Json(x.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("malformed integer string '" + j.get<std::string>() + "'");
    }
  }
  throw ParseError("expected an integer or a decimal string");
}

Json vec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

IntVec vec_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  IntVec v;
  v.reserve(j.size());
  for (const Json& x : j) v.push_back(int_from_json(x));
  return v;
}

Json grid_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMat grid_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of matrix rows");
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j.at(static_cast<size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError("matrix rows have unequal lengths");
    for (int k = 0; k < cols; ++k) m.at(i, k) = int_from_json(row.at(static_cast<size_t>(k)));
  }
  return m;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string matrix_to_json(const seifert::SeifertMatrix& v) {
  Json j;
  j["matrix"] = grid_to_json(v.entries());
  return dump(j);
}

seifert::SeifertMatrix matrix_from_json(const std::string& text) {
  const Json j = parse(text);
  if (!j.is_object() || !j.contains("matrix")) throw ParseError("expected an object with a 'matrix' key");
  return seifert::SeifertMatrix(grid_from_json(j.at("matrix")));
}

std::string polynomial_to_json(const LaurentPolynomial& p) {
  Json j;
  if (p.is_zero()) {
    j["min_exp"] = 0;
    j["coeffs"] = Json::array();
  } else {
    j["min_exp"] = p.min_exp();
    Json coeffs = Json::array();
    for (long e = p.min_exp(); e <= p.max_exp(); ++e) coeffs.push_back(int_to_json(p.coeff(e)));
    j["coeffs"] = std::move(coeffs);
  }
  return dump(j);
}

LaurentPolynomial polynomial_from_json(const std::string& text) {
  const Json j = parse(text);
  if (!j.is_object() || !j.contains("min_exp") || !j.contains("coeffs"))
    throw ParseError("expected an object with 'min_exp' and 'coeffs'");
  if (!j.at("min_exp").is_number_integer()) throw ParseError("'min_exp' must be an integer");
  const long e0 = j.at("min_exp").get<long>();
  const IntVec coeffs = vec_from_json(j.at("coeffs"));
  if (!coeffs.empty() && (coeffs.front() == 0 || coeffs.back() == 0))
    throw ParseError("coefficient list must not start or end with zero");
  LaurentPolynomial p;
  for (size_t i = 0; i < coeffs.size(); ++i)
    p += LaurentPolynomial::monomial(coeffs[i], e0 + static_cast<long>(i));
  return p;
}

std::string certificate_to_json(const stable::SliceCertificate& cert) {
  Json j;
  j["N"] = cert.n_power;
  j["a"] = vec_to_json(cert.a);
  j["d"] = vec_to_json(cert.d);
  j["final_form"] = grid_to_json(cert.final_form);
  j["genus_bound"] = Json{{"num", int_to_json(boost::multiprecision::numerator(cert.genus_bound))},
                          {"den", int_to_json(boost::multiprecision::denominator(cert.genus_bound))}};
  j["realizability_attested"] = cert.realizability_attested;
  Json steps = Json::array();
  for (const stable::TranscriptStep& s : cert.transcript) {
    Json step;
    step["kind"] = s.kind;
    Json data = Json::object();
    for (const auto& [k, v] : s.data) data[k] = v;
    step["data"] = std::move(data);
    steps.push_back(std::move(step));
  }
  j["transcript"] = std::move(steps);
  return dump(j);
}

stable::SliceCertificate certificate_from_json(const std::string& text) {
  const Json j = parse(text);
  if (!j.is_object()) throw ParseError("expected a certificate object");
  for (const char* key : {"N", "a", "d", "final_form", "genus_bound", "realizability_attested", "transcript"})
    if (!j.contains(key)) throw ParseError(std::string("certificate is missing '") + key + "'");

  stable::SliceCertificate cert;
  if (!j.at("N").is_number_integer()) throw ParseError("'N' must be an integer");
  cert.n_power = j.at("N").get<int>();
  cert.a = vec_from_json(j.at("a"));
  cert.d = vec_from_json(j.at("d"));
  cert.final_form = grid_from_json(j.at("final_form"));
  const Json& gb = j.at("genus_bound");
  if (!gb.is_object() || !gb.contains("num") || !gb.contains("den"))
    throw ParseError("'genus_bound' must carry 'num' and 'den'");
  const Int num = int_from_json(gb.at("num"));
  const Int den = int_from_json(gb.at("den"));
  if (den == 0) throw ParseError("'genus_bound' denominator is zero");
  cert.genus_bound = Rat(num, den);
  if (!j.at("realizability_attested").is_boolean()) throw ParseError("'realizability_attested' must be a boolean");
  cert.realizability_attested = j.at("realizability_attested").get<bool>();
  if (!j.at("transcript").is_array()) throw ParseError("'transcript' must be an array");
  for (const Json& sj : j.at("transcript")) {
    if (!sj.is_object() || !sj.contains("kind")) throw ParseError("transcript step is missing 'kind'");
    stable::TranscriptStep step;
    step.kind = sj.at("kind").get<std::string>();
    if (sj.contains("data")) {
      if (!sj.at("data").is_object()) throw ParseError("transcript step 'data' must be an object");
      for (const auto& [k, v] : sj.at("data").items()) {
        if (!v.is_string()) throw ParseError("transcript step values must be strings");
        step.data[k] = v.get<std::string>();
      }
    }
    cert.transcript.push_back(std::move(step));
  }
  return cert;
}

std::string census_to_csv(const census::ScanReport& report) {
  std::ostringstream out;
  out << "word,strands,letters,genus,signature,lower_bound,equality,alexander,torus_match,certificate_path\n";
  for (const census::CensusRecord& r : report.records) {
    const Rat lower(r.signature < 0 ? -r.signature : r.signature, 2);
    out << csv_quote(braid::print_braid_word(r.word)) << ',' << r.word.strands << ','
        << r.word.length() << ',' << r.genus << ',' << r.signature << ',' << lower.str() << ','
        << (r.equality ? "yes" : "no") << ',' << csv_quote(r.alexander.str()) << ',';
    if (r.torus_match)
      out << csv_quote("T(" + std::to_string(r.torus_match->first) + "," +
                       std::to_string(r.torus_match->second) + ")");
    else
      out << "\"\"";
    out << ',' << csv_quote(r.certificate_path) << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
  if (!out.good()) throw Error("short write to '" + path + "'");
}

}  // namespace serial
}  // namespace knotform
