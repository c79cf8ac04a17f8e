// knotform: Seifert-form invariants of positive braid closures and
// verifiable stable-genus certificates.
//
// Exit codes: 0 success; 1 failed verification or failed census verdict;
// 2 unusable input (parse errors, missing files, bad bounds, mismatched
// certificate dimensions); 3 violated mathematical preconditions (not a
// knot, invalid Seifert matrix); 4 certificate requested but the
// signature bound is tight; 5 missing or unusable annulus attestation.

#include <CLI11.hpp>

#include <knotform/braid.hpp>
#include <knotform/census.hpp>
#include <knotform/errors.hpp>
#include <knotform/invariants.hpp>
#include <knotform/seifert.hpp>
#include <knotform/serial.hpp>
#include <knotform/stable.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace knotform;

struct InputOptions {
  std::string braid_text;
  std::string braid_file;
  std::string matrix_file;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* b = cmd->add_option("--braid", in.braid_text, "positive braid word, e.g. \"1 2 1 2\"");
  auto* f = cmd->add_option("--braid-file", in.braid_file, "file containing a braid word");
  auto* m = cmd->add_option("--matrix", in.matrix_file, "JSON file with a Seifert matrix");
  b->excludes(f)->excludes(m);
  f->excludes(m);
}

struct LoadedForm {
  seifert::SeifertMatrix matrix;
  std::optional<braid::BraidWord> word;  // present for braid input
};

LoadedForm load_form(const InputOptions& in) {
  const int sources = (!in.braid_text.empty()) + (!in.braid_file.empty()) + (!in.matrix_file.empty());
  if (sources != 1) throw ParseError("exactly one of --braid, --braid-file, --matrix is required");
  if (!in.matrix_file.empty())
    return {serial::matrix_from_json(serial::read_file(in.matrix_file)), std::nullopt};
  const std::string text = in.braid_text.empty() ? serial::read_file(in.braid_file) : in.braid_text;
  braid::BraidWord w = braid::parse_braid_word(text);
  return {seifert::from_positive_braid(w), std::move(w)};
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

int cmd_invariants(const InputOptions& in) {
  const LoadedForm form = load_form(in);
  const invariants::BoundReport rep = invariants::bound_report(form.matrix);
  if (form.word) {
    std::cout << "word: " << braid::print_braid_word(*form.word) << "\n"
              << "strands: " << form.word->strands << "\n"
              << "letters: " << form.word->length() << "\n";
  }
  std::cout << "genus: " << rep.genus << "\n"
            << "signature: " << rep.signature << "\n"
            << "lower bound: " << rep.lower_bound.str() << "\n"
            << "alexander: " << invariants::alexander(form.matrix).str() << "\n"
            << "equality: " << yesno(rep.equality) << "\n";
  return 0;
}

// The annulus witness. Braid input always carries one: the first brick
// cycle spans an embedded annulus in the fiber surface, framing -1. For a
// raw matrix the attestation names a framing sign, and a standard basis
// vector with that self-linking is required to anchor it.
stable::FramedClass annulus_witness(const LoadedForm& form, const std::optional<int>& attest_sign) {
  const int n = form.matrix.size();
  if (form.word) {
    IntVec e(static_cast<size_t>(n), Int(0));
    e[0] = 1;
    return stable::make_framed_class(form.matrix, 1, std::move(e));
  }
  if (!attest_sign)
    throw NoAttestation("raw matrix input needs --attest-annulus +1 or -1");
  for (int i = 0; i < n; ++i) {
    if (form.matrix.entries().at(i, i) == *attest_sign) {
      IntVec e(static_cast<size_t>(n), Int(0));
      e[static_cast<size_t>(i)] = 1;
      return stable::make_framed_class(form.matrix, 1, std::move(e));
    }
  }
  throw NoAttestation("no diagonal entry of the matrix equals the attested framing " +
                      std::to_string(*attest_sign));
}

int cmd_certificate(const InputOptions& in, const std::optional<int>& attest_sign,
                    const std::string& out_path, const std::string& matrix_out) {
  const LoadedForm form = load_form(in);
  if (form.matrix.size() == 0) {
    std::cout << "genus 0: the closure already bounds a disk; nothing to certify\n";
    return 4;
  }
  const stable::FramedClass witness = annulus_witness(form, attest_sign);
  const stable::Dichotomy result = stable::decide_dichotomy(form.matrix, true, witness);
  if (result.equality) {
    std::cout << "signature bound is tight: |" << result.report.signature
              << "| = 2 * " << result.report.genus << "; no certificate exists on this route\n";
    return 4;
  }
  const stable::SliceCertificate& cert = *result.certificate;
  serial::write_file(out_path, serial::certificate_to_json(cert));
  if (!matrix_out.empty()) serial::write_file(matrix_out, serial::matrix_to_json(form.matrix));
  std::cout << "genus: " << result.report.genus << "\n"
            << "signature: " << result.report.signature << "\n"
            << "power: " << cert.n_power << "\n"
            << "stable genus bound: " << cert.genus_bound.str() << "\n"
            << "certificate: " << out_path << "\n";
  return 0;
}

int cmd_verify(const std::string& matrix_path, const std::string& cert_path) {
  seifert::SeifertMatrix v = [&] {
    try {
      return serial::matrix_from_json(serial::read_file(matrix_path));
    } catch (const InvalidSeifertMatrix& e) {
      throw ParseError(std::string("base matrix unusable: ") + e.what());
    }
  }();
  const stable::SliceCertificate cert = serial::certificate_from_json(serial::read_file(cert_path));
  const size_t want = static_cast<size_t>(v.size()) * static_cast<size_t>(cert.n_power > 0 ? cert.n_power : 0);
  if (cert.n_power < 1 || cert.a.size() != want || cert.d.size() != want)
    throw ParseError("certificate classes do not fit the matrix: expected length " +
                     std::to_string(want) + ", got " + std::to_string(cert.a.size()) + " and " +
                     std::to_string(cert.d.size()));
  const stable::VerifyReport rep = stable::verify_certificate(v, cert);
  for (const stable::VerifyCheck& c : rep.checks)
    std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  (" << c.detail << ")\n";
  std::cout << (rep.ok() ? "certificate verified\n" : "certificate rejected\n");
  return rep.ok() ? 0 : 1;
}

int cmd_census(int strands, int crossings, const std::string& out_path,
               const std::string& certify_dir) {
  if (strands < 2 || crossings < 1) {
    std::cerr << "error: census needs --strands >= 2 and --crossings >= 1\n";
    return 2;
  }
  census::ScanReport report = census::classification_scan(strands, crossings);

  if (!certify_dir.empty()) {
    std::filesystem::create_directories(certify_dir);
    for (census::CensusRecord& rec : report.records) {
      if (rec.equality) continue;
      const seifert::SeifertMatrix v = seifert::from_positive_braid(rec.word);
      IntVec e(static_cast<size_t>(v.size()), Int(0));
      e[0] = 1;
      const stable::Dichotomy result =
          stable::decide_dichotomy(v, true, stable::make_framed_class(v, 1, std::move(e)));
      std::string name = "cert";
      for (int l : rec.word.letters) name += "-" + std::to_string(l);
      name += ".json";
      const std::string path = (std::filesystem::path(certify_dir) / name).string();
      serial::write_file(path, serial::certificate_to_json(*result.certificate));
      rec.certificate_path = path;
    }
  }
  if (!out_path.empty()) serial::write_file(out_path, serial::census_to_csv(report));

  std::cout << "strands <= " << report.s_max << ", letters <= " << report.c_max << "\n"
            << "words: " << report.records.size() << "\n"
            << "tight signature bound: " << report.equality_count << "\n";
  for (const census::CensusRecord& rec : report.records) {
    if (!rec.equality) continue;
    std::cout << "  " << braid::print_braid_word(rec.word) << "  (genus " << rec.genus << ")";
    if (rec.torus_match)
      std::cout << "  = T(" << rec.torus_match->first << ", " << rec.torus_match->second << ")";
    else
      std::cout << "  = no torus knot in range";
    std::cout << "\n";
  }
  for (const std::string& viol : report.violations) std::cout << "violation: " << viol << "\n";
  std::cout << "verdict: " << (report.verdict_pass ? "PASS" : "FAIL") << "\n";
  return report.verdict_pass ? 0 : 1;
}

int cmd_torus(int p, int q) {
  const braid::BraidWord w = census::torus_braid(p, q);
  std::cout << "word: " << braid::print_braid_word(w) << "\n"
            << "strands: " << w.strands << "\n"
            << "letters: " << w.length() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seifert-form invariants of positive braid closures"};
  app.require_subcommand(1);

  InputOptions inv_in;
  CLI::App* inv = app.add_subcommand("invariants", "genus, signature, Alexander polynomial");
  add_input_options(inv, inv_in);

  InputOptions cert_in;
  std::optional<int> attest_sign;
  std::string cert_out, cert_matrix_out;
  CLI::App* cert = app.add_subcommand("certificate", "produce a stable-genus certificate");
  add_input_options(cert, cert_in);
  cert->add_option("--attest-annulus", attest_sign,
                   "attested framing (+1 or -1) of an embedded annulus, for raw matrix input")
      ->check(CLI::IsMember({1, -1}));
  cert->add_option("--out", cert_out, "certificate output path")->required();
  cert->add_option("--matrix-out", cert_matrix_out, "also write the Seifert matrix as JSON");

  std::string ver_matrix, ver_cert;
  CLI::App* ver = app.add_subcommand("verify", "check a certificate against a Seifert matrix");
  ver->add_option("--matrix", ver_matrix, "JSON file with the Seifert matrix")->required();
  ver->add_option("--cert", ver_cert, "certificate JSON file")->required();

  int cen_strands = 0, cen_crossings = 0;
  std::string cen_out, cen_certify;
  CLI::App* cen = app.add_subcommand("census", "scan positive braid knots in a budget");
  cen->add_option("--strands", cen_strands, "maximum strand count")->required();
  cen->add_option("--crossings", cen_crossings, "maximum letter count")->required();
  cen->add_option("--out", cen_out, "write the census as CSV");
  cen->add_option("--certify", cen_certify, "directory for certificates of non-tight words");

  int tor_p = 0, tor_q = 0;
  CLI::App* tor = app.add_subcommand("torus", "standard positive braid of a torus knot");
  tor->add_option("--p", tor_p, "strand parameter")->required();
  tor->add_option("--q", tor_q, "twist parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (inv->parsed()) return cmd_invariants(inv_in);
    if (cert->parsed()) return cmd_certificate(cert_in, attest_sign, cert_out, cert_matrix_out);
    if (ver->parsed()) return cmd_verify(ver_matrix, ver_cert);
    if (cen->parsed()) return cmd_census(cen_strands, cen_crossings, cen_out, cen_certify);
    if (tor->parsed()) return cmd_torus(tor_p, tor_q);
  } catch (const NoAttestation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonPositiveLetter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const EmptyWord& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotCoprime& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
