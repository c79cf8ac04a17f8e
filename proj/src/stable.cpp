#include <knotform/stable.hpp>

#include <sstream>
#include <utility>

namespace knotform {
namespace stable {

namespace {

std::string vec_str(const IntVec& v) {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i].str();
  }
  out << ')';
  return out.str();
}

// Extend a class by zero blocks; the framing is untouched.
FramedClass pad_to_power(const seifert::SeifertMatrix& v, const FramedClass& c, int power) {
  if (power < c.power) throw DimensionMismatch("cannot shrink a framed class");
  FramedClass out = c;
  out.vec.resize(static_cast<size_t>(v.size()) * static_cast<size_t>(power), Int(0));
  out.power = power;
  return out;
}

}  // namespace

FramedClass make_framed_class(const seifert::SeifertMatrix& v, int power, IntVec vec) {
  if (power < 1) throw InvalidPower("class power must be at least 1");
  if (vec.size() != static_cast<size_t>(v.size()) * static_cast<size_t>(power))
    throw DimensionMismatch("class length must be size(V) * power");
  if (!is_primitive(vec)) throw NotPrimitive("class vector is not primitive");
  FramedClass c;
  c.power = power;
  c.vec = std::move(vec);
  c.framing = bilinear_power(v.entries(), c.vec, c.vec);
  return c;
}

FramedClass find_signed_class(const seifert::SeifertMatrix& v, int sign) {
  if (sign != 1 && sign != -1) throw Error("requested sign must be +1 or -1");
  const Congruence c = congruence_diagonalize(v.entries() + transpose(v.entries()), sign);
  for (const CongruencePivot& p : c.pivots) {
    if (sign_of(p.value) != sign) continue;
    Int mult = 1;
    for (const Rat& x : p.vec) mult = boost::multiprecision::lcm(mult, boost::multiprecision::denominator(x));
    IntVec w(p.vec.size());
    for (size_t i = 0; i < w.size(); ++i) {
      const Rat& x = p.vec[i];
      w[i] = boost::multiprecision::numerator(x) * (mult / boost::multiprecision::denominator(x));
    }
    const Int g = gcd_all(w);
    for (Int& x : w) x /= g;
    return make_framed_class(v, 1, std::move(w));
  }
  throw DefiniteForm("the symmetrized form has no direction of the requested sign");
}

FramedClass realize_framing(const seifert::SeifertMatrix& v, const FramedClass& base,
                            const FramedClass& unit, const Int& target) {
  if (boost::multiprecision::abs(unit.framing) != 1)
    throw NotUnitFraming("correction unit must have framing +1 or -1");
  const Int steps = (target - base.framing) * unit.framing;
  if (steps < 0)
    throw UnreachableFraming("unit of framing " + unit.framing.str() + " cannot move " +
                             base.framing.str() + " toward " + target.str());
  if (steps > 1000000) throw Error("framing correction would use an absurd number of blocks");
  const long k = steps.convert_to<long>();

  FramedClass out;
  out.power = base.power + static_cast<int>(k) * unit.power;
  out.vec = base.vec;
  out.vec.reserve(static_cast<size_t>(v.size()) * static_cast<size_t>(out.power));
  for (long i = 0; i < k; ++i) out.vec.insert(out.vec.end(), unit.vec.begin(), unit.vec.end());
  out.framing = base.framing + k * unit.framing;
  return out;
}

namespace {

// Minimal d with r . d = 1, minimizing (sup norm, l1 norm, lexicographic)
// in that order: iterative deepening on the sup norm bound, a suffix
// table of reachable partial sums with their minimal l1 cost, then a
// smallest-entry-first walk through the table.
IntVec solve_minimal_dual(const IntVec& r) {
  const int n = static_cast<int>(r.size());
  Int maxr = 0;
  for (const Int& x : r) maxr = std::max(maxr, Int(boost::multiprecision::abs(x)));

  for (Int bound = 1;; ++bound) {
    std::vector<std::map<Int, Int>> reach(static_cast<size_t>(n) + 1);
    reach[static_cast<size_t>(n)][0] = 0;
    for (int i = n - 1; i >= 0; --i) {
      for (const auto& [sum, cost] : reach[static_cast<size_t>(i) + 1]) {
        for (Int dv = -bound; dv <= bound; ++dv) {
          const Int nsum = sum + dv * r[static_cast<size_t>(i)];
          const Int ncost = cost + boost::multiprecision::abs(dv);
          auto [it, fresh] = reach[static_cast<size_t>(i)].try_emplace(nsum, ncost);
          if (!fresh && it->second > ncost) it->second = ncost;
        }
      }
    }
    const auto hit = reach[0].find(1);
    if (hit == reach[0].end()) {
      if (bound > maxr + 1) throw Error("dual search exhausted its bound");
      continue;
    }
    IntVec d(static_cast<size_t>(n));
    Int want = 1, budget = hit->second;
    for (int i = 0; i < n; ++i) {
      for (Int dv = -bound; dv <= bound; ++dv) {
        const Int rest = want - dv * r[static_cast<size_t>(i)];
        const auto it = reach[static_cast<size_t>(i) + 1].find(rest);
        if (it != reach[static_cast<size_t>(i) + 1].end() &&
            it->second + boost::multiprecision::abs(dv) == budget) {
          d[static_cast<size_t>(i)] = dv;
          want = rest;
          budget -= boost::multiprecision::abs(dv);
          break;
        }
      }
    }
    return d;
  }
}

}  // namespace

IntVec dual_class(const seifert::SeifertMatrix& v, const FramedClass& a) {
  if (a.power != 1) throw DimensionMismatch("the dual is taken in the base block");
  const int n = v.size();
  if (n == 0) throw DimensionMismatch("the empty form has no dual classes");
  if (static_cast<int>(a.vec.size()) != n) throw DimensionMismatch("class length must be size(V)");
  if (!is_primitive(a.vec)) throw NotPrimitive("class vector is not primitive");

  const IntMat k = v.entries() - transpose(v.entries());
  IntVec r(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    Int s = 0;
    for (int i = 0; i < n; ++i) s += a.vec[static_cast<size_t>(i)] * k.at(i, j);
    r[static_cast<size_t>(j)] = s;
  }
  return solve_minimal_dual(r);
}

SliceCertificate build_torus_pair(const seifert::SeifertMatrix& v, const FramedClass& a,
                              const FramedClass& helper_negative) {
  const int n = v.size();
  if (a.power != 1 || helper_negative.power != 1)
    throw DimensionMismatch("construction inputs live in the base block");
  if (a.framing != 1) throw NotUnitFraming("the witness class must have framing +1");

  std::vector<TranscriptStep> log;

  const IntVec d0 = dual_class(v, a);
  const Int b = bilinear(v.entries(), a.vec, d0);
  const Int c = bilinear(v.entries(), d0, a.vec);
  if (b - c != 1) throw Error("dual pairing failed to be unimodular");
  log.push_back({"picked-dual", {{"d", vec_str(d0)}, {"a-V-d", b.str()}, {"d-V-a", c.str()}}});

  // Unit classes for corrections: a itself steps framings up, and the
  // helper (lowered to framing -1 if needed, consuming fresh blocks)
  // steps them down.
  const FramedClass& unit_plus = a;
  const FramedClass unit_minus = realize_framing(v, helper_negative, unit_plus, Int(-1));
  if (unit_minus.power > helper_negative.power)
    log.push_back({"framing-correction",
                   {{"target", "negative-unit"},
                    {"from", helper_negative.framing.str()},
                    {"to", "-1"},
                    {"copies", std::to_string(unit_minus.power - helper_negative.power)},
                    {"unit-framing", "1"}}});

  // Stage one: move the framing of the dual to -1.
  FramedClass d1 = make_framed_class(v, 1, d0);
  if (d1.framing != -1) {
    const Int from = d1.framing;
    const FramedClass& unit = d1.framing > -1 ? unit_minus : unit_plus;
    const int before = d1.power;
    d1 = realize_framing(v, d1, unit, Int(-1));
    log.push_back({"framing-correction",
                   {{"target", "d"},
                    {"from", from.str()},
                    {"to", "-1"},
                    {"copies", std::to_string((d1.power - before) / unit.power)},
                    {"unit-framing", unit.framing.str()},
                    {"first-block", std::to_string(before)}}});
  }

  // Stage two: the base change d -> d - c a clears the linking of d with
  // a on one side; the pair now links as [[1, 1], [0, -1 - b c]].
  FramedClass a_wide = pad_to_power(v, a, d1.power);
  FramedClass d2 = d1;
  for (int i = 0; i < n; ++i) d2.vec[static_cast<size_t>(i)] -= c * a.vec[static_cast<size_t>(i)];
  d2.framing = bilinear_power(v.entries(), d2.vec, d2.vec);
  if (d2.framing != -1 - b * c) throw Error("base change produced an unexpected framing");
  log.push_back({"base-change", {{"coefficient", Int(-c).str()}}});

  // Stage three: zero both framings with fresh unit blocks.
  {
    const int before = a_wide.power;
    FramedClass a_fixed = realize_framing(v, a_wide, unit_minus, Int(0));
    log.push_back({"framing-correction",
                   {{"target", "a"},
                    {"from", "1"},
                    {"to", "0"},
                    {"copies", std::to_string((a_fixed.power - before) / unit_minus.power)},
                    {"unit-framing", "-1"},
                    {"first-block", std::to_string(before)}}});
    a_wide = std::move(a_fixed);
  }
  FramedClass d3 = pad_to_power(v, d2, a_wide.power);
  if (d3.framing != 0) {
    const Int from = d3.framing;
    const FramedClass& unit = d3.framing > 0 ? unit_minus : unit_plus;
    const int before = d3.power;
    d3 = realize_framing(v, d3, unit, Int(0));
    log.push_back({"framing-correction",
                   {{"target", "d"},
                    {"from", from.str()},
                    {"to", "0"},
                    {"copies", std::to_string((d3.power - before) / unit.power)},
                    {"unit-framing", unit.framing.str()},
                    {"first-block", std::to_string(before)}}});
  }
  a_wide = pad_to_power(v, a_wide, d3.power);

  SliceCertificate cert;
  cert.n_power = d3.power;
  cert.a = a_wide.vec;
  cert.d = d3.vec;
  cert.final_form = IntMat(2, 2);
  cert.final_form.at(0, 0) = bilinear_power(v.entries(), cert.a, cert.a);
  cert.final_form.at(0, 1) = bilinear_power(v.entries(), cert.a, cert.d);
  cert.final_form.at(1, 0) = bilinear_power(v.entries(), cert.d, cert.a);
  cert.final_form.at(1, 1) = bilinear_power(v.entries(), cert.d, cert.d);
  if (cert.final_form.at(0, 0) != 0 || cert.final_form.at(0, 1) != 1 ||
      cert.final_form.at(1, 0) != 0 || cert.final_form.at(1, 1) != 0)
    throw Error("construction did not reach the annular final form");
  cert.genus_bound = Rat(Int(v.genus()) * cert.n_power - 1, Int(cert.n_power));
  cert.transcript = std::move(log);
  return cert;
}

bool VerifyReport::ok() const {
  for (const VerifyCheck& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

namespace {

const char* const kDependentChecks[] = {
    "a-primitive",       "d-primitive",       "a-framing-zero", "d-framing-zero",
    "cross-unimodular",  "final-form-matches", "final-form-shape",
    "alexander-trivial", "genus-bound",
};

}  // namespace

VerifyReport verify_certificate(const seifert::SeifertMatrix& v, const SliceCertificate& cert) {
  VerifyReport rep;
  auto add = [&rep](const char* name, bool pass, std::string detail) {
    rep.checks.push_back({name, pass, std::move(detail)});
  };

  const int n = v.size();
  const size_t want_len = static_cast<size_t>(n) * static_cast<size_t>(cert.n_power > 0 ? cert.n_power : 0);
  const bool dims_ok = cert.n_power >= 1 && n >= 2 && cert.a.size() == want_len &&
                       cert.d.size() == want_len && cert.final_form.rows == 2 &&
                       cert.final_form.cols == 2;
  add("dimensions", dims_ok,
      dims_ok ? "classes of length " + std::to_string(want_len) + " in power " + std::to_string(cert.n_power)
              : "expected two classes of length size(V) * N and a 2x2 final form");
  if (!dims_ok) {
    for (const char* name : kDependentChecks) add(name, false, "not checked: dimensions invalid");
    return rep;
  }

  add("a-primitive", is_primitive(cert.a), "gcd of entries of a");
  add("d-primitive", is_primitive(cert.d), "gcd of entries of d");

  const Int aa = bilinear_power(v.entries(), cert.a, cert.a);
  const Int ad = bilinear_power(v.entries(), cert.a, cert.d);
  const Int da = bilinear_power(v.entries(), cert.d, cert.a);
  const Int dd = bilinear_power(v.entries(), cert.d, cert.d);
  add("a-framing-zero", aa == 0, "a V a = " + aa.str());
  add("d-framing-zero", dd == 0, "d V d = " + dd.str());

  const bool cross = (ad == 0 && boost::multiprecision::abs(da) == 1) ||
                     (da == 0 && boost::multiprecision::abs(ad) == 1);
  add("cross-unimodular", cross, "a V d = " + ad.str() + ", d V a = " + da.str());

  IntMat actual(2, 2);
  actual.at(0, 0) = aa;
  actual.at(0, 1) = ad;
  actual.at(1, 0) = da;
  actual.at(1, 1) = dd;
  add("final-form-matches", actual == cert.final_form, "recomputed pair linking vs stored final form");

  const bool shape = cert.final_form.at(0, 0) == 0 && cert.final_form.at(1, 0) == 0 &&
                     cert.final_form.at(1, 1) == 0 &&
                     boost::multiprecision::abs(cert.final_form.at(0, 1)) == 1;
  add("final-form-shape", shape, "final form must be [[0, e], [0, 0]] with e = +/-1");

  bool alex_ok = false;
  std::string alex_detail;
  try {
    const LaurentPolynomial p = invariants::alexander_from_entries(cert.final_form);
    alex_ok = (p == LaurentPolynomial::one());
    alex_detail = "Alexander polynomial of the final form is " + p.str();
  } catch (const Error& e) {
    alex_detail = std::string("Alexander computation rejected the final form: ") + e.what();
  }
  add("alexander-trivial", alex_ok, std::move(alex_detail));

  const Rat want_bound = Rat(Int(v.genus()) * cert.n_power - 1, Int(cert.n_power));
  const bool bound_ok = cert.genus_bound == want_bound && cert.genus_bound < v.genus();
  add("genus-bound", bound_ok,
      "stored " + Rat(cert.genus_bound).str() + ", recomputed " + want_bound.str());
  return rep;
}

namespace {

SliceCertificate reflect_certificate(SliceCertificate cert) {
  std::swap(cert.a, cert.d);
  IntMat nf(2, 2);
  nf.at(0, 0) = -cert.final_form.at(1, 1);
  nf.at(0, 1) = -cert.final_form.at(0, 1);
  nf.at(1, 0) = -cert.final_form.at(1, 0);
  nf.at(1, 1) = -cert.final_form.at(0, 0);
  cert.final_form = std::move(nf);
  cert.transcript.insert(cert.transcript.begin(),
                         {"mirror-reflection",
                          {{"note", "construction ran on the mirror form -V^T; the roles of a and d are swapped"}}});
  return cert;
}

}  // namespace

Dichotomy decide_dichotomy(const seifert::SeifertMatrix& v, bool annulus_attested,
                          const FramedClass& witness) {
  if (!annulus_attested) throw NoAttestation("an attested embedded annulus witness is required");
  Dichotomy out;
  out.report = invariants::bound_report(v);
  out.equality = out.report.equality;
  if (out.equality) return out;

  if (witness.power != 1) throw DimensionMismatch("the annulus witness lives in the base block");
  const Int wf = bilinear_power(v.entries(), witness.vec, witness.vec);
  if (boost::multiprecision::abs(wf) != 1)
    throw NotUnitFraming("annulus witness must have framing +1 or -1");

  SliceCertificate cert;
  if (wf == 1) {
    const FramedClass helper = find_signed_class(v, -1);
    cert = build_torus_pair(v, witness, helper);
  } else {
    const seifert::SeifertMatrix vm = seifert::mirror(v);
    const FramedClass flipped = make_framed_class(vm, 1, witness.vec);
    const FramedClass helper = find_signed_class(vm, -1);
    cert = reflect_certificate(build_torus_pair(vm, flipped, helper));
  }
  cert.realizability_attested = true;
  out.certificate = std::move(cert);
  return out;
}

}  // namespace stable
}  // namespace knotform
