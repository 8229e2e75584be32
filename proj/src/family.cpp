#include "octic/family.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "octic/conditions.hpp"
#include "octic/error.hpp"
#include "octic/mobius.hpp"

namespace octic {

const char* status_name(CheckRecord::Status s) {
  switch (s) {
    case CheckRecord::Status::Pass: return "pass";
    case CheckRecord::Status::Fail: return "fail";
    case CheckRecord::Status::Skip: return "skip";
  }
  return "?";
}

const char* conclusion_name(Certificate::Conclusion c) {
  switch (c) {
    case Certificate::Conclusion::CertifiedRigidQuotient: return "CertifiedRigidQuotient";
    case Certificate::Conclusion::Refuted: return "Refuted";
    case Certificate::Conclusion::Incomplete: return "Incomplete";
  }
  return "?";
}

std::pair<Rat, Rat> tau_to_ab(const Rat& tau0) {
  return {Rat(tau0.num()), Rat(tau0.den())};
}

namespace {

using Status = CheckRecord::Status;

CheckRecord rec(const std::string& check, Status st, const std::string& witness = "") {
  CheckRecord r{check, st, witness, ""};
  // Plain statement of what a pass contributes to the conclusion.
  static const std::map<std::string, const char*> kClaims = {
      {"symplectic_lambda",
       "the lift multiplies the holomorphic 3-form by det(M)/c_u = 1, so the "
       "involution is symplectic"},
      {"mobius_fixed_point", "tau0 is a fixed parameter of the transformation g"},
      {"mobius_derivative",
       "g acts by -1 on the parameter line at tau0, so the invariant part of "
       "the deformation space vanishes"},
      {"involution_at_tau0",
       "the fiber map at tau0 squares to the identity after rescaling"},
      {"intertwining",
       "g carries the family into itself through M, so the fiber at tau0 "
       "inherits an involution"},
      {"fiber_at_tau0", "the arrangement stays reduced at tau0"},
      {"admissible",
       "no six planes share a point and no four share a line, giving the "
       "expected singular model"},
      {"octic_preserved",
       "M permutes the branch planes, so the map preserves the double cover"},
      {"u_scaling_consistent",
       "the u-rescaling squared matches the factor picked up by the octic, so "
       "the map lifts to the double cover"},
      {"fixed_locus", "the fixed locus in P^3 is as recorded"},
      {"no_fixed_singular_line",
       "no singular line of the branch octic is pointwise fixed"},
      {"fourfold_planes_moved",
       "every plane through a fourfold point moves, so no such plane "
       "contributes fixed surfaces"},
      {"odd_contact_bound",
       "each fixed line meets the branch octic in at most two odd points, so "
       "all fixed curves are rational"},
  };
  auto it = kClaims.find(check);
  if (it != kClaims.end()) r.establishes = it->second;
  return r;
}

std::string describe_fixed_points(const MobiusFixedPoints& fp) {
  std::ostringstream os;
  if (fp.rational.empty()) {
    os << "no rational fixed point";
    if (fp.nonreal) os << " (complex conjugate pair)";
    if (fp.irrational) os << " (real irrational pair)";
  } else {
    os << "rational fixed points:";
    for (const auto& r : fp.rational) os << " " << r.str();
    if (fp.double_point) os << " (double)";
  }
  if (fp.fixes_infinity) os << "; fixes infinity";
  return os.str();
}

CheckRecord check_lambda(const FamilyCase& fc) {
  try {
    RatFunc lam = symplectic_lambda(fc.map);
    if (lam.is_one()) return rec("symplectic_lambda", Status::Pass);
    return rec("symplectic_lambda", Status::Fail,
               "lambda = det(M)/c_u = " + lam.str() + " != 1");
  } catch (const OcticError& e) {
    return rec("symplectic_lambda", Status::Fail, e.what());
  }
}

CheckRecord check_fixed_point(const FamilyCase& fc) {
  try {
    auto fp = mobius_fixed_points(fc.g);
    Rat v = mobius_eval(fc.g, fc.tau0);
    if (v == fc.tau0)
      return rec("mobius_fixed_point", Status::Pass,
                 "g(" + fc.tau0.str() + ") = " + fc.tau0.str());
    return rec("mobius_fixed_point", Status::Fail,
               "FixedPointMismatch: g(" + fc.tau0.str() + ") = " + v.str() +
                   " != " + fc.tau0.str() + "; " + describe_fixed_points(fp));
  } catch (const OcticError& e) {
    return rec("mobius_fixed_point", Status::Fail,
               std::string("FixedPointMismatch: ") + e.what());
  }
}

CheckRecord check_derivative(const FamilyCase& fc) {
  try {
    Rat d = mobius_derivative(fc.g, fc.tau0);
    if (d == Rat(-1)) return rec("mobius_derivative", Status::Pass);
    return rec("mobius_derivative", Status::Fail,
               "g'(" + fc.tau0.str() + ") = " + d.str() + " != -1");
  } catch (const OcticError& e) {
    return rec("mobius_derivative", Status::Fail, e.what());
  }
}

CheckRecord check_involution_at_tau0(const FamilyCase& fc,
                                     std::optional<InvolutionScaling>* out) {
  auto [a, b] = tau_to_ab(fc.tau0);
  try {
    QMat m = mat_specialize(fc.map.m, a, b);
    InvolutionScaling sc = involution_normalize(m);
    *out = sc;
    return rec("involution_at_tau0", Status::Pass,
               "M(" + a.str() + "," + b.str() + ")^2 = c*I with c = " + sc.c.str());
  } catch (const OcticError& e) {
    return rec("involution_at_tau0", Status::Fail, e.what());
  }
}

constexpr int kSymbolicDegreeLimit = 64;

// The family intertwining identity, in homogeneous form: with G the
// degree-one substitution induced by g on (A,B),
//   f(G(A,B); M_{(A,B)} v)  =  c_u(A,B)^2 * f(A,B; v)
// as an exact polynomial identity.  (Specializing at (A,B) = (tau,1)
// recovers f_{g(tau)} o M_tau = c_u(tau)^2 f_tau up to the weight factor
// absorbed by the homogeneous parameters, so no denominators ever appear.)
CheckRecord check_intertwining(const FamilyCase& fc) {
  if (!fc.has_arrangement)
    return rec("intertwining", Status::Skip, "arrangement data not included");
  try {
    auto [ga, gb] = mobius_homogeneous(fc.g);
    const MPoly& f = fc.arr.octic();
    MPoly cu2 = fc.map.u_coeff * fc.map.u_coeff;

    int mdeg = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) mdeg = std::max(mdeg, fc.map.m[i][j].degree());

    if (f.degree() + 8 * mdeg <= kSymbolicDegreeLimit) {
      std::array<MPoly, 4> img;
      std::array<const MPoly*, kNVars> images{};
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) img[i] += fc.map.m[i][j] * MPoly::variable(j);
        images[i] = &img[i];
      }
      images[VA] = &ga;
      images[VB] = &gb;
      MPoly lhs = f.subst(images);
      if (lhs == cu2 * f) return rec("intertwining", Status::Pass, "symbolic");
      auto mu = MPoly::divide_exact(lhs, f);
      if (mu)
        return rec("intertwining", Status::Fail,
                   "IntertwiningFailure: f(G(A,B)) o M = (" + mu->str() +
                       ") * f but c_u^2 = " + cu2.str());
      MPoly res = lhs - cu2 * f;
      return rec("intertwining", Status::Fail,
                 "IntertwiningFailure: residual has " +
                     std::to_string(res.terms().size()) + " terms of degree " +
                     std::to_string(res.degree()));
    }

    // Degree too large for the symbolic route: verify the same identity at
    // tau0 and three pseudo-random rational parameters (denominators <= 10).
    std::mt19937 rng(8111);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 10);
    std::vector<Rat> samples{fc.tau0};
    while (samples.size() < 4) {
      Rat v(num(rng), den(rng));
      if (std::find(samples.begin(), samples.end(), v) == samples.end())
        samples.push_back(v);
    }
    for (const Rat& v : samples) {
      auto [a, b] = tau_to_ab(v);
      Rat a2 = eval_ab(ga, a, b), b2 = eval_ab(gb, a, b);
      MPoly pa2(a2), pb2(b2);
      std::array<MPoly, 4> img;
      std::array<const MPoly*, kNVars> images{};
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j)
          img[i] += eval_ab(fc.map.m[i][j], a, b) * MPoly::variable(j);
        images[i] = &img[i];
      }
      images[VA] = &pa2;
      images[VB] = &pb2;
      MPoly lhs = f.subst(images);
      std::array<const Rat*, kNVars> vals{};
      vals[VA] = &a;
      vals[VB] = &b;
      MPoly f_ab = f.eval_partial(vals);
      Rat cu = eval_ab(fc.map.u_coeff, a, b);
      if (lhs != (cu * cu) * f_ab)
        return rec("intertwining", Status::Fail,
                   "IntertwiningFailure: mismatch at sample tau = " + v.str());
    }
    return rec("intertwining", Status::Pass,
               "verified at tau0 and 3 sample parameters");
  } catch (const OcticError& e) {
    return rec("intertwining", Status::Fail,
               std::string("IntertwiningFailure: ") + e.what());
  }
}

}  // namespace

std::vector<CheckRecord> check_family(const FamilyCase& fc) {
  std::vector<CheckRecord> out;
  out.push_back(check_lambda(fc));
  out.push_back(check_fixed_point(fc));
  out.push_back(check_derivative(fc));
  std::optional<InvolutionScaling> sc;
  out.push_back(check_involution_at_tau0(fc, &sc));
  out.push_back(check_intertwining(fc));
  return out;
}

Certificate certify_case(const FamilyCase& fc) {
  Certificate cert;
  cert.case_name = fc.name;
  auto records = check_family(fc);
  std::optional<InvolutionScaling> sc;
  {  // recover the normalized involution if that check passed
    auto [a, b] = tau_to_ab(fc.tau0);
    try {
      sc = involution_normalize(mat_specialize(fc.map.m, a, b));
    } catch (const OcticError&) {
    }
  }
  cert.records = std::move(records);

  auto skip_rest = [&](const std::string& why) {
    for (const char* name :
         {"fiber_at_tau0", "admissible", "octic_preserved", "u_scaling_consistent",
          "fixed_locus", "no_fixed_singular_line", "fourfold_planes_moved",
          "odd_contact_bound"})
      cert.records.push_back(rec(name, Status::Skip, why));
  };

  if (!fc.has_arrangement) {
    skip_rest("arrangement data not included");
  } else {
    auto [a, b] = tau_to_ab(fc.tau0);
    std::optional<Arrangement> fiber;
    try {
      fiber = specialize(fc.arr, a, b);
      cert.records.push_back(rec("fiber_at_tau0", Status::Pass,
                                 "8 distinct planes at (A,B) = (" + a.str() + "," +
                                     b.str() + ")"));
    } catch (const OcticError& e) {
      cert.records.push_back(rec("fiber_at_tau0", Status::Fail, e.what()));
      for (const char* name :
           {"admissible", "octic_preserved", "u_scaling_consistent", "fixed_locus",
            "no_fixed_singular_line", "fourfold_planes_moved", "odd_contact_bound"})
        cert.records.push_back(rec(name, Status::Skip, "fiber degenerates"));
    }
    if (fiber) {
      auto strata = singular_strata(RatField{}, fiber->rational_normals());
      auto adm = admissibility(strata);
      if (adm.admissible) {
        cert.records.push_back(
            rec("admissible", Status::Pass,
                "max planes through a line " + std::to_string(adm.max_line_mult) +
                    ", through a point " + std::to_string(adm.max_point_mult)));
      } else {
        std::ostringstream os;
        for (size_t i = 0; i < adm.violations.size(); ++i)
          os << (i ? "; " : "") << adm.violations[i];
        cert.records.push_back(rec("admissible", Status::Fail, os.str()));
      }

      QMat m_spec = mat_specialize(fc.map.m, a, b);
      std::optional<OcticInvariance> inv;
      try {
        inv = octic_invariance(*fiber, m_spec);
        cert.records.push_back(
            rec("octic_preserved", Status::Pass, "kappa = " + inv->kappa.str()));
      } catch (const OcticError& e) {
        cert.records.push_back(rec("octic_preserved", Status::Fail, e.what()));
        cert.records.push_back(rec("u_scaling_consistent", Status::Skip,
                                   "octic not preserved"));
      }
      if (inv) {
        Rat cu = eval_ab(fc.map.u_coeff, a, b);
        if (cu.is_zero()) {
          cert.records.push_back(rec("u_scaling_consistent", Status::Fail,
                                     "u coefficient vanishes at the fiber"));
        } else if (inv->kappa == cu * cu) {
          cert.records.push_back(rec("u_scaling_consistent", Status::Pass,
                                     "kappa = c_u^2 = " + inv->kappa.str()));
        } else {
          cert.records.push_back(
              rec("u_scaling_consistent", Status::Fail,
                  "f o M = " + inv->kappa.str() + " * f but c_u^2 = " +
                      (cu * cu).str()));
        }
      }

      if (!sc) {
        for (const char* name : {"fixed_locus", "no_fixed_singular_line",
                                 "fourfold_planes_moved", "odd_contact_bound"})
          cert.records.push_back(
              rec(name, Status::Skip, "map is not an involution at tau0"));
      } else {
        std::optional<FixedLocus> locus;
        try {
          locus = fixed_locus(sc->n);
          cert.records.push_back(rec("fixed_locus", Status::Pass, locus->str()));
        } catch (const OcticError& e) {
          cert.records.push_back(rec("fixed_locus", Status::Fail, e.what()));
          for (const char* name : {"no_fixed_singular_line", "fourfold_planes_moved",
                                   "odd_contact_bound"})
            cert.records.push_back(rec(name, Status::Skip, "no fixed locus"));
        }
        if (locus) {
          auto fcr = check_fixed_curves(*fiber, strata, *locus, sc->n);
          for (const ConditionResult* r :
               {&fcr.fixed_singular_line, &fcr.fourfold_point_planes, &fcr.odd_contact}) {
            std::ostringstream os;
            for (size_t i = 0; i < r->witnesses.size(); ++i)
              os << (i ? "; " : "") << r->witnesses[i];
            cert.records.push_back(
                rec(r->name, r->pass ? Status::Pass : Status::Fail, os.str()));
          }
        }
      }
    }
  }

  bool any_fail = false, any_skip = false, fixed_point_mismatch = false;
  std::string first_fail, mismatch_witness;
  std::vector<std::string> skipped;
  for (const auto& r : cert.records) {
    if (r.status == Status::Fail && !any_fail) {
      any_fail = true;
      first_fail = r.check + (r.witness.empty() ? "" : ": " + r.witness);
    }
    if (r.check == "mobius_fixed_point" && r.status == Status::Fail) {
      fixed_point_mismatch = true;
      mismatch_witness = r.witness;
    }
    if (r.status == Status::Skip) {
      any_skip = true;
      skipped.push_back(r.check);
    }
  }
  if (fixed_point_mismatch) {
    // tau0 is not even a fixed point of g: the case data is inconsistent,
    // so nothing downstream can be evaluated against it.
    cert.conclusion = Certificate::Conclusion::Incomplete;
    cert.detail = mismatch_witness;
  } else if (any_fail) {
    cert.conclusion = Certificate::Conclusion::Refuted;
    cert.detail = first_fail;
  } else if (any_skip) {
    cert.conclusion = Certificate::Conclusion::Incomplete;
    std::ostringstream os;
    os << "missing inputs; skipped:";
    for (const auto& s : skipped) os << " " << s;
    cert.detail = os.str();
  } else {
    cert.conclusion = Certificate::Conclusion::CertifiedRigidQuotient;
    cert.detail = "all checks passed at tau0 = " + fc.tau0.str();
  }
  return cert;
}

}  // namespace octic
