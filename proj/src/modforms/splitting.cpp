#include <algorithm>
#include <sstream>

#include "octic/error.hpp"
#include "octic/modforms.hpp"
#include "octic/rat.hpp"

namespace octic {

namespace {

// Exact interpolating cubic through 4 points as coefficients in the
// monomial basis, via Lagrange expansion over Q.
std::array<Rat, 4> lagrange_cubic(const std::array<long long, 4>& x,
                                  const std::array<long long, 4>& y) {
  std::array<Rat, 4> c{Rat(0), Rat(0), Rat(0), Rat(0)};
  for (int i = 0; i < 4; ++i) {
    // numerator polynomial prod_{j != i} (X - x_j), denominator scalar
    std::array<Rat, 4> num{Rat(1), Rat(0), Rat(0), Rat(0)};
    Rat den(1);
    int deg = 0;
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      den *= Rat(x[i] - x[j]);
      for (int k = deg; k >= 0; --k) {
        num[k + 1] += num[k];
        num[k] *= Rat(-x[j]);
      }
      ++deg;
    }
    Rat scale = Rat(y[i]) / den;
    for (int k = 0; k < 4; ++k) c[k] += num[k] * scale;
  }
  return c;
}

long long eval_cubic(const std::array<long long, 4>& q, long long p) {
  return ((q[3] * p + q[2]) * p + q[1]) * p + q[0];
}

}  // namespace

SplittingReport verify_splitting(const std::vector<CountResult>& counts,
                                 const CoefficientTable& f4,
                                 const CoefficientTable& f2) {
  SplittingReport rep;
  rep.assumption =
      "treats D(p) = n_points + a_p(" + f4.label + ") + p * a_p(" + f2.label +
      ") as one fixed monic integer cubic in p; valid when the third "
      "cohomology splits into the two-dimensional piece matched by the "
      "weight-4 form and twists of the weight-2 form, and the point count "
      "differs from the smooth model by a polynomial correction";

  // usable primes: counted and present in both tables
  struct Row {
    uint32_t p;
    long long d;
  };
  std::vector<Row> rows;
  for (const auto& c : counts) {
    auto a = f4.ap(c.p);
    auto b = f2.ap(c.p);
    if (!a || !b) continue;
    rows.push_back({c.p, c.n_points + *a + (long long)c.p * *b});
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& l, const Row& r) { return l.p < r.p; });
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const Row& l, const Row& r) { return l.p == r.p; }),
             rows.end());
  if (rows.size() < 6) {
    fail(Err::InsufficientPrimes,
         "cubic fit plus validation needs at least 6 primes with counts and "
         "both coefficients, have " +
             std::to_string(rows.size()));
  }
  for (const auto& r : rows) rep.primes.push_back(r.p);

  std::array<long long, 4> xs{}, ys{};
  for (int i = 0; i < 4; ++i) {
    xs[i] = rows[i].p;
    ys[i] = rows[i].d;
  }
  auto c = lagrange_cubic(xs, ys);
  rep.integer_fit = true;
  for (int k = 0; k < 4; ++k) {
    if (!c[k].is_integer() || !c[k].num().fits_slong_p()) {
      rep.integer_fit = false;
      break;
    }
  }
  if (!rep.integer_fit) {
    rep.pass = false;  // NonIntegerFit, reported rather than thrown
    return rep;
  }
  for (int k = 0; k < 4; ++k) rep.q[k] = c[k].num().get_si();
  rep.monic_cubic = (rep.q[3] == 1);

  bool zero_residuals = true;
  for (size_t i = 4; i < rows.size(); ++i) {
    long long r = rows[i].d - eval_cubic(rep.q, rows[i].p);
    rep.residuals.emplace_back(rows[i].p, r);
    if (r != 0) zero_residuals = false;
  }
  rep.pass = rep.monic_cubic && zero_residuals;
  return rep;
}

std::string SplittingReport::str() const {
  std::ostringstream os;
  os << "splitting check over " << primes.size() << " primes (";
  for (size_t i = 0; i < primes.size(); ++i)
    os << (i ? " " : "") << primes[i];
  os << ")\n";
  if (!integer_fit) {
    os << "  fit: NonIntegerFit (exact cubic through the 4 smallest primes "
          "has non-integer coefficients)\n";
  } else {
    os << "  fit: D(p) = " << q[3] << " p^3 + " << q[2] << " p^2 + " << q[1]
       << " p + " << q[0] << (monic_cubic ? "" : "  [not monic]") << "\n";
    for (const auto& [p, r] : residuals) {
      os << "  residual at p = " << p << ": " << r << "\n";
    }
  }
  os << "  verdict: " << (pass ? "PASS" : "FAIL") << "\n";
  os << "  assumption: " << assumption << "\n";
  return os.str();
}

}  // namespace octic
