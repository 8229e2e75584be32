#include <fstream>
#include <sstream>

#include "octic/error.hpp"
#include "octic/modforms.hpp"

namespace octic {

bool weil_bound_ok(long long a, uint32_t p, int weight) {
  // |a_p| <= 2 p^{(w-1)/2}  <=>  a^2 <= 4 p^{w-1}, kept in integers.
  __int128 lhs = (__int128)a * a;
  __int128 rhs = 4;
  for (int i = 0; i + 1 < weight; ++i) rhs *= p;
  return lhs <= rhs;
}

CoefficientTable parse_table(std::istream& in, const std::string& origin) {
  CoefficientTable t;
  std::string line;
  long lineno = 0;
  bool have_header = false;
  long long prev_p = -1;
  while (std::getline(in, line)) {
    ++lineno;
    // strip comments and blank lines
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!have_header) {
      std::string label;
      long long weight = 0, level = 0;
      if (!(ls >> label)) continue;  // blank before header
      if (!(ls >> weight >> level)) {
        fail(Err::Parse, origin + ":" + std::to_string(lineno) +
                             ": header must be \"LABEL WEIGHT LEVEL\"");
      }
      std::string extra;
      if (ls >> extra) {
        fail(Err::Parse, origin + ":" + std::to_string(lineno) +
                             ": trailing token '" + extra + "' in header");
      }
      if (weight != 2 && weight != 4) {
        fail(Err::Parse, origin + ":" + std::to_string(lineno) +
                             ": weight must be 2 or 4, got " +
                             std::to_string(weight));
      }
      if (level <= 0) {
        fail(Err::Parse, origin + ":" + std::to_string(lineno) +
                             ": level must be positive");
      }
      t.label = label;
      t.weight = (int)weight;
      t.level = level;
      have_header = true;
      continue;
    }
    long long p = 0, a = 0;
    if (!(ls >> p)) continue;  // blank line
    if (!(ls >> a)) {
      fail(Err::Parse, origin + ":" + std::to_string(lineno) +
                           ": expected \"p a_p\"");
    }
    std::string extra;
    if (ls >> extra) {
      fail(Err::Parse, origin + ":" + std::to_string(lineno) +
                           ": trailing token '" + extra + "'");
    }
    if (p <= 1 || p > 0xffffffffLL || !is_prime_u32((uint32_t)p)) {
      fail(Err::Parse, origin + ":" + std::to_string(lineno) + ": " +
                           std::to_string(p) + " is not a prime");
    }
    if (p <= prev_p) {
      fail(Err::Parse, origin + ":" + std::to_string(lineno) +
                           ": primes must be strictly increasing (" +
                           std::to_string(p) + " after " +
                           std::to_string(prev_p) + ")");
    }
    prev_p = p;
    if (t.level % p != 0 && !weil_bound_ok(a, (uint32_t)p, t.weight)) {
      fail(Err::BoundViolation,
           origin + ":" + std::to_string(lineno) + ": |a_p| bound fails at p = " +
               std::to_string(p) + ", a_p = " + std::to_string(a) +
               " (weight " + std::to_string(t.weight) + ")");
    }
    t.coeffs.emplace((uint32_t)p, a);
  }
  if (!have_header) fail(Err::Parse, origin + ": missing header line");
  return t;
}

CoefficientTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::IO, "cannot open coefficient table " + path);
  return parse_table(in, path);
}

WeilReport weil_check(const CoefficientTable& t) {
  WeilReport r;
  for (const auto& [p, a] : t.coeffs) {
    if (t.level % p == 0) continue;  // bad primes are exempt
    if (!weil_bound_ok(a, p, t.weight)) {
      r.pass = false;
      r.violations.push_back("p = " + std::to_string(p) + ": a_p = " +
                             std::to_string(a) + " breaks a_p^2 <= 4 p^" +
                             std::to_string(t.weight - 1));
    }
  }
  return r;
}

}  // namespace octic
