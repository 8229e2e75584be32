#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include "kernel.hpp"
#include "octic/counting.hpp"
#include "octic/error.hpp"

namespace octic {

namespace {

struct Totals {
  long long chi = 0;
  long long zeros = 0;
  unsigned long long visited = 0;
  void merge(const RowAccum& a, uint32_t len) {
    chi += a.chi_sum;
    zeros += a.zeros;
    visited += len;
  }
};

// The four standard charts of P^3(F_p), last nonzero coordinate = 1.  The
// innermost coordinate is always x, so every row steps by the x-column of
// the plane table.  Work unit 0..p-1: one z-slice {(x,y,z,1)} of the big
// chart; unit p: everything else (p^2 + p + 1 points).
class ChartWalker {
 public:
  ChartWalker(const FpOctic& oct, const FpChi& chi, RowFn row)
      : oct_(oct), chi_(chi.data()), row_(row), p_(oct.p) {}

  uint32_t units() const { return p_ + 1; }

  void run_unit(uint32_t unit, Totals& t) const {
    if (unit < p_) {
      // chart {t = 1}, fixed z = unit
      for (uint32_t y = 0; y < p_; ++y)
        run_row(0, y, unit, 1, p_, t);
      return;
    }
    // chart {z = 1, t = 0}
    for (uint32_t y = 0; y < p_; ++y) run_row(0, y, 1, 0, p_, t);
    // chart {y = 1, z = t = 0}
    run_row(0, 1, 0, 0, p_, t);
    // the point (1 : 0 : 0 : 0)
    run_row(1, 0, 0, 0, 1, t);
  }

 private:
  void run_row(uint32_t x0, uint32_t y, uint32_t z, uint32_t w, uint32_t len,
               Totals& t) const {
    uint32_t base[8], step[8];
    for (int i = 0; i < 8; ++i) {
      const auto& c = oct_.planes[i];
      base[i] = static_cast<uint32_t>(
          (uint64_t(c[0]) * x0 + uint64_t(c[1]) * y + uint64_t(c[2]) * z +
           uint64_t(c[3]) * w) %
          p_);
      step[i] = c[0];
    }
    t.merge(row_(base, step, len, chi_, p_), len);
  }

  const FpOctic& oct_;
  const int32_t* chi_;
  RowFn row_;
  uint32_t p_;
};

}  // namespace

CountResult count_double_cover(const FpOctic& oct, int jobs, CountKernel kernel) {
  const auto t0 = std::chrono::steady_clock::now();
  const uint32_t p = oct.p;
  if (p < 3 || !is_prime_u32(p))
    fail(Err::BadReduction, "p = " + std::to_string(p) + " is not an odd prime");
  FpChi chi(p);
  RowFn row = select_row_kernel(kernel, p);
  ChartWalker walker(oct, chi, row);

  int workers = std::max(1, jobs);
  Totals total;
  if (workers == 1) {
    for (uint32_t u = 0; u < walker.units(); ++u) walker.run_unit(u, total);
  } else {
    std::vector<Totals> part(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (uint32_t u = w; u < walker.units(); u += workers)
          walker.run_unit(u, part[w]);
      });
    for (auto& th : pool) th.join();
    for (const auto& t : part) {
      total.chi += t.chi;
      total.zeros += t.zeros;
      total.visited += t.visited;
    }
  }

  const unsigned long long expect =
      uint64_t(p) * p * p + uint64_t(p) * p + p + 1;
  if (total.visited != expect)
    fail(Err::Invalid, "chart decomposition visited " +
                           std::to_string(total.visited) + " points, expected " +
                           std::to_string(expect));

  CountResult res;
  res.p = p;
  res.character_sum = total.chi;
  res.zero_count = total.zeros;
  res.n_points = static_cast<long long>(expect) + total.chi;
  res.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - t0);
  return res;
}

std::vector<CountCacheEntry> load_count_cache(const std::string& path) {
  std::ifstream in(path);
  std::vector<CountCacheEntry> out;
  if (!in) return out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    CountCacheEntry e;
    if (!(ls >> e.p >> e.n_points >> e.character_sum))
      fail(Err::Parse, path + ":" + std::to_string(lineno) + ": bad cache line");
    out.push_back(e);
  }
  return out;
}

void save_count_cache(const std::string& path,
                      std::vector<CountCacheEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const CountCacheEntry& a, const CountCacheEntry& b) { return a.p < b.p; });
  std::ofstream out(path);
  if (!out) fail(Err::IO, "cannot write " + path);
  for (const auto& e : entries)
    out << e.p << " " << e.n_points << " " << e.character_sum << "\n";
}

}  // namespace octic
