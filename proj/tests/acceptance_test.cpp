#include <chrono>
#include <cstdio>
#include <string>

#include "ribbonkit/verify.hpp"

using namespace ribbonkit::verify;

int main() {
  constexpr int p_lo = 2, p_hi = 7;
  Options options;
  options.r_max = 6;
  const auto& all = checks();
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool pass = true;
    double elapsed = 0.0;
    std::string detail;
    for (int p = p_lo; p <= p_hi; ++p) {
      const CheckRecord r = run_check(all[i].name, p, options);
      elapsed += r.elapsed;
      if (!r.pass && pass) {
        pass = false;
        detail = "p=" + std::to_string(p) + ": " + r.detail;
      }
    }
    if (!pass) ++failures;
    std::printf("%s %2zu %-16s %s (p=%d..%d, %.2fs)%s%s\n", pass ? "PASS" : "FAIL", i + 1, all[i].name.c_str(),
                all[i].title.c_str(), p_lo, p_hi, elapsed, pass ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu/%zu criteria passed in %.2fs\n", all.size() - static_cast<std::size_t>(failures), all.size(), total);
  return failures == 0 ? 0 : 1;
}
