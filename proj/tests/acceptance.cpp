// Exhaustive desk-scale acceptance sweeps, one PASS/FAIL line per criterion.

#include "rgroth/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace rgroth;

int main() {
  const std::vector<std::pair<std::string, std::function<Report()>>> criteria = {
      {"G concordance, |l| <= 5, n <= 3, D = 6", [] { return verify_concordance(Kind::G, 5, 3, 6); }},
      {"g concordance, |l| <= 5, n <= 3, D = 6", [] { return verify_concordance(Kind::g, 5, 3, 6); }},
      {"duality <G_l, g_m> = delta, |l|,|m| <= 4", [] { return verify_duality(4); }},
      {"Schur coefficients by determinant, tableaux and paths, |m| <= 5", [] { return verify_coefficients(5); }},
      {"Schur positivity of C(a,-b) and c(-a,b), |m| <= 5", [] { return verify_positivity(5); }},
      {"fixtures", [] { return verify_fixtures(); }},
      {"flagged determinants vs tableaux, |l| <= 4, n <= 3, flags <= 3", [] { return verify_flagged(4, 3, 3); }},
      {"Cauchy identity, 2 + 2 variables, degree <= 3", [] { return verify_cauchy(2, 2, 3); }},
      {"omega on expansions, |l| <= 4, |m| <= 2, budget 2", [] { return verify_omega(4, 2, 2); }},
      {"set-valued tableaux vs one-parameter determinants, <= 3 cells, flags <= 3",
       [] { return verify_matsumura(5, 3, 3); }},
      {"plethystic kernel identities", [] { return verify_kernel(20240611, 100); }},
  };
  int failed = 0, k = 0;
  for (auto& [name, run] : criteria) {
    ++k;
    const auto t0 = std::chrono::steady_clock::now();
    Report r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (r.ok ? "PASS" : "FAIL") << " [" << k << "] " << name << " (" << r.checked << " checks, " << secs
              << " s)";
    if (!r.ok) std::cout << ": " << r.failure;
    std::cout << '\n';
    for (auto& note : r.notes) std::cout << "       " << note << '\n';
    failed += !r.ok;
  }
  return failed ? 1 : 0;
}
