// Acceptance suite: one line per criterion, exact arithmetic throughout,
// nonzero exit on any failure. Runtime bounds are asserted as stated.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "wrep/wrep.hpp"

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int criterion, const std::string& what, bool pass, double elapsed, double limit,
            const std::string& detail = "") {
  bool timed_ok = elapsed < limit;
  bool ok = pass && timed_ok;
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what << " ("
            << elapsed << " s, limit " << limit << " s)";
  if (!pass && !detail.empty()) std::cout << " -- " << detail;
  if (pass && !timed_ok) std::cout << " -- over the runtime limit";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

std::string first_failure(const wrep::Report& r) {
  for (const auto& i : r.instances)
    if (!i.pass) return i.id + ": " + i.detail;
  return "";
}

}  // namespace

int main() {
  using namespace wrep;
  std::cout << kToolVersion << " acceptance suite\n";

  {  // 1. convolution with the transposition class = Delta, S_n for n = 3..6
    auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opt;
    opt.n_max = 6;
    Report r = verify_th_symm(opt);
    report(1, "ch(K_{(1^{n-2} 2)} * f) = Delta ch(f) on S_3..S_6, all class indicators",
           r.all_pass(), seconds_since(t0), 10.0, first_failure(r));
  }

  {  // 2. the wreath-product generalization over the full grid
    auto t0 = std::chrono::steady_clock::now();
    Report r = verify_th_main();
    report(2, "ch(K_{lambda_c} * f) = Delta_c ch(f) on (Z/2, n<=4), (Z/3, n<=3), (S_3, n<=3)",
           r.all_pass(), seconds_since(t0), 60.0, first_failure(r));
  }

  {  // 3. ch intertwines induction/restriction with the ladder operators
    auto t0 = std::chrono::steady_clock::now();
    Report r = verify_th_heis();
    report(3, "ch intertwines a~_{+-n}(gamma) with p_n(gamma) and n d/dp_n(gamma), n+m <= 4",
           r.all_pass(), seconds_since(t0), 30.0, first_failure(r));
  }

  {  // 4. eigenvalue reformulation, operator and brute-force convolution routes
    auto t0 = std::chrono::steady_clock::now();
    Report r = verify_prop_reform();
    report(4, "Delta s_lambda = (n(n-1)/2f) <p_1^{n-2}p_2, s_lambda> s_lambda, n <= 6; "
              "brute convolution n <= 5; n=3 table (3, 0, -3)",
           r.all_pass(), seconds_since(t0), 10.0, first_failure(r));
  }

  {  // 5. the Hamiltonian lemma and the Virasoro relations on windows
    auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opt;
    Report rh = verify_lem_ham(opt);
    VerifyOptions vopt;
    vopt.window = 8;
    Report rv = verify_virasoro(vopt);
    report(5, "[Delta^i, a_n(gamma)] = -n delta_{i gamma} L^i_n and Virasoro relations with "
              "central charge 1, windows D <= 8, n,m in [-3,3]",
           rh.all_pass() && rv.all_pass(), seconds_since(t0), 20.0,
           first_failure(rh) + first_failure(rv));
  }

  {  // 6. the closing commutator theorem
    auto t0 = std::chrono::steady_clock::now();
    Report r = verify_final();
    report(6, "[Delta_c, a~_n(gamma)] = -n (|G|^2 gamma(c^{-1}) / d^2 zeta_c) L_n^gamma, "
              "windows D <= 6, Z/2 and Z/3, n in {+-1, +-2}",
           r.all_pass(), seconds_since(t0), 30.0, first_failure(r));
  }

  {  // 7. structural suite
    auto t0 = std::chrono::steady_clock::now();
    Report r = verify_structural();
    report(7, "ch isometry, wreath class data vs brute force, character tables, idempotents",
           r.all_pass(), seconds_since(t0), 30.0, first_failure(r));
  }

  {  // 8. two consecutive full default runs produce byte-identical reports
    auto t0 = std::chrono::steady_clock::now();
    Document run1 = verify_all();
    Document run2 = verify_all();
    bool same = render_document_json(run1) == render_document_json(run2) &&
                render_document_table(run1) == render_document_table(run2);
    report(8, "full default suite is byte-deterministic (json and table)", same,
           seconds_since(t0), 120.0);
  }

  if (g_failures) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
