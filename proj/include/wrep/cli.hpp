#pragma once

#include <string>

#include "wrep/report.hpp"
#include "wrep/verify.hpp"

namespace wrep {

/// Conjugacy classes of Gamma_n: one row per type with Z_rho and class size,
/// cross-checked against the brute-force group when it fits under the cap.
inline Report cmd_classes(const std::string& group_spec, int n, long cap = kDefaultWreathCap) {
  Report rep;
  rep.command = "classes";
  rep.group = group_spec;
  rep.grid = "n=" + std::to_string(n);
  return detail::timed(std::move(rep), [&](Report& r) {
    auto base = load_group(group_spec);
    auto wc = wreath_classes(base, n);
    r.columns = {"class", "type", "Z_rho", "size"};
    Integer total = 0;
    for (int c = 0; c < wc->num_classes(); ++c) {
      Integer size = wc->group_order() / wc->zeta(c);
      total += size;
      r.rows.push_back({std::to_string(c), wc->class_name(c), wc->zeta(c).get_str(),
                        size.get_str()});
    }
    r.instances.push_back(ReportInstance{
        "class equation: sizes sum to |G| = " + wc->group_order().get_str(),
        total == wc->group_order(),
        total == wc->group_order() ? std::string() : "sum = " + total.get_str()});
    if (wc->group_order() <= Integer(cap)) {
      auto G = build_wreath(base, n, cap);
      bool ok = G->num_classes() == wc->num_classes();
      std::string detail = ok ? std::string() : "class count differs";
      for (int c = 0; ok && c < G->num_classes(); ++c) {
        if (G->class_size(c) != wc->group_order() / wc->zeta(c)) {
          ok = false;
          detail = "brute-force size of " + G->class_name(c) + " is " +
                   G->class_size(c).get_str();
        }
      }
      r.instances.push_back(ReportInstance{"brute-force cross-check", ok, detail});
    }
  });
}

/// Eigenvalue of Delta_c on each s_Lambda, computed by operator application
/// and by the inner-product formula, flagged equal/unequal.
inline Report cmd_delta_eig(const std::string& group_spec, int n, long cap = kDefaultWreathCap) {
  Report rep;
  rep.command = "delta-eig";
  rep.group = group_spec;
  rep.grid = "n=" + std::to_string(n);
  (void)cap;
  return detail::timed(std::move(rep), [&](Report& r) {
    auto base = load_group(group_spec);
    const int k = base->num_classes();
    const CharacterTable& T = *base->characters();
    const Integer g2 = base->group_order() * base->group_order();
    r.columns = {"Lambda", "degree"};
    for (int c = 0; c < k; ++c) r.columns.push_back("Delta_{" + base->class_name(c) + "}");
    std::vector<FockOperator> Dc;
    for (int c = 0; c < k; ++c) Dc.push_back(delta_c(*base, c));
    for (const auto& Lam : enumerate_types(n, k)) {
      SymFunc s = schur_multi(Lam, k);
      std::vector<std::string> row = {Lam.to_string(), degree_formula(base, Lam).get_str()};
      for (int c = 0; c < k; ++c) {
        SymFunc image = apply(Dc[c], s);
        Scalar eig_op(0);
        if (!image.is_zero()) {
          const Monomial& m0 = s.terms().begin()->first;
          eig_op = image.coeff(m0) / s.coeff(m0).as_rational();
        }
        bool eigenvector = image == s * eig_op;
        // formula route: sum over beta of the coefficient of Delta^beta times
        // the per-alphabet eigenvalue of Delta on s_{Lambda(beta)}
        Scalar eig_formula(0);
        for (int beta = 0; beta < k; ++beta) {
          const int nb = Lam.at(beta).weight();
          if (nb < 2) continue;
          Monomial probe_m = Monomial::power_sum(2, beta);
          probe_m = probe_m.with_exponent(1, beta, nb - 2);
          SymFunc probe = SymFunc::from_monomial(Basis::Characters, k, probe_m, Scalar(1));
          long long fl = sn_character(Lam.at(beta),
                                      Partition(std::vector<int>(nb, 1)));
          Scalar per_alpha = form(probe, schur(Lam.at(beta), beta, Basis::Characters, k), *base) *
                             Rational(Integer(nb) * Integer(nb - 1),
                                      2 * Integer(static_cast<long>(fl)));
          Scalar coeff = T.rows[beta][base->class_inv(c)] *
                         Rational(g2, T.degrees[beta] * T.degrees[beta] * base->zeta(c));
          eig_formula += coeff * per_alpha;
        }
        bool pass = eigenvector && eig_op == eig_formula;
        row.push_back(eig_op.to_string());
        r.instances.push_back(ReportInstance{
            "Lambda=" + Lam.to_string() + " c=" + base->class_name(c), pass,
            pass ? std::string()
                 : (eigenvector ? "operator gives " + eig_op.to_string() + ", formula gives " +
                                      eig_formula.to_string()
                                : "s_Lambda is not an eigenvector: Delta_c s = " +
                                      image.to_string())});
      }
      r.rows.push_back(std::move(row));
    }
  });
}

/// Theorem verification; "all" runs the full default suite.
inline Document cmd_verify(const std::string& theorem, const VerifyOptions& opt = {}) {
  Document d;
  if (theorem == "all") {
    d = verify_all(opt);
  } else {
    d.reports.push_back(verify(theorem, opt));
  }
  return d;
}

}  // namespace wrep
