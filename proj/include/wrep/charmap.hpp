#pragma once

#include <memory>

#include "wrep/errors.hpp"
#include "wrep/groups.hpp"
#include "wrep/symfun.hpp"
#include "wrep/wreath.hpp"

namespace wrep {

/// Extracts the Gamma_n class data behind a class-function domain, whether it
/// is combinatorial or a brute-force wreath group.
inline std::shared_ptr<const WreathClasses> as_wreath_domain(
    const std::shared_ptr<const ClassDomain>& dom) {
  if (auto wc = std::dynamic_pointer_cast<const WreathClasses>(dom)) return wc;
  if (auto wg = std::dynamic_pointer_cast<const WreathGroup>(dom)) return wg->classes();
  return nullptr;
}

/// ch(f) = sum_rho Z_rho^{-1} f_rho P_rho, a class-basis element of pure
/// degree n. Works from class data alone; no element-level group needed.
inline SymFunc ch(const ClassFunction& f) {
  auto wc = as_wreath_domain(f.dom());
  if (!wc) throw NotWreath("ch: class function does not live on a wreath product");
  SymFunc out = SymFunc::zero(Basis::Classes, wc->base_num_classes());
  for (int c = 0; c < wc->num_classes(); ++c) {
    const Scalar& v = f.at(c);
    if (v.is_zero()) continue;
    out.add_term(p_rho_monomial(wc->type_at(c)), v * Rational(Integer(1), wc->zeta(c)));
  }
  return out;
}

/// Inverse characteristic map on homogeneous degree-n input:
/// f_rho = Z_rho * (coefficient of P_rho).
inline ClassFunction ch_inverse(const SymFunc& f, const std::shared_ptr<const GroupTable>& base,
                                int n) {
  if (f.basis() != Basis::Classes) throw BasisMismatch("ch_inverse: input must be in class basis");
  if (f.nalpha() != base->num_classes())
    throw BasisMismatch("ch_inverse: alphabet family does not match the group");
  int d = 0;
  if (!f.homogeneous(&d)) throw NotHomogeneous("ch_inverse: input is not homogeneous");
  if (!f.is_zero() && d != n)
    throw NotHomogeneous("ch_inverse: input has degree " + std::to_string(d) + ", expected " +
                         std::to_string(n));
  auto wc = wreath_classes(base, n);
  ClassFunction out(wc);
  for (const auto& [m, s] : f.terms()) {
    int c = wc->index_of(monomial_type(m, base->num_classes()));
    out.set(c, s * Rational(wc->zeta(c)));
  }
  return out;
}

/// The irreducible character of Gamma_n indexed by Lambda in P_n(Gamma^*).
inline ClassFunction irreducible_character(const std::shared_ptr<const GroupTable>& base,
                                           const TypeFunction& Lambda) {
  if (Lambda.num_classes() != base->num_classes())
    throw BasisMismatch("irreducible_character: Lambda must be indexed by Gamma^*");
  SymFunc s = schur_multi(Lambda, base->num_classes());
  return ch_inverse(to_class_basis(s, *base), base, Lambda.norm());
}

/// f^Lambda = n! prod_gamma d_gamma^{n_gamma} f^{Lambda(gamma)} / n_gamma!.
inline Integer degree_formula(const std::shared_ptr<const GroupTable>& base,
                              const TypeFunction& Lambda) {
  const CharacterTable* T = base->characters();
  if (!T) throw Error(base->label() + ": no character table attached");
  const int n = Lambda.norm();
  Rational acc(factorial(n));
  for (int gamma = 0; gamma < Lambda.num_classes(); ++gamma) {
    const Partition& lam = Lambda.at(gamma);
    if (lam.empty()) continue;
    const int ng = lam.weight();
    long long fl = sn_character(lam, Partition(std::vector<int>(ng, 1)));
    acc *= Rational(int_pow(T->degrees.at(gamma), ng) * Integer(static_cast<long>(fl)),
                    factorial(ng));
  }
  if (!acc.is_integer() || acc <= Rational(0))
    throw Error("degree_formula: non-integral result for Lambda = " + Lambda.to_string());
  return acc.num();
}

}  // namespace wrep
