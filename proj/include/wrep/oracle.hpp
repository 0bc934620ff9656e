#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "wrep/charmap.hpp"
#include "wrep/errors.hpp"
#include "wrep/groups.hpp"
#include "wrep/wreath.hpp"

namespace wrep {

/// Independent brute-force convolution: a single pass over all ordered pairs
/// (u, v), accumulated per class of u*v and averaged over the class size.
/// Deliberately a different route from groups::convolve.
inline ClassFunction convolve_brute(const GroupTable& G, const ClassFunction& f,
                                    const ClassFunction& g, long cap = kDefaultWreathCap) {
  if (G.size() > cap) throw BoundExceeded("convolve_brute: group order exceeds cap");
  if (!same_domain(*f.dom(), G) || !same_domain(*g.dom(), G))
    throw GroupMismatch("convolve_brute: functions not on the given group");
  std::vector<Scalar> acc(G.num_classes(), Scalar(0));
  for (int u = 0; u < G.size(); ++u) {
    const Scalar& fv = f.at(G.class_of(u));
    if (fv.is_zero()) continue;
    for (int v = 0; v < G.size(); ++v) {
      const Scalar& gv = g.at(G.class_of(v));
      if (gv.is_zero()) continue;
      acc[G.class_of(G.mul(u, v))] += fv * gv;
    }
  }
  ClassFunction out(f.dom());
  for (int c = 0; c < G.num_classes(); ++c)
    out.set(c, acc[c] * Rational(Integer(1), G.class_size(c)));
  return out;
}

/// Scalar-valued function on pairs of classes of two domains (the class data
/// of Gamma_n x Gamma_m).
struct ProductClassFunction {
  std::shared_ptr<const ClassDomain> first;
  std::shared_ptr<const ClassDomain> second;
  std::vector<Scalar> v;

  ProductClassFunction(std::shared_ptr<const ClassDomain> a, std::shared_ptr<const ClassDomain> b)
      : first(std::move(a)),
        second(std::move(b)),
        v(static_cast<size_t>(first->num_classes()) * second->num_classes(), Scalar(0)) {}

  const Scalar& at(int c1, int c2) const {
    return v[static_cast<size_t>(c1) * second->num_classes() + c2];
  }
  void set(int c1, int c2, Scalar s) {
    v[static_cast<size_t>(c1) * second->num_classes() + c2] = std::move(s);
  }
};

/// Outer product f (x) g.
inline ProductClassFunction outer(const ClassFunction& f, const ClassFunction& g) {
  ProductClassFunction p(f.dom(), g.dom());
  for (int c1 = 0; c1 < f.num_classes(); ++c1) {
    if (f.at(c1).is_zero()) continue;
    for (int c2 = 0; c2 < g.num_classes(); ++c2) p.set(c1, c2, f.at(c1) * g.at(c2));
  }
  return p;
}

/// Bilinear form on the product domain.
inline Scalar inner_product(const ProductClassFunction& x, const ProductClassFunction& y) {
  if (!same_domain(*x.first, *y.first) || !same_domain(*x.second, *y.second))
    throw GroupMismatch("inner_product: product functions on different groups");
  Scalar acc(0);
  for (int c1 = 0; c1 < x.first->num_classes(); ++c1)
    for (int c2 = 0; c2 < x.second->num_classes(); ++c2) {
      const Scalar& a = x.at(c1, c2);
      if (a.is_zero()) continue;
      const Scalar& b = y.at(x.first->class_inv(c1), x.second->class_inv(c2));
      if (b.is_zero()) continue;
      acc += a * b * Rational(Integer(1), x.first->zeta(c1) * x.second->zeta(c2));
    }
  return acc;
}

/// The block embedding Gamma_n x Gamma_m -> Gamma_{n+m}: concatenate the
/// g-vectors and let the second permutation act on the last m letters.
class Embedding {
 public:
  Embedding(std::shared_ptr<const WreathGroup> gn, std::shared_ptr<const WreathGroup> gm,
            std::shared_ptr<const WreathGroup> gnm)
      : gn_(std::move(gn)), gm_(std::move(gm)), gnm_(std::move(gnm)) {
    n_ = gn_->copies();
    m_ = gm_->copies();
    if (gnm_->copies() != n_ + m_) throw DegreeMismatch("Embedding: target degree mismatch");
  }

  static Embedding build(const std::shared_ptr<const GroupTable>& base, int n, int m,
                         long cap = kDefaultWreathCap) {
    return Embedding(wreath_group(base, n, cap), wreath_group(base, m, cap),
                     wreath_group(base, n + m, cap));
  }

  const WreathGroup& first() const { return *gn_; }
  const WreathGroup& second() const { return *gm_; }
  const WreathGroup& target() const { return *gnm_; }
  std::shared_ptr<const WreathGroup> first_ptr() const { return gn_; }
  std::shared_ptr<const WreathGroup> second_ptr() const { return gm_; }
  std::shared_ptr<const WreathGroup> target_ptr() const { return gnm_; }

  int map_pair(int xn, int xm) const {
    const WreathElement& a = gn_->element(xn);
    const WreathElement& b = gm_->element(xm);
    WreathElement z;
    z.g = a.g;
    z.g.insert(z.g.end(), b.g.begin(), b.g.end());
    std::vector<int> img(n_ + m_);
    for (int i = 0; i < n_; ++i) img[i] = a.sigma(i);
    for (int i = 0; i < m_; ++i) img[n_ + i] = b.sigma(i) + n_;
    z.sigma = Permutation(std::move(img));
    return gnm_->rank_of(z);
  }

  /// Splits a target element into its two blocks when its permutation
  /// preserves them; nullopt otherwise.
  std::optional<std::pair<int, int>> split(int x) const {
    const WreathElement& z = gnm_->element(x);
    for (int i = 0; i < n_; ++i)
      if (z.sigma(i) >= n_) return std::nullopt;
    WreathElement a, b;
    a.g.assign(z.g.begin(), z.g.begin() + n_);
    b.g.assign(z.g.begin() + n_, z.g.end());
    std::vector<int> ia(n_), ib(m_);
    for (int i = 0; i < n_; ++i) ia[i] = z.sigma(i);
    for (int i = 0; i < m_; ++i) ib[i] = z.sigma(n_ + i) - n_;
    a.sigma = Permutation(std::move(ia));
    b.sigma = Permutation(std::move(ib));
    return std::make_pair(gn_->rank_of(a), gm_->rank_of(b));
  }

  struct PairCount {
    int c1;
    int c2;
    long count;
  };

  /// For each class representative x of the target: how many y in the target
  /// conjugate x into the block subgroup, bucketed by the pair of classes of
  /// the blocks. Computed once; induction of any pair of class functions is a
  /// bilinear form in this table.
  const std::vector<std::vector<PairCount>>& induction_counts() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!counts_.empty()) return counts_;
    const WreathGroup& G = *gnm_;
    counts_.resize(G.num_classes());
    for (int c = 0; c < G.num_classes(); ++c) {
      std::map<std::pair<int, int>, long> acc;
      const int x = G.class_rep(c);
      for (int y = 0; y < G.size(); ++y) {
        int z = G.mul(G.mul(G.inverse(y), x), y);
        auto pq = split(z);
        if (!pq) continue;
        ++acc[{gn_->class_of(pq->first), gm_->class_of(pq->second)}];
      }
      for (const auto& [key, cnt] : acc) counts_[c].push_back({key.first, key.second, cnt});
    }
    return counts_;
  }

 private:
  std::shared_ptr<const WreathGroup> gn_, gm_, gnm_;
  int n_ = 0, m_ = 0;
  mutable std::mutex mu_;
  mutable std::vector<std::vector<PairCount>> counts_;
};

/// Cached embedding (and thus cached induction table) per (base, n, m).
inline std::shared_ptr<const Embedding> get_embedding(
    const std::shared_ptr<const GroupTable>& base, int n, int m, long cap = kDefaultWreathCap) {
  {
    std::lock_guard<std::mutex> lock(base->wreath_mu);
    auto it = base->embedding_cache.find({n, m});
    if (it != base->embedding_cache.end()) return it->second;
  }
  auto e = std::make_shared<const Embedding>(wreath_group(base, n, cap),
                                             wreath_group(base, m, cap),
                                             wreath_group(base, n + m, cap));
  std::lock_guard<std::mutex> lock(base->wreath_mu);
  auto [it, inserted] = base->embedding_cache.emplace(std::make_pair(n, m), e);
  return it->second;
}

/// Induced class function of the outer product f (x) g:
/// Ind(h)(x) = (1/|H|) sum_{y in G} h0(y^{-1} x y), h0 zero-extended off H.
inline ClassFunction induce(const Embedding& E, const ClassFunction& f, const ClassFunction& g) {
  if (!same_domain(*f.dom(), *E.first().classes()))
    throw GroupMismatch("induce: first factor lives on the wrong group");
  if (!same_domain(*g.dom(), *E.second().classes()))
    throw GroupMismatch("induce: second factor lives on the wrong group");
  const auto& counts = E.induction_counts();
  Rational inv_h(Integer(1), E.first().group_order() * E.second().group_order());
  ClassFunction out(E.target().classes());
  for (int c = 0; c < E.target().num_classes(); ++c) {
    Scalar acc(0);
    for (const auto& pc : counts[c]) {
      const Scalar& fv = f.at(pc.c1);
      if (fv.is_zero()) continue;
      const Scalar& gv = g.at(pc.c2);
      if (gv.is_zero()) continue;
      acc += fv * gv * Rational(pc.count);
    }
    out.set(c, acc * inv_h);
  }
  return out;
}

/// Restriction along the embedding, as a function on pairs of classes.
inline ProductClassFunction restrict_along(const Embedding& E, const ClassFunction& h) {
  if (!same_domain(*h.dom(), *E.target().classes()))
    throw GroupMismatch("restrict: function lives on the wrong group");
  ProductClassFunction out(E.first().classes(), E.second().classes());
  for (int c1 = 0; c1 < E.first().num_classes(); ++c1)
    for (int c2 = 0; c2 < E.second().num_classes(); ++c2) {
      int x = E.map_pair(E.first().class_rep(c1), E.second().class_rep(c2));
      out.set(c1, c2, h.at(E.target().class_of(x)));
    }
  return out;
}

/// The group-side Heisenberg operator  a~_n(w)  on R(Gamma_m):
///   n < 0: f -> Ind( sigma_{|n|}(w) (x) f )
///   n > 0: f -> < sigma_n(w), - >  applied to the first factor of Res f.
/// Entirely group theoretic: induction/restriction over explicit wreath
/// groups; the differential-operator side never enters.
inline ClassFunction heisenberg_group_side(const std::shared_ptr<const GroupTable>& base, int n,
                                           const ClassFunction& w, const ClassFunction& f,
                                           long cap = kDefaultWreathCap) {
  if (n == 0) throw Error("heisenberg_group_side: n must be nonzero");
  auto wc = as_wreath_domain(f.dom());
  if (!wc) throw NotWreath("heisenberg_group_side: operand does not live on a wreath product");
  const int m = wc->degree();
  if (n < 0) {
    const int p = -n;
    auto E = get_embedding(base, p, m, cap);
    return induce(*E, sigma_n(base, p, w), f);
  }
  if (m < n)
    throw DegreeTooSmall("heisenberg_group_side: annihilation by " + std::to_string(n) +
                         " needs degree >= " + std::to_string(n) + ", got " + std::to_string(m));
  auto Eptr = get_embedding(base, n, m - n, cap);
  const Embedding& E = *Eptr;
  ProductClassFunction res = restrict_along(E, f);
  ClassFunction sig = sigma_n(base, n, w);
  auto gn_classes = E.first().classes();
  ClassFunction out(E.second().classes());
  for (int d = 0; d < E.second().num_classes(); ++d) {
    Scalar acc(0);
    for (int c = 0; c < gn_classes->num_classes(); ++c) {
      const Scalar& sv = sig.at(c);
      if (sv.is_zero()) continue;
      const Scalar& rv = res.at(gn_classes->class_inv(c), d);
      if (rv.is_zero()) continue;
      acc += sv * rv * Rational(Integer(1), gn_classes->zeta(c));
    }
    out.set(d, acc);
  }
  return out;
}

/// Convolution by the class sum indicator K_{lambda_c} on R(Gamma_m); the
/// zero map for m < 2 (no such class exists there).
inline ClassFunction group_delta_c(const std::shared_ptr<const WreathGroup>& Gm, int c,
                                   const ClassFunction& f) {
  if (Gm->copies() < 2) return ClassFunction(f.dom());
  TypeFunction rho = lambda_c_type(*Gm->classes(), c);
  // convolve needs the element-level group behind the domain
  auto dom = std::static_pointer_cast<const ClassDomain>(Gm);
  ClassFunction K = ClassFunction::indicator(dom, Gm->classes()->index_of(rho));
  ClassFunction conv = convolve(K, ClassFunction(dom, f.values()));
  return ClassFunction(f.dom(), conv.values());
}

}  // namespace wrep
