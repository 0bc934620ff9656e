#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "wrep/combinatorics.hpp"
#include "wrep/errors.hpp"
#include "wrep/groups.hpp"

namespace wrep {

inline constexpr long kDefaultWreathCap = 50'000;

/// Permutation of {0..n-1}, stored as the image vector.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= degree() || seen[v]) throw Error("Permutation: not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return Permutation(std::move(v));
  }

  /// Builds from 1-based disjoint cycles, e.g. {{1,3},{2,6,5}} in S_n.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    for (const auto& cyc : cycles) {
      for (size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i] - 1;
        int to = cyc[(i + 1) % cyc.size()] - 1;
        if (from < 0 || from >= n || to < 0 || to >= n) throw Error("from_cycles: index out of range");
        v[from] = to;
      }
    }
    return Permutation(std::move(v));
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const {
    std::vector<int> v(img_.size());
    for (int i = 0; i < degree(); ++i) v[img_[i]] = i;
    return Permutation(std::move(v));
  }

  /// Disjoint cycles including fixed points, each starting at its smallest
  /// member, ordered by smallest member.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::vector<int> c;
      int j = i;
      while (!seen[j]) {
        seen[j] = true;
        c.push_back(j);
        j = img_[j];
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  long lehmer_rank() const {
    const int n = degree();
    long rank = 0;
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (int i = 0; i < n; ++i) {
      if (n - i >= 1) fact /= (n - i);
      int smaller = 0;
      for (int j = i + 1; j < n; ++j)
        if (img_[j] < img_[i]) ++smaller;
      rank += smaller * fact;
    }
    return rank;
  }

  static Permutation unrank(int n, long rank) {
    std::vector<int> avail(n);
    for (int i = 0; i < n; ++i) avail[i] = i;
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    std::vector<int> v;
    v.reserve(n);
    for (int i = n; i >= 1; --i) {
      fact /= i;
      long d = rank / fact;
      rank %= fact;
      v.push_back(avail[d]);
      avail.erase(avail.begin() + d);
    }
    return Permutation(std::move(v));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }

  /// 1-based cycle notation, fixed points omitted; identity rendered as "id".
  std::string to_string() const {
    std::string s;
    for (const auto& c : cycles()) {
      if (c.size() == 1) continue;
      s += "(";
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i] + 1);
      }
      s += ")";
    }
    return s.empty() ? "id" : s;
  }

 private:
  std::vector<int> img_;
};

/// Composition (sigma tau)(i) = sigma(tau(i)).
inline Permutation perm_mul(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree()) throw DegreeMismatch("perm_mul: degree mismatch");
  std::vector<int> v(sigma.degree());
  for (int i = 0; i < sigma.degree(); ++i) v[i] = sigma(tau(i));
  return Permutation(std::move(v));
}

/// Element (g, sigma) of Gamma_n = Gamma ~ S_n.
struct WreathElement {
  std::vector<int> g;  // element indices of the base group
  Permutation sigma;
};

inline bool operator==(const WreathElement& a, const WreathElement& b) {
  return a.g == b.g && a.sigma == b.sigma;
}

/// (g, sigma) (h, tau) = (g sigma(h), sigma tau), with sigma(h)_i = h_{sigma^{-1}(i)}.
inline WreathElement wreath_mul(const WreathElement& x, const WreathElement& y,
                                const GroupTable& base) {
  const int n = x.sigma.degree();
  if (y.sigma.degree() != n || static_cast<int>(x.g.size()) != n ||
      static_cast<int>(y.g.size()) != n)
    throw DegreeMismatch("wreath_mul: degree mismatch");
  WreathElement r;
  r.g.resize(n);
  Permutation sig_inv = x.sigma.inverse();
  for (int i = 0; i < n; ++i) r.g[i] = base.mul(x.g[i], y.g[sig_inv(i)]);
  r.sigma = perm_mul(x.sigma, y.sigma);
  return r;
}

/// (g, sigma)^{-1} = (sigma^{-1}(g^{-1}), sigma^{-1}).
inline WreathElement wreath_inverse(const WreathElement& x, const GroupTable& base) {
  const int n = x.sigma.degree();
  WreathElement r;
  r.sigma = x.sigma.inverse();
  r.g.resize(n);
  for (int i = 0; i < n; ++i) r.g[i] = base.inverse(x.g[x.sigma(i)]);
  return r;
}

/// Conjugacy type of (g, sigma): for each cycle (i_1 ... i_k) of sigma the
/// cycle product g_{i_k} g_{i_{k-1}} ... g_{i_1} contributes a part k to the
/// partition attached to its class.
inline TypeFunction type_of(const WreathElement& x, const GroupTable& base) {
  std::vector<std::vector<int>> parts(base.num_classes());
  for (const auto& cyc : x.sigma.cycles()) {
    int p = base.identity();
    for (auto it = cyc.rbegin(); it != cyc.rend(); ++it) p = base.mul(p, x.g[*it]);
    parts[base.class_of(p)].push_back(static_cast<int>(cyc.size()));
  }
  TypeFunction rho(base.num_classes());
  for (int c = 0; c < base.num_classes(); ++c)
    if (!parts[c].empty()) rho.set(c, Partition(parts[c]));
  return rho;
}

/// Combinatorial class data of Gamma_n: types, centralizer orders Z_rho and
/// inverse classes, with no element-level group attached. A self-contained
/// snapshot of the base group's class structure is kept so that instances can
/// be cached on the base group without reference cycles.
class WreathClasses : public ClassDomain {
 public:
  WreathClasses(const GroupTable& base, int n) : n_(n) {
    base_label_ = base.label();
    base_classes_ = base.num_classes();
    base_order_ = base.group_order();
    scalar_order_ = base.scalar_order();
    base_identity_class_ = base.identity_class();
    for (int c = 0; c < base_classes_; ++c) {
      base_zeta_.push_back(base.zeta(c));
      base_class_inv_.push_back(base.class_inv(c));
      base_class_names_.push_back(base.class_name(c));
    }
    types_ = enumerate_types(n, base_classes_);
    order_ = factorial(n) * int_pow(base_order_, n);
    for (size_t i = 0; i < types_.size(); ++i) {
      index_[types_[i]] = static_cast<int>(i);
      zeta_.push_back(big_z(types_[i], base_zeta_));
    }
    for (const auto& t : types_) class_inv_.push_back(index_.at(t.inverted(base_class_inv_)));
    TypeFunction id_type(base_classes_);
    if (n > 0) id_type.set(base_identity_class_, Partition(std::vector<int>(n, 1)));
    identity_index_ = index_.at(id_type);
  }

  int degree() const { return n_; }  // the n of Gamma_n
  int base_num_classes() const { return base_classes_; }
  const std::vector<Integer>& base_zeta() const { return base_zeta_; }
  const std::vector<int>& base_class_inv() const { return base_class_inv_; }
  int base_identity_class() const { return base_identity_class_; }
  Integer base_order() const { return base_order_; }
  const std::string& base_label() const { return base_label_; }

  const TypeFunction& type_at(int c) const { return types_.at(c); }
  int index_of(const TypeFunction& t) const {
    auto it = index_.find(t);
    if (it == index_.end())
      throw UnknownType("type " + t.to_string() + " is not a class of " + label());
    return it->second;
  }
  bool has_type(const TypeFunction& t) const { return index_.count(t) > 0; }

  // ClassDomain
  int num_classes() const override { return static_cast<int>(types_.size()); }
  Integer group_order() const override { return order_; }
  Integer zeta(int c) const override { return zeta_.at(c); }
  int class_inv(int c) const override { return class_inv_.at(c); }
  int identity_class() const override { return identity_index_; }
  unsigned scalar_order() const override { return scalar_order_; }
  std::string label() const override { return base_label_ + "~S_" + std::to_string(n_); }
  std::string class_name(int c) const override { return types_.at(c).to_string(); }

 private:
  int n_;
  std::string base_label_;
  int base_classes_ = 0;
  Integer base_order_;
  unsigned scalar_order_ = 1;
  int base_identity_class_ = 0;
  std::vector<Integer> base_zeta_;
  std::vector<int> base_class_inv_;
  std::vector<std::string> base_class_names_;

  std::vector<TypeFunction> types_;
  std::vector<Integer> zeta_;
  std::vector<int> class_inv_;
  std::map<TypeFunction, int> index_;
  Integer order_;
  int identity_index_ = 0;
};

/// Class data of Gamma_n, cached per base group.
inline std::shared_ptr<const WreathClasses> wreath_classes(
    const std::shared_ptr<const GroupTable>& base, int n) {
  std::lock_guard<std::mutex> lock(base->wreath_mu);
  auto it = base->wreath_cache.find(n);
  if (it != base->wreath_cache.end()) return it->second;
  auto wc = std::make_shared<const WreathClasses>(*base, n);
  base->wreath_cache[n] = wc;
  return wc;
}

/// Gamma_n as an explicit group. Elements are indexed by mixed radix: index =
/// g_rank * n! + lehmer(sigma), g_rank little-endian base |Gamma|.
/// Multiplication is structural (no dense table).
class WreathGroup final : public GroupTable {
 public:
  WreathGroup(std::shared_ptr<const GroupTable> base, int n, long cap) : base_(std::move(base)), n_(n) {
    Integer total = factorial(n) * int_pow(base_->group_order(), n);
    if (total > Integer(cap))
      throw BoundExceeded("wreath product " + base_->label() + "~S_" + std::to_string(n) +
                          " has " + total.get_str() + " elements, over the cap " +
                          std::to_string(cap));
    classes_ = wreath_classes(base_, n);
    size_ = static_cast<int>(total.get_si());
    label_ = classes_->label();
    scalar_order_ = base_->scalar_order();

    nfact_ = 1;
    for (int i = 2; i <= n; ++i) nfact_ *= i;

    elems_.reserve(size_);
    for (int i = 0; i < size_; ++i) elems_.push_back(unrank(i));
    inv_.resize(size_);
    class_of_.resize(size_);
    for (int i = 0; i < size_; ++i) {
      inv_[i] = rank_of(wreath_inverse(elems_[i], *base_));
      class_of_[i] = classes_->index_of(type_of(elems_[i], *base_));
    }

    const int k = classes_->num_classes();
    reps_.assign(k, -1);
    sizes_.assign(k, Integer(0));
    for (int i = 0; i < size_; ++i) {
      int c = class_of_[i];
      if (reps_[c] < 0) reps_[c] = i;
      sizes_[c] += 1;
    }
    for (int c = 0; c < k; ++c) {
      zeta_.push_back(classes_->zeta(c));
      class_inv_.push_back(classes_->class_inv(c));
      class_names_.push_back(classes_->class_name(c));
      if (reps_[c] < 0) throw Error(label_ + ": enumerated type has no element");
    }

    WreathElement id;
    id.g.assign(n, base_->identity());
    id.sigma = Permutation::identity(n);
    identity_ = rank_of(id);

    names_.resize(size_);
    for (int i = 0; i < size_; ++i) names_[i] = render(elems_[i]);

    long ex = 1;
    for (int i = 0; i < size_; ++i) {
      long ord = 1;
      int y = i;
      while (y != identity_) {
        y = mul(y, i);
        ++ord;
      }
      ex = std::lcm(ex, ord);
    }
    exponent_ = ex;
  }

  int mul(int a, int b) const override {
    return rank_of(wreath_mul(elems_[a], elems_[b], *base_));
  }
  int inverse(int a) const override { return inv_[a]; }

  const GroupTable& base() const { return *base_; }
  std::shared_ptr<const GroupTable> base_ptr() const { return base_; }
  int copies() const { return n_; }
  const WreathElement& element(int i) const { return elems_.at(i); }
  std::shared_ptr<const WreathClasses> classes() const { return classes_; }

  int rank_of(const WreathElement& x) const {
    long grank = 0;
    const long b = base_->size();
    for (int i = n_ - 1; i >= 0; --i) grank = grank * b + x.g[i];
    return static_cast<int>(grank * nfact_ + x.sigma.lehmer_rank());
  }

 private:
  WreathElement unrank(int idx) const {
    WreathElement x;
    long prank = idx % nfact_;
    long grank = idx / nfact_;
    x.g.resize(n_);
    const long b = base_->size();
    for (int i = 0; i < n_; ++i) {
      x.g[i] = static_cast<int>(grank % b);
      grank /= b;
    }
    x.sigma = Permutation::unrank(n_, prank);
    return x;
  }

  std::string render(const WreathElement& x) const {
    std::string s = "(";
    for (int i = 0; i < n_; ++i) {
      if (i) s += ",";
      s += base_->element_name(x.g[i]);
    }
    s += ";" + x.sigma.to_string() + ")";
    return s;
  }

  std::shared_ptr<const GroupTable> base_;
  int n_;
  long nfact_ = 1;
  std::vector<WreathElement> elems_;
  std::shared_ptr<const WreathClasses> classes_;
};

/// Brute-force construction of Gamma_n; classes coincide with
/// wreath_classes(base, n) index-for-index.
inline std::shared_ptr<const WreathGroup> build_wreath(std::shared_ptr<const GroupTable> base,
                                                       int n, long cap = kDefaultWreathCap) {
  if (n < 0) throw Error("build_wreath: negative n");
  return std::make_shared<const WreathGroup>(std::move(base), n, cap);
}

/// Cached build_wreath; wreath groups are immutable, so repeated verification
/// instances over one base share them.
inline std::shared_ptr<const WreathGroup> wreath_group(
    const std::shared_ptr<const GroupTable>& base, int n, long cap = kDefaultWreathCap) {
  {
    std::lock_guard<std::mutex> lock(base->wreath_mu);
    auto it = base->wreath_group_cache.find(n);
    if (it != base->wreath_group_cache.end()) {
      if (it->second->size() > cap)
        throw BoundExceeded("wreath product exceeds the requested cap");
      return it->second;
    }
  }
  auto g = build_wreath(base, n, cap);
  std::lock_guard<std::mutex> lock(base->wreath_mu);
  auto [it, inserted] = base->wreath_group_cache.emplace(n, g);
  return it->second;
}

/// Indicator class function of the class of type rho.
inline ClassFunction class_indicator(const std::shared_ptr<const ClassDomain>& dom,
                                     const TypeFunction& rho) {
  auto wc = std::dynamic_pointer_cast<const WreathClasses>(dom);
  if (wc) return ClassFunction::indicator(dom, wc->index_of(rho));
  auto wg = std::dynamic_pointer_cast<const WreathGroup>(dom);
  if (wg) return ClassFunction::indicator(dom, wg->classes()->index_of(rho));
  throw UnknownType("class_indicator: domain is not a wreath product");
}

/// The type lambda_c: c -> (2), c^0 -> (1^{n-2}); for c = c^0 the combined
/// type (2, 1^{n-2}) on the identity class.
inline TypeFunction lambda_c_type(const WreathClasses& wc, int c) {
  if (wc.degree() < 2) throw Error("lambda_c requires n >= 2");
  TypeFunction rho(wc.base_num_classes());
  const int c0 = wc.base_identity_class();
  std::vector<int> ones(wc.degree() - 2, 1);
  if (c == c0) {
    std::vector<int> parts = {2};
    parts.insert(parts.end(), ones.begin(), ones.end());
    rho.set(c0, Partition(parts));
  } else {
    rho.set(c, Partition({2}));
    if (!ones.empty()) rho.set(c0, Partition(ones));
  }
  return rho;
}

/// sigma_n(w): supported on the classes c_n (an n-cycle with cycle product in
/// c), with value n * w(c) there; linear in the weight w.
inline ClassFunction sigma_n(const std::shared_ptr<const GroupTable>& base, int n,
                             const ClassFunction& w) {
  if (!same_domain(*w.dom(), *base)) throw GroupMismatch("sigma_n: weight not on the base group");
  auto wc = wreath_classes(base, n);
  ClassFunction out(wc);
  for (int c = 0; c < base->num_classes(); ++c) {
    if (w.at(c).is_zero()) continue;
    TypeFunction t(base->num_classes());
    t.set(c, Partition({n}));
    out.set(wc->index_of(t), w.at(c) * Rational(n));
  }
  return out;
}

/// sigma_n(c): value n * zeta_c on the class c_n and 0 elsewhere, i.e.
/// sigma_n applied to zeta_c K_c.
inline ClassFunction sigma_n_class(const std::shared_ptr<const GroupTable>& base, int n, int c) {
  ClassFunction w = ClassFunction::indicator(base, c);
  w *= Scalar(Rational(base->zeta(c)));
  return sigma_n(base, n, w);
}

}  // namespace wrep
