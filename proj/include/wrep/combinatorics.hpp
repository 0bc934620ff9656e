#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "wrep/errors.hpp"
#include "wrep/scalars.hpp"

namespace wrep {

inline constexpr int kMaxPartitionWeight = 50;

/// Integer partition, parts weakly decreasing, empty list = partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    for (int p : parts_)
      if (p < 1) throw Error("Partition parts must be positive");
  }

  const std::vector<int>& parts() const { return parts_; }
  int weight() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Multiplicity view: part size -> number of parts of that size.
  std::map<int, int> multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> parts_;
};

/// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of cycle type lambda in S_|lambda|.
inline Integer z_of(const Partition& lambda) {
  Integer z = 1;
  for (const auto& [i, m] : lambda.multiplicities()) z *= int_pow(i, m) * factorial(m);
  return z;
}

/// All partitions of n, largest-part-first order: (n) first, (1^n) last.
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw Error("enumerate_partitions: negative n");
  if (n > kMaxPartitionWeight)
    throw BoundExceeded("enumerate_partitions: n = " + std::to_string(n) + " exceeds bound " +
                        std::to_string(kMaxPartitionWeight));
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Partition-valued function on a finite index set (stored densely; missing
/// classes hold the empty partition).
class TypeFunction {
 public:
  TypeFunction() = default;
  explicit TypeFunction(int num_classes) : assign_(num_classes) {}
  TypeFunction(int num_classes, std::map<int, Partition> sparse) : assign_(num_classes) {
    for (auto& [c, p] : sparse) {
      if (c < 0 || c >= num_classes) throw Error("TypeFunction: class index out of range");
      assign_[c] = std::move(p);
    }
  }

  int num_classes() const { return static_cast<int>(assign_.size()); }
  const Partition& at(int c) const { return assign_.at(c); }
  void set(int c, Partition p) { assign_.at(c) = std::move(p); }

  /// The weight ||rho|| = sum of |rho(c)|.
  int norm() const {
    int s = 0;
    for (const auto& p : assign_) s += p.weight();
    return s;
  }

  /// rho* with rho*(c) = rho(c^{-1}).
  TypeFunction inverted(const std::vector<int>& class_inv) const {
    TypeFunction r(num_classes());
    for (int c = 0; c < num_classes(); ++c) r.assign_[class_inv.at(c)] = assign_[c];
    return r;
  }

  friend bool operator==(const TypeFunction& a, const TypeFunction& b) {
    return a.assign_ == b.assign_;
  }
  friend bool operator!=(const TypeFunction& a, const TypeFunction& b) { return !(a == b); }
  friend bool operator<(const TypeFunction& a, const TypeFunction& b) {
    return a.assign_ < b.assign_;
  }

  std::string to_string() const {
    std::string s = "(";
    for (int c = 0; c < num_classes(); ++c) {
      if (c) s += ",";
      s += assign_[c].to_string();
    }
    return s + ")";
  }

 private:
  std::vector<Partition> assign_;
};

/// Z_rho = prod_c z_{rho(c)} * zeta_c^{l(rho(c))}, the centralizer order in the
/// wreath product of an element of type rho.
inline Integer big_z(const TypeFunction& rho, const std::vector<Integer>& zeta) {
  if (rho.num_classes() > static_cast<int>(zeta.size()))
    throw Error("big_z: missing centralizer orders");
  Integer z = 1;
  for (int c = 0; c < rho.num_classes(); ++c) {
    const Partition& p = rho.at(c);
    if (p.empty()) continue;
    z *= z_of(p) * int_pow(zeta[c], p.length());
  }
  return z;
}

/// All type functions of weight n over num_classes classes. Deterministic
/// order: weight placed on earlier classes first, partitions largest-first.
inline std::vector<TypeFunction> enumerate_types(int n, int num_classes) {
  if (n < 0 || num_classes < 1) throw Error("enumerate_types: bad arguments");
  if (n > kMaxPartitionWeight || num_classes > 64)
    throw BoundExceeded("enumerate_types: arguments exceed configured bounds");
  // partitions of every weight <= n, computed once
  std::vector<std::vector<Partition>> table(n + 1);
  for (int w = 0; w <= n; ++w) table[w] = enumerate_partitions(w);

  std::vector<TypeFunction> out;
  TypeFunction cur(num_classes);
  auto rec = [&](auto&& self, int cls, int rem) -> void {
    if (cls == num_classes - 1) {
      for (const auto& p : table[rem]) {
        cur.set(cls, p);
        out.push_back(cur);
      }
      cur.set(cls, Partition());
      return;
    }
    for (int w = rem; w >= 0; --w) {
      for (const auto& p : table[w]) {
        cur.set(cls, p);
        self(self, cls + 1, rem - w);
      }
    }
    cur.set(cls, Partition());
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace wrep
