#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wrep/combinatorics.hpp"
#include "wrep/errors.hpp"
#include "wrep/scalars.hpp"

namespace wrep {

class WreathClasses;
class WreathGroup;
class Embedding;

/// Conjugacy-class data shared by concrete groups and by combinatorially
/// described wreath products: everything the bilinear form needs.
class ClassDomain {
 public:
  virtual ~ClassDomain() = default;
  virtual int num_classes() const = 0;
  virtual Integer group_order() const = 0;
  virtual Integer zeta(int c) const = 0;  // centralizer order of class c
  virtual int class_inv(int c) const = 0;
  virtual int identity_class() const = 0;
  virtual unsigned scalar_order() const = 0;  // cyclotomic order for values on this domain
  virtual std::string label() const = 0;
  virtual std::string class_name(int c) const = 0;
};

inline bool same_domain(const ClassDomain& a, const ClassDomain& b) {
  if (&a == &b) return true;
  if (a.num_classes() != b.num_classes()) return false;
  if (a.group_order() != b.group_order()) return false;
  if (a.scalar_order() != b.scalar_order()) return false;
  for (int c = 0; c < a.num_classes(); ++c) {
    if (a.zeta(c) != b.zeta(c) || a.class_inv(c) != b.class_inv(c)) return false;
  }
  return true;
}

/// Scalar-valued function on the conjugacy classes of a domain.
class ClassFunction {
 public:
  explicit ClassFunction(std::shared_ptr<const ClassDomain> dom)
      : dom_(std::move(dom)), v_(dom_->num_classes(), Scalar(0)) {}
  ClassFunction(std::shared_ptr<const ClassDomain> dom, std::vector<Scalar> values)
      : dom_(std::move(dom)), v_(std::move(values)) {
    if (static_cast<int>(v_.size()) != dom_->num_classes())
      throw GroupMismatch("ClassFunction: value count does not match class count");
  }

  static ClassFunction indicator(std::shared_ptr<const ClassDomain> dom, int c) {
    ClassFunction f(std::move(dom));
    f.v_.at(c) = Scalar(1);
    return f;
  }

  const std::shared_ptr<const ClassDomain>& dom() const { return dom_; }
  int num_classes() const { return static_cast<int>(v_.size()); }
  const Scalar& at(int c) const { return v_.at(c); }
  void set(int c, Scalar s) { v_.at(c) = std::move(s); }
  const std::vector<Scalar>& values() const { return v_; }

  ClassFunction& operator+=(const ClassFunction& o) {
    require_same(o);
    for (size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  ClassFunction& operator-=(const ClassFunction& o) {
    require_same(o);
    for (size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  ClassFunction& operator*=(const Scalar& s) {
    for (auto& x : v_) x *= s;
    return *this;
  }
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const Scalar& s) { return a *= s; }
  friend ClassFunction operator*(const Scalar& s, ClassFunction a) { return a *= s; }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return same_domain(*a.dom_, *b.dom_) && a.v_ == b.v_;
  }

  bool is_zero() const {
    for (const auto& x : v_)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  void require_same(const ClassFunction& o) const {
    if (!same_domain(*dom_, *o.dom_))
      throw GroupMismatch("class functions live on different groups");
  }
  std::shared_ptr<const ClassDomain> dom_;
  std::vector<Scalar> v_;
};

/// Validated table of irreducible character values, rows indexed by Gamma^*,
/// columns by conjugacy class.
struct CharacterTable {
  std::vector<std::vector<Scalar>> rows;
  std::vector<Integer> degrees;  // d_gamma = value at the identity class
};

/// Finite group with explicit multiplication. Base groups store the dense
/// table; wreath products override mul()/inverse() and compute structurally.
class GroupTable : public ClassDomain, public std::enable_shared_from_this<GroupTable> {
 public:
  ~GroupTable() override = default;

  /// Builds a group from a multiplication table, verifying the group axioms
  /// and computing conjugacy classes by orbit decomposition.
  static std::shared_ptr<GroupTable> from_table(const std::string& label,
                                                const std::vector<std::vector<int>>& mul,
                                                std::vector<std::string> element_names = {});

  int size() const { return size_; }
  virtual int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * size_ + b]; }
  virtual int inverse(int a) const { return inv_[a]; }
  int identity() const { return identity_; }

  int class_of(int x) const { return class_of_[x]; }
  int class_rep(int c) const { return reps_.at(c); }
  Integer class_size(int c) const { return sizes_.at(c); }
  long exponent() const { return exponent_; }
  const std::string& element_name(int x) const { return names_.at(x); }

  // ClassDomain
  int num_classes() const override { return static_cast<int>(reps_.size()); }
  Integer group_order() const override { return Integer(size_); }
  Integer zeta(int c) const override { return zeta_.at(c); }
  int class_inv(int c) const override { return class_inv_.at(c); }
  int identity_class() const override { return class_of_[identity_]; }
  unsigned scalar_order() const override { return scalar_order_; }
  std::string label() const override { return label_; }
  std::string class_name(int c) const override { return class_names_.at(c); }

  const CharacterTable* characters() const { return chars_ ? &*chars_ : nullptr; }
  void set_characters(CharacterTable t) { chars_ = std::move(t); }

  /// Character row as a class function on this group.
  ClassFunction character(int gamma) const {
    if (!chars_) throw Error(label_ + ": no character table attached");
    return ClassFunction(shared_from_this(), chars_->rows.at(gamma));
  }

  // caches keyed on this base group: combinatorial class data of Gamma_n,
  // brute-force wreath groups, and block embeddings with their induction
  // tables (see wreath.hpp / oracle.hpp)
  mutable std::mutex wreath_mu;
  mutable std::map<int, std::shared_ptr<const WreathClasses>> wreath_cache;
  mutable std::map<int, std::shared_ptr<const WreathGroup>> wreath_group_cache;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const Embedding>> embedding_cache;

 protected:
  GroupTable() = default;

  // Computes classes, inverses, exponent etc. through the (possibly virtual)
  // multiplication. Used by from_table; wreath groups fill fields themselves.
  void finish_from_mul();

  std::string label_;
  int size_ = 0;
  std::vector<int> mul_;  // dense row-major table; empty for structural groups
  std::vector<int> inv_;
  int identity_ = 0;
  long exponent_ = 1;
  unsigned scalar_order_ = 1;
  std::vector<std::string> names_;

  std::vector<int> class_of_;
  std::vector<int> reps_;
  std::vector<Integer> sizes_;
  std::vector<Integer> zeta_;
  std::vector<int> class_inv_;
  std::vector<std::string> class_names_;

  std::optional<CharacterTable> chars_;
};

inline void GroupTable::finish_from_mul() {
  names_.resize(size_);
  for (int i = 0; i < size_; ++i)
    if (names_[i].empty()) names_[i] = "x" + std::to_string(i);

  // identity
  identity_ = -1;
  for (int e = 0; e < size_; ++e) {
    bool ok = true;
    for (int x = 0; x < size_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw NotAGroup(label_ + ": no identity element");

  // inverses
  inv_.assign(size_, -1);
  for (int x = 0; x < size_; ++x) {
    for (int y = 0; y < size_; ++y) {
      if (mul(x, y) == identity_ && mul(y, x) == identity_) {
        inv_[x] = y;
        break;
      }
    }
    if (inv_[x] < 0) throw NotAGroup(label_ + ": element " + std::to_string(x) + " has no inverse");
  }

  // associativity: full check for small tables, sampled beyond
  if (size_ <= 128) {
    for (int a = 0; a < size_; ++a)
      for (int b = 0; b < size_; ++b)
        for (int c = 0; c < size_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw NotAGroup(label_ + ": associativity fails at (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");
  } else {
    unsigned long long s = 0x9e3779b97f4a7c15ull;
    auto next = [&s]() {
      s ^= s << 13;
      s ^= s >> 7;
      s ^= s << 17;
      return s;
    };
    for (int t = 0; t < 10 * size_; ++t) {
      int a = static_cast<int>(next() % size_), b = static_cast<int>(next() % size_),
          c = static_cast<int>(next() % size_);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw NotAGroup(label_ + ": associativity fails at (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")");
    }
  }

  // conjugacy classes by orbits, in order of smallest member
  class_of_.assign(size_, -1);
  for (int x = 0; x < size_; ++x) {
    if (class_of_[x] >= 0) continue;
    int c = static_cast<int>(reps_.size());
    reps_.push_back(x);
    long count = 0;
    for (int h = 0; h < size_; ++h) {
      int y = mul(mul(h, x), inv_[h]);
      if (class_of_[y] < 0) {
        class_of_[y] = c;
        ++count;
      } else if (class_of_[y] != c) {
        throw NotAGroup(label_ + ": conjugation orbits are inconsistent");
      }
    }
    sizes_.push_back(Integer(count));
  }
  zeta_.clear();
  for (size_t c = 0; c < reps_.size(); ++c) {
    if (Integer(size_) % sizes_[c] != 0)
      throw NotAGroup(label_ + ": class size does not divide group order");
    zeta_.push_back(Integer(size_) / sizes_[c]);
  }
  class_inv_.assign(reps_.size(), -1);
  for (size_t c = 0; c < reps_.size(); ++c) class_inv_[c] = class_of_[inv_[reps_[c]]];

  // exponent = lcm of element orders
  long ex = 1;
  for (int x = 0; x < size_; ++x) {
    long ord = 1;
    int y = x;
    while (y != identity_) {
      y = mul(y, x);
      ++ord;
    }
    ex = std::lcm(ex, ord);
  }
  exponent_ = ex;
  scalar_order_ = static_cast<unsigned>(ex);

  class_names_.clear();
  for (size_t c = 0; c < reps_.size(); ++c) class_names_.push_back(names_[reps_[c]]);
}

inline std::shared_ptr<GroupTable> GroupTable::from_table(
    const std::string& label, const std::vector<std::vector<int>>& mul,
    std::vector<std::string> element_names) {
  struct Concrete : GroupTable {};
  auto g = std::make_shared<Concrete>();
  g->label_ = label;
  g->size_ = static_cast<int>(mul.size());
  if (g->size_ == 0) throw NotAGroup(label + ": empty multiplication table");
  g->mul_.reserve(static_cast<size_t>(g->size_) * g->size_);
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != g->size_)
      throw NotAGroup(label + ": multiplication table is not square");
    for (int v : row) {
      if (v < 0 || v >= g->size_) throw NotAGroup(label + ": table entry out of range");
      g->mul_.push_back(v);
    }
  }
  if (!element_names.empty()) {
    if (static_cast<int>(element_names.size()) != g->size_)
      throw NotAGroup(label + ": element name count mismatch");
    g->names_ = std::move(element_names);
  }
  g->finish_from_mul();
  return g;
}

// ---------------------------------------------------------------------------
// Builtin groups. Character tables are shipped, never computed; they pass
// validate_character_table by construction (covered in the test suite).
// ---------------------------------------------------------------------------

inline std::shared_ptr<GroupTable> builtin_trivial() {
  auto g = GroupTable::from_table("trivial", {{0}}, {"e"});
  g->set_characters({{{Scalar(1)}}, {Integer(1)}});
  return g;
}

inline std::shared_ptr<GroupTable> builtin_cyclic(int r) {
  if (r < 1 || r > 6) throw Error("cyclic(r) supported for 1 <= r <= 6");
  std::vector<std::vector<int>> mul(r, std::vector<int>(r));
  std::vector<std::string> names;
  for (int i = 0; i < r; ++i) {
    names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
    for (int j = 0; j < r; ++j) mul[i][j] = (i + j) % r;
  }
  auto g = GroupTable::from_table("cyclic(" + std::to_string(r) + ")", mul, names);
  CharacterTable t;
  for (int j = 0; j < r; ++j) {
    std::vector<Scalar> row;
    for (int k = 0; k < r; ++k) row.push_back(cyclo_root(static_cast<unsigned>(r), j * k));
    t.rows.push_back(std::move(row));
    t.degrees.push_back(Integer(1));
  }
  g->set_characters(std::move(t));
  return g;
}

inline std::shared_ptr<GroupTable> builtin_klein4() {
  std::vector<std::vector<int>> mul(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) mul[i][j] = i ^ j;
  auto g = GroupTable::from_table("klein4", mul, {"e", "a", "b", "ab"});
  CharacterTable t;
  for (int s = 0; s < 2; ++s)
    for (int u = 0; u < 2; ++u) {
      std::vector<Scalar> row;
      for (int x = 0; x < 4; ++x) {
        int sign = ((s * (x & 1)) + (u * ((x >> 1) & 1))) % 2;
        row.push_back(Scalar(sign ? -1 : 1));
      }
      t.rows.push_back(std::move(row));
      t.degrees.push_back(Integer(1));
    }
  g->set_characters(std::move(t));
  return g;
}

inline std::shared_ptr<GroupTable> builtin_sym3() {
  // elements are the permutations of {0,1,2} in Lehmer-code order
  const std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                               {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<int>> mul(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> ab(3);
      for (int i = 0; i < 3; ++i) ab[i] = perms[a][perms[b][i]];
      mul[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
    }
  std::vector<std::string> names = {"e", "(23)", "(12)", "(123)", "(132)", "(13)"};
  auto g = GroupTable::from_table("sym(3)", mul, names);
  // classes, by smallest member: {e}, transpositions, 3-cycles
  CharacterTable t;
  t.rows = {{Scalar(1), Scalar(1), Scalar(1)},
            {Scalar(1), Scalar(-1), Scalar(1)},
            {Scalar(2), Scalar(0), Scalar(-1)}};
  t.degrees = {Integer(1), Integer(1), Integer(2)};
  g->set_characters(std::move(t));
  return g;
}

/// Builds a builtin group by name: trivial, cyclic(r) / cyclicr (r <= 6),
/// klein4, sym(3) / sym3.
inline std::shared_ptr<GroupTable> build_group(const std::string& name) {
  if (name == "trivial") return builtin_trivial();
  if (name == "klein4") return builtin_klein4();
  if (name == "sym(3)" || name == "sym3") return builtin_sym3();
  auto parse_cyclic = [&](const std::string& s) -> int {
    if (s.rfind("cyclic(", 0) == 0 && s.back() == ')')
      return std::stoi(s.substr(7, s.size() - 8));
    if (s.rfind("cyclic", 0) == 0 && s.size() > 6) return std::stoi(s.substr(6));
    return -1;
  };
  int r = -1;
  try {
    r = parse_cyclic(name);
  } catch (const std::exception&) {
    r = -1;
  }
  if (r >= 1 && r <= 6) return builtin_cyclic(r);
  throw NotAGroup("unknown builtin group: " + name);
}

// ---------------------------------------------------------------------------
// The bilinear form, convolution and character-table validation.
// ---------------------------------------------------------------------------

/// <f,g> = sum_c zeta_c^{-1} f(c) g(c^{-1}).
inline Scalar inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (!same_domain(*f.dom(), *g.dom()))
    throw GroupMismatch("inner_product: functions on different groups");
  const ClassDomain& d = *f.dom();
  Scalar s(0);
  for (int c = 0; c < d.num_classes(); ++c) {
    const Scalar& fv = f.at(c);
    if (fv.is_zero()) continue;
    const Scalar& gv = g.at(d.class_inv(c));
    if (gv.is_zero()) continue;
    s += fv * gv * Rational(Integer(1), d.zeta(c));
  }
  return s;
}

/// f*g(x) = sum_y f(x y^{-1}) g(y), evaluated at one representative per class.
inline ClassFunction convolve(const ClassFunction& f, const ClassFunction& g) {
  if (!same_domain(*f.dom(), *g.dom()))
    throw GroupMismatch("convolve: functions on different groups");
  auto G = std::dynamic_pointer_cast<const GroupTable>(f.dom());
  if (!G) G = std::dynamic_pointer_cast<const GroupTable>(g.dom());
  if (!G)
    throw GroupMismatch("convolve: domain carries no element-level group; build the group first");
  ClassFunction out(f.dom());
  for (int c = 0; c < G->num_classes(); ++c) {
    int x = G->class_rep(c);
    Scalar acc(0);
    for (int y = 0; y < G->size(); ++y) {
      const Scalar& gv = g.at(G->class_of(y));
      if (gv.is_zero()) continue;
      const Scalar& fv = f.at(G->class_of(G->mul(x, G->inverse(y))));
      if (fv.is_zero()) continue;
      acc += fv * gv;
    }
    out.set(c, std::move(acc));
  }
  return out;
}

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks row orthogonality, column orthogonality, integral degrees and the
/// degree sum; reports all violations instead of throwing.
inline ValidationReport validate_character_table(const GroupTable& G, const CharacterTable& T) {
  ValidationReport rep;
  const int k = G.num_classes();
  if (static_cast<int>(T.rows.size()) != k) {
    rep.violations.push_back("expected " + std::to_string(k) + " rows, found " +
                             std::to_string(T.rows.size()));
    return rep;
  }
  for (int i = 0; i < k; ++i)
    if (static_cast<int>(T.rows[i].size()) != k) {
      rep.violations.push_back("row " + std::to_string(i) + " has wrong length");
      return rep;
    }
  if (static_cast<int>(T.degrees.size()) != k)
    rep.violations.push_back("expected " + std::to_string(k) + " degrees");

  const int e = G.identity_class();
  Integer degsq = 0;
  for (int i = 0; i < k; ++i) {
    Scalar d = T.rows[i][e];
    bool good = d.is_rational() && d.as_rational().is_integer() && d.as_rational() > Rational(0);
    if (static_cast<int>(T.degrees.size()) == k && good &&
        Rational(T.degrees[i]) != d.as_rational())
      rep.violations.push_back("degree of row " + std::to_string(i) + " does not match its value at the identity");
    if (!good)
      rep.violations.push_back("row " + std::to_string(i) + " has non positive-integer degree " +
                               d.to_string());
    else
      degsq += d.as_rational().num() * d.as_rational().num();
  }
  if (degsq != Integer(G.size()))
    rep.violations.push_back("sum of squared degrees " + degsq.get_str() + " != |G| = " +
                             std::to_string(G.size()));

  // row orthogonality <gamma, gamma'> = delta
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Scalar s(0);
      for (int c = 0; c < k; ++c)
        s += T.rows[i][c] * T.rows[j][G.class_inv(c)] * Rational(Integer(1), G.zeta(c));
      if (s != Scalar(i == j ? 1 : 0))
        rep.violations.push_back("row orthogonality fails for rows (" + std::to_string(i) + "," +
                                 std::to_string(j) + "): got " + s.to_string());
    }

  // column orthogonality: sum_gamma gamma(c') gamma(c^{-1}) = delta_{c,c'} zeta_c
  for (int c = 0; c < k; ++c)
    for (int cp = 0; cp < k; ++cp) {
      Scalar s(0);
      for (int i = 0; i < k; ++i) s += T.rows[i][cp] * T.rows[i][G.class_inv(c)];
      Scalar want = (c == cp) ? Scalar(Rational(G.zeta(c))) : Scalar(0);
      if (s != want)
        rep.violations.push_back("column orthogonality fails for classes (" + std::to_string(c) +
                                 "," + std::to_string(cp) + "): got " + s.to_string());
    }
  return rep;
}

}  // namespace wrep
