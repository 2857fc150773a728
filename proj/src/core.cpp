#include "gpea/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace gpea {

// ---------------------------------------------------------------------------
// RawTable
// ---------------------------------------------------------------------------

RawTable::RawTable(std::size_t size, bool neutral_zero)
    : size_(size), op_(size * size, kUndefined), names_(size) {
  if (size == 0) throw std::invalid_argument("carrier must be nonempty");
  for (std::size_t i = 0; i < size; ++i) names_[i] = std::to_string(i);
  if (neutral_zero) {
    for (std::size_t i = 0; i < size; ++i) {
      op_[i] = static_cast<Elem>(i);
      op_[i * size] = static_cast<Elem>(i);
    }
  }
}

void RawTable::check_range(Elem a) const {
  if (a < 0 || static_cast<std::size_t>(a) >= size_) {
    throw std::out_of_range("element index " + std::to_string(a) + " outside carrier of size " +
                            std::to_string(size_));
  }
}

void RawTable::set(Elem a, Elem b, Elem value) {
  check_range(a);
  check_range(b);
  if (value != kUndefined) check_range(value);
  op_[index(a, b)] = value;
}

void RawTable::set_name(Elem a, std::string token) {
  check_range(a);
  names_[static_cast<std::size_t>(a)] = std::move(token);
}

bool RawTable::has_custom_name(Elem a) const { return name(a) != std::to_string(a); }

// ---------------------------------------------------------------------------
// Axioms
// ---------------------------------------------------------------------------

bool AxiomReport::ok() const {
  return std::all_of(pass.begin(), pass.end(), [](bool p) { return p; });
}

std::string AxiomReport::describe() const {
  std::ostringstream out;
  for (int k = 0; k < kAxiomCount; ++k) {
    out << "GPEA" << (k + 1) << ' ' << (pass[k] ? "pass" : "FAIL");
    if (witness[k]) {
      const auto& w = *witness[k];
      out << " witness=(" << w[0] << ',' << w[1] << ',' << w[2] << ')';
    }
    out << '\n';
  }
  return out.str();
}

AxiomReport validate_axioms(const RawTable& t) {
  AxiomReport report;
  const auto n = static_cast<Elem>(t.size());
  auto fail = [&](int axiom, Elem x, Elem y, Elem z) {
    if (report.pass[axiom]) {
      report.pass[axiom] = false;
      report.witness[axiom] = std::array<Elem, 3>{x, y, z};
    }
  };

  // GPEA1: existence on both sides must agree, and then the values must.
  for (Elem a = 0; a < n && report.pass[0]; ++a) {
    for (Elem b = 0; b < n && report.pass[0]; ++b) {
      const Elem ab = t.at(a, b);
      for (Elem c = 0; c < n; ++c) {
        const Elem bc = t.at(b, c);
        const Elem lhs = ab == kUndefined ? kUndefined : t.at(ab, c);
        const Elem rhs = bc == kUndefined ? kUndefined : t.at(a, bc);
        if (lhs != rhs) {
          fail(0, a, b, c);
          break;
        }
      }
    }
  }

  // GPEA2
  for (Elem a = 0; a < n && report.pass[1]; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem s = t.at(a, b);
      if (s == kUndefined) continue;
      bool left = false;
      bool right = false;
      for (Elem x = 0; x < n; ++x) {
        left = left || t.at(x, a) == s;
        right = right || t.at(b, x) == s;
      }
      if (!left || !right) {
        fail(1, a, b, s);
        break;
      }
    }
  }

  // GPEA3, reported as (a, b, c) with a > b.
  for (Elem a = 0; a < n && report.pass[2]; ++a) {
    for (Elem b = 0; b < a && report.pass[2]; ++b) {
      for (Elem c = 0; c < n; ++c) {
        const Elem ac = t.at(a, c);
        const Elem ca = t.at(c, a);
        if ((ac != kUndefined && ac == t.at(b, c)) || (ca != kUndefined && ca == t.at(c, b))) {
          fail(2, a, b, c);
          break;
        }
      }
    }
  }

  // GPEA4
  for (Elem a = 0; a < n; ++a) {
    if (t.at(a, 0) != a || t.at(0, a) != a) {
      fail(3, a, 0, 0);
      break;
    }
  }

  // GPEA5
  for (Elem a = 0; a < n && report.pass[4]; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if ((a != 0 || b != 0) && t.at(a, b) == 0) {
        fail(4, a, b, 0);
        break;
      }
    }
  }
  return report;
}

AxiomError::AxiomError(AxiomReport report)
    : GpeaError("table is not a GPEA:\n" + report.describe()), report_(std::move(report)) {}

// ---------------------------------------------------------------------------
// Gpea
// ---------------------------------------------------------------------------

Gpea Gpea::from(RawTable table) {
  AxiomReport report = validate_axioms(table);
  if (!report.ok()) throw AxiomError(std::move(report));
  return Gpea(std::move(table));
}

Gpea::Gpea(RawTable table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  leq_.assign(n * n, 0);
  left_sub_.assign(n * n, kUndefined);
  right_sub_.assign(n * n, kUndefined);
  const auto en = static_cast<Elem>(n);
  for (Elem a = 0; a < en; ++a) {
    for (Elem c = 0; c < en; ++c) {
      const Elem b = table_.at(a, c);
      if (b == kUndefined) continue;
      leq_[idx(a, b)] = 1;
      left_sub_[idx(a, b)] = c;
      // a⊕c = b also reads as: b⟍c = a.
      right_sub_[idx(c, b)] = a;
    }
  }
  for (Elem t = 0; t < en; ++t) {
    bool top = true;
    for (Elem x = 0; x < en && top; ++x) top = leq(x, t);
    if (top) {
      top_ = t;
      break;
    }
  }
}

std::vector<Elem> Gpea::elements() const {
  std::vector<Elem> out(size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

// ---------------------------------------------------------------------------
// Order and subtraction
// ---------------------------------------------------------------------------

std::vector<std::pair<Elem, Elem>> OrderRelation::pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  const auto n = static_cast<Elem>(size);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (leq(a, b)) out.emplace_back(a, b);
  return out;
}

OrderRelation induced_order(const Gpea& g) {
  const std::size_t n = g.size();
  const auto en = static_cast<Elem>(n);
  OrderRelation order{n, std::vector<std::uint8_t>(n * n, 0)};
  std::vector<std::uint8_t> from_left(n * n, 0);
  for (Elem a = 0; a < en; ++a) {
    for (Elem c = 0; c < en; ++c) {
      if (const Elem b = g.op(a, c); b != kUndefined) order.matrix[a * n + b] = 1;
      if (const Elem b = g.op(c, a); b != kUndefined) from_left[a * n + b] = 1;
    }
  }
  if (order.matrix != from_left) {
    throw ContractViolation("right- and left-handed readings of the induced order differ");
  }
  for (Elem a = 0; a < en; ++a) {
    if (!order.leq(0, a) || !order.leq(a, a))
      throw ContractViolation("0 is not below " + std::to_string(a) + " or order not reflexive");
    for (Elem b = 0; b < en; ++b) {
      if (a != b && order.leq(a, b) && order.leq(b, a))
        throw ContractViolation("induced order not antisymmetric at " + std::to_string(a) + "," +
                                std::to_string(b));
      if (!order.leq(a, b)) continue;
      for (Elem c = 0; c < en; ++c) {
        if (order.leq(b, c) && !order.leq(a, c))
          throw ContractViolation("induced order not transitive");
      }
    }
  }
  return order;
}

std::optional<Subtraction> subtract(const Gpea& g, Elem a, Elem b) {
  if (!g.leq(a, b)) return std::nullopt;
  return Subtraction{g.left_sub(a, b), g.right_sub(b, a)};
}

bool is_upward_directed(const Gpea& g) {
  const auto n = static_cast<Elem>(g.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      bool bound = false;
      for (Elem c = 0; c < n && !bound; ++c) bound = g.leq(a, c) && g.leq(b, c);
      if (!bound) return false;
    }
  }
  return true;
}

StructureFlags classify(const Gpea& g) {
  StructureFlags f;
  f.total = true;
  f.weakly_commutative = true;
  f.commutative = true;
  const auto n = static_cast<Elem>(g.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = g.op(a, b);
      if (ab == kUndefined) {
        f.total = false;
        continue;
      }
      const Elem ba = g.op(b, a);
      if (ba == kUndefined) f.weakly_commutative = false;
      if (ba != ab) f.commutative = false;
    }
  }
  f.has_unit = g.has_unit();
  f.upward_directed = is_upward_directed(g);
  // 0 is a common lower bound of everything.
  f.downward_directed = true;
  for (Elem a = 0; a < n && f.downward_directed; ++a)
    f.downward_directed = g.leq(0, a);
  return f;
}

// ---------------------------------------------------------------------------
// PEA view
// ---------------------------------------------------------------------------

PeaView pea_view(const Gpea& g) {
  if (!g.has_unit()) throw PreconditionError("pea_view requires an algebra with a unit");
  PeaView view;
  view.unit = g.top();
  const std::size_t n = g.size();
  view.right_supp.resize(n);
  view.left_supp.resize(n);
  for (Elem a = 0; a < static_cast<Elem>(n); ++a) {
    view.right_supp[a] = g.left_sub(a, view.unit);
    view.left_supp[a] = g.right_sub(view.unit, a);
  }
  if (Verdict v = check_pea_identities(g, view); !v) throw ContractViolation(v.detail);
  return view;
}

namespace {

std::string at3(const char* what, Elem a, Elem b, Elem c) {
  std::ostringstream out;
  out << what << " fails at (" << a << ',' << b << ',' << c << ')';
  return out.str();
}

bool is_equal_defined(Elem x, Elem y) { return x != kUndefined && x == y; }

}  // namespace

Verdict check_pea_identities(const Gpea& g, const PeaView& v) {
  const auto n = static_cast<Elem>(g.size());
  const Elem one = v.unit;
  if (v.tilde(0) != one || v.minus(0) != one || v.tilde(one) != 0 || v.minus(one) != 0)
    return Verdict::fail("0 and 1 are not mutual supplements");
  for (Elem a = 0; a < n; ++a) {
    if (v.tilde(a) == kUndefined || v.minus(a) == kUndefined)
      return Verdict::fail(at3("existence of supplements", a, 0, 0));
    if (g.op(a, v.tilde(a)) != one || g.op(v.minus(a), a) != one)
      return Verdict::fail(at3("a+a~ = a-+a = 1", a, 0, 0));
    if (v.minus(v.tilde(a)) != a || v.tilde(v.minus(a)) != a)
      return Verdict::fail(at3("a~- = a-~ = a", a, 0, 0));
  }
  auto mm = [&](Elem x) { return v.minus(v.minus(x)); };
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const bool le = g.leq(a, b);
      if (le != g.leq(v.tilde(b), v.tilde(a)) || le != g.leq(v.minus(b), v.minus(a)))
        return Verdict::fail(at3("supplements reverse order", a, b, 0));
      const bool exists = g.defined(a, b);
      if (exists != g.leq(b, v.tilde(a)) || exists != g.leq(a, v.minus(b)))
        return Verdict::fail(at3("a+b exists iff b <= a~ iff a <= b-", a, b, 0));

      // Subtraction formulas.
      if (le) {
        const Elem c1 = g.op(a, v.tilde(b));
        if (c1 == kUndefined || g.right_sub(b, a) != v.minus(c1))
          return Verdict::fail(at3("b\\a = (a+b~)-", a, b, 0));
        const Elem c2 = g.op(v.minus(b), a);
        if (c2 == kUndefined || g.left_sub(a, b) != v.tilde(c2))
          return Verdict::fail(at3("a/b = (b-+a)~", a, b, 0));
      }
      if (g.leq(mm(b), a)) {
        const Elem c = g.op(v.tilde(a), b);
        if (c == kUndefined || g.left_sub(mm(b), a) != v.minus(c))
          return Verdict::fail(at3("b--/a = (a~+b)-", a, b, 0));
      }
      if (g.leq(b, v.tilde(a))) {
        if (!g.leq(a, v.minus(b))) return Verdict::fail(at3("b <= a~ implies a <= b-", a, b, 0));
        const Elem c1 = g.op(mm(b), a);
        if (c1 == kUndefined || g.right_sub(v.tilde(a), b) != v.tilde(c1))
          return Verdict::fail(at3("a~\\b = (b--+a)~", a, b, 0));
        const Elem c2 = g.op(a, b);
        if (c2 == kUndefined || g.right_sub(v.minus(b), a) != v.minus(c2))
          return Verdict::fail(at3("b-\\a = (a+b)-", a, b, 0));
      }

      for (Elem c = 0; c < n; ++c) {
        // a+b = c iff b- = c- + a
        if (is_equal_defined(g.op(a, b), c) != is_equal_defined(g.op(v.minus(c), a), v.minus(b)))
          return Verdict::fail(at3("a+b=c iff b-=c-+a", a, b, c));
        // a + b~ = c~ iff c + a = b
        if (is_equal_defined(g.op(a, v.tilde(b)), v.tilde(c)) != is_equal_defined(g.op(c, a), b))
          return Verdict::fail(at3("a+b~=c~ iff c+a=b", a, b, c));
        // a~ + b = c~ iff b- = c + a~ iff b-- + c = a
        const bool first = is_equal_defined(g.op(v.tilde(a), b), v.tilde(c));
        const bool second = is_equal_defined(g.op(c, v.tilde(a)), v.minus(b));
        const bool third = is_equal_defined(g.op(mm(b), c), a);
        if (first != second || second != third)
          return Verdict::fail(at3("a~+b=c~ iff b-=c+a~ iff b--+c=a", a, b, c));
      }
    }
  }
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(std::span<const Elem> outer, std::span<const Elem> inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[static_cast<std::size_t>(inner[i])];
  return out;
}

Permutation inverse(std::span<const Elem> perm) {
  Permutation out(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[static_cast<std::size_t>(perm[i])] = static_cast<Elem>(i);
  return out;
}

bool is_bijection(std::span<const Elem> perm, std::size_t n) {
  if (perm.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (Elem x : perm) {
    if (x < 0 || static_cast<std::size_t>(x) >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool is_morphism(const Gpea& p, const Gpea& q, std::span<const Elem> map) {
  if (map.size() != p.size()) return false;
  for (Elem x : map)
    if (x < 0 || static_cast<std::size_t>(x) >= q.size()) return false;
  const auto n = static_cast<Elem>(p.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem s = p.op(a, b);
      if (s == kUndefined) continue;
      if (q.op(map[a], map[b]) != map[s]) return false;
    }
  }
  return true;
}

bool is_isomorphism(const Gpea& p, const Gpea& q, std::span<const Elem> map) {
  if (p.size() != q.size() || !is_bijection(map, q.size()) || !is_morphism(p, q, map)) return false;
  const auto n = static_cast<Elem>(p.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (q.defined(map[a], map[b]) && !p.defined(a, b)) return false;
  return true;
}

bool is_automorphism(const Gpea& g, std::span<const Elem> map) { return is_isomorphism(g, g, map); }

namespace {

using Signature = std::tuple<int, int, int, int>;

std::vector<Signature> signatures(const Gpea& g) {
  const auto n = static_cast<Elem>(g.size());
  std::vector<Signature> out(g.size());
  for (Elem a = 0; a < n; ++a) {
    int row = 0, col = 0, below = 0, above = 0;
    for (Elem b = 0; b < n; ++b) {
      row += g.defined(a, b);
      col += g.defined(b, a);
      below += g.leq(b, a);
      above += g.leq(a, b);
    }
    out[a] = {row, col, below, above};
  }
  return out;
}

class MorphismSearch {
 public:
  MorphismSearch(const Gpea& p, const Gpea& q, MorphismMode mode, std::span<const Elem> prescribed,
                 std::size_t limit)
      : p_(p), q_(q), limit_(limit), n_(static_cast<Elem>(p.size())), image_(p.size(), kUndefined) {
    bijective_ = mode == MorphismMode::kIso || mode == MorphismMode::kAuto ||
                 mode == MorphismMode::kPeaIso;
    const bool unital = mode == MorphismMode::kPeaIso || mode == MorphismMode::kPeaMorphism;
    candidates_.resize(p.size());
    if (bijective_ && p.size() != q.size()) {
      impossible_ = true;
      return;
    }
    if (unital && (!p.has_unit() || !q.has_unit()))
      throw PreconditionError("PEA morphism search requires units on both sides");
    const auto sp = bijective_ ? signatures(p) : std::vector<Signature>{};
    const auto sq = bijective_ ? signatures(q) : std::vector<Signature>{};
    const auto m = static_cast<Elem>(q.size());
    for (Elem x = 0; x < n_; ++x) {
      Elem pinned = x < static_cast<Elem>(prescribed.size()) ? prescribed[x] : kUndefined;
      if (x == 0) {
        // φ0 = φ0⊕φ0 forces φ0 = 0 by cancellation.
        if (pinned != kUndefined && pinned != 0) impossible_ = true;
        pinned = 0;
      }
      if (unital && x == p.top()) {
        if (pinned != kUndefined && pinned != q.top()) impossible_ = true;
        pinned = q.top();
      }
      for (Elem t = 0; t < m; ++t) {
        if (pinned != kUndefined && t != pinned) continue;
        if (bijective_ && sp[x] != sq[t]) continue;
        candidates_[x].push_back(t);
      }
      if (candidates_[x].empty()) impossible_ = true;
    }
    preimages_.resize(p.size());
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        if (const Elem s = p.op(a, b); s != kUndefined) preimages_[s].emplace_back(a, b);
    used_.assign(q.size(), 0);
  }

  std::vector<Permutation> run() {
    if (!impossible_) extend(0);
    return std::move(found_);
  }

 private:
  bool pair_ok(Elem a, Elem b) const {
    const Elem s = p_.op(a, b);
    const Elem t = q_.op(image_[a], image_[b]);
    if (s != kUndefined) {
      if (t == kUndefined) return false;
      if (image_[s] != kUndefined && image_[s] != t) return false;
    } else if (bijective_ && t != kUndefined) {
      return false;
    }
    return true;
  }

  bool consistent(Elem x) const {
    for (Elem y = 0; y <= x; ++y) {
      if (!pair_ok(x, y) || !pair_ok(y, x)) return false;
    }
    for (const auto& [a, b] : preimages_[x]) {
      if (a > x || b > x) continue;
      if (q_.op(image_[a], image_[b]) != image_[x]) return false;
    }
    return true;
  }

  void extend(Elem x) {
    if (found_.size() >= limit_) return;
    if (x == n_) {
      found_.push_back(image_);
      return;
    }
    for (Elem t : candidates_[x]) {
      if (bijective_ && used_[t]) continue;
      image_[x] = t;
      if (bijective_) used_[t] = 1;
      if (consistent(x)) extend(x + 1);
      if (bijective_) used_[t] = 0;
      image_[x] = kUndefined;
      if (found_.size() >= limit_) return;
    }
  }

  const Gpea& p_;
  const Gpea& q_;
  std::size_t limit_;
  Elem n_;
  bool bijective_ = false;
  bool impossible_ = false;
  std::vector<std::vector<Elem>> candidates_;
  std::vector<std::vector<std::pair<Elem, Elem>>> preimages_;
  Permutation image_;
  std::vector<char> used_;
  std::vector<Permutation> found_;
};

}  // namespace

std::vector<Permutation> find_morphisms(const Gpea& p, const Gpea& q, MorphismMode mode,
                                        std::span<const Elem> prescribed, std::size_t limit) {
  if (mode == MorphismMode::kAuto && !(p == q))
    throw PreconditionError("automorphism search needs the same algebra on both sides");
  return MorphismSearch(p, q, mode, prescribed, limit).run();
}

std::string format_elements(std::span<const Elem> elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elems[i]);
  }
  return out;
}

}  // namespace gpea
