#include "gpea/ideals.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace gpea {

// ---------------------------------------------------------------------------
// ElementSubset
// ---------------------------------------------------------------------------

ElementSubset::ElementSubset(std::size_t universe, std::initializer_list<Elem> members)
    : mask_(universe, 0) {
  for (Elem a : members) insert(a);
}

ElementSubset ElementSubset::from_members(std::size_t universe, const std::vector<Elem>& members) {
  ElementSubset s(universe);
  for (Elem a : members) {
    if (a < 0 || static_cast<std::size_t>(a) >= universe)
      throw std::out_of_range("subset member " + std::to_string(a) + " outside carrier");
    s.insert(a);
  }
  return s;
}

ElementSubset ElementSubset::full(std::size_t universe) {
  ElementSubset s(universe);
  std::fill(s.mask_.begin(), s.mask_.end(), 1);
  return s;
}

std::size_t ElementSubset::count() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), 1));
}

std::vector<Elem> ElementSubset::members() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) out.push_back(static_cast<Elem>(i));
  return out;
}

bool ElementSubset::subset_of(const ElementSubset& other) const {
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i] && !other.mask_[i]) return false;
  return true;
}

ElementSubset ElementSubset::intersect(const ElementSubset& other) const {
  ElementSubset out(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] && other.mask_[i];
  return out;
}

std::string ElementSubset::to_string() const { return "{" + format_elements(members()) + "}"; }

// ---------------------------------------------------------------------------
// Ideal flags
// ---------------------------------------------------------------------------

namespace {

bool order_ideal(const Gpea& g, const ElementSubset& s) {
  if (s.count() == 0) return false;
  const auto n = static_cast<Elem>(g.size());
  for (Elem a = 0; a < n; ++a) {
    if (!s.contains(a)) continue;
    for (Elem b = 0; b < n; ++b)
      if (g.leq(b, a) && !s.contains(b)) return false;
  }
  return true;
}

bool closed_under_sum(const Gpea& g, const ElementSubset& s) {
  const auto n = static_cast<Elem>(g.size());
  for (Elem a = 0; a < n; ++a) {
    if (!s.contains(a)) continue;
    for (Elem b = 0; b < n; ++b) {
      if (!s.contains(b)) continue;
      const Elem c = g.op(a, b);
      if (c != kUndefined && !s.contains(c)) return false;
    }
  }
  return true;
}

bool normality(const Gpea& g, const ElementSubset& s) {
  // a⊕c = c⊕b: for each defined a⊕c, b = c⟋(a⊕c).
  const auto n = static_cast<Elem>(g.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem c = 0; c < n; ++c) {
      const Elem sum = g.op(a, c);
      if (sum == kUndefined) continue;
      const Elem b = g.left_sub(c, sum);
      if (b != kUndefined && s.contains(a) != s.contains(b)) return false;
    }
  }
  return true;
}

bool sub_gpea(const Gpea& g, const ElementSubset& s) {
  if (s.count() == 0) return false;
  const auto n = static_cast<Elem>(g.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem c = g.op(a, b);
      if (c == kUndefined) continue;
      const int in = s.contains(a) + s.contains(b) + s.contains(c);
      if (in == 2) return false;
    }
  }
  return true;
}

bool r1_condition(const Gpea& g, const ElementSubset& ideal) {
  const auto n = static_cast<Elem>(g.size());
  const auto members = ideal.members();
  std::vector<std::vector<Elem>> below(g.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem j : members)
      if (g.leq(j, a)) below[a].push_back(j);
  std::vector<char> covered(g.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem s = g.op(a, b);
      if (s == kUndefined) continue;
      std::fill(covered.begin(), covered.end(), 0);
      for (Elem j : below[a]) {
        for (Elem k : below[b]) {
          const Elem jk = g.op(j, k);
          if (jk == kUndefined) continue;
          for (Elem i : members)
            if (g.leq(i, jk)) covered[i] = 1;
        }
      }
      for (Elem i : members)
        if (g.leq(i, s) && !covered[i]) return false;
    }
  }
  return true;
}

bool r2_condition(const Gpea& g, const ElementSubset& ideal) {
  const auto n = static_cast<Elem>(g.size());
  const auto members = ideal.members();
  // first[a][b]: some j ∈ I, j ≤ b, has a⊕(j⟋b) defined.
  // second[a][b]: some k ∈ I, k ≤ b, has (b⟍k)⊕a defined.
  std::vector<char> first(g.size() * g.size(), 0), second(g.size() * g.size(), 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem j : members) {
        if (!g.leq(j, b)) continue;
        if (g.defined(a, g.left_sub(j, b))) first[a * g.size() + b] = 1;
        if (g.defined(g.right_sub(b, j), a)) second[a * g.size() + b] = 1;
      }
    }
  }
  for (Elem i : members) {
    for (Elem a = 0; a < n; ++a) {
      if (!g.leq(i, a)) continue;
      const Elem a_minus_i = g.right_sub(a, i);
      const Elem i_under_a = g.left_sub(i, a);
      for (Elem b = 0; b < n; ++b) {
        if (g.defined(a_minus_i, b) && !first[a * g.size() + b]) return false;
        if (g.defined(b, i_under_a) && !second[a * g.size() + b]) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_ideal(const Gpea& g, const ElementSubset& s) {
  return order_ideal(g, s) && closed_under_sum(g, s);
}

bool is_normal_ideal(const Gpea& g, const ElementSubset& s) {
  return is_ideal(g, s) && normality(g, s);
}

bool is_gamma_closed(const ElementSubset& s, const Permutation& gamma) {
  for (std::size_t a = 0; a < gamma.size(); ++a)
    if (s.contains(static_cast<Elem>(a)) != s.contains(gamma[a])) return false;
  return true;
}

IdealFlags classify_subset(const Gpea& g, const ElementSubset& s,
                           const std::optional<Permutation>& gamma) {
  if (s.universe() != g.size()) throw PreconditionError("subset universe does not match carrier");
  if (gamma && !is_automorphism(g, *gamma))
    throw PreconditionError("gamma is not an automorphism");
  IdealFlags f;
  f.order_ideal = order_ideal(g, s);
  f.ideal = f.order_ideal && closed_under_sum(g, s);
  f.normal = f.ideal && normality(g, s);
  f.sub_gpea = sub_gpea(g, s);
  f.r1 = f.ideal && r1_condition(g, s);
  f.riesz = f.r1 && r2_condition(g, s);
  if (gamma) f.gamma_closed = f.ideal && is_gamma_closed(s, *gamma);
  return f;
}

Verdict normal_ideal_lemmas(const Gpea& g, const ElementSubset& s) {
  if (!is_normal_ideal(g, s)) throw PreconditionError("normal_ideal_lemmas needs a normal ideal");
  const auto n = static_cast<Elem>(g.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem sum = g.op(a, b);
      if (sum == kUndefined) continue;
      if (s.contains(b) != s.contains(g.right_sub(sum, a)))
        return Verdict::fail("b in I iff (a+b)\\a in I fails at a=" + std::to_string(a) +
                             " b=" + std::to_string(b));
      if (s.contains(a) != s.contains(g.left_sub(b, sum)))
        return Verdict::fail("a in I iff b/(a+b) in I fails at a=" + std::to_string(a) +
                             " b=" + std::to_string(b));
    }
  }
  if (g.has_unit()) {
    const PeaView v = pea_view(g);
    for (Elem a = 0; a < n; ++a) {
      const bool in = s.contains(a);
      if (in != s.contains(v.minus(v.minus(a))) || in != s.contains(v.tilde(v.tilde(a))))
        return Verdict::fail("a in I iff a-- in I iff a~~ in I fails at " + std::to_string(a));
      if (s.contains(v.minus(a)) != s.contains(v.tilde(a)))
        return Verdict::fail("a- in I iff a~ in I fails at " + std::to_string(a));
    }
  }
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Closure and enumeration
// ---------------------------------------------------------------------------

namespace {

class IdealCloser {
 public:
  IdealCloser(const Gpea& g, IdealKind kind) : g_(g), kind_(kind) {
    const auto n = static_cast<Elem>(g.size());
    below_.resize(g.size());
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (g.leq(b, a)) below_[a].push_back(b);
    if (kind == IdealKind::kNormal) {
      conjugates_.resize(g.size());
      for (Elem a = 0; a < n; ++a) {
        for (Elem c = 0; c < n; ++c) {
          const Elem sum = g.op(a, c);
          if (sum == kUndefined) continue;
          const Elem b = g.left_sub(c, sum);
          if (b == kUndefined || b == a) continue;
          conjugates_[a].push_back(b);
          conjugates_[b].push_back(a);
        }
      }
    }
  }

  ElementSubset close(ElementSubset s) const {
    std::vector<Elem> work;
    s.insert(0);
    for (Elem a : s.members()) work.push_back(a);
    std::vector<Elem> members = s.members();
    auto add = [&](Elem x) {
      if (x == kUndefined || s.contains(x)) return;
      s.insert(x);
      work.push_back(x);
      members.push_back(x);
    };
    while (!work.empty()) {
      const Elem x = work.back();
      work.pop_back();
      for (Elem b : below_[x]) add(b);
      if (kind_ == IdealKind::kNormal)
        for (Elem b : conjugates_[x]) add(b);
      for (std::size_t k = 0; k < members.size(); ++k) {
        const Elem y = members[k];
        add(g_.op(x, y));
        add(g_.op(y, x));
      }
    }
    return s;
  }

 private:
  const Gpea& g_;
  IdealKind kind_;
  std::vector<std::vector<Elem>> below_;
  std::vector<std::vector<Elem>> conjugates_;
};

}  // namespace

ElementSubset ideal_closure(const Gpea& g, const ElementSubset& seed, IdealKind kind) {
  return IdealCloser(g, kind).close(seed);
}

std::vector<ElementSubset> enumerate_ideals(const Gpea& g, IdealKind kind) {
  // Ganter's NextClosure over the closure system of (normal) ideals.
  const IdealCloser closer(g, kind);
  const auto n = static_cast<Elem>(g.size());
  std::vector<ElementSubset> out;
  ElementSubset current = closer.close(ElementSubset(g.size()));
  while (true) {
    out.push_back(current);
    bool advanced = false;
    for (Elem i = n - 1; i >= 0 && !advanced; --i) {
      if (current.contains(i)) continue;
      ElementSubset seed(g.size());
      for (Elem a = 0; a < i; ++a)
        if (current.contains(a)) seed.insert(a);
      seed.insert(i);
      ElementSubset next = closer.close(seed);
      bool same_prefix = true;
      for (Elem a = 0; a < i && same_prefix; ++a) same_prefix = next.contains(a) == current.contains(a);
      if (same_prefix) {
        current = std::move(next);
        advanced = true;
      }
    }
    if (!advanced) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSubset> normal_riesz_ideals(const Gpea& g, const std::optional<Permutation>& gamma) {
  if (gamma && !is_automorphism(g, *gamma)) throw PreconditionError("gamma is not an automorphism");
  std::vector<ElementSubset> out;
  for (auto& s : enumerate_ideals(g, IdealKind::kNormal)) {
    if (gamma && !is_gamma_closed(s, *gamma)) continue;
    if (r1_condition(g, s) && r2_condition(g, s)) out.push_back(std::move(s));
  }
  return out;
}

std::optional<ElementSubset> smallest_normal_riesz_ideal(const Gpea& g,
                                                         const std::optional<Permutation>& gamma,
                                                         bool exclude_improper) {
  std::vector<ElementSubset> family;
  for (auto& s : normal_riesz_ideals(g, gamma)) {
    if (s.is_zero_only()) continue;
    if (exclude_improper && s.count() == g.size()) continue;
    family.push_back(std::move(s));
  }
  for (const auto& candidate : family) {
    if (std::all_of(family.begin(), family.end(),
                    [&](const ElementSubset& other) { return candidate.subset_of(other); }))
      return candidate;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> block_of) {
  std::map<int, int> renumber;
  block_of_.resize(block_of.size());
  for (std::size_t i = 0; i < block_of.size(); ++i) {
    auto [it, inserted] = renumber.emplace(block_of[i], static_cast<int>(renumber.size()));
    block_of_[i] = it->second;
    if (inserted) blocks_.emplace_back();
    blocks_[static_cast<std::size_t>(it->second)].push_back(static_cast<Elem>(i));
  }
}

Partition Partition::identity(std::size_t n) {
  std::vector<int> b(n);
  std::iota(b.begin(), b.end(), 0);
  return Partition(std::move(b));
}

Partition Partition::single_block(std::size_t n) { return Partition(std::vector<int>(n, 0)); }

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<Elem>>& blocks) {
  std::vector<int> b(n, -1);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (Elem a : blocks[k]) {
      if (a < 0 || static_cast<std::size_t>(a) >= n || b[a] != -1)
        throw std::invalid_argument("blocks do not partition the carrier");
      b[a] = static_cast<int>(k);
    }
  }
  if (std::find(b.begin(), b.end(), -1) != b.end())
    throw std::invalid_argument("blocks do not cover the carrier");
  return Partition(std::move(b));
}

std::string Partition::to_string() const {
  std::string out;
  for (const auto& block : blocks_) out += "{" + format_elements(block) + "}";
  return out;
}

std::vector<Partition> enumerate_partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  // Restricted growth strings: rgs[0] = 0, rgs[i] ≤ 1 + max(rgs[0..i)).
  auto rec = [&](auto&& self, std::size_t i, int max_used) -> void {
    if (i == n) {
      out.emplace_back(rgs);
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(max_used, b));
    }
  };
  if (n == 0) return out;
  rec(rec, 1, 0);
  return out;
}

// ---------------------------------------------------------------------------
// ∼_I
// ---------------------------------------------------------------------------

namespace {

std::vector<char> relation_from_ideal(const Gpea& g, const ElementSubset& ideal, bool left_handed) {
  const std::size_t n = g.size();
  const auto en = static_cast<Elem>(n);
  // residues[a] marks {a⟍x : x ∈ I, x ≤ a} (or x⟋a).
  std::vector<std::vector<char>> residues(n, std::vector<char>(n, 0));
  for (Elem a = 0; a < en; ++a)
    for (Elem x : ideal.members())
      if (g.leq(x, a)) residues[a][left_handed ? g.left_sub(x, a) : g.right_sub(a, x)] = 1;
  std::vector<char> rel(n * n, 0);
  for (Elem a = 0; a < en; ++a)
    for (Elem b = 0; b < en; ++b)
      for (std::size_t r = 0; r < n; ++r)
        if (residues[a][r] && residues[b][r]) {
          rel[a * n + b] = 1;
          break;
        }
  return rel;
}

}  // namespace

Partition sim_from_ideal(const Gpea& g, const ElementSubset& ideal) {
  if (!is_ideal(g, ideal)) throw PreconditionError("sim_from_ideal needs an ideal");
  const std::size_t n = g.size();
  const auto en = static_cast<Elem>(n);
  const auto rel = relation_from_ideal(g, ideal, false);
  for (Elem a = 0; a < en; ++a)
    for (Elem b = 0; b < en; ++b) {
      if (!rel[a * n + b]) continue;
      for (Elem c = 0; c < en; ++c)
        if (rel[b * n + c] && !rel[a * n + c])
          throw NotEquivalence("NOT_EQUIVALENCE: " + std::to_string(a) + "~" + std::to_string(b) +
                               "~" + std::to_string(c) + " but not " + std::to_string(a) + "~" +
                               std::to_string(c));
    }
  if (is_normal_ideal(g, ideal) && relation_from_ideal(g, ideal, true) != rel)
    throw ContractViolation("left- and right-handed readings of ~_I differ for a normal ideal");
  std::vector<int> block(n, -1);
  int next = 0;
  for (Elem a = 0; a < en; ++a) {
    if (block[a] != -1) continue;
    for (Elem b = a; b < en; ++b)
      if (rel[a * n + b]) block[b] = next;
    ++next;
  }
  return Partition(std::move(block));
}

// ---------------------------------------------------------------------------
// Congruence conditions
// ---------------------------------------------------------------------------

bool satisfies_c2(const Gpea& g, const Partition& rel) {
  const std::size_t k = rel.block_count();
  std::vector<int> image(k * k, -1);
  const auto n = static_cast<Elem>(g.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem s = g.op(a, b);
      if (s == kUndefined) continue;
      int& slot = image[static_cast<std::size_t>(rel.block(a)) * k + static_cast<std::size_t>(rel.block(b))];
      if (slot == -1) slot = rel.block(s);
      else if (slot != rel.block(s)) return false;
    }
  return true;
}

bool satisfies_c3(const Gpea& g, const Partition& rel) {
  const std::size_t k = rel.block_count();
  const std::size_t n = g.size();
  const auto en = static_cast<Elem>(n);
  // row_hit[a][B]: a⊕b defined for some b ∈ B; col_hit[b][A]: a⊕b for some a ∈ A.
  std::vector<char> row_hit(n * k, 0), col_hit(n * k, 0);
  for (Elem a = 0; a < en; ++a)
    for (Elem b = 0; b < en; ++b)
      if (g.defined(a, b)) {
        row_hit[a * k + rel.block(b)] = 1;
        col_hit[b * k + rel.block(a)] = 1;
      }
  for (Elem a = 0; a < en; ++a)
    for (Elem b = 0; b < en; ++b) {
      if (!g.defined(a, b)) continue;
      for (Elem a1 : rel.blocks()[rel.block(a)])
        if (!row_hit[a1 * k + rel.block(b)]) return false;
      for (Elem b2 : rel.blocks()[rel.block(b)])
        if (!col_hit[b2 * k + rel.block(a)]) return false;
    }
  return true;
}

bool satisfies_c4(const Gpea& g, const Partition& rel) {
  const auto n = static_cast<Elem>(g.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b : rel.blocks()[rel.block(a)])
      for (Elem a1 = 0; a1 < n; ++a1)
        for (Elem b1 = 0; b1 < n; ++b1) {
          if (rel.related(a1, b1)) continue;
          const Elem r1 = g.op(a, a1), s1 = g.op(b, b1);
          if (r1 != kUndefined && s1 != kUndefined && rel.related(r1, s1)) return false;
          const Elem r2 = g.op(a1, a), s2 = g.op(b1, b);
          if (r2 != kUndefined && s2 != kUndefined && rel.related(r2, s2)) return false;
        }
  return true;
}

bool satisfies_c5(const Gpea& g, const Partition& rel) {
  const auto n = static_cast<Elem>(g.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem s = g.op(a, b);
      if (s != kUndefined && rel.related(s, 0) && !(rel.related(a, 0) && rel.related(b, 0)))
        return false;
    }
  return true;
}

bool satisfies_c5prime(const Gpea& g, const Partition& rel) {
  const std::size_t k = rel.block_count();
  const std::size_t n = g.size();
  const auto en = static_cast<Elem>(n);
  // splits[a] marks block pairs (B1, B2) with a = a1⊕a2, a1 ∈ B1, a2 ∈ B2.
  std::vector<std::vector<char>> splits(n, std::vector<char>(k * k, 0));
  for (Elem a1 = 0; a1 < en; ++a1)
    for (Elem a2 = 0; a2 < en; ++a2)
      if (const Elem a = g.op(a1, a2); a != kUndefined)
        splits[a][static_cast<std::size_t>(rel.block(a1)) * k + static_cast<std::size_t>(rel.block(a2))] = 1;
  for (Elem b = 0; b < en; ++b)
    for (Elem c = 0; c < en; ++c) {
      const Elem s = g.op(b, c);
      if (s == kUndefined) continue;
      const std::size_t key = static_cast<std::size_t>(rel.block(b)) * k + static_cast<std::size_t>(rel.block(c));
      for (Elem a : rel.blocks()[rel.block(s)])
        if (!splits[a][key]) return false;
    }
  return true;
}

bool is_gamma_congruence(const Partition& rel, const Permutation& gamma) {
  const auto n = static_cast<Elem>(rel.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (rel.related(a, b) != rel.related(gamma[a], gamma[b])) return false;
  return true;
}

namespace {

bool satisfies_cr(const Gpea& g, const Partition& rel) {
  const auto n = static_cast<Elem>(g.size());
  auto zero = [&](Elem x) { return x != kUndefined && rel.related(x, 0); };
  for (Elem a = 0; a < n; ++a)
    for (Elem b : rel.blocks()[rel.block(a)]) {
      bool lower = false, upper = false;
      for (Elem c = 0; c < n && !lower; ++c)
        lower = g.leq(c, a) && g.leq(c, b) && zero(g.right_sub(a, c)) && zero(g.right_sub(b, c));
      for (Elem d = 0; d < n && !upper; ++d)
        upper = g.leq(a, d) && g.leq(b, d) && zero(g.right_sub(d, a)) && zero(g.right_sub(d, b));
      if (!lower || !upper) return false;
    }
  return true;
}

bool satisfies_c4prime(const Gpea& g, const Partition& rel) {
  const PeaView v = pea_view(g);
  const auto n = static_cast<Elem>(g.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b : rel.blocks()[rel.block(a)])
      if (!rel.related(v.tilde(a), v.tilde(b)) || !rel.related(v.minus(a), v.minus(b))) return false;
  return true;
}

bool satisfies_gcr(const Gpea& g, const Partition& rel, const ElementSubset& ideal, bool right_handed) {
  const auto n = static_cast<Elem>(g.size());
  const auto members = ideal.members();
  for (Elem a = 0; a < n; ++a)
    for (Elem b : rel.blocks()[rel.block(a)]) {
      bool found = false;
      for (Elem i : members) {
        for (Elem j : members) {
          const Elem x = right_handed ? g.op(a, i) : g.op(i, a);
          const Elem y = right_handed ? g.op(b, j) : g.op(j, b);
          if (x != kUndefined && x == y) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

}  // namespace

std::string CongruenceFlags::describe() const {
  std::ostringstream out;
  auto opt = [](const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : "n/a"; };
  out << std::boolalpha << "C1=" << c1 << " C2=" << c2 << " C3=" << c3 << " C4=" << c4 << " C5=" << c5
      << " C4'=" << opt(c4prime) << " C5'=" << c5prime << " CR=" << cr << " GCR=" << opt(gcr)
      << " gamma=" << opt(gamma_congruence);
  return out.str();
}

CongruenceFlags classify_relation(const Gpea& g, const Partition& rel,
                                  const std::optional<ElementSubset>& ideal_for_gcr,
                                  const std::optional<Permutation>& gamma) {
  if (rel.size() != g.size()) throw PreconditionError("partition does not match carrier");
  CongruenceFlags f;
  f.c1 = true;
  f.c2 = satisfies_c2(g, rel);
  f.c3 = satisfies_c3(g, rel);
  f.c4 = satisfies_c4(g, rel);
  f.c5 = satisfies_c5(g, rel);
  if (g.has_unit()) f.c4prime = satisfies_c4prime(g, rel);
  f.c5prime = satisfies_c5prime(g, rel);
  f.cr = satisfies_cr(g, rel);
  if (ideal_for_gcr) {
    f.gcr = satisfies_gcr(g, rel, *ideal_for_gcr, false);
    f.gcr_right = satisfies_gcr(g, rel, *ideal_for_gcr, true);
  }
  if (gamma) f.gamma_congruence = is_gamma_congruence(rel, *gamma);
  return f;
}

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

RawTable quotient_table(const Gpea& g, const Partition& rel) {
  if (!satisfies_c2(g, rel)) throw PreconditionError("quotient table needs condition C2");
  RawTable t(rel.block_count(), false);
  const auto n = static_cast<Elem>(g.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (const Elem s = g.op(a, b); s != kUndefined) t.set(rel.block(a), rel.block(b), rel.block(s));
  for (std::size_t k = 0; k < rel.block_count(); ++k) {
    const Elem rep = rel.blocks()[k].front();
    t.set_name(static_cast<Elem>(k), "[" + g.name(rep) + "]");
  }
  return t;
}

Gpea quotient(const Gpea& g, const Partition& rel) {
  const CongruenceFlags f = classify_relation(g, rel);
  if (!f.congruence() || !f.c4 || !f.c5)
    throw PreconditionError("quotient needs a congruence satisfying C4 and C5: " + f.describe());
  RawTable t = quotient_table(g, rel);
  AxiomReport report = validate_axioms(t);
  if (!report.ok())
    throw ContractViolation("quotient by a c- and p-congruence is not a GPEA:\n" + report.describe());
  return Gpea::from(std::move(t));
}

bool classes_directed(const Gpea& g, const Partition& rel) {
  for (const auto& block : rel.blocks())
    for (Elem a : block)
      for (Elem b : block) {
        bool up = false, down = false;
        for (Elem c : block) {
          up = up || (g.leq(a, c) && g.leq(b, c));
          down = down || (g.leq(c, a) && g.leq(c, b));
        }
        if (!up || !down) return false;
      }
  return true;
}

Verdict riesz_congruence_roundtrip(const Gpea& g, const Partition& rel) {
  const CongruenceFlags f = classify_relation(g, rel);
  if (!f.congruence() || !f.c4 || !f.c5prime)
    throw PreconditionError("roundtrip needs a congruence satisfying C4 and C5'");
  const bool directed = classes_directed(g, rel);
  if (f.cr != directed)
    return Verdict::fail("CR=" + std::string(f.cr ? "true" : "false") +
                         " but classes directed=" + (directed ? "true" : "false") + " for " +
                         rel.to_string());
  if (!f.cr) return Verdict::pass();
  ElementSubset zero_class = ElementSubset::from_members(g.size(), rel.blocks()[0]);
  const IdealFlags flags = classify_subset(g, zero_class);
  if (!flags.normal || !flags.riesz)
    return Verdict::fail("zero class " + zero_class.to_string() + " is not a normal Riesz ideal");
  if (!(sim_from_ideal(g, zero_class) == rel))
    return Verdict::fail("~_I differs from the Riesz congruence " + rel.to_string());
  return Verdict::pass();
}

}  // namespace gpea
