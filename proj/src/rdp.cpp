#include "gpea/rdp.hpp"

#include <sstream>

#include "gpea/unitization.hpp"

namespace gpea {

std::string RdpProfile::describe() const {
  std::ostringstream out;
  out << std::boolalpha << "rdp0=" << rdp0 << " rdp=" << rdp << " rdp1=" << rdp1 << " rdp2=" << rdp2;
  auto quad = [&](const char* key, const std::optional<std::array<Elem, 4>>& w) {
    if (w) out << ' ' << key << "=(" << (*w)[0] << ',' << (*w)[1] << ',' << (*w)[2] << ',' << (*w)[3] << ')';
  };
  if (rdp0_witness)
    out << " rdp0_witness=(" << (*rdp0_witness)[0] << ',' << (*rdp0_witness)[1] << ','
        << (*rdp0_witness)[2] << ')';
  quad("rdp_witness", rdp_witness);
  quad("rdp1_witness", rdp1_witness);
  quad("rdp2_witness", rdp2_witness);
  return out.str();
}

std::vector<Decomposition> decompositions(const Gpea& g, Elem a, Elem b, Elem c, Elem d) {
  std::vector<Decomposition> out;
  const Elem s = g.op(a, b);
  if (s == kUndefined || s != g.op(c, d)) return out;
  const auto n = static_cast<Elem>(g.size());
  for (Elem e11 = 0; e11 < n; ++e11) {
    if (!g.leq(e11, a) || !g.leq(e11, c)) continue;
    const Elem e12 = g.left_sub(e11, a);
    const Elem e21 = g.left_sub(e11, c);
    if (!g.leq(e21, b)) continue;
    const Elem e22 = g.left_sub(e21, b);
    if (g.op(e12, e22) == d) out.push_back({e11, e12, e21, e22});
  }
  return out;
}

RdpProfile rdp_profile(const Gpea& g) {
  const std::size_t n = g.size();
  const auto en = static_cast<Elem>(n);
  // commute_below[x][y]: every f ≤ x and g ≤ y have f⊕g = g⊕f, both defined.
  std::vector<char> commute(n * n, 0);
  for (Elem f = 0; f < en; ++f)
    for (Elem h = 0; h < en; ++h) {
      const Elem fh = g.op(f, h);
      commute[f * n + h] = fh != kUndefined && fh == g.op(h, f);
    }
  std::vector<char> commute_below(n * n, 1);
  std::vector<char> meet_zero(n * n, 1);
  for (Elem x = 0; x < en; ++x)
    for (Elem y = 0; y < en; ++y) {
      for (Elem f = 0; f < en && commute_below[x * n + y]; ++f) {
        if (!g.leq(f, x)) continue;
        for (Elem h = 0; h < en; ++h)
          if (g.leq(h, y) && !commute[f * n + h]) {
            commute_below[x * n + y] = 0;
            break;
          }
      }
      for (Elem z = 1; z < en; ++z)
        if (g.leq(z, x) && g.leq(z, y)) {
          meet_zero[x * n + y] = 0;
          break;
        }
    }

  RdpProfile p;
  for (Elem a = 0; a < en; ++a)
    for (Elem b = 0; b < en; ++b) {
      const Elem s = g.op(a, b);
      if (s == kUndefined) continue;
      for (Elem c = 0; c < en; ++c) {
        if (!g.leq(c, s)) continue;
        const Elem d = g.left_sub(c, s);
        bool any = false, any1 = false, any2 = false;
        for (const auto& e : decompositions(g, a, b, c, d)) {
          any = true;
          any1 = any1 || commute_below[e.e12 * n + e.e21];
          any2 = any2 || meet_zero[e.e12 * n + e.e21];
        }
        const std::array<Elem, 4> w{a, b, c, d};
        if (!any && p.rdp) {
          p.rdp = false;
          p.rdp_witness = w;
        }
        if (!any1 && p.rdp1) {
          p.rdp1 = false;
          p.rdp1_witness = w;
        }
        if (!any2 && p.rdp2) {
          p.rdp2 = false;
          p.rdp2_witness = w;
        }
      }
    }

  // RDP0: a ≤ b⊕c gives a = b1⊕c1 with b1 ≤ b, c1 ≤ c.
  for (Elem a = 0; a < en && p.rdp0; ++a)
    for (Elem b = 0; b < en && p.rdp0; ++b)
      for (Elem c = 0; c < en; ++c) {
        const Elem s = g.op(b, c);
        if (s == kUndefined || !g.leq(a, s)) continue;
        bool found = false;
        for (Elem b1 = 0; b1 < en && !found; ++b1) {
          if (!g.leq(b1, b) || !g.leq(b1, a)) continue;
          const Elem c1 = g.left_sub(b1, a);
          found = g.leq(c1, c);
        }
        if (!found) {
          p.rdp0 = false;
          p.rdp0_witness = std::array<Elem, 3>{a, b, c};
          break;
        }
      }

  if (p.rdp && !p.rdp0)
    throw ContractViolation("RDP holds but RDP0 fails: " + p.describe());
  return p;
}

TransferReport compare_rdp(const Gpea& g, const Permutation& gamma) {
  const UnitizationAlgebra ua = gamma_unitize(g, gamma);
  return {rdp_profile(g), rdp_profile(ua.algebra)};
}

TransferReport rdp_transfer(const Gpea& g, const Permutation& gamma) {
  if (!classify(g).total)
    throw PreconditionError("RDP transfer applies to total GPEAs only");
  return compare_rdp(g, gamma);
}

}  // namespace gpea
