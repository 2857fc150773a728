#include "gpea/kite.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#include "gpea/rdp.hpp"
#include "gpea/unitization.hpp"

namespace gpea {

std::size_t default_budget() {
  constexpr std::size_t kDefault = 4096;
  const char* env = std::getenv("GPEA_BUDGET");
  if (env == nullptr || *env == '\0') return kDefault;
  std::size_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0)
    throw PreconditionError(std::string("GPEA_BUDGET must be a positive integer, got '") + env + "'");
  return value;
}

TupleCodec::TupleCodec(std::size_t base_size, std::size_t index_size)
    : n_(base_size), k_(index_size), count_(1) {
  for (std::size_t i = 0; i < k_; ++i) count_ *= n_;
}

std::vector<Elem> TupleCodec::decode(Elem t) const {
  std::vector<Elem> coords(k_);
  auto rest = static_cast<std::size_t>(t);
  for (std::size_t i = k_; i-- > 0;) {
    coords[i] = static_cast<Elem>(rest % n_);
    rest /= n_;
  }
  return coords;
}

Elem TupleCodec::encode(std::span<const Elem> coords) const {
  std::size_t t = 0;
  for (Elem c : coords) t = t * n_ + static_cast<std::size_t>(c);
  return static_cast<Elem>(t);
}

namespace {

std::size_t checked_power(std::size_t n, std::size_t k, std::size_t budget) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    count *= n;
    if (count > budget)
      throw BudgetExceeded(std::to_string(n) + "^" + std::to_string(k) + " elements exceed the budget of " +
                           std::to_string(budget));
  }
  return count;
}

std::vector<std::vector<Elem>> all_tuples(const TupleCodec& codec) {
  std::vector<std::vector<Elem>> out(codec.count());
  for (std::size_t t = 0; t < codec.count(); ++t) out[t] = codec.decode(static_cast<Elem>(t));
  return out;
}

std::vector<Elem> permute_coords(std::span<const Elem> a, std::span<const Elem> sigma) {
  // result_i = a_{sigma(i)}
  std::vector<Elem> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(sigma[i])];
  return out;
}

std::string tuple_string(std::span<const Elem> a) { return "(" + format_elements(a) + ")"; }

}  // namespace

Gpea power_gpea(const Gpea& p, std::size_t k, std::size_t budget) {
  if (k == 0) throw PreconditionError("index set must be nonempty");
  checked_power(p.size(), k, budget);
  const TupleCodec codec(p.size(), k);
  const auto tuples = all_tuples(codec);
  const auto count = static_cast<Elem>(codec.count());
  RawTable t(codec.count());
  bool named = false;
  for (Elem a = 0; a < static_cast<Elem>(p.size()); ++a) named = named || p.table().has_custom_name(a);
  std::vector<Elem> sum(k);
  for (Elem x = 0; x < count; ++x) {
    if (named) {
      std::string label = "(";
      for (std::size_t i = 0; i < k; ++i) label += (i ? "," : "") + p.name(tuples[x][i]);
      t.set_name(x, label + ")");
    }
    for (Elem y = 0; y < count; ++y) {
      bool defined = true;
      for (std::size_t i = 0; i < k && defined; ++i) {
        sum[i] = p.op(tuples[x][i], tuples[y][i]);
        defined = sum[i] != kUndefined;
      }
      t.set(x, y, defined ? codec.encode(sum) : kUndefined);
    }
  }
  AxiomReport report = validate_axioms(t);
  if (!report.ok()) throw ContractViolation("power fails the axioms:\n" + report.describe());
  return Gpea::from(std::move(t));
}

void check_spec(const KiteSpec& spec) {
  if (spec.index_size == 0) throw PreconditionError("index set must be nonempty");
  if (!is_bijection(spec.lambda, spec.index_size) || spec.lambda.size() != spec.index_size)
    throw PreconditionError("lambda is not a bijection on the index set");
  if (!is_bijection(spec.rho, spec.index_size) || spec.rho.size() != spec.index_size)
    throw PreconditionError("rho is not a bijection on the index set");
}

KcVerdict check_kc(const KiteSpec& spec, std::size_t budget) {
  check_spec(spec);
  const Gpea& p = spec.base;
  checked_power(p.size(), spec.index_size, budget);
  const TupleCodec codec(p.size(), spec.index_size);
  const auto tuples = all_tuples(codec);
  KcVerdict v{Verdict::pass(), Verdict::pass()};
  auto witness = [&](const char* which, std::size_t a, std::size_t b, std::size_t i) {
    return Verdict::fail(std::string(which) + " fails at a=" + tuple_string(tuples[a]) +
                         " b=" + tuple_string(tuples[b]) + " i=" + std::to_string(i));
  };
  for (std::size_t a = 0; a < tuples.size(); ++a)
    for (std::size_t b = 0; b < tuples.size(); ++b)
      for (std::size_t i = 0; i < spec.index_size; ++i) {
        const Elem bi = tuples[b][i];
        const Elem al = tuples[a][spec.lambda[i]];
        const Elem ar = tuples[a][spec.rho[i]];
        if (v.kci && p.defined(ar, bi) != p.defined(bi, al)) v.kci = witness("KCI", a, b, i);
        if (v.kcii && p.defined(al, bi) != p.defined(bi, ar)) v.kcii = witness("KCII", a, b, i);
      }
  if (classify(p).total && (!v.kci || !v.kcii))
    throw ContractViolation("total base but KCI/KCII fail");
  return v;
}

namespace {

Permutation gamma_on(const KiteSpec& spec, const TupleCodec& codec) {
  const Permutation lambda_inv = inverse(spec.lambda);
  Permutation sigma(spec.index_size);
  for (std::size_t i = 0; i < spec.index_size; ++i) sigma[i] = spec.rho[lambda_inv[i]];
  Permutation gamma(codec.count());
  for (std::size_t t = 0; t < codec.count(); ++t)
    gamma[t] = codec.encode(permute_coords(codec.decode(static_cast<Elem>(t)), sigma));
  return gamma;
}

}  // namespace

Permutation kite_gamma(const KiteSpec& spec, std::size_t budget) {
  check_spec(spec);
  const Gpea power = power_gpea(spec.base, spec.index_size, budget);
  const TupleCodec codec(spec.base.size(), spec.index_size);
  Permutation gamma = gamma_on(spec, codec);
  if (!is_automorphism(power, gamma)) throw ContractViolation("coordinate permutation is not an automorphism");
  const bool kci = static_cast<bool>(check_kc(spec, budget).kci);
  if (is_unitizing(power, gamma) != kci)
    throw ContractViolation(std::string("KCI=") + (kci ? "true" : "false") +
                            " disagrees with gamma being unitizing");
  return gamma;
}

Gpea build_kite(const KiteSpec& spec, std::size_t budget) {
  check_spec(spec);
  if (Verdict kci = check_kc(spec, budget).kci; !kci)
    throw PreconditionError("kite needs KCI: " + kci.detail);
  const Gpea& p = spec.base;
  const std::size_t count = checked_power(p.size(), spec.index_size, budget);
  if (2 * count > budget)
    throw BudgetExceeded("kite carrier of " + std::to_string(2 * count) + " elements exceeds the budget of " +
                         std::to_string(budget));
  const Gpea power = power_gpea(p, spec.index_size, budget);
  const TupleCodec codec(p.size(), spec.index_size);
  const auto tuples = all_tuples(codec);
  const auto n = static_cast<Elem>(count);
  const std::size_t k = spec.index_size;
  RawTable t(2 * count);
  std::vector<Elem> out(k);
  for (Elem x = 0; x < n; ++x) {
    if (power.table().has_custom_name(x)) {
      t.set_name(x, power.name(x));
      t.set_name(x + n, power.name(x) + "~");
    } else {
      t.set_name(x + n, std::to_string(x) + "~");
    }
  }
  for (Elem x = 0; x < n; ++x) {
    const auto& a = tuples[x];
    for (Elem y = 0; y < n; ++y) {
      const auto& b = tuples[y];
      t.set(x, y, power.op(x, y));  // (K1)
      // (K2) (a) + (ηb) = η(b_i ⟍ a_{λi}) when a_{λi} ≤ b_i
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        const Elem al = a[spec.lambda[i]];
        ok = p.leq(al, b[i]);
        if (ok) out[i] = p.right_sub(b[i], al);
      }
      if (ok) t.set(x, y + n, codec.encode(out) + n);
      // (K3) (ηa) + (b) = η(b_{ρi} ⟋ a_i) when b_{ρi} ≤ a_i
      ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        const Elem br = b[spec.rho[i]];
        ok = p.leq(br, a[i]);
        if (ok) out[i] = p.left_sub(br, a[i]);
      }
      if (ok) t.set(x + n, y, codec.encode(out) + n);
    }
  }
  AxiomReport report = validate_axioms(t);
  if (!report.ok()) throw ContractViolation("kite fails the axioms:\n" + report.describe());
  Gpea kite = Gpea::from(std::move(t));
  if (kite.top() != n) throw ContractViolation("kite unit is not the eta-image of the zero tuple");
  return kite;
}

KiteIsoReport kite_iso(const KiteSpec& spec, std::size_t budget) {
  check_spec(spec);
  if (Verdict kci = check_kc(spec, budget).kci; !kci)
    throw PreconditionError("kite isomorphism needs KCI: " + kci.detail);
  const Gpea power = power_gpea(spec.base, spec.index_size, budget);
  const TupleCodec codec(spec.base.size(), spec.index_size);
  const Permutation gamma = kite_gamma(spec, budget);
  const UnitizationAlgebra ua = gamma_unitize(power, gamma);
  const Gpea kite = build_kite(spec, budget);
  const auto n = static_cast<Elem>(codec.count());
  const Permutation lambda_inv = inverse(spec.lambda);
  const Permutation rho_inv = inverse(spec.rho);

  KiteIsoReport r;
  r.phi.resize(2 * codec.count());
  for (Elem x = 0; x < n; ++x) {
    r.phi[x] = x;
    r.phi[x + n] = codec.encode(permute_coords(codec.decode(x), spec.lambda)) + n;
  }
  if (!is_isomorphism(ua.algebra, kite, r.phi) || r.phi[ua.unit] != kite.top())
    r.failures.push_back("phi is not a PEA-isomorphism onto the kite");

  if (kite.size() <= 64) {
    r.exhaustive_uniqueness = true;
    std::vector<Elem> pinned(kite.size(), kUndefined);
    for (Elem x = 0; x < n; ++x) pinned[x] = x;
    const auto all = find_morphisms(ua.algebra, kite, MorphismMode::kPeaMorphism, pinned, 2);
    if (all.size() != 1 || all.front() != r.phi)
      r.failures.push_back("identity-restricting PEA-morphisms: expected exactly phi, found " +
                           std::to_string(all.size()));
  } else {
    // (a) + ψ(ηa) = 1_K pins ψ(ηa) by cancellation.
    for (Elem x = 0; x < n; ++x) {
      Elem solution = kUndefined;
      int solutions = 0;
      for (Elem y = 0; y < static_cast<Elem>(kite.size()); ++y)
        if (kite.op(x, y) == kite.top()) {
          ++solutions;
          solution = y;
        }
      if (solutions != 1 || solution != r.phi[x + n])
        r.failures.push_back("complement of tuple " + std::to_string(x) + " does not force phi");
    }
  }

  const PeaView v = pea_view(kite);
  for (Elem x = 0; x < n && r.failures.size() < 8; ++x) {
    const auto a = codec.decode(x);
    const std::string at = " at " + tuple_string(a);
    if (v.minus(x) != codec.encode(permute_coords(a, spec.rho)) + n)
      r.failures.push_back("(LN) on P^I fails" + at);
    if (v.minus(x + n) != codec.encode(permute_coords(a, lambda_inv)))
      r.failures.push_back("(LN) on eta tuples fails" + at);
    if (v.tilde(x) != codec.encode(permute_coords(a, spec.lambda)) + n)
      r.failures.push_back("(RN) on P^I fails" + at);
    if (v.tilde(x + n) != codec.encode(permute_coords(a, rho_inv)))
      r.failures.push_back("(RN) on eta tuples fails" + at);
    if (v.minus(v.minus(x)) != gamma[x]) r.failures.push_back("a-- != gamma(a)" + at);
  }
  return r;
}

ConnectivityReport index_connectivity(const KiteSpec& spec, std::size_t budget) {
  check_spec(spec);
  const std::size_t k = spec.index_size;
  const Permutation lambda_inv = inverse(spec.lambda);
  std::vector<int> block(k, -1);
  int next = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (block[i] != -1) continue;
    // orbit of i under ρλ⁻¹
    for (std::size_t j = i; block[j] == -1; j = static_cast<std::size_t>(spec.rho[lambda_inv[j]]))
      block[j] = next;
    ++next;
  }
  ConnectivityReport r{Partition(block), std::nullopt, std::nullopt, {}};
  if (r.components.block_count() < 2 && !check_kc(spec, budget).kci) return r;

  const Gpea power = power_gpea(spec.base, k, budget);
  const TupleCodec codec(spec.base.size(), k);
  const Permutation gamma = gamma_on(spec, codec);
  const bool kci = static_cast<bool>(check_kc(spec, budget).kci);
  auto supported_on = [&](int component) {
    ElementSubset h(codec.count());
    for (std::size_t t = 0; t < codec.count(); ++t) {
      const auto a = codec.decode(static_cast<Elem>(t));
      bool inside = true;
      for (std::size_t i = 0; i < k && inside; ++i) inside = a[i] == 0 || r.components.block(static_cast<Elem>(i)) == component;
      if (inside) h.insert(static_cast<Elem>(t));
    }
    return h;
  };
  std::vector<ElementSubset> supports;
  for (std::size_t c = 0; c < r.components.block_count(); ++c) supports.push_back(supported_on(static_cast<int>(c)));
  for (std::size_t c = 0; c < supports.size(); ++c) {
    // Without KCI γ need not be unitizing; normality and invariance still make sense.
    const bool normal = is_normal_ideal(power, supports[c]);
    const bool closed = is_gamma_closed(supports[c], gamma);
    if (!normal || !closed)
      r.failures.push_back("tuples supported on component " + std::to_string(c) + " do not form a normal gamma-ideal");
    for (std::size_t d = c + 1; d < supports.size(); ++d)
      if (!supports[c].intersect(supports[d]).is_zero_only())
        r.failures.push_back("supports of components " + std::to_string(c) + " and " + std::to_string(d) +
                             " meet outside 0");
  }

  if (!kci || !is_upward_directed(spec.base) || 2 * codec.count() > budget) return r;
  const Gpea kite = build_kite(spec, budget);
  r.kite_rdp1 = rdp_profile(kite).rdp1;
  if (!*r.kite_rdp1) return r;
  r.kite_smallest = smallest_normal_riesz_ideal(kite).has_value();
  if (supports.size() >= 2) {
    for (std::size_t c = 0; c < supports.size(); ++c) {
      const IdealFlags in_power = classify_subset(power, supports[c], gamma);
      ElementSubset lifted(kite.size());
      for (Elem t : supports[c].members()) lifted.insert(t);
      const IdealFlags in_kite = classify_subset(kite, lifted);
      if (!in_power.riesz || !in_kite.normal || !in_kite.riesz)
        r.failures.push_back("support of component " + std::to_string(c) +
                             " is not a normal Riesz ideal in P^I and in the kite");
    }
    if (*r.kite_smallest)
      r.failures.push_back("kite has a smallest nontrivial normal Riesz ideal but I is disconnected");
  }
  return r;
}

}  // namespace gpea
