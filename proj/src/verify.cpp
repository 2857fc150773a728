#include "gpea/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gpea/catalog.hpp"
#include "gpea/ideals.hpp"
#include "gpea/kite.hpp"
#include "gpea/rdp.hpp"
#include "gpea/unitization.hpp"

namespace gpea {

namespace {

constexpr std::size_t kSamples = 3;

class Tally {
 public:
  void declare(const std::string& theorem) { results_[theorem].theorem = theorem; }

  template <class F>
  void run(const std::string& theorem, const std::string& where, F&& check) {
    TheoremResult& r = results_[theorem];
    r.theorem = theorem;
    ++r.instances;
    try {
      const Verdict v = check();
      if (!v) record(r, where + ": " + v.detail);
    } catch (const GpeaError& e) {
      record(r, where + ": " + e.what());
    }
  }

  void observe(const std::string& name, bool hit) {
    Observation& o = observations_[name];
    o.name = name;
    ++o.instances;
    o.hits += hit ? 1 : 0;
  }

  VerifyReport report() const {
    VerifyReport out;
    for (const auto& [_, r] : results_) out.theorems.push_back(r);
    for (const auto& [_, o] : observations_) out.observations.push_back(o);
    return out;
  }

 private:
  static void record(TheoremResult& r, std::string detail) {
    ++r.failures;
    if (r.samples.size() < kSamples) r.samples.push_back(std::move(detail));
  }

  std::map<std::string, TheoremResult> results_;
  std::map<std::string, Observation> observations_;
};

std::string where(const NamedGpea& inst, const Permutation& gamma) {
  return inst.label + " gamma=" + format_elements(gamma);
}

ElementSubset base_subset(const UnitizationAlgebra& ua) {
  ElementSubset p(ua.algebra.size());
  for (Elem a = 0; a < static_cast<Elem>(ua.base_size()); ++a) p.insert(a);
  return p;
}

std::optional<UnitizationAlgebra> try_unitize(const Gpea& g, const Permutation& gamma) {
  try {
    return gamma_unitize(g, gamma);
  } catch (const GpeaError&) {
    return std::nullopt;
  }
}

const char* const kSuiteTags[] = {"sim_equivalence", "sim_zero_class",  "equivalences",
                                  "gamma_congruence_lemma", "gcr_forms", "gcr_condition",
                                  "gcr_riesz_ideal", "upward_corollary", "sim_extension"};

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(theorems.begin(), theorems.end(), [](const TheoremResult& r) { return r.failures == 0; });
}

const TheoremResult* VerifyReport::find(std::string_view theorem) const {
  for (const auto& r : theorems)
    if (r.theorem == theorem) return &r;
  return nullptr;
}

std::string VerifyReport::render() const {
  std::ostringstream out;
  for (const auto& r : theorems)
    for (const auto& s : r.samples) out << "FAIL " << r.theorem << ": " << s << '\n';
  for (const auto& r : theorems)
    out << "RESULT theorem=" << r.theorem << " instances=" << r.instances << " failures=" << r.failures << '\n';
  for (const auto& o : observations)
    out << "RESULT observation=" << o.name << " instances=" << o.instances << " hits=" << o.hits << '\n';
  return out.str();
}

std::vector<NamedGpea> verification_instances(const VerifyOptions& opts) {
  std::vector<NamedGpea> out;
  std::set<std::vector<Elem>> seen;
  auto add = [&](std::string label, Gpea g) {
    if (g.size() <= 8 && !seen.insert(canonical_form(g.table())).second) return;
    out.push_back({std::move(label), std::move(g)});
  };
  if (opts.include_catalog)
    for (const auto& name : catalog_names()) {
      try {
        add(name, builtin(name, opts.budget));
      } catch (const BudgetExceeded&) {
      }
    }
  for (std::size_t n = 1; n <= opts.max_size; ++n) {
    auto gs = enumerate_gpeas(n, {}, std::max<std::size_t>(opts.max_size, 6));
    for (std::size_t i = 0; i < gs.size(); ++i)
      add("enum(" + std::to_string(n) + ")#" + std::to_string(i), std::move(gs[i]));
  }
  return out;
}

VerifyReport verify_unitization(const std::vector<NamedGpea>& instances) {
  Tally t;
  for (const char* name : {"unitization_axioms", "unitizing_characterization", "p_normal_riesz", "restriction",
                           "recognition_roundtrip", "two_valued_state_kernel", "smallest_ideal"})
    t.declare(name);
  for (const auto& inst : instances) {
    const Gpea& g = inst.g;
    for (const auto& aut : find_morphisms(g, g, MorphismMode::kAuto))
      t.run("unitizing_characterization", where(inst, aut), [&] {
        const bool valid = validate_axioms(unitization_table(g, aut)).ok();
        if (valid == is_unitizing(g, aut)) return Verdict::pass();
        return Verdict::fail(std::string("table valid=") + (valid ? "true" : "false") + " but unitizing differs");
      });
    const bool upward = is_upward_directed(g);
    for (const auto& gamma : enumerate_unitizing(g)) {
      const std::string at = where(inst, gamma);
      std::optional<UnitizationAlgebra> ua;
      t.run("unitization_axioms", at, [&] {
        ua = gamma_unitize(g, gamma);
        return Verdict::pass();
      });
      if (!ua) continue;
      t.run("p_normal_riesz", at, [&] { return p_normal_riesz_check(*ua); });
      t.run("restriction", at, [&] { return restriction_check(*ua); });
      t.run("recognition_roundtrip", at, [&] {
        const RecognitionResult r = recognize_unitization(ua->algebra, base_subset(*ua));
        if (!r.value) return Verdict::fail("not recognized: " + r.diagnostics);
        if (r.value->gamma != gamma) return Verdict::fail("recovered gamma " + format_elements(r.value->gamma));
        if (r.value->iso != identity_permutation(ua->algebra.size()))
          return Verdict::fail("recovered isomorphism " + format_elements(r.value->iso));
        if (!r.value->iso_unique) return Verdict::fail("isomorphism not unique");
        return Verdict::pass();
      });
      t.run("two_valued_state_kernel", at, [&] {
        const ElementSubset p = base_subset(*ua);
        for (const auto& s : two_valued_states(ua->algebra))
          if (s.kernel == p) return Verdict::pass();
        return Verdict::fail("no two-valued state with kernel P");
      });
      if (upward)
        t.run("smallest_ideal", at, [&] {
          const SmallestIdealReport r = smallest_ideal_check(*ua);
          if (r.holds()) return Verdict::pass();
          return Verdict::fail(std::string("U has a smallest nontrivial normal Riesz ideal: ") +
                               (r.unit_ideal ? r.unit_ideal->to_string() : "none") +
                               ", P has one among gamma-ideals: " +
                               (r.base_ideal ? r.base_ideal->to_string() : "none"));
        });
    }
  }
  return t.report();
}

VerifyReport verify_congruence(const std::vector<NamedGpea>& instances) {
  Tally t;
  for (const char* tag : kSuiteTags) t.declare(tag);
  for (const char* name : {"extension_theorem", "quotient_unitization", "riesz_roundtrip", "fig1_gcr_witness"})
    t.declare(name);

  for (const auto& inst : instances) {
    const Gpea& g = inst.g;
    const auto normals = enumerate_ideals(g, IdealKind::kNormal);
    std::vector<Partition> congruences;
    for (auto& rel : enumerate_partitions(g.size()))
      if (classify_relation(g, rel).congruence()) congruences.push_back(std::move(rel));

    for (const auto& gamma : enumerate_unitizing(g)) {
      const std::string at = where(inst, gamma);
      const auto ua = try_unitize(g, gamma);
      if (!ua) continue;  // reported by the unitization scope
      for (const auto& ideal : normals) {
        const IdealFlags f = classify_subset(g, ideal, gamma);
        if (!f.r1 || !f.gamma_closed.value_or(false)) continue;
        std::optional<SuiteReport> report;
        std::string error;
        try {
          report = congruence_suite(*ua, ideal);
        } catch (const GpeaError& e) {
          error = e.what();
        }
        const std::string here = at + " I=" + ideal.to_string();
        for (const char* tag : kSuiteTags)
          t.run(tag, here, [&] {
            if (!report) return Verdict::fail(error);
            for (const auto& fail : report->failures)
              if (fail.theorem == tag) return Verdict::fail(fail.detail);
            return Verdict::pass();
          });
      }
      for (const auto& rel : congruences) {
        const std::string here = at + " rel=" + rel.to_string();
        t.run("extension_theorem", here, [&] { return extension_theorem(*ua, rel); });
        const CongruenceFlags f = classify_relation(g, rel, std::nullopt, gamma);
        if (f.gamma_congruence.value_or(false) && f.c4 && f.c5prime)
          t.run("quotient_unitization", here, [&] { return quotient_unitization(*ua, rel); });
        if (f.c4 && f.c5prime) t.run("riesz_roundtrip", here, [&] { return riesz_congruence_roundtrip(g, rel); });
      }
    }
  }

  // The designed negative witness: I = {0, r} in fig1 with the identity.
  t.run("fig1_gcr_witness", "fig1 gamma=id I={0,r}", [] {
    const Gpea p = fig1();
    const UnitizationAlgebra ua = gamma_unitize(p, identity_permutation(p.size()));
    const SuiteReport r = congruence_suite(ua, ElementSubset(p.size(), {0, 3}));
    const bool four = r.star_c3 && r.riesz_gamma_ideal && r.gamma_congruence && r.star_congruence;
    if (r.gcr == false && four && r.ok()) return Verdict::pass();
    return Verdict::fail(std::string("GCR=") + (r.gcr.value_or(true) ? "true" : "false") +
                         ", four conditions=" + (four ? "true" : "false"));
  });
  return t.report();
}

VerifyReport verify_rdp(const std::vector<NamedGpea>& instances) {
  Tally t;
  for (const char* name : {"rdp_implies_rdp0", "rdp_transfer", "fig1_rdp_example"}) t.declare(name);
  for (const auto& inst : instances) {
    const Gpea& g = inst.g;
    const bool total = classify(g).total;
    t.run("rdp_implies_rdp0", inst.label, [&] {
      rdp_profile(g);
      return Verdict::pass();
    });
    for (const auto& gamma : enumerate_unitizing(g)) {
      const std::string at = where(inst, gamma);
      if (total) {
        t.run("rdp_transfer", at, [&] {
          const TransferReport r = rdp_transfer(g, gamma);
          if (r.agree()) return Verdict::pass();
          return Verdict::fail("P: " + r.base.describe() + " U: " + r.unitization.describe());
        });
        continue;
      }
      std::optional<TransferReport> r;
      t.run("rdp_implies_rdp0", at, [&] {
        r = compare_rdp(g, gamma);
        return Verdict::pass();
      });
      if (r) t.observe("rdp_nontotal_divergence", !r->agree());
    }
  }
  t.run("fig1_rdp_example", "fig1 gamma=id", [] {
    const Gpea p = fig1();
    const TransferReport r = compare_rdp(p, identity_permutation(p.size()));
    if (r.base.rdp && !r.unitization.rdp) return Verdict::pass();
    return Verdict::fail("P: " + r.base.describe() + " U: " + r.unitization.describe());
  });
  return t.report();
}

VerifyReport verify_kite(const VerifyOptions& opts) {
  Tally t;
  for (const char* name : {"kite_kc_lemma", "kite_axioms", "kite_iso", "kite_connectivity"}) t.declare(name);
  for (const auto& base_name : opts.kite_bases) {
    const Gpea base = builtin(base_name, opts.budget);
    for (std::size_t k = 1; k <= opts.max_index; ++k) {
      Permutation lambda = identity_permutation(k);
      do {
        Permutation rho = identity_permutation(k);
        do {
          const KiteSpec spec{base, k, lambda, rho};
          const std::string at =
              base_name + " k=" + std::to_string(k) + " lambda=" + format_elements(lambda) + " rho=" + format_elements(rho);
          std::optional<KcVerdict> kc;
          t.run("kite_kc_lemma", at, [&] {
            kc = check_kc(spec, opts.budget);
            kite_gamma(spec, opts.budget);
            return Verdict::pass();
          });
          if (kc) t.observe("kite_kci_holds", kc->kci.ok);
          if (kc && kc->kci.ok) {
            t.run("kite_axioms", at, [&] {
              build_kite(spec, opts.budget);
              return Verdict::pass();
            });
            t.run("kite_iso", at, [&] {
              const KiteIsoReport r = kite_iso(spec, opts.budget);
              if (r.ok()) return Verdict::pass();
              return Verdict::fail(r.failures.front());
            });
          }
          t.run("kite_connectivity", at, [&] {
            const ConnectivityReport r = index_connectivity(spec, opts.budget);
            if (r.ok()) return Verdict::pass();
            return Verdict::fail(r.failures.front());
          });
        } while (std::next_permutation(rho.begin(), rho.end()));
      } while (std::next_permutation(lambda.begin(), lambda.end()));
    }
  }
  return t.report();
}

VerifyReport verify(std::string_view scope, const VerifyOptions& opts) {
  static const std::set<std::string_view> kScopes{"all", "unitization", "congruence", "kite", "rdp"};
  if (!kScopes.count(scope)) throw PreconditionError("unknown verify scope '" + std::string(scope) + "'");
  VerifyReport out;
  auto merge = [&](VerifyReport r) {
    for (auto& x : r.theorems) out.theorems.push_back(std::move(x));
    for (auto& x : r.observations) out.observations.push_back(std::move(x));
  };
  std::vector<NamedGpea> instances;
  if (scope != "kite") instances = verification_instances(opts);
  if (scope == "all" || scope == "unitization") merge(verify_unitization(instances));
  if (scope == "all" || scope == "congruence") merge(verify_congruence(instances));
  if (scope == "all" || scope == "rdp") merge(verify_rdp(instances));
  if (scope == "all" || scope == "kite") merge(verify_kite(opts));
  auto by_name = [](const auto& a, const auto& b) { return a.theorem < b.theorem; };
  std::sort(out.theorems.begin(), out.theorems.end(), by_name);
  std::sort(out.observations.begin(), out.observations.end(),
            [](const Observation& a, const Observation& b) { return a.name < b.name; });
  return out;
}

}  // namespace gpea
