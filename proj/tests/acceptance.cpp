// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "gpea/catalog.hpp"
#include "gpea/cli.hpp"
#include "gpea/rdp.hpp"
#include "gpea/unitization.hpp"
#include "gpea/verify.hpp"

using namespace gpea;

namespace {

// Wall-clock limits in seconds.
constexpr double kFig1Limit = 1.0;
constexpr double kUnitizationLimit = 30.0;
constexpr double kKiteLimit = 60.0;
constexpr double kNoLimit = 1e9;

constexpr std::size_t kInstanceSize = 4;
constexpr long kWindowBound = 4;

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= limit) {
    o.ok = false;
    o.detail += " (over the " + std::to_string(limit) + " s limit)";
  }
  failures += o.ok ? 0 : 1;
  std::printf("[%s] %d %s: %s (%.3f s)\n", o.ok ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
  std::fflush(stdout);
}

// Zero failures and at least one instance for every listed theorem.
Outcome clean(const VerifyReport& r, std::initializer_list<const char*> theorems) {
  Outcome o{true, ""};
  for (const char* name : theorems) {
    const TheoremResult* t = r.find(name);
    if (t == nullptr) {
      o.ok = false;
      o.detail += std::string(name) + "=missing ";
      continue;
    }
    o.detail += name + ("=" + std::to_string(t->failures) + "/" + std::to_string(t->instances)) + " ";
    if (t->failures != 0 || t->instances == 0) o.ok = false;
    if (!t->samples.empty() && t->failures != 0) o.detail += "[" + t->samples.front() + "] ";
  }
  return o;
}

}  // namespace

int main() {
  VerifyOptions opts;
  opts.max_size = kInstanceSize;
  const std::vector<NamedGpea> instances = verification_instances(opts);

  criterion(1, "fig1 suite", kFig1Limit, [] {
    std::ostringstream out, err;
    const int code = cli::run({"check", "fig1"}, out, err);
    const bool checked = code == cli::kPass && out.str().find("RESULT axioms=true") != std::string::npos;
    const Gpea p = fig1();
    const bool base = rdp_profile(p).rdp;
    const bool unit = rdp_profile(gamma_unitize(p, identity_permutation(p.size())).algebra).rdp;
    return Outcome{checked && base && !unit, std::string("check=") + (checked ? "pass" : "fail") +
                                                 " rdp(P)=" + (base ? "true" : "false") +
                                                 " rdp(U)=" + (unit ? "true" : "false")};
  });

  VerifyReport unitization;
  criterion(2, "unitization construction", kUnitizationLimit, [&] {
    unitization = verify_unitization(instances);
    return clean(unitization, {"unitization_axioms"});
  });

  criterion(3, "P normal Riesz iff upward directed", kNoLimit,
            [&] { return clean(unitization, {"p_normal_riesz"}); });

  criterion(4, "congruence suite", kNoLimit, [&] {
    return clean(verify_congruence(instances),
                 {"equivalences", "extension_theorem", "gcr_condition", "gcr_riesz_ideal", "upward_corollary",
                  "quotient_unitization", "fig1_gcr_witness"});
  });

  criterion(5, "RDP transfer", kNoLimit, [&] { return clean(verify_rdp(instances), {"rdp_transfer"}); });

  criterion(6, "kite suite", kKiteLimit, [] {
    VerifyOptions k;
    k.kite_bases = {"chain(1)", "chain(2)"};
    k.max_index = 3;
    return clean(verify_kite(k), {"kite_kc_lemma", "kite_axioms", "kite_iso"});
  });

  criterion(7, "enumerator self-consistency", kNoLimit, [] {
    Outcome o{true, ""};
    for (std::size_t n = 1; n <= 3; ++n) {
      const std::size_t a = enumerate_gpeas(n).size();
      const std::size_t b = count_gpeas_bruteforce(n);
      o.detail += "n=" + std::to_string(n) + ":" + std::to_string(a) + "/" + std::to_string(b) + " ";
      o.ok = o.ok && a == b;
    }
    o.ok = o.ok && enumerate_gpeas(2).size() == 1;
    return o;
  });

  criterion(8, "smallest-ideal theorem", kNoLimit, [&] { return clean(unitization, {"smallest_ideal"}); });

  criterion(9, "window spot-checks", kNoLimit, [] {
    Outcome o{true, ""};
    std::size_t checks = 0;
    for (long n = 1; n <= kWindowBound; ++n) {
      const WindowSpotCheck w = twisted_window(n);
      checks += w.checks;
      if (!w.violations.empty()) {
        o.ok = false;
        o.detail += w.violations.front() + " ";
      }
    }
    o.detail += std::to_string(checks) + " checks";
    return o;
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
