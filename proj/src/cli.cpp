#include "gpea/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "gpea/catalog.hpp"
#include "gpea/ideals.hpp"
#include "gpea/kite.hpp"
#include "gpea/rdp.hpp"
#include "gpea/unitization.hpp"
#include "gpea/verify.hpp"

namespace gpea::cli {

namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

std::vector<Elem> parse_list(const std::string& text, const char* what) {
  std::vector<Elem> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    Elem v = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || v < 0)
      throw PreconditionError(std::string("bad ") + what + " '" + text + "': expected comma-separated indices");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

Permutation parse_perm(const std::string& text, std::size_t n, const char* what) {
  Permutation p = parse_list(text, what);
  if (!is_bijection(p, n))
    throw PreconditionError(std::string(what) + " " + text + " is not a permutation of 0.." + std::to_string(n - 1));
  return p;
}

// A path, or a builtin name when no such file exists.
RawTable read_table(const std::string& source, std::size_t budget) {
  if (std::filesystem::exists(source)) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw PreconditionError("cannot open '" + source + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse(text);
  }
  try {
    return builtin(source, budget).table();
  } catch (const PreconditionError&) {
    throw PreconditionError("'" + source + "' is neither a readable file nor a builtin");
  }
}

Gpea read_gpea(const std::string& source, std::size_t budget) {
  RawTable t = read_table(source, budget);
  if (t.size() > budget)
    throw BudgetExceeded("carrier of " + std::to_string(t.size()) + " exceeds the budget " + std::to_string(budget));
  return Gpea::from(std::move(t));
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw PreconditionError("cannot write '" + path + "'");
  f << text;
}

void print_flags(const Gpea& g, std::ostream& out) {
  const StructureFlags s = classify(g);
  out << "RESULT total=" << flag(s.total) << '\n'
      << "RESULT weakly_commutative=" << flag(s.weakly_commutative) << '\n'
      << "RESULT commutative=" << flag(s.commutative) << '\n'
      << "RESULT has_unit=" << flag(s.has_unit) << '\n'
      << "RESULT upward_directed=" << flag(s.upward_directed) << '\n'
      << "RESULT downward_directed=" << flag(s.downward_directed) << '\n';
}

int cmd_check(const std::string& file, std::size_t budget, std::ostream& out) {
  RawTable t = read_table(file, budget);
  const AxiomReport report = validate_axioms(t);
  for (int k = 0; k < kAxiomCount; ++k) out << "RESULT gpea" << k + 1 << '=' << flag(report.pass[k]) << '\n';
  if (!report.ok()) {
    out << report.describe() << '\n';
    out << "RESULT axioms=false\n";
    return kPass;
  }
  out << "RESULT axioms=true\n";
  const Gpea g = Gpea::from(std::move(t));
  out << "size " << g.size() << '\n';
  print_flags(g, out);
  if (g.has_unit()) {
    const PeaView v = pea_view(g);
    out << "unit " << g.name(v.unit) << '\n';
    for (Elem a = 0; a < static_cast<Elem>(g.size()); ++a)
      out << "  " << g.name(a) << "~ = " << g.name(v.tilde(a)) << "   " << g.name(a) << "- = " << g.name(v.minus(a))
          << '\n';
    const Verdict id = check_pea_identities(g, v);
    if (!id) out << id.detail << '\n';
    out << "RESULT pea_identities=" << flag(id.ok) << '\n';
  }
  return kPass;
}

int cmd_ideals(const std::string& file, const std::string& gamma_text, bool normal, bool riesz, std::size_t budget,
               std::ostream& out) {
  const Gpea g = read_gpea(file, budget);
  std::optional<Permutation> gamma;
  if (!gamma_text.empty()) {
    gamma = parse_perm(gamma_text, g.size(), "gamma");
    if (!is_automorphism(g, *gamma)) throw PreconditionError("gamma " + gamma_text + " is not an automorphism");
  }
  std::vector<ElementSubset> ideals;
  if (riesz) {
    ideals = normal_riesz_ideals(g, gamma);
  } else {
    ideals = enumerate_ideals(g, normal ? IdealKind::kNormal : IdealKind::kIdeal);
    if (gamma)
      std::erase_if(ideals, [&](const ElementSubset& s) { return !is_gamma_closed(s, *gamma); });
  }
  for (const auto& s : ideals) {
    const IdealFlags f = classify_subset(g, s, gamma);
    out << s.to_string() << " normal=" << flag(f.normal) << " r1=" << flag(f.r1) << " riesz=" << flag(f.riesz);
    if (f.gamma_closed) out << " gamma_closed=" << flag(*f.gamma_closed);
    out << '\n';
  }
  out << "RESULT count=" << ideals.size() << '\n';
  return kPass;
}

int cmd_autos(const std::string& file, bool unitizing, std::size_t budget, std::ostream& out) {
  const Gpea g = read_gpea(file, budget);
  const auto autos = unitizing ? enumerate_unitizing(g) : find_morphisms(g, g, MorphismMode::kAuto);
  for (const auto& p : autos) out << format_elements(p) << '\n';
  out << "RESULT count=" << autos.size() << '\n';
  return kPass;
}

int cmd_unitize(const std::string& file, const std::string& gamma_text, const std::string& output,
                std::size_t budget, std::ostream& out) {
  const Gpea g = read_gpea(file, budget);
  if (2 * g.size() > budget) throw BudgetExceeded("unitization exceeds the budget " + std::to_string(budget));
  const UnitizationAlgebra ua = gamma_unitize(g, parse_perm(gamma_text, g.size(), "gamma"));
  write_text(output, serialize(ua.algebra), out);
  out << "RESULT size=" << ua.algebra.size() << '\n';
  return kPass;
}

int cmd_quotient(const std::string& file, const std::string& ideal_text, const std::string& output,
                 std::size_t budget, std::ostream& out) {
  const Gpea g = read_gpea(file, budget);
  std::vector<Elem> members = parse_list(ideal_text, "ideal");
  for (Elem a : members)
    if (a >= static_cast<Elem>(g.size())) throw PreconditionError("ideal member " + std::to_string(a) + " out of range");
  members.push_back(0);
  const ElementSubset ideal = ElementSubset::from_members(g.size(), members);
  const Partition rel = sim_from_ideal(g, ideal);
  const CongruenceFlags f = classify_relation(g, rel, ideal);
  out << "classes " << rel.to_string() << '\n';
  out << "flags " << f.describe() << '\n';
  const bool ok = f.congruence() && f.c4 && f.c5;
  out << "RESULT quotient=" << flag(ok) << '\n';
  if (ok) {
    const Gpea q = quotient(g, rel);
    write_text(output, serialize(q), out);
    out << "RESULT size=" << q.size() << '\n';
  }
  return kPass;
}

int cmd_kite(const std::string& base_file, std::size_t index, const std::string& lambda_text,
             const std::string& rho_text, const std::string& output, std::size_t budget, std::ostream& out) {
  const KiteSpec spec{read_gpea(base_file, budget), index, parse_perm(lambda_text, index, "lambda"),
                      parse_perm(rho_text, index, "rho")};
  const KcVerdict kc = check_kc(spec, budget);
  out << "RESULT kci=" << flag(kc.kci.ok) << '\n' << "RESULT kcii=" << flag(kc.kcii.ok) << '\n';
  if (!kc.kci) {
    out << kc.kci.detail << '\n';
    return kPass;
  }
  const Gpea k = build_kite(spec, budget);
  const KiteIsoReport iso = kite_iso(spec, budget);
  for (const auto& f : iso.failures) out << f << '\n';
  write_text(output, serialize(k), out);
  out << "RESULT size=" << k.size() << '\n' << "RESULT kite_iso=" << flag(iso.ok()) << '\n';
  return iso.ok() ? kPass : kCheckFailed;
}

int cmd_rdp(const std::string& file, std::size_t budget, std::ostream& out) {
  const RdpProfile p = rdp_profile(read_gpea(file, budget));
  out << p.describe() << '\n';
  out << "RESULT rdp0=" << flag(p.rdp0) << '\n'
      << "RESULT rdp=" << flag(p.rdp) << '\n'
      << "RESULT rdp1=" << flag(p.rdp1) << '\n'
      << "RESULT rdp2=" << flag(p.rdp2) << '\n';
  return kPass;
}

int cmd_enumerate(std::size_t size, const std::vector<std::string>& filters, std::ostream& out) {
  EnumerationFilter f;
  for (const auto& item : filters) {
    const auto eq = item.find('=');
    const std::string key = item.substr(0, eq);
    const std::string value = eq == std::string::npos ? "true" : item.substr(eq + 1);
    if (value != "true" && value != "false") throw PreconditionError("filter value must be true or false: " + item);
    const bool b = value == "true";
    if (key == "total") f.total = b;
    else if (key == "weakly_commutative") f.weakly_commutative = b;
    else if (key == "has_unit") f.has_unit = b;
    else throw PreconditionError("unknown filter '" + key + "'");
  }
  const auto gs = enumerate_gpeas(size, f);
  for (const auto& g : gs) out << serialize(g) << '\n';
  out << "RESULT count=" << gs.size() << '\n';
  return kPass;
}

int cmd_verify(const std::string& scope, std::size_t max_size, std::size_t budget, std::ostream& out) {
  VerifyOptions opts;
  opts.max_size = max_size;
  opts.budget = budget;
  const VerifyReport r = verify(scope, opts);
  out << r.render();
  return r.ok() ? kPass : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite generalized pseudo effect algebras: tables, unitizations, kites, congruences"};
  app.name("gpea");
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t budget = 0;
  try {
    budget = default_budget();
  } catch (const GpeaError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  app.add_option("--budget", budget, "Element budget (default 4096 or GPEA_BUDGET)");

  std::string file, gamma, output, ideal, lambda, rho, scope = "all";
  bool normal = false, riesz = false, unitizing = false;
  std::size_t index = 1, size = 1, max_size = 5;
  std::vector<std::string> filters;

  auto* check = app.add_subcommand("check", "Axioms, structure flags and supplements");
  check->add_option("file", file)->required();

  auto* ideals = app.add_subcommand("ideals", "List ideals");
  ideals->add_option("file", file)->required();
  ideals->add_option("--gamma", gamma, "Keep gamma-closed ideals only");
  auto* normal_flag = ideals->add_flag("--normal", normal);
  ideals->add_flag("--riesz", riesz)->excludes(normal_flag);

  auto* autos = app.add_subcommand("autos", "List automorphisms");
  autos->add_option("file", file)->required();
  autos->add_flag("--unitizing", unitizing);

  auto* unitize = app.add_subcommand("unitize", "Build the gamma-unitization");
  unitize->add_option("file", file)->required();
  unitize->add_option("--gamma", gamma)->required();
  unitize->add_option("-o,--output", output);

  auto* quot = app.add_subcommand("quotient", "Quotient by the relation of an ideal");
  quot->add_option("file", file)->required();
  quot->add_option("--ideal", ideal)->required();
  quot->add_option("-o,--output", output);

  auto* kite = app.add_subcommand("kite", "Build a kite algebra");
  kite->add_option("--base", file)->required();
  kite->add_option("--index", index)->required()->check(CLI::PositiveNumber);
  kite->add_option("--lambda", lambda)->required();
  kite->add_option("--rho", rho)->required();
  kite->add_option("-o,--output", output);

  auto* rdp = app.add_subcommand("rdp", "Riesz decomposition properties");
  rdp->add_option("file", file)->required();

  auto* enumerate = app.add_subcommand("enumerate", "GPEAs of a given size up to isomorphism");
  enumerate->add_option("--size", size)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--filter", filters, "key[=true|false], key in total, weakly_commutative, has_unit")
      ->delimiter(',');

  auto* ver = app.add_subcommand("verify", "Run theorem suites");
  ver->add_option("scope", scope)->check(CLI::IsMember({"all", "unitization", "congruence", "kite", "rdp"}));
  ver->add_option("--max-size", max_size, "Largest enumerated instance")->check(CLI::Range(1, 6));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    if (*check) return cmd_check(file, budget, out);
    if (*ideals) return cmd_ideals(file, gamma, normal, riesz, budget, out);
    if (*autos) return cmd_autos(file, unitizing, budget, out);
    if (*unitize) return cmd_unitize(file, gamma, output, budget, out);
    if (*quot) return cmd_quotient(file, ideal, output, budget, out);
    if (*kite) return cmd_kite(file, index, lambda, rho, output, budget, out);
    if (*rdp) return cmd_rdp(file, budget, out);
    if (*enumerate) return cmd_enumerate(size, filters, out);
    if (*ver) return cmd_verify(scope, max_size, budget, out);
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const GpeaError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  err << app.help();
  return kInputError;
}

}  // namespace gpea::cli
