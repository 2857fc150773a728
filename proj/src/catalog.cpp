#include "gpea/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gpea {

// ---------------------------------------------------------------------------
// Builtins
// ---------------------------------------------------------------------------

Gpea fig1() {
  RawTable t(6);
  const char* names[] = {"0", "p", "q", "r", "s", "t"};
  for (Elem a = 0; a < 6; ++a) t.set_name(a, names[a]);
  constexpr Elem p = 1, q = 2, r = 3, s = 4, u = 5;
  t.set(p, r, s);
  t.set(r, p, s);
  t.set(q, r, u);
  t.set(r, q, u);
  return Gpea::from(std::move(t));
}

Gpea chain(std::size_t n) {
  RawTable t(n + 1);
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; a + b <= n; ++b)
      t.set(static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(a + b));
  return Gpea::from(std::move(t));
}

Gpea product(const Gpea& p, const Gpea& q) {
  const auto np = static_cast<Elem>(p.size());
  const auto nq = static_cast<Elem>(q.size());
  RawTable t(p.size() * q.size());
  for (Elem x1 = 0; x1 < np; ++x1)
    for (Elem y1 = 0; y1 < nq; ++y1)
      for (Elem x2 = 0; x2 < np; ++x2)
        for (Elem y2 = 0; y2 < nq; ++y2) {
          const Elem x = p.op(x1, x2);
          const Elem y = q.op(y1, y2);
          t.set(x1 * nq + y1, x2 * nq + y2, x == kUndefined || y == kUndefined ? kUndefined : x * nq + y);
        }
  return Gpea::from(std::move(t));
}

Gpea boolean(std::size_t k) {
  Gpea out = chain(0);
  for (std::size_t i = 0; i < k; ++i) out = product(chain(1), out);
  return out;
}

namespace {

class BuiltinParser {
 public:
  BuiltinParser(std::string_view text, std::size_t budget) : text_(text), budget_(budget) {}

  Gpea parse() {
    Gpea g = expression();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw PreconditionError("bad builtin '" + std::string(text_) + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    skip_space();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  void within_budget(std::size_t size) const {
    if (size > budget_)
      throw BudgetExceeded("builtin '" + std::string(text_) + "' needs " + std::to_string(size) +
                           " elements, budget is " + std::to_string(budget_));
  }

  Gpea expression() {
    const std::string name = word();
    if (name == "fig1") return fig1();
    if (name == "chain") {
      expect('(');
      const std::size_t n = number();
      expect(')');
      within_budget(n + 1);
      return chain(n);
    }
    if (name == "boolean") {
      expect('(');
      const std::size_t k = number();
      expect(')');
      if (k >= 63) within_budget(budget_ + 1);
      within_budget(std::size_t{1} << k);
      return boolean(k);
    }
    if (name == "product") {
      expect('(');
      Gpea left = expression();
      expect(',');
      Gpea right = expression();
      expect(')');
      within_budget(left.size() * right.size());
      return product(left, right);
    }
    fail(name.empty() ? "missing name" : "unknown builtin '" + name + "'");
  }

  std::string_view text_;
  std::size_t budget_;
  std::size_t pos_ = 0;
};

}  // namespace

Gpea builtin(std::string_view spec, std::size_t budget) { return BuiltinParser(spec, budget).parse(); }

std::vector<std::string> catalog_names() {
  return {"chain(0)", "chain(1)", "chain(2)", "chain(3)", "boolean(2)", "boolean(3)",
          "product(chain(1),chain(2))", "fig1"};
}

// ---------------------------------------------------------------------------
// gpea v1
// ---------------------------------------------------------------------------

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : GpeaError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

}  // namespace

RawTable parse(std::string_view text) {
  std::optional<RawTable> table;
  std::vector<char> seen;
  bool header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size() || (start == 0 && text.empty())) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = end + 1;
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    auto error = [&](const Token& at, const std::string& why) -> ParseError {
      return ParseError(line_no, at.column, why);
    };
    auto integer = [&](const Token& tok) {
      long value = 0;
      auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
      if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
        throw error(tok, "expected an integer, got '" + std::string(tok.text) + "'");
      return value;
    };
    auto arity = [&](std::size_t count) {
      if (tokens.size() != count + 1) {
        const Token& at = tokens.size() > count + 1 ? tokens[count + 1] : tokens.back();
        throw error(at, "'" + std::string(tokens[0].text) + "' takes " + std::to_string(count) + " argument(s)");
      }
    };
    auto element = [&](const Token& tok) {
      const long v = integer(tok);
      if (v < 0 || static_cast<std::size_t>(v) >= table->size())
        throw error(tok, "element " + std::to_string(v) + " out of range");
      return static_cast<Elem>(v);
    };

    const std::string_view directive = tokens[0].text;
    if (!header) {
      if (directive != "gpea") throw error(tokens[0], "expected header 'gpea 1'");
      arity(1);
      if (integer(tokens[1]) != 1) throw error(tokens[1], "unsupported format version");
      header = true;
      continue;
    }
    if (directive == "n") {
      arity(1);
      if (table) throw error(tokens[0], "duplicate n directive");
      const long n = integer(tokens[1]);
      if (n < 1) throw error(tokens[1], "n must be positive");
      table.emplace(static_cast<std::size_t>(n));
      seen.assign(static_cast<std::size_t>(n * n), 0);
      continue;
    }
    if (directive != "name" && directive != "op") throw error(tokens[0], "unknown directive '" + std::string(directive) + "'");
    if (!table) throw error(tokens[0], "'" + std::string(directive) + "' before the n directive");
    if (directive == "name") {
      arity(2);
      table->set_name(element(tokens[1]), std::string(tokens[2].text));
      continue;
    }
    arity(3);
    const Elem i = element(tokens[1]);
    const Elem j = element(tokens[2]);
    const Elem k = element(tokens[3]);
    if ((i == 0 && k != j) || (j == 0 && k != i))
      throw error(tokens[3], "zero must be neutral: " + std::to_string(i) + "+" + std::to_string(j) +
                                 " cannot be " + std::to_string(k));
    const std::size_t slot = static_cast<std::size_t>(i) * table->size() + static_cast<std::size_t>(j);
    if (seen[slot] && table->at(i, j) != k)
      throw error(tokens[3], "conflicting duplicate entry for " + std::to_string(i) + "+" + std::to_string(j));
    seen[slot] = 1;
    table->set(i, j, k);
  }
  if (!header) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing header 'gpea 1'");
  if (!table) throw ParseError(line_no, 1, "missing n directive");
  return std::move(*table);
}

Gpea load(std::string_view text) { return Gpea::from(parse(text)); }

Gpea load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load(buf.str());
}

std::string serialize(const RawTable& table) {
  std::ostringstream out;
  out << "gpea 1\n";
  out << "n " << table.size() << '\n';
  const auto n = static_cast<Elem>(table.size());
  for (Elem a = 0; a < n; ++a)
    if (table.has_custom_name(a)) out << "name " << a << ' ' << table.name(a) << '\n';
  for (Elem a = 1; a < n; ++a)
    for (Elem b = 1; b < n; ++b)
      if (table.defined(a, b)) out << "op " << a << ' ' << b << ' ' << table.at(a, b) << '\n';
  return out.str();
}

std::string serialize(const Gpea& g) { return serialize(g.table()); }

// ---------------------------------------------------------------------------
// Twisted window
// ---------------------------------------------------------------------------

Triple twisted_add(const Triple& p, const Triple& q) {
  if (q[0] % 2 == 0) return {p[0] + q[0], p[1] + q[1], p[2] + q[2]};
  return {p[0] + q[0], p[2] + q[1], p[1] + q[2]};
}

Triple twisted_neg(const Triple& p) {
  if (p[0] % 2 == 0) return {-p[0], -p[1], -p[2]};
  return {-p[0], -p[2], -p[1]};
}

bool twisted_leq(const Triple& p, const Triple& q) {
  if (p[0] != q[0]) return p[0] < q[0];
  return p[1] <= q[1] && p[2] <= q[2];
}

std::string format_triple(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

namespace {

constexpr Triple kUnitTriple{1, 0, 0};

}  // namespace

bool WindowSpotCheck::contains(const Triple& x) const {
  if (x[0] == 0) return 0 <= x[1] && x[1] <= bound && 0 <= x[2] && x[2] <= bound;
  if (x[0] == 1) return -bound <= x[1] && x[1] <= 0 && -bound <= x[2] && x[2] <= 0;
  return false;
}

std::optional<Triple> WindowSpotCheck::op(const Triple& x, const Triple& y) const {
  if (!contains(x) || !contains(y)) return std::nullopt;
  const Triple s = twisted_add(x, y);
  if (!contains(s)) return std::nullopt;
  return s;
}

std::optional<Triple> WindowSpotCheck::tilde(const Triple& x) const {
  for (const Triple& y : elements)
    if (op(x, y) == kUnitTriple) return y;
  return std::nullopt;
}

std::optional<Triple> WindowSpotCheck::minus(const Triple& x) const {
  for (const Triple& y : elements)
    if (op(y, x) == kUnitTriple) return y;
  return std::nullopt;
}

std::optional<Triple> WindowSpotCheck::gamma(const Triple& x) const {
  const auto m = minus(x);
  return m ? minus(*m) : std::nullopt;
}

WindowSpotCheck twisted_window(long n) {
  if (n < 1) throw PreconditionError("window bound must be at least 1");
  WindowSpotCheck w;
  w.bound = n;
  for (long a = 0; a <= n; ++a)
    for (long b = 0; b <= n; ++b) w.elements.push_back({0, a, b});
  for (long c = -n; c <= 0; ++c)
    for (long d = -n; d <= 0; ++d) w.elements.push_back({1, c, d});

  auto expect = [&](const char* what, const Triple& x, const std::optional<Triple>& got, const Triple& want) {
    ++w.checks;
    if (got != want)
      w.violations.push_back(std::string(what) + " of " + format_triple(x) + ": expected " + format_triple(want) +
                             ", got " + (got ? format_triple(*got) : std::string("none")));
  };

  for (const Triple& x : w.elements) {
    if (x[0] == 0) {
      expect("x~", x, w.tilde(x), {1, -x[2], -x[1]});
      expect("x-", x, w.minus(x), {1, -x[1], -x[2]});
      expect("gamma", x, w.gamma(x), {0, x[2], x[1]});
    } else {
      // supplements of the upper half land in the lower half and invert back
      const auto t = w.tilde(x);
      const auto m = w.minus(x);
      ++w.checks;
      if (!t || !m || w.minus(*t) != x || w.tilde(*m) != x)
        w.violations.push_back("supplements of " + format_triple(x) + " do not invert");
    }
  }

  // Lexicographic product Z x G with G the twisted group, unit (1, c),
  // c = (1,0,0): γ(0,g) = (0, c-(c-g)), with y - z read as y + (-z).
  const Triple c = kUnitTriple;
  for (long a = 0; a <= n; ++a)
    for (long b = 0; b <= n; ++b) {
      const Triple g{0, a, b};
      // (1,h) + (0,g) = (1,c) forces h = c - g; then (0,k) + (1,h) = (1,c) forces k = c - h.
      std::optional<Triple> h, k;
      for (const Triple& cand : w.elements)
        if (cand[0] == 1 && twisted_add(cand, g) == c) h = cand;
      if (h)
        for (const Triple& cand : w.elements)
          if (cand[0] == 0 && twisted_add(cand, *h) == c) k = cand;
      const Triple formula = twisted_add(c, twisted_neg(twisted_add(c, twisted_neg(g))));
      expect("lex gamma", g, k, formula);
      ++w.checks;
      if (formula != Triple{0, b, a})
        w.violations.push_back("lex gamma of " + format_triple(g) + " is not the coordinate swap");
    }
  return w;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

std::vector<Elem> canonical_form(const RawTable& table) {
  const std::size_t n = table.size();
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Elem> best = table.entries();
  std::vector<Elem> cur(n * n);
  const auto en = static_cast<Elem>(n);
  while (std::next_permutation(perm.begin() + 1, perm.end())) {
    for (Elem a = 0; a < en; ++a)
      for (Elem b = 0; b < en; ++b) {
        const Elem v = table.at(a, b);
        cur[static_cast<std::size_t>(perm[a]) * n + static_cast<std::size_t>(perm[b])] = v == kUndefined ? v : perm[v];
      }
    if (cur < best) best = cur;
  }
  return best;
}

namespace {

class Enumerator {
 public:
  explicit Enumerator(std::size_t n) : n_(static_cast<Elem>(n)), table_(n) {
    for (Elem a = 1; a < n_; ++a)
      for (Elem b = 1; b < n_; ++b) cells_.emplace_back(a, b);
    order_.assign(n * n, -1);
    for (std::size_t i = 0; i < cells_.size(); ++i)
      order_[static_cast<std::size_t>(cells_[i].first) * n + static_cast<std::size_t>(cells_[i].second)] =
          static_cast<int>(i);
  }

  std::vector<RawTable> run() {
    fill(0);
    return std::move(found_);
  }

 private:
  bool assigned(Elem a, Elem b, int upto) const {
    const int o = order_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
    return o < 0 || o <= upto;
  }

  // Every associativity instance whose four entries are known.
  bool associative_so_far(int upto) const {
    for (Elem x = 1; x < n_; ++x)
      for (Elem y = 1; y < n_; ++y) {
        if (!assigned(x, y, upto)) continue;
        const Elem xy = table_.at(x, y);
        for (Elem z = 1; z < n_; ++z) {
          if (!assigned(y, z, upto)) continue;
          const Elem yz = table_.at(y, z);
          if (xy != kUndefined && !assigned(xy, z, upto)) continue;
          if (yz != kUndefined && !assigned(x, yz, upto)) continue;
          const Elem lhs = xy == kUndefined ? kUndefined : table_.at(xy, z);
          const Elem rhs = yz == kUndefined ? kUndefined : table_.at(x, yz);
          if (lhs != rhs) return false;
        }
      }
    return true;
  }

  void fill(int idx) {
    if (idx == static_cast<int>(cells_.size())) {
      if (!validate_axioms(table_).ok()) return;
      if (canonical_form(table_) == table_.entries()) found_.push_back(table_);
      return;
    }
    const auto [a, b] = cells_[static_cast<std::size_t>(idx)];
    for (Elem v = kUndefined; v < n_; ++v) {
      if (v == 0 || v == a || v == b) continue;
      if (v != kUndefined) {
        bool clash = false;
        for (Elem c = 1; c < b && !clash; ++c) clash = table_.at(a, c) == v;
        for (Elem c = 1; c < a && !clash; ++c) clash = table_.at(c, b) == v;
        if (clash) continue;
      }
      table_.set(a, b, v);
      if (associative_so_far(idx)) fill(idx + 1);
    }
    table_.set(a, b, kUndefined);
  }

  Elem n_;
  RawTable table_;
  std::vector<std::pair<Elem, Elem>> cells_;
  std::vector<int> order_;
  std::vector<RawTable> found_;
};

bool passes(const Gpea& g, const EnumerationFilter& f) {
  const StructureFlags s = classify(g);
  return (!f.total || *f.total == s.total) &&
         (!f.weakly_commutative || *f.weakly_commutative == s.weakly_commutative) &&
         (!f.has_unit || *f.has_unit == s.has_unit);
}

}  // namespace

std::vector<Gpea> enumerate_gpeas(std::size_t n, const EnumerationFilter& filter, std::size_t max_size) {
  if (n == 0) throw PreconditionError("carrier must be nonempty");
  if (n > max_size)
    throw BudgetExceeded("enumeration at size " + std::to_string(n) + " exceeds the limit " +
                         std::to_string(max_size));
  auto tables = Enumerator(n).run();
  std::sort(tables.begin(), tables.end(),
            [](const RawTable& x, const RawTable& y) { return x.entries() < y.entries(); });
  std::vector<Gpea> out;
  for (auto& t : tables) {
    Gpea g = Gpea::from(std::move(t));
    if (passes(g, filter)) out.push_back(std::move(g));
  }
  return out;
}

std::size_t count_gpeas_bruteforce(std::size_t n) {
  if (n == 0 || n > 4) throw PreconditionError("brute-force count is limited to sizes 1..4");
  const auto en = static_cast<Elem>(n);
  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem a = 1; a < en; ++a)
    for (Elem b = 1; b < en; ++b) cells.emplace_back(a, b);
  // Each cell ranges over {undefined, 0, ..., n-1}: n+1 choices.
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) total *= n + 1;
  std::vector<Gpea> reps;
  RawTable t(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (const auto& [a, b] : cells) {
      t.set(a, b, static_cast<Elem>(rest % (n + 1)) - 1);
      rest /= n + 1;
    }
    if (!validate_axioms(t).ok()) continue;
    Gpea g = Gpea::from(t);
    const bool known = std::any_of(reps.begin(), reps.end(), [&](const Gpea& r) {
      return !find_morphisms(r, g, MorphismMode::kIso, {}, 1).empty();
    });
    if (!known) reps.push_back(std::move(g));
  }
  return reps.size();
}

}  // namespace gpea
