#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpea/core.hpp"

namespace gpea {

// ---------------------------------------------------------------------------
// Builtins
// ---------------------------------------------------------------------------

/// The six-element GEA 0, p, q, r, s = p⊕r, t = q⊕r (indices 0..5).
Gpea fig1();

/// {0, 1, ..., n} with a⊕b = a+b whenever a+b ≤ n.
Gpea chain(std::size_t n);

/// Direct product; (x, y) has index x·|Q| + y.
Gpea product(const Gpea& p, const Gpea& q);

/// boolean(k) = chain(1)^k, elements numbered as bit strings, first factor
/// most significant.
Gpea boolean(std::size_t k);

/// Parses "fig1", "chain(n)", "boolean(k)" or "product(x,y)". Throws
/// PreconditionError for unknown names and BudgetExceeded for oversized ones.
Gpea builtin(std::string_view spec, std::size_t budget = 4096);

/// Names accepted by builtin() that the verification harness uses.
std::vector<std::string> catalog_names();

// ---------------------------------------------------------------------------
// gpea v1 files
// ---------------------------------------------------------------------------

class ParseError : public GpeaError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Reads a table without checking the axioms beyond zero-neutrality.
RawTable parse(std::string_view text);

/// parse() followed by Gpea::from().
Gpea load(std::string_view text);
Gpea load_file(const std::string& path);

std::string serialize(const RawTable& table);
std::string serialize(const Gpea& g);

// ---------------------------------------------------------------------------
// Twisted window
// ---------------------------------------------------------------------------

using Triple = std::array<long, 3>;

/// (a,b,c) + (x,y,z) = (a+x, b+y, c+z) for even x, (a+x, c+y, b+z) for odd x.
Triple twisted_add(const Triple& p, const Triple& q);
Triple twisted_neg(const Triple& p);
/// Lexicographic on the first coordinate, componentwise on the other two.
bool twisted_leq(const Triple& p, const Triple& q);

/// A bounded window of the interval [(0,0,0), (1,0,0)] of the twisted group:
/// (0,a,b) with 0 ≤ a,b ≤ n and (1,c,d) with -n ≤ c,d ≤ 0. Sums are defined
/// only when both operands and the result lie in the window, so the window is
/// never an algebra in its own right.
struct WindowSpotCheck {
  long bound = 0;
  std::vector<Triple> elements;
  bool not_axiom_verified = true;
  std::size_t checks = 0;
  std::vector<std::string> violations;

  bool contains(const Triple& x) const;
  std::optional<Triple> op(const Triple& x, const Triple& y) const;
  /// The y in the window with x + y = (1,0,0), found by search.
  std::optional<Triple> tilde(const Triple& x) const;
  /// The y in the window with y + x = (1,0,0), found by search.
  std::optional<Triple> minus(const Triple& x) const;
  std::optional<Triple> gamma(const Triple& x) const;
};

/// Sweeps the window checking x~ = (1,-c,-b), x⁻ = (1,-b,-c) and
/// γ(0,a,b) = (0,b,a), and the lexicographic-product pattern
/// γ(0,g) = (0, c-(c-g)) with c = (1,0,0).
WindowSpotCheck twisted_window(long n);

std::string format_triple(const Triple& t);

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

struct EnumerationFilter {
  std::optional<bool> total;
  std::optional<bool> weakly_commutative;
  std::optional<bool> has_unit;
};

/// Lexicographically smallest flattened table over relabelings fixing 0;
/// undefined entries count as -1.
std::vector<Elem> canonical_form(const RawTable& table);

/// All GPEAs on n elements up to isomorphism, each in canonical form, sorted
/// by table. Throws BudgetExceeded for n > max_size.
std::vector<Gpea> enumerate_gpeas(std::size_t n, const EnumerationFilter& filter = {},
                                  std::size_t max_size = 6);

/// Independent count: every table over {undefined, 1..n-1}, axiom-filtered,
/// deduplicated by isomorphism search. Only meant for n ≤ 4.
std::size_t count_gpeas_bruteforce(std::size_t n);

}  // namespace gpea
