#include "dynq/units.hpp"

#include <cctype>
#include <cstdint>

namespace dynq {

namespace {

bool is_symbol_char(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

const UnitTable& UnitTable::natural() {
  static const UnitTable table = [] {
    UnitTable t;
    t.define("m", {1, 0, 0});
    t.define("kg", {0, 1, 0});
    t.define("s", {0, 0, 1});
    t.define("Hz", {0, 0, -1});
    t.define("N", {1, 1, -2});
    t.define("J", {2, 1, -2});
    t.define("C", {0, 1, -2});
    t.define("E", {-2, 1, -2});
    t.define("B", {-3, 1, -1});
    t.define("u", {1, 0, -1});
    t.define("eps", {-3, 1, -2});
    t.define("eta", {-3, 1, -2});
    t.define("sigma", {-3, 1, -2});
    t.define("beta", {0, 0, 0});
    t.define("hbar", {3, -1, 2});
    return t;
  }();
  return table;
}

const Dimension& UnitTable::lookup(std::string_view symbol) const {
  auto it = entries_.find(symbol);
  if (it == entries_.end())
    throw std::out_of_range("unknown unit symbol '" + std::string(symbol) + "'");
  return it->second;
}

bool UnitTable::contains(std::string_view symbol) const {
  return entries_.find(symbol) != entries_.end();
}

void UnitTable::define(std::string symbol, Dimension dim) {
  entries_.insert_or_assign(std::move(symbol), dim);
}

namespace {

// Cursor over the expression. Positions in errors are 1-based.
struct Cursor {
  std::string_view text;
  std::size_t i = 0;

  bool done() const { return i >= text.size(); }
  char peek() const { return text[i]; }
  std::size_t pos() const { return i + 1; }

  // Separator handling. The UTF-8 middle dot "·" (0xC2 0xB7) counts as a
  // product separator alongside whitespace and '*'.
  bool skip_product_seps() {
    bool any = false;
    while (!done()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
        ++i;
        any = true;
      } else if (c == '\xC2' && i + 1 < text.size() && text[i + 1] == '\xB7') {
        i += 2;
        any = true;
      } else {
        break;
      }
    }
    return any;
  }
};

std::int64_t parse_digits(Cursor& cur, const char* what) {
  const std::size_t start = cur.pos();
  if (cur.done() || !is_digit(cur.peek()))
    throw UnitParseError(std::string("expected digits in ") + what, start);
  std::int64_t v = 0;
  while (!cur.done() && is_digit(cur.peek())) {
    v = v * 10 + (cur.peek() - '0');
    if (v > 1'000'000)
      throw UnitParseError(std::string("exponent too large in ") + what, start);
    ++cur.i;
  }
  return v;
}

Rational parse_exponent(Cursor& cur) {
  std::int64_t sign = 1;
  if (!cur.done() && (cur.peek() == '+' || cur.peek() == '-')) {
    if (cur.peek() == '-') sign = -1;
    ++cur.i;
  }
  const std::int64_t num = sign * parse_digits(cur, "exponent");
  // A denominator must follow its slash immediately with a digit; otherwise
  // the slash is a division separator and belongs to the expression level.
  if (!cur.done() && cur.peek() == '/' && cur.i + 1 < cur.text.size() &&
      is_digit(cur.text[cur.i + 1])) {
    ++cur.i;
    const std::size_t den_pos = cur.pos();
    const std::int64_t den = parse_digits(cur, "exponent denominator");
    if (den == 0)
      throw UnitParseError("zero exponent denominator", den_pos);
    return {num, den};
  }
  return {num};
}

Dimension parse_term(Cursor& cur, const UnitTable& table) {
  const std::size_t start = cur.pos();
  Dimension dim;
  if (!cur.done() && cur.peek() == '1') {
    ++cur.i;
    // dimensionless unit
  } else {
    std::size_t len = 0;
    while (cur.i + len < cur.text.size() && is_symbol_char(cur.text[cur.i + len]))
      ++len;
    if (len == 0)
      throw UnitParseError("expected unit symbol", start);
    const std::string_view symbol = cur.text.substr(cur.i, len);
    if (!table.contains(symbol))
      throw UnitParseError("unknown unit symbol '" + std::string(symbol) + "'",
                           start);
    dim = table.lookup(symbol);
    cur.i += len;
  }
  if (!cur.done() && cur.peek() == '^') {
    ++cur.i;
    dim = dim.pow(parse_exponent(cur));
  }
  return dim;
}

}  // namespace

Dimension parse_unit(std::string_view expr, const UnitTable& table) {
  Cursor cur{expr};
  cur.skip_product_seps();
  if (cur.done()) throw UnitParseError("empty unit expression", cur.pos());

  Dimension result = parse_term(cur, table);
  while (true) {
    const bool had_sep = cur.skip_product_seps();
    if (cur.done()) break;
    if (cur.peek() == '/') {
      ++cur.i;
      cur.skip_product_seps();
      result = result / parse_term(cur, table);
    } else if (had_sep) {
      result = result * parse_term(cur, table);
    } else {
      throw UnitParseError("unexpected character '" + std::string(1, cur.peek()) + "'",
                           cur.pos());
    }
  }
  return result;
}

ConsistencyReport check_equation(const Dimension& target,
                                 const std::vector<Dimension>& terms) {
  ConsistencyReport report;
  report.target = target;
  report.consistent = true;
  report.terms.reserve(terms.size());
  for (const Dimension& dim : terms) {
    TermCheck check;
    check.dim = dim;
    check.ratio = dim / target;
    check.consistent = check.ratio.is_dimensionless();
    report.consistent = report.consistent && check.consistent;
    report.terms.push_back(check);
  }
  return report;
}

const std::vector<BuiltinEquation>& builtin_equations() {
  static const std::vector<BuiltinEquation> equations = {
      {"lorentz-naive",
       "N",
       {{"electric term q E", "C E"}, {"magnetic term q u B", "C u B"}},
       false},
      {"lorentz-repaired",
       "N",
       {{"electric term (q/eta) E", "C eta^-1 E"},
        {"magnetic term (q/eta) u B", "C eta^-1 u B"}},
       true},
      {"force-natural",
       "N",
       {{"electric term hbar q E", "hbar C E"},
        {"magnetic term hbar q u B", "hbar C u B"}},
       true},
      {"angular-natural",
       "N m",
       {{"angular momentum hbar q E m", "hbar C E m"}},
       true},
      {"radiation-density",
       "N/m^2",
       {{"electric density hbar E^2", "hbar E^2"},
        {"magnetic density hbar u^2 B^2", "hbar u^2 B^2"}},
       true},
  };
  return equations;
}

BuiltinCheckResult run_builtin_check(std::string_view name,
                                     const UnitTable& table) {
  for (const BuiltinEquation& eq : builtin_equations()) {
    if (eq.name != name) continue;
    BuiltinCheckResult result;
    result.equation = eq;
    std::vector<Dimension> terms;
    terms.reserve(eq.term_exprs.size());
    for (const auto& [label, expr] : eq.term_exprs)
      terms.push_back(parse_unit(expr, table));
    result.report = check_equation(parse_unit(eq.target_expr, table), terms);
    result.matches_expectation = result.report.consistent == eq.expect_consistent;
    return result;
  }
  throw std::out_of_range("unknown equation check '" + std::string(name) + "'");
}

}  // namespace dynq
