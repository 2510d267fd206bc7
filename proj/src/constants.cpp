#include "dynq/constants.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace dynq {

namespace {

struct KeyEntry {
  const char* name;
  double ConstantsTable::* member;
};

constexpr KeyEntry kKeys[] = {
    {"M_e", &ConstantsTable::M_e},
    {"M_p", &ConstantsTable::M_p},
    {"h", &ConstantsTable::h},
    {"hbar_si", &ConstantsTable::hbar_si},
    {"e_charge", &ConstantsTable::e_charge},
    {"eps0", &ConstantsTable::eps0},
    {"G", &ConstantsTable::G},
    {"N_A", &ConstantsTable::N_A},
    {"c", &ConstantsTable::c},
    {"M_E", &ConstantsTable::M_earth},
    {"R_E", &ConstantsTable::R_E},
    {"R_O", &ConstantsTable::R_O},
    {"tau_E", &ConstantsTable::tau_E},
    {"nu_H", &ConstantsTable::nu_H},
    {"hbar_natural", &ConstantsTable::hbar_natural},
};

ConstantsTable defaults() {
  ConstantsTable t{};
  t.M_e = 9.1093837015e-31;
  t.M_p = 1.67262192369e-27;
  t.h = 6.62607015e-34;
  t.hbar_si = t.h / (2.0 * std::numbers::pi);
  t.e_charge = 1.602176634e-19;
  t.eps0 = 8.8541878128e-12;
  t.G = 6.67430e-11;
  t.N_A = 6.02214076e23;
  t.c = 2.99792458e8;
  t.M_earth = 5.9722e24;
  t.R_E = 6.371e6;
  t.R_O = 1.496e11;
  t.tau_E = 3.156e7;
  t.nu_H = 6.57e15;
  t.hbar_natural = 1.0546e-34;
  for (const KeyEntry& k : kKeys) t.provenance[k.name] = Provenance::Default;
  return t;
}

const KeyEntry* find_key(std::string_view name) {
  for (const KeyEntry& k : kKeys)
    if (name == k.name) return &k;
  return nullptr;
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

const std::vector<std::string>& constant_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> v;
    for (const KeyEntry& k : kKeys) v.emplace_back(k.name);
    return v;
  }();
  return keys;
}

double get_constant(const ConstantsTable& table, std::string_view key) {
  const KeyEntry* entry = find_key(key);
  if (!entry)
    throw std::out_of_range("unknown constant '" + std::string(key) + "'");
  return table.*(entry->member);
}

ConstantsTable load_constants() { return defaults(); }

ConstantsTable load_constants(std::string_view override_text) {
  ConstantsTable table = defaults();
  bool h_overridden = false;
  bool hbar_overridden = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= override_text.size()) {
    const std::size_t end = override_text.find('\n', start);
    std::string_view line = override_text.substr(
        start, end == std::string_view::npos ? std::string_view::npos
                                             : end - start);
    ++line_no;
    start = end == std::string_view::npos ? override_text.size() + 1 : end + 1;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConstantsError("expected key=value", line_no);
    const std::string key(trim(line.substr(0, eq)));
    const std::string value_text(trim(line.substr(eq + 1)));

    const KeyEntry* entry = find_key(key);
    if (!entry)
      throw ConstantsError("unknown constant '" + key + "'", line_no);

    char* parse_end = nullptr;
    const double value = std::strtod(value_text.c_str(), &parse_end);
    if (value_text.empty() || parse_end != value_text.c_str() + value_text.size())
      throw ConstantsError("malformed value '" + value_text + "' for '" + key + "'",
                           line_no);
    if (!std::isfinite(value) || value <= 0.0)
      throw ConstantsError("constant '" + key + "' must be finite and positive",
                           line_no);

    table.*(entry->member) = value;
    table.provenance[key] = Provenance::Overridden;
    if (key == "h") h_overridden = true;
    if (key == "hbar_si") hbar_overridden = true;
  }

  if (h_overridden && !hbar_overridden) {
    table.hbar_si = table.h / (2.0 * std::numbers::pi);
  } else if (hbar_overridden) {
    const double expected = table.h / (2.0 * std::numbers::pi);
    if (std::abs(table.hbar_si - expected) > 1e-12 * expected)
      throw ConstantsError(
          "hbar_si override is inconsistent with h (must equal h/2pi within "
          "1e-12 relative)");
  }
  return table;
}

}  // namespace dynq
