#include "dynq/dimension.hpp"

namespace dynq {

std::string Dimension::str() const {
  std::string out;
  auto append = [&out](const char* symbol, const Rational& e) {
    if (e.is_zero()) return;
    if (!out.empty()) out += ' ';
    out += symbol;
    if (!(e == Rational{1})) {
      out += '^';
      out += e.str();
    }
  };
  append("m", m_exp);
  append("kg", kg_exp);
  append("s", s_exp);
  if (out.empty()) return "1";
  return out;
}

}  // namespace dynq
