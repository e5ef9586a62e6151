#include "motint/linear_form.hpp"

#include <sstream>

namespace motint {

bool is_zero_form(const LinearForm& f) {
  for (const auto& c : f)
    if (c != 0) return false;
  return true;
}

unsigned support_size(const LinearForm& f) {
  unsigned s = 0;
  for (const auto& c : f) s += (c != 0);
  return s;
}

LinearForm sign_normalized(LinearForm f) {
  for (const auto& c : f) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& x : f) x = -x;
    break;
  }
  return f;
}

std::string form_to_string(const LinearForm& f) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Integer& c = f[i];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) os << mag.get_str() << "*";
    os << "x" << i + 1;
  }
  return first ? "0" : os.str();
}

LinearForm coordinate_form(unsigned n, unsigned i) {
  LinearForm f(n, 0);
  f.at(i) = 1;
  return f;
}

}  // namespace motint
