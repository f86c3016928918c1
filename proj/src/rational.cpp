#include "gcs4/rational.hpp"

#include <ostream>
#include <sstream>

namespace gcs4 {

Rational Rational::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  mpq_class v;
  // mpq_class::set_str accepts "p" and "p/q"; reject whitespace and other
  // junk up front so errors carry the offending text.
  if (s.find_first_not_of("0123456789+-/") != std::string::npos ||
      v.set_str(s, 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
  if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  v.canonicalize();
  return Rational(v);
}

std::string Rational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  if (r.v_.get_den() == 1) {
    os << r.v_.get_num().get_str();
  } else {
    os << r.v_.get_num().get_str() << '/' << r.v_.get_den().get_str();
  }
  return os;
}

}  // namespace gcs4
