#include "gcs4/gaussian.hpp"

#include <ostream>
#include <sstream>

namespace gcs4 {

std::string GaussianRational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  if (z.im_.is_zero()) return os << z.re_;
  if (z.re_.is_zero()) return os << z.im_ << "i";
  os << z.re_;
  if (z.im_.sign() >= 0) os << '+';
  return os << z.im_ << "i";
}

}  // namespace gcs4
