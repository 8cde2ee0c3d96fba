#include "wichtel/exact.hpp"

#include <mpfr.h>

#include <stdexcept>

#include "wichtel/errors.hpp"

namespace wichtel {

double to_double(const ExactRatio& q) {
  // mpq_get_d truncates toward zero; go through MPFR to round to nearest.
  mpfr_t t;
  mpfr_init2(t, 53);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
  double d = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return d;
}

ExactCount to_integer(const ExactRatio& q) {
  ExactRatio r = q;
  r.canonicalize();
  if (r.get_den() != 1) {
    throw InvariantViolation("rational did not reduce to an integer: " +
                             ratio_to_string(r));
  }
  return r.get_num();
}

std::string count_to_string(const ExactCount& c) { return c.get_str(); }

std::string ratio_to_string(const ExactRatio& q) {
  ExactRatio r = q;
  r.canonicalize();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

ExactCount count_from_string(const std::string& s) {
  ExactCount c;
  if (c.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: " + s);
  }
  return c;
}

ExactRatio ratio_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    return ExactRatio(count_from_string(s));
  }
  ExactCount num = count_from_string(s.substr(0, slash));
  ExactCount den = count_from_string(s.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator: " + s);
  }
  ExactRatio q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace wichtel
