#include "positroid/rational.hpp"

#include <ostream>

namespace positroid {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace positroid
