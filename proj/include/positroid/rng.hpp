#pragma once

#include <cstdint>
#include <random>

#include "positroid/rational.hpp"

namespace positroid {

// Seeded source of random exact scalars. All randomized checks in the library
// draw from this so a logged seed reproduces a run exactly. Random rationals
// are integers with numerator uniform in [1,100], which keeps bit growth in
// downstream exact determinants tame.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  Rational positive_rational() {
    std::uniform_int_distribution<long> d(1, 100);
    return Rational(d(gen_));
  }

  long uniform(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(gen_);
  }

  std::mt19937_64& raw() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace positroid
