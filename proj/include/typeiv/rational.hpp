#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <string>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace typeiv {

// Arbitrary-precision rational, kept canonical (lowest terms, positive
// denominator) by construction.
using Rational = mpq_class;
using Integer = mpz_class;

using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign_of(const Rational& x) { return sgn(x); }

inline double to_double(const Rational& x) { return x.get_d(); }

// Accepts "p", "p/q" and plain decimal integers; canonicalizes.
Rational rational_from_string(const std::string& s);

std::string to_string(const Rational& x);

// Rescales to coprime integer coordinates with the first nonzero entry
// positive. The zero vector is returned unchanged.
RatVec primitive_rescale(const RatVec& v);

RatMat rat_mat_from_longs(std::initializer_list<std::initializer_list<long>> rows);
RatVec rat_vec_from_longs(std::initializer_list<long> entries);

}  // namespace typeiv
