#pragma once

#include <Eigen/Core>

#include <string>

#include "typeiv/errors.hpp"
#include "typeiv/rational.hpp"

namespace typeiv {

// Element a + b*zeta of Q(zeta_L) for the imaginary quadratic cyclotomic
// fields, L in {3,4,6}.  zeta satisfies zeta^2 = trace*zeta - 1 with
// trace = zeta + conj(zeta) in {-1,0,1}; conjugation sends zeta to
// zeta^{-1} = trace - zeta.
template <int L>
struct Cyclo {
  static_assert(L == 3 || L == 4 || L == 6,
                "only the imaginary quadratic cyclotomic fields are supported");
  static constexpr int kTrace = (L == 3 ? -1 : L == 4 ? 0 : 1);

  Rational a{};
  Rational b{};

  Cyclo() = default;
  Cyclo(int x) : a(x) {}  // NOLINT: implicit by design, Eigen needs Scalar(0)
  Cyclo(Rational x) : a(std::move(x)) {}
  Cyclo(Rational x, Rational y) : a(std::move(x)), b(std::move(y)) {}

  static Cyclo zeta() { return Cyclo(Rational(0), Rational(1)); }

  bool is_zero() const { return sign_of(a) == 0 && sign_of(b) == 0; }
  bool is_rational() const { return sign_of(b) == 0; }

  Cyclo operator-() const { return Cyclo(-a, -b); }
  Cyclo& operator+=(const Cyclo& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  Cyclo& operator-=(const Cyclo& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  Cyclo& operator*=(const Cyclo& o) {
    Rational na = a * o.a - b * o.b;
    Rational nb = a * o.b + b * o.a + Rational(kTrace) * b * o.b;
    a = std::move(na);
    b = std::move(nb);
    return *this;
  }
  Cyclo& operator/=(const Cyclo& o);

  friend Cyclo operator+(Cyclo x, const Cyclo& y) { return x += y; }
  friend Cyclo operator-(Cyclo x, const Cyclo& y) { return x -= y; }
  friend Cyclo operator*(Cyclo x, const Cyclo& y) { return x *= y; }
  friend Cyclo operator/(Cyclo x, const Cyclo& y) { return x /= y; }
  friend bool operator==(const Cyclo& x, const Cyclo& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const Cyclo& x, const Cyclo& y) { return !(x == y); }
};

template <int L>
Cyclo<L> conj(const Cyclo<L>& z) {
  return Cyclo<L>(z.a + Rational(Cyclo<L>::kTrace) * z.b, -z.b);
}

// z * conj(z), a nonnegative rational.
template <int L>
Rational field_norm(const Cyclo<L>& z) {
  return z.a * z.a + Rational(Cyclo<L>::kTrace) * z.a * z.b + z.b * z.b;
}

template <int L>
Cyclo<L>& Cyclo<L>::operator/=(const Cyclo& o) {
  if (o.is_zero()) fail(ErrorKind::MalformedInput, "division by zero in Q(zeta)");
  Rational n = field_norm(o);
  *this *= conj(o);
  a /= n;
  b /= n;
  return *this;
}

template <int L>
std::string to_string(const Cyclo<L>& z) {
  return to_string(z.a) + (sign_of(z.b) >= 0 ? "+" : "") + to_string(z.b) + "*z" +
         std::to_string(L);
}

// Exact Gaussian rationals: Q(i) with re/im coordinates.
using GaussQ = Cyclo<4>;

inline const Rational& real_part(const GaussQ& z) { return z.a; }
inline const Rational& imag_part(const GaussQ& z) { return z.b; }
inline GaussQ gauss_i() { return GaussQ::zeta(); }

template <int L>
using CycMat = Eigen::Matrix<Cyclo<L>, Eigen::Dynamic, Eigen::Dynamic>;
template <int L>
using CycVec = Eigen::Matrix<Cyclo<L>, Eigen::Dynamic, 1>;
using GaussMat = CycMat<4>;
using GaussVec = CycVec<4>;

}  // namespace typeiv

namespace Eigen {

// Declared as a non-complex field scalar: Eigen never needs to introspect
// real/imaginary parts, conjugation is always explicit in our code.
template <int L>
struct NumTraits<typeiv::Cyclo<L>> : GenericNumTraits<typeiv::Cyclo<L>> {
  typedef typeiv::Cyclo<L> Real;
  typedef typeiv::Cyclo<L> NonInteger;
  typedef typeiv::Cyclo<L> Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 200,
    MulCost = 400
  };
};

}  // namespace Eigen
