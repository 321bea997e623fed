#include "typeiv/geomclass.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace typeiv {

int boundary_pair_type(int weight_of_f) {
  if (weight_of_f < 0 || weight_of_f > 2)
    fail(ErrorKind::MalformedInput,
         "w(F) = " + std::to_string(weight_of_f) + " is not a boundary-pair weight");
  return weight_of_f + 1;
}

SingularityLabel parse_singularity(const std::string& text) {
  SingularityLabel out;
  out.text = text;
  if (text.empty()) fail(ErrorKind::MalformedInput, "empty singularity label");
  auto ade = [&](char family, long n) {
    if ((family == 'A' && n >= 1) || (family == 'D' && n >= 4) ||
        (family == 'E' && (n == 6 || n == 7 || n == 8))) {
      out.kind = SingularityKind::ADE;
      return true;
    }
    return false;
  };
  if (text[0] == 'A' || text[0] == 'D' || text[0] == 'E') {
    try {
      size_t used = 0;
      long n = std::stol(text.substr(1), &used);
      if (used + 1 == text.size() && ade(text[0], n)) return out;
    } catch (...) {
    }
    fail(ErrorKind::MalformedInput, "bad rational double point label '" + text + "'");
  }
  if (text == "Cusp") {
    out.kind = SingularityKind::Cusp;
    return out;
  }
  if (text.rfind("SimpleElliptic", 0) == 0) {
    out.kind = SingularityKind::SimpleElliptic;
    if (text.size() > 14) {
      if (text[14] != ':')
        fail(ErrorKind::MalformedInput, "bad singularity label '" + text + "'");
      try {
        out.degree = std::stoi(text.substr(15));
      } catch (...) {
        fail(ErrorKind::MalformedInput, "bad simple-elliptic degree in '" + text + "'");
      }
    }
    return out;
  }
  if (text.rfind("Other", 0) == 0) {
    out.kind = SingularityKind::Other;
    return out;
  }
  fail(ErrorKind::MalformedInput, "unknown singularity label '" + text + "'");
}

K3DegenerationClass k3_degeneration_type(const std::vector<SingularityLabel>& sings) {
  bool cusp = false, se = false;
  for (const auto& s : sings) {
    switch (s.kind) {
      case SingularityKind::Other: return K3DegenerationClass::Unknown;
      case SingularityKind::Cusp: cusp = true; break;
      case SingularityKind::SimpleElliptic: se = true; break;
      case SingularityKind::ADE: break;
    }
  }
  // a cusp contributes a weight-2 class that survives in the limit, so it
  // dominates any simple-elliptic point
  if (cusp) return K3DegenerationClass::Type3;
  if (se) return K3DegenerationClass::Type2;
  return K3DegenerationClass::FiniteMonodromy;
}

int kulikov_classify(const KulikovFiber& f) {
  auto reject = [](const std::string& rule) {
    fail(ErrorKind::MalformedInput, "inconsistent Kulikov fiber: " + rule);
  };
  if (f.components.empty()) reject("a fiber needs at least one component");
  switch (f.dual_complex) {
    case DualComplex::Point:
      if (f.components.size() != 1) reject("point dual complex needs exactly one component");
      if (f.components[0] != ComponentKind::K3) reject("a smooth fiber is a K3 component");
      if (f.double_curves != DoubleCurves::None) reject("a smooth fiber has no double curves");
      return 1;
    case DualComplex::Interval:
      if (f.components.size() < 2) reject("a chain has at least two components");
      if (f.components.front() != ComponentKind::Rational ||
          f.components.back() != ComponentKind::Rational)
        reject("chain ends must be rational surfaces");
      for (size_t i = 1; i + 1 < f.components.size(); ++i)
        if (f.components[i] != ComponentKind::EllipticRuled)
          reject("chain interior must be elliptic ruled surfaces");
      if (f.double_curves != DoubleCurves::SmoothGenusOne)
        reject("chain double curves are smooth genus-one curves");
      return 2;
    case DualComplex::TriangulatedTwoSphere:
      for (const auto& c : f.components)
        if (c != ComponentKind::Rational)
          reject("two-sphere configurations consist of rational surfaces");
      if (f.double_curves != DoubleCurves::RationalCycles)
        reject("two-sphere double curves are anticanonical rational cycles");
      return 3;
  }
  reject("unknown dual complex");
  return 0;
}

std::vector<Integer> smith_invariant_factors(
    Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Integer> factors;
  Eigen::Index k = 0;
  while (k < rows && k < cols) {
    // find a nonzero pivot
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = k; i < rows && pi < 0; ++i)
      for (Eigen::Index j = k; j < cols; ++j)
        if (m(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    m.row(pi).swap(m.row(k));
    m.col(pj).swap(m.col(k));
    bool reduced = false;
    while (!reduced) {
      reduced = true;
      for (Eigen::Index i = k + 1; i < rows; ++i)
        while (m(i, k) != 0) {
          Integer q = m(i, k) / m(k, k);
          m.row(i) -= q * m.row(k);
          if (m(i, k) != 0) {
            m.row(i).swap(m.row(k));
            reduced = false;
          }
        }
      for (Eigen::Index j = k + 1; j < cols; ++j)
        while (m(k, j) != 0) {
          Integer q = m(k, j) / m(k, k);
          m.col(j) -= q * m.col(k);
          if (m(k, j) != 0) {
            m.col(j).swap(m.col(k));
            reduced = false;
          }
        }
    }
    ++k;
  }
  for (Eigen::Index i = 0; i < k; ++i) factors.push_back(abs(m(i, i)));
  // enforce divisibility d1 | d2 | ...
  for (size_t i = 0; i + 1 < factors.size(); ++i)
    for (size_t j = i + 1; j < factors.size(); ++j) {
      Integer g = gcd(factors[i], factors[j]);
      Integer l = factors[i] / g * factors[j];
      factors[i] = g;
      factors[j] = l;
    }
  return factors;
}

GaussLatticeReport gauss_lattice_report() {
  GaussLatticeReport rep;
  RatMat gram = diag_gram({-2, -2});
  RatMat g = rat_mat_from_longs({{0, -1}, {1, 0}});
  rep.signature = signature_of(gram);
  RatMat g2 = g * g;
  rep.g_squared_is_minus_one = g2 == RatMat(-RatMat::Identity(2, 2)) &&
                               RatMat(g.transpose() * gram * g) == gram;
  rep.gamma_self_intersection = static_cast<long>(gram(0, 0).get_num().get_si());

  Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic> gz(2, 2);
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j) gz(i, j) = gram(i, j).get_num();
  std::vector<Integer> inv = smith_invariant_factors(gz);
  rep.discriminant_order = 1;
  for (const auto& f : inv) {
    if (f != 1) rep.invariant_factors.push_back(f.get_si());
    rep.discriminant_order *= f.get_si();
  }

  // dual classes: representatives of G^{-1}Z^2 / Z^2 inside [0,1)^2
  RatMat ginv = inverse(gram);
  std::map<std::string, RatVec> classes;
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b) {
      RatVec k = rat_vec_from_longs({a, b});
      RatVec x = ginv * k;
      RatVec rep_x(2);
      for (int i = 0; i < 2; ++i) {
        Rational v = x(i);
        Integer fl = v.get_num() / v.get_den();  // truncation, fix below
        Rational fr = v - Rational(fl);
        if (sign_of(fr) < 0) fr += 1;
        rep_x(i) = fr;
      }
      classes.emplace(rep_x(0).get_str() + "," + rep_x(1).get_str(), rep_x);
    }
  int idx = 0;
  for (const auto& [key, x] : classes) {
    if (sign_of(x(0)) == 0 && sign_of(x(1)) == 0) continue;  // the trivial class
    Rational q = (x.transpose() * gram * x)(0, 0);
    rep.q_values.push_back(q);
    // isotropic in the discriminant form: q = 0 mod 2Z
    Rational r = q / 2;
    if (r.get_den() == 1) rep.isotropic_classes.push_back(idx);
    ++idx;
  }
  rep.has_even_overlattice = !rep.isotropic_classes.empty();
  return rep;
}

TubeIntegralResult tube_integral_check(double epsilon, int quadrature_points) {
  if (quadrature_points < 16)
    fail(ErrorKind::MalformedInput, "quadrature needs at least 16 points per axis");
  if (epsilon <= 0) fail(ErrorKind::MalformedInput, "tube radius must be positive");
  const int n_theta = quadrature_points;
  int n_t = quadrature_points + (quadrature_points % 2);  // Simpson needs even panels
  const double two_pi = 2.0 * std::numbers::pi;
  Cx total(0, 0);
  for (int a = 0; a < n_theta; ++a) {
    double theta = two_pi * a / n_theta;
    Cx x = epsilon * std::exp(Cx(0, theta));
    Cx inner(0, 0);
    for (int b = 0; b <= n_t; ++b) {
      double t = -1.0 + 2.0 * b / n_t;
      Cx zp = 0.5 * x * (1.0 + t);
      Cx zm = 0.5 * x * (t - 1.0);
      Cx dz = zp - zm;
      // dz'^dz'' = (dth z' dt z'' - dt z' dth z'') dtheta^dt
      Cx dth_zp = Cx(0, 1) * x * 0.5 * (1.0 + t);
      Cx dt_zp = 0.5 * x;
      Cx dth_zm = Cx(0, 1) * x * 0.5 * (t - 1.0);
      Cx dt_zm = 0.5 * x;
      Cx jac = dth_zp * dt_zm - dt_zp * dth_zm;
      double w = (b == 0 || b == n_t) ? 1.0 : (b % 2 ? 4.0 : 2.0);
      inner += w * jac / (dz * dz);
    }
    inner *= (2.0 / n_t) / 3.0;  // Simpson weights on [-1,1]
    total += inner;
  }
  total *= two_pi / n_theta;  // periodic trapezoid in theta
  TubeIntegralResult res;
  res.value = total;
  res.magnitude_error = std::abs(std::abs(total) - two_pi);
  res.real_part = total.real();
  res.points = quadrature_points;
  return res;
}

}  // namespace typeiv
