#pragma once
// Clock/shift realisations used as independent numeric oracles in the tests.
#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>

#include "qbax/presentation.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using C = std::complex<double>;

inline constexpr int kN = 7;
inline const C kQ = std::polar(1.0, 2 * 3.14159265358979323846 / kN);

// X clock, Y shift: X Y = q Y X.
inline Mat clock_m() {
  Mat x = Mat::Zero(kN, kN);
  for (int j = 0; j < kN; ++j) x(j, j) = std::pow(kQ, j);
  return x;
}
inline Mat shift_m() {
  Mat y = Mat::Zero(kN, kN);
  for (int j = 0; j < kN; ++j) y((j + 1) % kN, j) = 1.0;
  return y;
}

// a = X, b = Y, c = alpha Y, d = X^-1 + q^-1 alpha Y^2 X^-1, theta = Y^-1.
inline std::map<std::string, Mat> glq2_images(C alpha = C(0.6, 0.2)) {
  Mat X = clock_m(), Y = shift_m(), Xi = X.inverse(), Yi = Y.inverse();
  return {{"a", X}, {"b", Y}, {"c", alpha * Y}, {"d", Xi + alpha / kQ * Y * Y * Xi}, {"theta", Yi}};
}

// u = X, ut = z X^-1, v = Y, vinv = Y^-1.
inline std::map<std::string, Mat> weyl_images(C z = C(0.9, -0.4)) {
  Mat X = clock_m(), Y = shift_m();
  return {{"u", X}, {"ut", z * X.inverse()}, {"v", Y}, {"vinv", Y.inverse()}};
}

inline qbax::ParamValues at_q() {
  qbax::ParamValues v = qbax::default_param_values();
  v[static_cast<std::size_t>(qbax::Param::q)] = kQ;
  return v;
}

inline Mat eval(const qbax::NCPoly& p, const qbax::Presentation& pres, const std::map<std::string, Mat>& img, int sites) {
  const int dim = static_cast<int>(std::pow(kN, sites));
  Mat out = Mat::Zero(dim, dim);
  for (const auto& [w, c] : p.terms()) {
    std::vector<Mat> factor(static_cast<std::size_t>(sites), Mat::Identity(kN, kN));
    for (const auto& l : w) factor[l.site] = factor[l.site] * img.at(pres.generator_name(l.gen));
    Mat m = factor[0];
    for (int s = 1; s < sites; ++s) m = Eigen::kroneckerProduct(m, factor[static_cast<std::size_t>(s)]).eval();
    out += c.evaluate(at_q()) * m;
  }
  return out;
}

}  // namespace oracle
