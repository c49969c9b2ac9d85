#include "aqw/coin.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "aqw/angles.hpp"

namespace aqw {

CoinParams::CoinParams(double a, double b, double g)
    : alpha(canonical_two_pi(a)), beta(canonical_two_pi(b)), gamma(canonical_two_pi(g)) {}

Eigen::Matrix2cd build_coin(const CoinParams& p) {
  using namespace std::complex_literals;
  const double ca = std::cos(p.alpha);
  const double sa = std::sin(p.alpha);
  Eigen::Matrix2cd c;
  c(0, 0) = ca;
  c(0, 1) = std::exp(1i * p.beta) * sa;
  c(1, 0) = std::exp(1i * p.gamma) * sa;
  c(1, 1) = -std::exp(1i * (p.beta + p.gamma)) * ca;
  double residue = (c.adjoint() * c - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  if (!(residue <= 1e-12)) throw std::logic_error("build_coin: matrix not unitary");
  return c;
}

namespace coins {

CoinParams hadamard() { return {M_PI / 4, 0.0, 0.0}; }
CoinParams m1() { return {5 * M_PI / 16, M_PI / 2, M_PI / 2}; }
CoinParams m2() { return {5 * M_PI / 16, M_PI, M_PI / 4}; }
CoinParams m3() { return {5 * M_PI / 16, 6 * M_PI / 16, M_PI / 2}; }
CoinParams m4() { return {11 * M_PI / 16, M_PI, M_PI / 8}; }
CoinParams g1() { return {19 * M_PI / 16, M_PI / 2, M_PI / 2}; }
CoinParams g2() { return {19 * M_PI / 16, M_PI, M_PI / 16}; }
CoinParams g3() { return {19 * M_PI / 16, 11 * M_PI / 8, M_PI / 2}; }
CoinParams g4() { return {5 * M_PI / 16, M_PI, M_PI / 8}; }

std::optional<CoinParams> by_name(std::string_view name) {
  std::string lower;
  lower.reserve(name.size());
  for (char ch : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower == "m1") return m1();
  if (lower == "m2") return m2();
  if (lower == "m3") return m3();
  if (lower == "m4") return m4();
  if (lower == "g1") return g1();
  if (lower == "g2") return g2();
  if (lower == "g3") return g3();
  if (lower == "g4") return g4();
  if (lower == "h" || lower == "hadamard") return hadamard();
  return std::nullopt;
}

}  // namespace coins

}  // namespace aqw
