#ifndef AQW_COIN_HPP
#define AQW_COIN_HPP

#include <Eigen/Dense>
#include <optional>
#include <string_view>

namespace aqw {

// Parameters of the single-qubit coin
//   C(a,b,g) = [ cos a            e^{ib} sin a   ]
//              [ e^{ig} sin a    -e^{i(b+g)} cos a ]
// Angles are wrapped into [0, 2*pi) on construction.
struct CoinParams {
  double alpha;
  double beta;
  double gamma;

  CoinParams(double a, double b, double g);
};

// Builds the 2x2 coin matrix; throws std::logic_error if the result is not
// unitary to 1e-12 (cannot happen for finite inputs, kept as a post check).
Eigen::Matrix2cd build_coin(const CoinParams& p);

namespace coins {

CoinParams hadamard();  // C(pi/4, 0, 0)
CoinParams m1();        // C(5pi/16,  pi/2, pi/2)
CoinParams m2();        // C(5pi/16,  pi,   pi/4)
CoinParams m3();        // C(5pi/16,  6pi/16, pi/2)
CoinParams m4();        // C(11pi/16, pi,   pi/8)
CoinParams g1();        // C(19pi/16, pi/2, pi/2)
CoinParams g2();        // C(19pi/16, pi,   pi/16)
CoinParams g3();        // C(19pi/16, 11pi/8, pi/2)
CoinParams g4();        // C(5pi/16,  pi,   pi/8)

// Case-insensitive lookup of the names above plus "H"/"Hadamard".
std::optional<CoinParams> by_name(std::string_view name);

}  // namespace coins

}  // namespace aqw

#endif
