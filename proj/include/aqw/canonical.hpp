#ifndef AQW_CANONICAL_HPP
#define AQW_CANONICAL_HPP

#include <Eigen/Dense>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "aqw/state_tensor.hpp"

namespace aqw {

enum class CanonicalName { GHZ, W, FlippedW, BisepX, BisepY, BisepC, Product };

struct CanonicalState {
  CanonicalName name;
  StateTensor amplitudes;  // dims (2, 2, 2), labels (x, y, c)
};

// Exact closed-form fixtures:
//   GHZ      (|000> + |111>)/sqrt2
//   W        (|100> + |010> + |001>)/sqrt3
//   flippedW (|110> + |101> + |011>)/sqrt3
//   bisep_x  |0_x> (x) (|00> + |11>)/sqrt2
//   bisep_y  (|000> + |101>)/sqrt2
//   bisep_c  (|00> + |11>)/sqrt2 (x) |0_c>
//   product  |000>
CanonicalState make_canonical(CanonicalName name);
CanonicalName canonical_from_string(std::string_view name);  // throws on unknown
const char* canonical_to_string(CanonicalName name);

// Haar-random 2x2 unitary: QR of a complex Gaussian matrix with the
// diagonal of R phase-fixed.
Eigen::Matrix2cd haar_unitary_2x2(std::mt19937_64& rng);

StateTensor apply_local_unitaries(const StateTensor& s, const Eigen::Matrix2cd& ux,
                                  const Eigen::Matrix2cd& uy, const Eigen::Matrix2cd& uc);

struct CheckRow {
  std::string check;
  std::string item;
  std::string expected;
  std::string actual;
  bool pass = true;
};

struct CheckReport {
  std::string title;
  std::string meta;  // seed and sample counts, for reproducibility
  std::vector<CheckRow> rows;

  bool all_pass() const;
  int failures() const;
  std::string to_text() const;  // plain-text table
  std::string to_csv() const;   // header check,case,expected,actual,pass
};

// Measure-axiom harness over the canonical fixtures:
//   C1  pi-tangle vanishes on biseparable/product states, and the nine
//       negativities of each biseparable state match their closed forms
//   C2  pi-tangle positive on GHZ and W
//   C3  pi-tangle invariant under random local unitaries
//   C4  cited, not machine-checked (monotonicity under LOCC)
//   C5  GHZ ranked above W and flipped W
CheckReport gme_axiom_report(int lu_samples = 50, unsigned long long seed = 20240901ull);

// Random-walk monogamy suite: draws (coin, theta, phi) samples, evolves to
// each t <= t_max and checks pi_x, pi_y, pi_c >= -1e-8; also checks the
// theta-averaged residuals for the two reference 3-way sequences.
CheckReport ckw_report(int samples, int t_max, unsigned long long seed);

}  // namespace aqw

#endif
