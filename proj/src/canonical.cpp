#include "aqw/canonical.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "aqw/entanglement.hpp"

namespace aqw {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

CanonicalState make_canonical(CanonicalName name) {
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  CanonicalState s{name, StateTensor(2, 2)};
  StateTensor& a = s.amplitudes;
  switch (name) {
    case CanonicalName::GHZ:
      a.at(0, 0, 0) = r2;
      a.at(1, 1, 1) = r2;
      break;
    case CanonicalName::W:
      a.at(1, 0, 0) = r3;
      a.at(0, 1, 0) = r3;
      a.at(0, 0, 1) = r3;
      break;
    case CanonicalName::FlippedW:
      a.at(1, 1, 0) = r3;
      a.at(1, 0, 1) = r3;
      a.at(0, 1, 1) = r3;
      break;
    case CanonicalName::BisepX:
      a.at(0, 0, 0) = r2;
      a.at(0, 1, 1) = r2;
      break;
    case CanonicalName::BisepY:
      a.at(0, 0, 0) = r2;
      a.at(1, 0, 1) = r2;
      break;
    case CanonicalName::BisepC:
      a.at(0, 0, 0) = r2;
      a.at(1, 1, 0) = r2;
      break;
    case CanonicalName::Product:
      a.at(0, 0, 0) = 1.0;
      break;
  }
  return s;
}

CanonicalName canonical_from_string(std::string_view name) {
  std::string lower;
  for (char ch : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower == "ghz") return CanonicalName::GHZ;
  if (lower == "w") return CanonicalName::W;
  if (lower == "flippedw" || lower == "flipped_w") return CanonicalName::FlippedW;
  if (lower == "bisep_x" || lower == "bisepx") return CanonicalName::BisepX;
  if (lower == "bisep_y" || lower == "bisepy") return CanonicalName::BisepY;
  if (lower == "bisep_c" || lower == "bisepc") return CanonicalName::BisepC;
  if (lower == "product") return CanonicalName::Product;
  throw std::invalid_argument("unknown canonical state: '" + std::string(name) + "'");
}

const char* canonical_to_string(CanonicalName name) {
  switch (name) {
    case CanonicalName::GHZ: return "GHZ";
    case CanonicalName::W: return "W";
    case CanonicalName::FlippedW: return "flippedW";
    case CanonicalName::BisepX: return "bisep_x";
    case CanonicalName::BisepY: return "bisep_y";
    case CanonicalName::BisepC: return "bisep_c";
    default: return "product";
  }
}

Eigen::Matrix2cd haar_unitary_2x2(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Matrix2cd z;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) z(r, c) = std::complex<double>(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(z);
  Eigen::Matrix2cd q = qr.householderQ();
  Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 2; ++i) {
    const std::complex<double> d = r(i, i);
    q.col(i) *= (d == 0.0) ? 1.0 : d / std::abs(d);
  }
  return q;
}

StateTensor apply_local_unitaries(const StateTensor& s, const Eigen::Matrix2cd& ux,
                                  const Eigen::Matrix2cd& uy, const Eigen::Matrix2cd& uc) {
  if (s.dx != 2 || s.dy != 2)
    throw std::invalid_argument("apply_local_unitaries: expects a 2x2x2 tensor");
  StateTensor out(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        std::complex<double> acc = 0.0;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) acc += ux(i, a) * uy(j, b) * uc(k, c) * s.at(a, b, c);
        out.at(i, j, k) = acc;
      }
  return out;
}

bool CheckReport::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

int CheckReport::failures() const {
  int n = 0;
  for (const auto& r : rows)
    if (!r.pass) ++n;
  return n;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << title << "\n";
  if (!meta.empty()) os << meta << "\n";
  std::size_t wc = 5, wi = 4, we = 8, wa = 6;
  for (const auto& r : rows) {
    wc = std::max(wc, r.check.size());
    wi = std::max(wi, r.item.size());
    we = std::max(we, r.expected.size());
    wa = std::max(wa, r.actual.size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  os << pad("check", wc) << "  " << pad("case", wi) << "  " << pad("expected", we) << "  "
     << pad("actual", wa) << "  pass\n";
  for (const auto& r : rows)
    os << pad(r.check, wc) << "  " << pad(r.item, wi) << "  " << pad(r.expected, we) << "  "
       << pad(r.actual, wa) << "  " << (r.pass ? "yes" : "NO") << "\n";
  os << (all_pass() ? "ALL CHECKS PASSED" : std::to_string(failures()) + " CHECK(S) FAILED")
     << "\n";
  return os.str();
}

std::string CheckReport::to_csv() const {
  std::ostringstream os;
  os << "check,case,expected,actual,pass\n";
  for (const auto& r : rows)
    os << r.check << "," << r.item << "," << r.expected << "," << r.actual << ","
       << (r.pass ? 1 : 0) << "\n";
  return os.str();
}

namespace {

struct NineNegativities {
  double one_x, one_c, one_y;       // N_{x|yc}, N_{c|xy}, N_{y|cx}
  double xy, yx, xc, cx, yc, cy;
};

void check_nine(CheckReport& rep, const char* state_name, const StateTensor& s,
                const NineNegativities& want, double tol) {
  const NegativitySet n = compute_negativities(s);
  const struct {
    const char* label;
    double got, exp;
  } items[] = {
      {"N_x|yc", n.one(Dof::X), want.one_x}, {"N_c|xy", n.one(Dof::C), want.one_c},
      {"N_y|cx", n.one(Dof::Y), want.one_y}, {"N_xy", n.pair(Dof::X, Dof::Y), want.xy},
      {"N_yx", n.pair(Dof::Y, Dof::X), want.yx}, {"N_xc", n.pair(Dof::X, Dof::C), want.xc},
      {"N_cx", n.pair(Dof::C, Dof::X), want.cx}, {"N_yc", n.pair(Dof::Y, Dof::C), want.yc},
      {"N_cy", n.pair(Dof::C, Dof::Y), want.cy},
  };
  for (const auto& it : items) {
    CheckRow row;
    row.check = "C1";
    row.item = std::string(state_name) + " " + it.label;
    row.expected = num(it.exp);
    row.actual = num(it.got);
    row.pass = std::abs(it.got - it.exp) <= tol;
    rep.rows.push_back(std::move(row));
  }
}

}  // namespace

CheckReport gme_axiom_report(int lu_samples, unsigned long long seed) {
  CheckReport rep;
  rep.title = "GME measure axiom suite (C1-C5)";
  rep.meta = "lu_samples=" + std::to_string(lu_samples) + " seed=" + std::to_string(seed);

  const auto ghz = make_canonical(CanonicalName::GHZ).amplitudes;
  const auto w = make_canonical(CanonicalName::W).amplitudes;
  const auto fw = make_canonical(CanonicalName::FlippedW).amplitudes;
  const auto bx = make_canonical(CanonicalName::BisepX).amplitudes;
  const auto by = make_canonical(CanonicalName::BisepY).amplitudes;
  const auto bc = make_canonical(CanonicalName::BisepC).amplitudes;
  const auto prod = make_canonical(CanonicalName::Product).amplitudes;

  // C1: vanishing pi-tangle on biseparable and product states
  for (const auto& [name, st] : {std::pair<const char*, const StateTensor&>{"bisep_x", bx},
                                 {"bisep_y", by},
                                 {"bisep_c", bc},
                                 {"product", prod}}) {
    const double pi = pi_tangle(st).pi_xyc;
    rep.rows.push_back({"C1", std::string(name) + " pi_xyc", "0 (+-1e-10)", num(pi),
                        std::abs(pi) <= 1e-10});
  }
  check_nine(rep, "bisep_x", bx, {0, 1, 1, 0, 0, 0, 0, 1, 1}, 1e-9);
  check_nine(rep, "bisep_y", by, {1, 1, 0, 0, 0, 1, 1, 0, 0}, 1e-9);
  check_nine(rep, "bisep_c", bc, {1, 0, 1, 1, 1, 0, 0, 0, 0}, 1e-9);
  check_nine(rep, "product", prod, {0, 0, 0, 0, 0, 0, 0, 0, 0}, 1e-9);

  // C2: positive on genuinely 3-way entangled states
  for (const auto& [name, st] :
       {std::pair<const char*, const StateTensor&>{"GHZ", ghz}, {"W", w}}) {
    const double pi = pi_tangle(st).pi_xyc;
    rep.rows.push_back({"C2", std::string(name) + " pi_xyc", "> 0", num(pi), pi > 0.0});
  }

  // C3: invariance under random local unitaries
  std::mt19937_64 rng(seed);
  for (const auto& [name, st] :
       {std::pair<const char*, const StateTensor&>{"GHZ", ghz}, {"W", w}}) {
    const double ref = pi_tangle(st).pi_xyc;
    double worst = 0.0;
    for (int k = 0; k < lu_samples; ++k) {
      const auto ux = haar_unitary_2x2(rng);
      const auto uy = haar_unitary_2x2(rng);
      const auto uc = haar_unitary_2x2(rng);
      const double rotated = pi_tangle(apply_local_unitaries(st, ux, uy, uc)).pi_xyc;
      worst = std::max(worst, std::abs(rotated - ref));
    }
    rep.rows.push_back({"C3", std::string(name) + " LU drift (" + std::to_string(lu_samples) +
                                  " samples)",
                        "<= 1e-8", num(worst), worst <= 1e-8});
  }

  // C4: cited, not machine-checked; generic LOCC protocols are not enumerable.
  rep.rows.push_back({"C4", "LOCC monotonicity", "cited (negativity is an entanglement monotone)",
                      "not machine-checked; local-unitary subcase covered by C3", true});

  // C5: GHZ ranked above W and flipped W
  const double pg = pi_tangle(ghz).pi_xyc;
  const double pw = pi_tangle(w).pi_xyc;
  const double pf = pi_tangle(fw).pi_xyc;
  rep.rows.push_back({"C5", "pi(GHZ) > pi(W)", num(pg) + " > " + num(pw), pg > pw ? "yes" : "no",
                      pg > pw});
  rep.rows.push_back({"C5", "pi(GHZ) > pi(flippedW)", num(pg) + " > " + num(pf),
                      pg > pf ? "yes" : "no", pg > pf});
  return rep;
}

CheckReport ckw_report(int samples, int t_max, unsigned long long seed) {
  if (samples < 1) throw std::invalid_argument("ckw_report: samples must be >= 1");
  CheckReport rep;
  rep.title = "CKW monogamy suite";
  rep.meta = "samples=" + std::to_string(samples) + " t_max=" + std::to_string(t_max) +
             " seed=" + std::to_string(seed);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  constexpr double kTol = -1e-8;

  for (int sample = 0; sample < samples; ++sample) {
    const CoinParams coin(2 * M_PI * u01(rng), 2 * M_PI * u01(rng), 2 * M_PI * u01(rng));
    const InitParams init(M_PI * u01(rng), 2 * M_PI * u01(rng));
    WalkState s = initial_state(init, t_max);

    {
      // the separable start carries no residual entanglement at all
      const PiTangleResult pt = pi_tangle(s);
      const bool ok = pt.pi_x == 0.0 && pt.pi_y == 0.0 && pt.pi_c == 0.0;
      rep.rows.push_back({"CKW", "sample " + std::to_string(sample) + " t=0", "pi_i = 0",
                          num(std::max({std::abs(pt.pi_x), std::abs(pt.pi_y), std::abs(pt.pi_c)})),
                          ok});
    }
    for (int t = 1; t <= t_max; ++t) {
      s = step(s, coin);
      const PiTangleResult pt = pi_tangle(s);
      const double worst = std::min({pt.pi_x, pt.pi_y, pt.pi_c});
      rep.rows.push_back({"CKW", "sample " + std::to_string(sample) + " t=" + std::to_string(t),
                          ">= -1e-8", num(worst), worst >= kTol});
    }
  }

  // theta-averaged residuals for the two reference 3-way sequences
  const struct {
    const char* name;
    CoinParams coin;
    double phi;
  } refs[] = {{"M1 phi=pi", coins::m1(), M_PI}, {"M2 phi=pi/2", coins::m2(), M_PI / 2}};
  for (const auto& ref : refs) {
    const EvolutionSequence seq = constant_sequence(ref.coin, 6);
    for (Dof i : {Dof::X, Dof::Y, Dof::C}) {
      const auto series = averaged_series(
          [i](const StateTensor& st) { return residual_pi(st, i); }, ref.phi, seq, 6, 33);
      double worst = series[0];
      for (double v : series) worst = std::min(worst, v);
      rep.rows.push_back({"CKW-av",
                          std::string(ref.name) + " <pi_" + dof_name(i) + "> t<=6",
                          ">= -1e-8", num(worst), worst >= kTol});
    }
  }
  return rep;
}

}  // namespace aqw
