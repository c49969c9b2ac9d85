#include "aqw/reproduce.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "aqw/csv.hpp"
#include "aqw/entanglement.hpp"

namespace aqw {

std::string FigureData::to_csv() const {
  std::ostringstream os;
  os << "series,x,y\n";
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i)
      os << s.label << "," << format_double(s.x[i]) << "," << format_double(s.y[i]) << "\n";
  return os.str();
}

std::string FigureData::to_plot_data() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : series) {
    if (!first) os << "\n";
    first = false;
    os << "# " << s.label << "  (" << xlabel << " vs " << ylabel << ")\n";
    for (std::size_t i = 0; i < s.x.size(); ++i)
      os << format_double(s.x[i]) << " " << format_double(s.y[i]) << "\n";
  }
  return os.str();
}

std::vector<std::string> figure_targets() {
  return {"fig2a", "fig2b", "fig3a", "fig3b", "fig4a", "fig4b",
          "figS1", "figS3", "figS5", "figS6"};
}

namespace {

double pi_measure(const StateTensor& s) { return pi_tangle(s).pi_xyc; }
double n_measure(const StateTensor& s) { return negativity_half(s); }

DataSeries averaged_vs_t(const std::string& label,
                         const std::function<double(const StateTensor&)>& f,
                         const CoinParams& coin, double phi, int T, int n_theta) {
  DataSeries s;
  s.label = label;
  const auto values = averaged_series(f, phi, constant_sequence(coin, T), T, n_theta);
  for (int t = 1; t <= T; ++t) {
    s.x.push_back(t);
    s.y.push_back(values[static_cast<std::size_t>(t - 1)]);
  }
  return s;
}

DataSeries point_vs_t(const std::string& label,
                      const std::function<double(const StateTensor&)>& f, const CoinParams& coin,
                      double theta, double phi, int T) {
  DataSeries s;
  s.label = label;
  const auto values = measure_series(f, InitParams(theta, phi), constant_sequence(coin, T), T);
  for (int t = 1; t <= T; ++t) {
    s.x.push_back(t);
    s.y.push_back(values[static_cast<std::size_t>(t - 1)]);
  }
  return s;
}

DataSeries theta_scan(const std::string& label,
                      const std::function<double(const StateTensor&)>& f, const CoinParams& coin,
                      double phi, int t, int n_theta) {
  DataSeries s;
  s.label = label;
  const EvolutionSequence seq = constant_sequence(coin, t);
  for (int k = 0; k < n_theta; ++k) {
    const double theta = (k == n_theta - 1) ? M_PI : M_PI * k / (n_theta - 1);
    s.x.push_back(theta);
    s.y.push_back(f(to_tensor(evolve(InitParams(theta, phi), seq, t))));
  }
  return s;
}

int pick_t(int max_t, int default_t) { return max_t > 0 ? std::min(max_t, default_t) : default_t; }

}  // namespace

FigureData reproduce_figure(const std::string& target, int max_t, int n_theta) {
  FigureData fig;
  fig.target = target;

  if (target == "fig2a" || target == "fig2b") {
    const int T = pick_t(max_t, 22);
    fig.xlabel = "t";
    fig.ylabel = "pi_av";
    if (target == "fig2a") {
      fig.series.push_back(averaged_vs_t("M1 phi=pi", pi_measure, coins::m1(), M_PI, T, n_theta));
      fig.series.push_back(
          averaged_vs_t("M1 phi=pi/2", pi_measure, coins::m1(), M_PI / 2, T, n_theta));
    } else {
      fig.series.push_back(
          averaged_vs_t("M2 phi=pi/2", pi_measure, coins::m2(), M_PI / 2, T, n_theta));
      fig.series.push_back(
          averaged_vs_t("M2 phi=pi/8", pi_measure, coins::m2(), M_PI / 8, T, n_theta));
    }
    return fig;
  }

  if (target == "fig3a") {
    const int t = pick_t(max_t, 15);
    fig.xlabel = "theta";
    fig.ylabel = "pi_xyc";
    fig.series.push_back(theta_scan("M1 phi=pi", pi_measure, coins::m1(), M_PI, t, n_theta));
    fig.series.push_back(theta_scan("M2 phi=pi/2", pi_measure, coins::m2(), M_PI / 2, t, n_theta));
    return fig;
  }
  if (target == "fig3b") {
    const int t = pick_t(max_t, 15);
    fig.xlabel = "theta";
    fig.ylabel = "N";
    fig.series.push_back(theta_scan("G1 phi=pi", n_measure, coins::g1(), M_PI, t, n_theta));
    fig.series.push_back(theta_scan("G2 phi=pi/2", n_measure, coins::g2(), M_PI / 2, t, n_theta));
    return fig;
  }

  if (target == "fig4a" || target == "fig4b") {
    const int T = pick_t(max_t, 22);
    fig.xlabel = "t";
    fig.ylabel = "N_av";
    if (target == "fig4a") {
      fig.series.push_back(averaged_vs_t("G1 phi=pi", n_measure, coins::g1(), M_PI, T, n_theta));
      fig.series.push_back(
          averaged_vs_t("G1 phi=5pi/8", n_measure, coins::g1(), 5 * M_PI / 8, T, n_theta));
    } else {
      fig.series.push_back(
          averaged_vs_t("G2 phi=pi/8", n_measure, coins::g2(), M_PI / 8, T, n_theta));
      fig.series.push_back(
          averaged_vs_t("G2 phi=pi/2", n_measure, coins::g2(), M_PI / 2, T, n_theta));
    }
    return fig;
  }

  if (target == "figS1") {
    const int T = pick_t(max_t, 10);
    fig.xlabel = "t";
    fig.ylabel = "residual";
    const struct {
      const char* tag;
      CoinParams coin;
      double phi;
    } refs[] = {{"M1 phi=pi", coins::m1(), M_PI}, {"M2 phi=pi/2", coins::m2(), M_PI / 2}};
    for (const auto& ref : refs)
      for (Dof i : {Dof::X, Dof::Y, Dof::C}) {
        auto f = [i](const StateTensor& s) { return residual_pi(s, i); };
        fig.series.push_back(averaged_vs_t(
            std::string(ref.tag) + " <pi_" + dof_name(i) + ">", f, ref.coin, ref.phi, T, n_theta));
      }
    return fig;
  }

  if (target == "figS3") {
    const int T = pick_t(max_t, 10);
    fig.xlabel = "t";
    fig.ylabel = "pi_av";
    fig.series.push_back(
        averaged_vs_t("M3 phi=pi/8", pi_measure, coins::m3(), M_PI / 8, T, n_theta));
    fig.series.push_back(
        averaged_vs_t("M3 phi=pi/2", pi_measure, coins::m3(), M_PI / 2, T, n_theta));
    fig.series.push_back(
        averaged_vs_t("M4 phi=pi/2", pi_measure, coins::m4(), M_PI / 2, T, n_theta));
    fig.series.push_back(
        averaged_vs_t("M4 phi=pi/8", pi_measure, coins::m4(), M_PI / 8, T, n_theta));
    return fig;
  }

  if (target == "figS5") {
    const int T = pick_t(max_t, 10);
    fig.xlabel = "t";
    fig.ylabel = "N_av";
    fig.series.push_back(averaged_vs_t("G3 phi=pi/2", n_measure, coins::g3(), M_PI / 2, T, n_theta));
    fig.series.push_back(averaged_vs_t("G3 phi=pi/8", n_measure, coins::g3(), M_PI / 8, T, n_theta));
    fig.series.push_back(averaged_vs_t("G4 phi=pi/2", n_measure, coins::g4(), M_PI / 2, T, n_theta));
    fig.series.push_back(averaged_vs_t("G4 phi=pi/8", n_measure, coins::g4(), M_PI / 8, T, n_theta));
    return fig;
  }

  if (target == "figS6") {
    const int T = pick_t(max_t, 25);
    fig.xlabel = "t";
    fig.ylabel = "N";
    fig.series.push_back(
        point_vs_t("G1 theta=pi/2 phi=0", n_measure, coins::g1(), M_PI / 2, 0.0, T));
    fig.series.push_back(
        point_vs_t("G2 theta=pi/2 phi=pi/2", n_measure, coins::g2(), M_PI / 2, M_PI / 2, T));
    fig.series.push_back(
        point_vs_t("HxHy theta=pi/2 phi=pi/2", n_measure, coins::hadamard(), M_PI / 2, M_PI / 2, T));
    return fig;
  }

  std::string names;
  for (const auto& n : figure_targets()) names += " " + n;
  throw std::invalid_argument("unknown reproduce target '" + target + "'; available:" + names +
                              " table1 table2");
}

}  // namespace aqw
