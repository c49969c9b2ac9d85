#ifndef AQW_REPRODUCE_HPP
#define AQW_REPRODUCE_HPP

#include <string>
#include <vector>

namespace aqw {

struct DataSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct FigureData {
  std::string target;
  std::string xlabel;
  std::string ylabel;
  std::vector<DataSeries> series;

  std::string to_csv() const;       // header series,x,y
  std::string to_plot_data() const; // two-column blocks separated by blank lines
};

// Named figure targets (the argmax tables are handled by reproduce_table):
//   fig2a fig2b  averaged pi-tangle vs t          (M1, M2)
//   fig3a        pi-tangle vs theta at t=15       (M1, M2)
//   fig3b        xy negativity vs theta at t=15   (G1, G2)
//   fig4a fig4b  averaged xy negativity vs t      (G1, G2)
//   figS1        averaged residuals vs t          (M1, M2)
//   figS3        averaged pi-tangle vs t          (M3, M4)
//   figS5        averaged xy negativity vs t      (G3, G4)
//   figS6        xy negativity vs t, reference coins vs Hadamard baseline
std::vector<std::string> figure_targets();

// max_t = -1 keeps each target's documented default range.
// Throws std::invalid_argument for unknown targets.
FigureData reproduce_figure(const std::string& target, int max_t = -1,
                            int n_theta = 33);

}  // namespace aqw

#endif
