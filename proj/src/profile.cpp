#include "bcs/profile.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <stdexcept>

namespace bcs {

std::vector<ProfilePoint> performance_profile(std::span<const BenchRecord> records) {
  std::vector<std::string> combos;
  std::vector<std::string> graphs;
  std::map<std::pair<std::string, std::string>, double> time;
  for (const auto& r : records) {
    if (std::find(combos.begin(), combos.end(), r.combo) == combos.end()) combos.push_back(r.combo);
    if (std::find(graphs.begin(), graphs.end(), r.graph) == graphs.end()) graphs.push_back(r.graph);
    time[{r.graph, r.combo}] = std::max(r.total_s, kMinProfileSeconds);
  }
  if (combos.size() < 2)
    throw std::invalid_argument("performance profile needs at least two combinations, got " +
                                std::to_string(combos.size()));

  std::string holes;
  for (const auto& g : graphs)
    for (const auto& c : combos)
      if (!time.count({g, c})) holes += (holes.empty() ? "" : ", ") + g + "/" + c;
  if (!holes.empty()) throw std::invalid_argument("bench data is missing graph/combo cells: " + holes);

  std::map<std::string, double> best;
  for (const auto& g : graphs) {
    double b = time.at({g, combos.front()});
    for (const auto& c : combos) b = std::min(b, time.at({g, c}));
    best[g] = b;
  }

  std::vector<ProfilePoint> out;
  const double count = static_cast<double>(graphs.size());
  for (const auto& c : combos) {
    std::vector<double> ratios;
    for (const auto& g : graphs) ratios.push_back(time.at({g, c}) / best.at(g));
    std::sort(ratios.begin(), ratios.end());
    auto fraction_within = [&](double r) {
      return static_cast<double>(std::upper_bound(ratios.begin(), ratios.end(), r) - ratios.begin()) / count;
    };
    out.push_back({c, 1.0, fraction_within(1.0)});
    for (std::size_t i = 0; i < ratios.size(); ++i) {
      if (ratios[i] <= 1.0 || (i > 0 && ratios[i] == ratios[i - 1])) continue;
      out.push_back({c, ratios[i], fraction_within(ratios[i])});
    }
  }
  return out;
}

void write_profile_csv(std::ostream& os, std::span<const ProfilePoint> points) {
  os << "combo,r,p\n" << std::setprecision(17);
  for (const auto& pt : points) os << pt.combo << ',' << pt.r << ',' << pt.p << '\n';
}

}  // namespace bcs
