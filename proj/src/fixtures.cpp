#include "lisakit/fixtures.hpp"

#include <sstream>
#include <string>

#include "lisakit/csv.hpp"
#include "lisakit/error.hpp"

namespace lisakit::bth {

const std::array<std::string_view, kCities> kLabels = {
    "Beijing",     "Tianjin",     "Shijiazhuang", "Tanshan", "Qinhuangdao",
    "Handan",      "Xingtai",     "Baoding",      "Zhangjiakou", "Chengde",
    "Cangzhou",    "Langfang",    "Hengshui"};

// Road mileage in km.
const std::array<std::array<double, kCities>, kCities> kDistances = {{
    {{0, 160.8855, 321.7625, 185.4770, 288.9055, 479.9810, 430.2520, 187.1300, 198.1975, 194.5940, 233.4440, 83.2755, 299.7580}},  // Beijing
    {{160.8855, 0, 344.5825, 101.4105, 242.6355, 454.8400, 425.3890, 201.9420, 332.9375, 280.6470, 138.6135, 86.1555, 259.8555}},  // Tianjin
    {{321.7625, 344.5825, 0, 423.7510, 568.1560, 167.2815, 114.0840, 138.9090, 430.8215, 506.6400, 221.7565, 283.2495, 142.5935}},  // Shijiazhuang
    {{185.4770, 101.4105, 423.7510, 0, 151.3880, 547.4205, 517.8910, 289.5120, 376.8000, 185.3500, 215.0285, 144.6130, 352.4360}},  // Tanshan
    {{288.9055, 242.6355, 568.1560, 151.3880, 0, 711.7120, 662.2960, 433.9170, 481.3360, 222.2030, 375.5205, 292.9180, 508.4835}},  // Qinhuangdao
    {{479.9810, 454.8400, 167.2815, 547.4205, 711.7120, 0, 53.4600, 296.7465, 606.6940, 664.8585, 335.0465, 440.4685, 214.2995}},  // Handan
    {{430.2520, 425.3890, 114.0840, 517.8910, 662.2960, 53.4600, 0, 245.8830, 557.3515, 615.1295, 299.4430, 391.1260, 167.0325}},  // Xingtai
    {{187.1300, 201.9420, 138.9090, 289.5120, 433.9170, 296.7465, 245.8830, 0, 278.0950, 372.0075, 150.5130, 147.8300, 144.8405}},  // Baoding
    {{198.1975, 332.9375, 430.8215, 376.8000, 481.3360, 606.6940, 557.3515, 278.0950, 0, 372.8730, 411.7425, 257.5700, 455.2955}},  // Zhangjiakou
    {{194.5940, 280.6470, 506.6400, 185.3500, 222.2030, 664.8585, 615.1295, 372.0075, 372.8730, 0, 407.1040, 259.8085, 495.3555}},  // Chengde
    {{233.4440, 138.6135, 221.7565, 215.0285, 375.5205, 335.0465, 299.4430, 150.5130, 411.7425, 407.1040, 0, 149.7245, 140.0620}},  // Cangzhou
    {{83.2755, 86.1555, 283.2495, 144.6130, 292.9180, 440.4685, 391.1260, 147.8300, 257.5700, 259.8085, 149.7245, 0, 237.8790}},  // Langfang
    {{299.7580, 259.8555, 142.5935, 352.4360, 508.4835, 214.2995, 167.0325, 144.8405, 455.2955, 495.3555, 140.0620, 237.8790, 0}},  // Hengshui
}};

const std::array<double, kCities> kPopulation2000 = {
    949.6688, 531.3702, 193.0579, 140.3887, 70.7267, 107.1068, 53.6282,
    90.2496,  79.6580,  32.5821,  44.3561,  29.5879, 24.5229};

const std::array<double, kCities> kPopulation2010 = {
    1555.2378, 885.6234, 275.6871, 163.7579, 95.1872, 111.7417, 63.7797,
    98.0177,   90.0218,  49.8293,  48.9701,  46.6539, 38.2976};

namespace {

std::vector<std::string> label_vector() {
  return {kLabels.begin(), kLabels.end()};
}

}  // namespace

DistanceMatrix distances() {
  SquareMatrix d(kCities);
  for (std::size_t i = 0; i < kCities; ++i) {
    for (std::size_t j = 0; j < kCities; ++j) d(i, j) = kDistances[i][j];
  }
  return DistanceMatrix(label_vector(), std::move(d));
}

AttributeVector population(int year) {
  if (year == 2000) {
    return AttributeVector(label_vector(),
                           {kPopulation2000.begin(), kPopulation2000.end()});
  }
  if (year == 2010) {
    return AttributeVector(label_vector(),
                           {kPopulation2010.begin(), kPopulation2010.end()});
  }
  throw Error(ErrorCode::InvalidArgument,
              "no census data for year " + std::to_string(year) +
                  " (available: 2000, 2010)");
}

Fixture load() { return {distances(), population(2000), population(2010)}; }

Dataset dataset(int year) {
  return Dataset{distances(), population(year), InverseDistance{}};
}

std::string distances_csv() {
  std::ostringstream out;
  out << "id";
  for (auto label : kLabels) out << ',' << label;
  out << '\n';
  for (std::size_t i = 0; i < kCities; ++i) {
    out << kLabels[i];
    for (double d : kDistances[i]) out << ',' << csv::format_double(d);
    out << '\n';
  }
  return out.str();
}

std::string population_csv() {
  std::ostringstream out;
  out << "id,2000,2010\n";
  for (std::size_t i = 0; i < kCities; ++i) {
    out << kLabels[i] << ',' << csv::format_double(kPopulation2000[i]) << ','
        << csv::format_double(kPopulation2010[i]) << '\n';
  }
  return out.str();
}

}  // namespace lisakit::bth
