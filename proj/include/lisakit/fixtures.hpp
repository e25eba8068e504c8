#pragma once

#include <array>
#include <string>
#include <string_view>

#include "lisakit/analysis.hpp"

namespace lisakit::bth {

// Beijing-Tianjin-Hebei: 13 prefecture-level cities, road mileage between
// them (km) and city population at the 2000 and 2010 censuses
// (presumably in units of 10^4 persons).

inline constexpr std::size_t kCities = 13;

extern const std::array<std::string_view, kCities> kLabels;
extern const std::array<std::array<double, kCities>, kCities> kDistances;
extern const std::array<double, kCities> kPopulation2000;
extern const std::array<double, kCities> kPopulation2010;

DistanceMatrix distances();
AttributeVector population(int year);  // 2000 or 2010; InvalidArgument otherwise

struct Fixture {
  DistanceMatrix distances;
  AttributeVector pop2000;
  AttributeVector pop2010;
};

Fixture load();

/// The census year as a dataset with the inverse-distance kernel.
Dataset dataset(int year);

/// The embedded data in the documented CSV formats.
std::string distances_csv();
std::string population_csv();  // header: id,2000,2010

}  // namespace lisakit::bth
