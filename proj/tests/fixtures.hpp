#pragma once

#include <array>
#include <cstddef>
#include <random>
#include <vector>

namespace fixtures {

// First 29 zero ordinates, computed with mpmath.zetazero at 25 digits.
inline constexpr std::array<double, 29> kZerosBelow100{
    14.134725141734694, 21.022039638771555, 25.010857580145689, 30.424876125859513, 32.93506158773919,
    37.586178158825671, 40.918719012147495, 43.327073280915,    48.00515088116716,  49.773832477672302,
    52.970321477714461, 56.446247697063395, 59.347044002602353, 60.83177852460981,  65.112544048081607,
    67.079810529494174, 69.546401711173979, 72.067157674481908, 75.704690699083933, 77.144840068874805,
    79.337375020249368, 82.91038085408603,  84.73549298051705,  87.425274613125229, 88.809111207634465,
    92.491899270558484, 94.651344040519887, 95.87063422824531,  98.831194218193692};

// Hardy Z at selected ordinates, mpmath.siegelz at 25 digits.
struct ZSample {
  double t;
  double z;
};
inline constexpr std::array<ZSample, 10> kZSamples{{{0.0, -1.4603545088095868},
                                                    {5.0, -0.73886342827526476},
                                                    {14.0, -0.10562626777988261},
                                                    {15.0, 0.71994239134213713},
                                                    {50.5, -1.1428921840238019},
                                                    {100.25, 2.6119499263773577},
                                                    {249.9, -0.7333386782714924},
                                                    {250.1, -1.068653750173715},
                                                    {517.3, 1.2628728660502021},
                                                    {999.99, 0.95003892629190263}}};

// mpmath.nzeros
struct Count {
  double t;
  long n;
};
inline constexpr std::array<Count, 5> kZeroCounts{{{30, 3}, {50, 10}, {100, 29}, {500, 269}, {1000, 649}}};

inline std::vector<double> random_indicator(std::size_t n, std::mt19937_64& rng, double density = 0.3) {
  std::bernoulli_distribution coin(density);
  std::vector<double> v(n);
  for (auto& x : v) x = coin(rng) ? 1.0 : 0.0;
  return v;
}

inline std::vector<std::size_t> marks_of(const std::vector<double>& v) {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0.0) m.push_back(i);
  }
  return m;
}

}  // namespace fixtures
