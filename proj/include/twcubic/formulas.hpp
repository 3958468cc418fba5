#pragma once

/**
 * @file formulas.hpp
 * @brief Closed-form orbit sizes, incidence tables and code parameters as
 *        functions of q. Every division is checked to be exact.
 */

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace twcubic::formulas {

inline int xi_of(std::int64_t q) {
  const auto r = q % 3;
  return r == 2 ? -1 : static_cast<int>(r);
}

inline std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// num / den, failing loudly when the quotient is not an integer.
inline std::int64_t exact(std::int64_t num, std::int64_t den) {
  if (den == 0 || num % den != 0)
    throw std::logic_error("non-integral closed form: " + std::to_string(num) + "/" + std::to_string(den));
  return num / den;
}

struct OrbitSizes {
  std::array<std::int64_t, 5> planes{};
  std::array<std::int64_t, 5> points{};
};

inline OrbitSizes orbit_sizes(std::int64_t q) {
  const std::int64_t c = q * (q * q - 1);
  OrbitSizes s;
  s.planes = {q + 1, q * (q + 1), exact(c, 6), exact(c, 2), exact(c, 3)};
  if (xi_of(q) != 0)
    s.points = s.planes;
  else
    s.points = {q + 1, q + 1, q * q - 1, exact(c, 2), exact(c, 2)};
  return s;
}

/// Total number of d_C-planes, d = 0..3.
inline std::array<std::int64_t, 4> plane_totals(std::int64_t q) {
  return {exact(q * (q * q - 1), 3), exact(q * q * q + q + 2, 2), q * (q + 1), exact(q * (q * q - 1), 6)};
}

struct Cell {
  std::int64_t k = 0;  // points of M_j on a plane of N_i
  std::int64_t r = 0;  // planes of N_i through a point of M_j
  friend bool operator==(const Cell&, const Cell&) = default;
};

using Table = std::array<std::array<Cell, 5>, 5>;

/// k_ij and r_ij, i = plane orbit, j = point orbit (0-based indices).
inline Table expected_table(std::int64_t q) {
  const std::int64_t x = xi_of(q);
  const std::int64_t s = q * q;
  Table t{};
  auto row = [&t](int i, std::array<std::int64_t, 5> k, std::array<std::int64_t, 5> r) {
    for (int j = 0; j < 5; ++j) t[i][j] = {k[j], r[j]};
  };
  if (x != 0) {
    row(0, {1, 2 * q, exact(s - q, 2), exact(s - q, 2), 0}, {1, 2, 3, 1, 0});
    row(1, {2, 2 * q - 1, exact(s - 3 * q + 2, 6), exact(s - q, 2), exact(s - 1, 3)},
        {2 * q, 2 * q - 1, q - 2, q, q + 1});
    row(2, {3, q - 2, exact(s + x * q + 4, 6), exact(s - x * q, 2), exact(s + x * q - 2, 3)},
        {exact(s - q, 2), exact(s - 3 * q + 2, 6), exact(s + x * q + 4, 6), exact(s - x * q, 6),
         exact(s + x * q - 2, 6)});
    row(3, {1, q, exact(s - x * q, 6), exact(s + x * q, 2), exact(s - x * q, 3)},
        {exact(s - q, 2), exact(s - q, 2), exact(s - x * q, 2), exact(s + x * q, 2), exact(s - x * q, 2)});
    row(4, {0, q + 1, exact(s + x * q - 2, 6), exact(s - x * q, 2), exact(s + x * q + 1, 3)},
        {0, exact(s - 1, 3), exact(s + x * q - 2, 3), exact(s - x * q, 3), exact(s + x * q + 1, 3)});
  } else {
    row(0, {1, q + 1, q - 1, exact(s - q, 2), exact(s - q, 2)}, {1, q + 1, 1, 1, 1});
    row(1, {2, 1, 2 * q - 2, exact(s - q, 2), exact(s - q, 2)}, {2 * q, q, 2 * q, q, q});
    row(2, {3, 1, q - 3, exact(s + q, 2), exact(s - q, 2)},
        {exact(s - q, 2), exact(s - q, 6), exact(s - 3 * q, 6), exact(s + q, 6), exact(s - q, 6)});
    row(3, {1, 1, q - 1, exact(s - q, 2), exact(s + q, 2)},
        {exact(s - q, 2), exact(s - q, 2), exact(s - q, 2), exact(s - q, 2), exact(s + q, 2)});
    row(4, {0, 1, q, exact(s + q, 2), exact(s - q, 2)},
        {0, exact(s - q, 3), exact(s, 3), exact(s + q, 3), exact(s - q, 3)});
  }
  return t;
}

/// Minimum multiplicity of a deep hole of the GDRS code.
inline std::int64_t mu(std::int64_t q) {
  return xi_of(q) != 0 ? exact(q * q - 3 * q + 2, 6) : exact(q * q - 3 * q, 6);
}

}  // namespace twcubic::formulas
