#ifndef KKLAB_LINALG_HPP
#define KKLAB_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace kklab {

// Solves sum_j x_j * columns[j] = rhs over F_p (p prime). Vectors are dense
// mod-p digit vectors of equal length. Returns nullopt when the system is
// inconsistent; when the solution space is positive-dimensional the free
// variables are set to zero.
std::optional<std::vector<uint32_t>> solve_mod_p(uint32_t p,
                                                 const std::vector<std::vector<uint32_t>>& columns,
                                                 const std::vector<uint32_t>& rhs);

// Inverse of a square matrix given by columns; empty result when singular.
std::vector<std::vector<uint32_t>> invert_mod_p(uint32_t p,
                                                const std::vector<std::vector<uint32_t>>& columns);

} // namespace kklab

#endif
