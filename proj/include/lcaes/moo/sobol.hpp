#pragma once

#include <cstdint>
#include <vector>

namespace lcaes::moo {

/// Dimensions covered by the built-in direction numbers (Joe-Kuo table).
inline constexpr int kSobolMaxDimension = 21;

/// Gray-code Sobol generator with 32-bit direction numbers.
class SobolSequence {
 public:
  /// Throws DomainError when dim is outside [1, kSobolMaxDimension].
  explicit SobolSequence(int dim);

  int dimension() const { return dim_; }
  /// Index of the point the next call returns; the first point is 0.
  std::uint64_t position() const { return index_; }
  std::vector<double> next();
  void skip(std::uint64_t count);

 private:
  int dim_;
  std::uint64_t index_ = 0;
  std::vector<std::uint32_t> state_;
  std::vector<std::vector<std::uint32_t>> v_;
};

/// n points after discarding the first `skip` (by default the all-zeros point).
std::vector<std::vector<double>> sobol_sequence(int dim, int n, std::uint64_t skip = 1);

}  // namespace lcaes::moo
