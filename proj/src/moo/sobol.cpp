#include "lcaes/moo/sobol.hpp"

#include <array>
#include <string>

#include "lcaes/error.hpp"

namespace lcaes::moo {

namespace {

constexpr int kBits = 32;

struct Direction {
  int s;
  std::uint32_t a;
  std::array<std::uint32_t, 7> m;
};

// Primitive polynomial degree s, coefficients a and initial m_i for
// dimensions 2..21.
constexpr std::array<Direction, kSobolMaxDimension - 1> kTable = {{
    {1, 0, {1}},
    {2, 1, {1, 3}},
    {3, 1, {1, 3, 1}},
    {3, 2, {1, 1, 1}},
    {4, 1, {1, 1, 3, 3}},
    {4, 4, {1, 3, 5, 13}},
    {5, 2, {1, 1, 5, 5, 17}},
    {5, 4, {1, 1, 5, 5, 5}},
    {5, 7, {1, 1, 7, 11, 19}},
    {5, 11, {1, 1, 5, 1, 1}},
    {5, 13, {1, 1, 1, 3, 11}},
    {5, 14, {1, 3, 5, 5, 31}},
    {6, 1, {1, 3, 3, 9, 7, 49}},
    {6, 13, {1, 1, 1, 15, 21, 21}},
    {6, 16, {1, 3, 1, 13, 27, 49}},
    {6, 19, {1, 1, 1, 15, 7, 5}},
    {6, 22, {1, 3, 1, 15, 13, 25}},
    {6, 25, {1, 1, 5, 5, 19, 61}},
    {7, 1, {1, 3, 7, 11, 23, 15, 103}},
    {7, 4, {1, 3, 7, 13, 13, 15, 69}},
}};

std::vector<std::uint32_t> directions(int d) {
  std::vector<std::uint32_t> v(kBits);
  if (d == 0) {
    for (int i = 0; i < kBits; ++i) v[i] = 1u << (kBits - 1 - i);
    return v;
  }
  const auto& t = kTable[d - 1];
  for (int i = 0; i < t.s; ++i) v[i] = t.m[i] << (kBits - 1 - i);
  for (int i = t.s; i < kBits; ++i) {
    std::uint32_t x = v[i - t.s] ^ (v[i - t.s] >> t.s);
    for (int k = 1; k < t.s; ++k) {
      if ((t.a >> (t.s - 1 - k)) & 1u) x ^= v[i - k];
    }
    v[i] = x;
  }
  return v;
}

int lowest_zero_bit(std::uint64_t n) {
  int c = 0;
  while (n & 1u) {
    n >>= 1;
    ++c;
  }
  return c;
}

}  // namespace

SobolSequence::SobolSequence(int dim) : dim_(dim) {
  if (dim < 1 || dim > kSobolMaxDimension) {
    throw DomainError("Sobol dimension " + std::to_string(dim) + " outside [1, " +
                      std::to_string(kSobolMaxDimension) + "]");
  }
  state_.assign(dim, 0u);
  for (int d = 0; d < dim; ++d) v_.push_back(directions(d));
}

std::vector<double> SobolSequence::next() {
  std::vector<double> p(dim_);
  for (int d = 0; d < dim_; ++d) p[d] = static_cast<double>(state_[d]) / 4294967296.0;
  const int c = lowest_zero_bit(index_);
  if (c >= kBits) throw DomainError("Sobol sequence exhausted");
  for (int d = 0; d < dim_; ++d) state_[d] ^= v_[d][c];
  ++index_;
  return p;
}

void SobolSequence::skip(std::uint64_t count) {
  for (std::uint64_t i = 0; i < count; ++i) next();
}

std::vector<std::vector<double>> sobol_sequence(int dim, int n, std::uint64_t skip) {
  if (n < 0) throw DomainError("negative Sobol sample count");
  SobolSequence seq(dim);
  seq.skip(skip);
  std::vector<std::vector<double>> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(seq.next());
  return out;
}

}  // namespace lcaes::moo
