#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "luinv/errors.hpp"

namespace luinv {

using Complex = std::complex<double>;

// Party dimensions n_1..n_k of a composite system. Pure states need at
// least two parties; reduced density matrices may live on a single one.
struct SystemShape {
  std::vector<int> dims;

  int parties() const { return static_cast<int>(dims.size()); }
  std::int64_t total_dim() const;
  void validate(int min_parties) const;

  friend bool operator==(const SystemShape&, const SystemShape&) = default;
};

// Dense coefficient tensor, row-major with the last party's index fastest.
struct PureState {
  SystemShape shape;
  std::vector<Complex> coeffs;
};

// Dense density operator: coeffs[row * N + col] with N = total_dim and
// row/col multi-indices laid out as in PureState.
struct MixedState {
  SystemShape shape;
  std::vector<Complex> coeffs;

  Complex trace() const;
};

double norm(const PureState& psi);

// Deterministic N(0,1) stream: Box-Muller over the top 53 bits of
// mt19937_64 output. Single-use per seed.
class GaussianStream {
public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next();
  Complex next_complex();  // independent N(0,1) real and imaginary parts

private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// I.i.d. complex Gaussian coefficients from the seeded stream, optionally
// scaled to unit norm.
PureState random_pure(const SystemShape& shape, std::uint64_t seed, bool normalize);

// One Haar-style unitary per party, obtained by QR-orthonormalizing a
// seeded Gaussian matrix with phase-fixed diagonal.
std::vector<Eigen::MatrixXcd> random_local_unitary(const SystemShape& shape, std::uint64_t seed);

// (U_1 x ... x U_k) psi.
PureState apply_local_unitary(const PureState& psi, const std::vector<Eigen::MatrixXcd>& units);

// Zero-padding embedding into a componentwise-larger shape; coefficients
// keep their original multi-indices.
PureState embed(const PureState& psi, const SystemShape& bigger);

// Partial trace over the last party: rho[I, J] = sum_c psi[I, c] *
// conj(psi[J, c]). The result lives on the first k-1 parties.
MixedState reduce_last(const PureState& psi);

}  // namespace luinv
