#include "luinv/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace luinv {

std::int64_t SystemShape::total_dim() const {
  std::int64_t n = 1;
  for (int d : dims) {
    if (d < 1) throw PreconditionError("party dimensions must be positive");
    n *= d;
  }
  return n;
}

void SystemShape::validate(int min_parties) const {
  if (parties() < min_parties)
    throw PreconditionError("shape needs at least " + std::to_string(min_parties) +
                            " parties, got " + std::to_string(parties()));
  (void)total_dim();
}

Complex MixedState::trace() const {
  const std::int64_t n = shape.total_dim();
  Complex t = 0.0;
  for (std::int64_t i = 0; i < n; ++i) t += coeffs[i * n + i];
  return t;
}

double norm(const PureState& psi) {
  double s = 0.0;
  for (const Complex& c : psi.coeffs) s += std::norm(c);
  return std::sqrt(s);
}

double GaussianStream::next() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // 53-bit uniforms in [0,1); 1-u1 stays strictly positive for the log.
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  const double u1 = static_cast<double>(engine_() >> 11) * kScale;
  const double u2 = static_cast<double>(engine_() >> 11) * kScale;
  const double radius = std::sqrt(-2.0 * std::log(1.0 - u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Complex GaussianStream::next_complex() {
  const double re = next();
  const double im = next();
  return Complex(re, im);
}

PureState random_pure(const SystemShape& shape, std::uint64_t seed, bool normalize) {
  shape.validate(2);
  GaussianStream g(seed);
  PureState psi;
  psi.shape = shape;
  psi.coeffs.resize(static_cast<std::size_t>(shape.total_dim()));
  for (Complex& c : psi.coeffs) c = g.next_complex();
  if (normalize) {
    const double n = norm(psi);
    for (Complex& c : psi.coeffs) c /= n;
  }
  return psi;
}

std::vector<Eigen::MatrixXcd> random_local_unitary(const SystemShape& shape, std::uint64_t seed) {
  shape.validate(1);
  GaussianStream g(seed);
  std::vector<Eigen::MatrixXcd> units;
  units.reserve(shape.dims.size());
  for (int n : shape.dims) {
    Eigen::MatrixXcd a(n, n);
    for (int row = 0; row < n; ++row)
      for (int col = 0; col < n; ++col) a(row, col) = g.next_complex();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
    // Fix column phases against the R diagonal so the draw is basis-stable.
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int col = 0; col < n; ++col) {
      const Complex d = r(col, col);
      const double mag = std::abs(d);
      if (mag > 0.0) q.col(col) *= d / mag;
    }
    units.push_back(std::move(q));
  }
  return units;
}

PureState apply_local_unitary(const PureState& psi, const std::vector<Eigen::MatrixXcd>& units) {
  psi.shape.validate(2);
  if (static_cast<int>(units.size()) != psi.shape.parties())
    throw ShapeError("apply_local_unitary: need one matrix per party");
  for (int j = 0; j < psi.shape.parties(); ++j)
    if (units[j].rows() != psi.shape.dims[j] || units[j].cols() != psi.shape.dims[j])
      throw ShapeError("apply_local_unitary: matrix " + std::to_string(j + 1) +
                       " does not match its party dimension");

  const std::int64_t total = psi.shape.total_dim();
  PureState out = psi;
  std::vector<Complex> fiber;
  std::int64_t stride = 1;
  for (int j = psi.shape.parties() - 1; j >= 0; --j) {
    const int n = psi.shape.dims[j];
    fiber.assign(n, Complex(0.0));
    for (std::int64_t base = 0; base < total; ++base) {
      if ((base / stride) % n != 0) continue;
      for (int b = 0; b < n; ++b) {
        Complex acc = 0.0;
        for (int c = 0; c < n; ++c) acc += units[j](b, c) * out.coeffs[base + c * stride];
        fiber[b] = acc;
      }
      for (int b = 0; b < n; ++b) out.coeffs[base + b * stride] = fiber[b];
    }
    stride *= n;
  }
  return out;
}

PureState embed(const PureState& psi, const SystemShape& bigger) {
  psi.shape.validate(2);
  bigger.validate(2);
  if (bigger.parties() != psi.shape.parties())
    throw ShapeError("embed: party count mismatch");
  for (int j = 0; j < psi.shape.parties(); ++j)
    if (bigger.dims[j] < psi.shape.dims[j])
      throw ShapeError("embed: dimension " + std::to_string(j + 1) + " would shrink");

  PureState out;
  out.shape = bigger;
  out.coeffs.assign(static_cast<std::size_t>(bigger.total_dim()), Complex(0.0));

  const int k = psi.shape.parties();
  std::vector<int> idx(k, 0);
  std::size_t src = 0;
  for (;;) {
    std::int64_t dst = 0;
    for (int j = 0; j < k; ++j) dst = dst * bigger.dims[j] + idx[j];
    out.coeffs[static_cast<std::size_t>(dst)] = psi.coeffs[src];
    ++src;
    int j = k - 1;
    for (; j >= 0; --j) {
      if (++idx[j] < psi.shape.dims[j]) break;
      idx[j] = 0;
    }
    if (j < 0) break;
  }
  return out;
}

MixedState reduce_last(const PureState& psi) {
  psi.shape.validate(2);
  const int k = psi.shape.parties();
  const int last = psi.shape.dims[k - 1];
  const std::int64_t front = psi.shape.total_dim() / last;

  // Row-major with the last index fastest: psi is exactly a front x last
  // matrix, so the reduction is one Gram product.
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      psi.coeffs.data(), front, last);
  const Eigen::MatrixXcd rho = m * m.adjoint();

  MixedState out;
  out.shape.dims.assign(psi.shape.dims.begin(), psi.shape.dims.end() - 1);
  out.coeffs.resize(static_cast<std::size_t>(front) * front);
  for (std::int64_t row = 0; row < front; ++row)
    for (std::int64_t col = 0; col < front; ++col)
      out.coeffs[row * front + col] = rho(row, col);
  return out;
}

}  // namespace luinv
