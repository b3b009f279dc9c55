#include "gcakit/monomial.hpp"

#include <string>

#include "gcakit/errors.hpp"

namespace gcakit {

namespace {

void require_same_dim(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "monomial dimensions " + std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()) + " differ");
  }
}

}  // namespace

MonomialMatrix::MonomialMatrix(std::vector<std::size_t> target, std::vector<Phase> phase)
    : target_(std::move(target)), phase_(std::move(phase)) {
  if (target_.empty() || target_.size() != phase_.size()) {
    throw Error(ErrorCode::InvalidInput, "monomial matrix needs dim >= 1 targets and phases");
  }
  std::vector<bool> seen(target_.size(), false);
  for (const auto t : target_) {
    if (t >= target_.size() || seen[t]) {
      throw Error(ErrorCode::InvalidInput, "monomial targets are not a permutation");
    }
    seen[t] = true;
  }
}

MonomialMatrix MonomialMatrix::identity(std::size_t dim) {
  return scalar(dim, Phase::one());
}

MonomialMatrix MonomialMatrix::scalar(std::size_t dim, Phase p) {
  std::vector<std::size_t> target(dim);
  for (std::size_t c = 0; c < dim; ++c) target[c] = c;
  return MonomialMatrix(std::move(target), std::vector<Phase>(dim, p));
}

MonomialMatrix MonomialMatrix::diagonal(std::vector<Phase> phases) {
  std::vector<std::size_t> target(phases.size());
  for (std::size_t c = 0; c < target.size(); ++c) target[c] = c;
  return MonomialMatrix(std::move(target), std::move(phases));
}

MonomialMatrix MonomialMatrix::permutation(std::vector<std::size_t> target) {
  const std::size_t n = target.size();
  return MonomialMatrix(std::move(target), std::vector<Phase>(n, Phase::one()));
}

Complex MonomialMatrix::entry(std::size_t row, std::size_t col) const {
  return target_.at(col) == row ? phase_[col].value() : Complex{0.0, 0.0};
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& rhs) const {
  require_same_dim(*this, rhs);
  const std::size_t n = dim();
  std::vector<std::size_t> target(n);
  std::vector<Phase> phase(n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t mid = rhs.target_[c];
    target[c] = target_[mid];
    phase[c] = phase_[mid] * rhs.phase_[c];
  }
  return MonomialMatrix(std::move(target), std::move(phase));
}

MonomialMatrix MonomialMatrix::operator*(Phase p) const {
  MonomialMatrix out = *this;
  for (auto& q : out.phase_) q *= p;
  return out;
}

MonomialMatrix MonomialMatrix::adjoint() const {
  const std::size_t n = dim();
  std::vector<std::size_t> target(n);
  std::vector<Phase> phase(n);
  for (std::size_t c = 0; c < n; ++c) {
    target[target_[c]] = c;
    phase[target_[c]] = phase_[c].conj();
  }
  return MonomialMatrix(std::move(target), std::move(phase));
}

MonomialMatrix MonomialMatrix::pow(std::int64_t k) const {
  MonomialMatrix base = k < 0 ? adjoint() : *this;
  auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  MonomialMatrix result = identity(dim());
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool MonomialMatrix::is_identity() const {
  for (std::size_t c = 0; c < dim(); ++c) {
    if (target_[c] != c || !phase_[c].is_one()) return false;
  }
  return true;
}

std::optional<Phase> MonomialMatrix::scalar_value() const {
  for (std::size_t c = 0; c < dim(); ++c) {
    if (target_[c] != c || phase_[c] != phase_[0]) return std::nullopt;
  }
  return phase_[0];
}

std::optional<Phase> MonomialMatrix::ratio_to(const MonomialMatrix& other) const {
  if (dim() != other.dim() || target_ != other.target_) return std::nullopt;
  const Phase r = phase_[0] / other.phase_[0];
  for (std::size_t c = 1; c < dim(); ++c) {
    if (phase_[c] / other.phase_[c] != r) return std::nullopt;
  }
  return r;
}

PhaseSum MonomialMatrix::trace() const {
  PhaseSum sum;
  for (std::size_t c = 0; c < dim(); ++c) {
    if (target_[c] == c) sum.add(phase_[c]);
  }
  return sum;
}

DenseMatrix MonomialMatrix::to_dense() const {
  const auto n = static_cast<Eigen::Index>(dim());
  DenseMatrix out = DenseMatrix::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    out(static_cast<Eigen::Index>(target_[static_cast<std::size_t>(c)]), c) =
        phase_[static_cast<std::size_t>(c)].value();
  }
  return out;
}

MonomialMatrix tensor(const MonomialMatrix& a, const MonomialMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  std::vector<std::size_t> target(da * db);
  std::vector<Phase> phase(da * db);
  for (std::size_t ca = 0; ca < da; ++ca) {
    for (std::size_t cb = 0; cb < db; ++cb) {
      const std::size_t c = ca * db + cb;
      target[c] = a.target()[ca] * db + b.target()[cb];
      phase[c] = a.phases()[ca] * b.phases()[cb];
    }
  }
  return MonomialMatrix(std::move(target), std::move(phase));
}

MonomialMatrix tensor(std::span<const MonomialMatrix> factors) {
  MonomialMatrix out;
  for (const auto& f : factors) out = tensor(out, f);
  return out;
}

MonomialMatrix mat_mul(const MonomialMatrix& a, const MonomialMatrix& b) { return a * b; }

MonomialMatrix adjoint(const MonomialMatrix& a) { return a.adjoint(); }

PhaseSum trace_inner(const MonomialMatrix& x, const MonomialMatrix& y) {
  require_same_dim(x, y);
  return (x.adjoint() * y).trace();
}

}  // namespace gcakit
