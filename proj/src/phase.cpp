#include "gcakit/phase.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gcakit/errors.hpp"

namespace gcakit {

namespace {

__extension__ using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("phase arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

i128 mod128(i128 a, i128 m) {
  i128 r = a % m;
  return r < 0 ? r + m : r;
}

using Poly = std::vector<i128>;

// Divides a by a monic b, returns the quotient; a is left holding the remainder.
Poly divide_monic(Poly& a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {};
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const i128 c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t k = 0; k <= db; ++k) a[i - db + k] -= c * b[k];
  }
  a.resize(db);
  return q;
}

Poly cyclotomic(std::int64_t d) {
  thread_local std::map<std::int64_t, Poly> cache;
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  Poly p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(d)] = 1;
  for (std::int64_t e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    p = divide_monic(p, cyclotomic(e));
  }
  cache.emplace(d, p);
  return p;
}

}  // namespace

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return narrow(static_cast<i128>(std::abs(a) / std::gcd(a, b)) * std::abs(b));
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

Phase::Phase(std::int64_t num, std::int64_t den) {
  if (den <= 0) {
    throw Error(ErrorCode::InvalidInput, "phase denominator must be positive");
  }
  num = floor_mod(num, den);
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Phase Phase::operator*(Phase other) const {
  const std::int64_t g = std::gcd(den_, other.den_);
  const i128 den = static_cast<i128>(den_ / g) * other.den_;
  const i128 num = static_cast<i128>(num_) * (other.den_ / g) +
                   static_cast<i128>(other.num_) * (den_ / g);
  return Phase(narrow(mod128(num, den)), narrow(den));
}

Phase Phase::pow(std::int64_t k) const {
  return Phase(narrow(mod128(static_cast<i128>(num_) * k, den_)), den_);
}

Complex Phase::value() const {
  switch (den_) {
    case 1: return {1.0, 0.0};
    case 2: return {-1.0, 0.0};
    case 4: return num_ == 1 ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
    default: break;
  }
  // Symmetric representative keeps the angle small for accuracy.
  const std::int64_t n = 2 * num_ > den_ ? num_ - den_ : num_;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(n) /
                       static_cast<double>(den_);
  return {std::cos(angle), std::sin(angle)};
}

std::string Phase::to_string() const {
  switch (den_) {
    case 1: return "1";
    case 2: return "-1";
    case 4: return num_ == 1 ? "i" : "-i";
    default: break;
  }
  return "w" + std::to_string(den_) + "^" + std::to_string(num_);
}

std::optional<Phase> Phase::from_complex(Complex z, std::int64_t max_den,
                                         double tol) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return std::nullopt;
  if (std::abs(std::abs(z) - 1.0) > tol) return std::nullopt;
  double turns = std::arg(z) / (2.0 * std::numbers::pi);
  if (turns < 0) turns += 1.0;
  // Convergents of the continued fraction of `turns`.
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = turns;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(x);
    const auto ai = static_cast<std::int64_t>(a);
    const std::int64_t p2 = ai * p1 + p0;
    const std::int64_t q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    const Phase candidate(p2, q2);
    if (std::abs(candidate.value() - z) <= tol) return candidate;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = x - a;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  return std::nullopt;
}

void PhaseSum::add(Phase p, std::int64_t count) {
  if (count == 0) return;
  auto& c = terms_[p];
  c += count;
  if (c == 0) terms_.erase(p);
}

Complex PhaseSum::value() const {
  Complex total{0.0, 0.0};
  for (const auto& [p, c] : terms_) total += static_cast<double>(c) * p.value();
  return total;
}

bool PhaseSum::equals_integer(std::int64_t k) const {
  std::int64_t order = 1;
  for (const auto& [p, c] : terms_) order = lcm64(order, p.den());
  Poly coeffs(static_cast<std::size_t>(order), 0);
  for (const auto& [p, c] : terms_) {
    coeffs[static_cast<std::size_t>(p.num() * (order / p.den()))] += c;
  }
  coeffs[0] -= k;
  // sum c_j zeta^j vanishes iff Phi_order(x) divides sum c_j x^j.
  divide_monic(coeffs, cyclotomic(order));
  for (const auto c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace gcakit
