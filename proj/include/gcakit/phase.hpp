#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace gcakit {

using Complex = std::complex<double>;

/// Exact root of unity exp(2 pi i * num / den).
///
/// The fraction is kept in lowest terms with num in [0, den), so two phases
/// compare equal exactly when they denote the same complex number. Products
/// and integer powers never leave the rationals, which is what lets every
/// commutation relation between generator matrices be checked with zero
/// tolerance.
class Phase {
 public:
  constexpr Phase() = default;
  Phase(std::int64_t num, std::int64_t den);

  static Phase one() { return Phase(); }
  /// exp(2 pi i * power / order)
  static Phase root(std::int64_t order, std::int64_t power = 1) {
    return Phase(power, order);
  }
  /// Rational-angle recovery by continued fractions. Returns nullopt when z is
  /// not within tol of a root of unity of order <= max_den.
  static std::optional<Phase> from_complex(Complex z,
                                           std::int64_t max_den = 1 << 16,
                                           double tol = 1e-12);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  /// Multiplicative order of the phase as a root of unity.
  std::int64_t order() const noexcept { return den_; }
  bool is_one() const noexcept { return num_ == 0; }

  Phase operator*(Phase other) const;
  Phase& operator*=(Phase other) { return *this = *this * other; }
  Phase operator/(Phase other) const { return *this * other.inverse(); }
  Phase inverse() const { return Phase(-num_, den_); }
  Phase conj() const { return inverse(); }
  Phase pow(std::int64_t k) const;

  Complex value() const;

  /// "1", "-1", "i", "-i", otherwise "w<den>^<num>".
  std::string to_string() const;

  friend bool operator==(Phase, Phase) = default;
  friend auto operator<=>(Phase, Phase) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Complex operator*(Phase p, Complex z) { return p.value() * z; }

/// Formal sum of roots of unity with integer multiplicities.
///
/// Equality with an integer is decided exactly by reducing the coefficient
/// polynomial modulo the cyclotomic polynomial of the common order.
class PhaseSum {
 public:
  void add(Phase p, std::int64_t count = 1);

  Complex value() const;
  bool equals_integer(std::int64_t k) const;
  bool is_zero() const { return equals_integer(0); }

  const std::map<Phase, std::int64_t>& terms() const { return terms_; }

 private:
  std::map<Phase, std::int64_t> terms_;
};

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
/// a mod m in [0, m) for m > 0.
std::int64_t floor_mod(std::int64_t a, std::int64_t m);

}  // namespace gcakit
