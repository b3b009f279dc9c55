#include "gcakit/skewnormal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>

#include "gcakit/errors.hpp"
#include "gcakit/phase.hpp"

namespace gcakit {

namespace {

__extension__ using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("integer overflow in skew-normal reduction");
  }
  return static_cast<std::int64_t>(v);
}

// Returns (g, x, y) with x a + y b = g = gcd(a, b) >= 0.
std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// Working state of the congruence reduction: m = w * T * w^T, w_inv = w^{-1}.
struct Reducer {
  IntMatrix m;
  IntMatrix w;
  IntMatrix w_inv;

  // Replace basis vectors (e_i, e_j) by (q00 e_i + q01 e_j, q10 e_i + q11 e_j).
  // The 2x2 block must have determinant +-1.
  void apply_pair(Eigen::Index i, Eigen::Index j, std::int64_t q00, std::int64_t q01,
                  std::int64_t q10, std::int64_t q11) {
    const std::int64_t det = q00 * q11 - q01 * q10;
    const Eigen::Index n = m.rows();
    auto mix_rows = [&](IntMatrix& a) {
      for (Eigen::Index c = 0; c < a.cols(); ++c) {
        const i128 ai = a(i, c), aj = a(j, c);
        a(i, c) = narrow(q00 * ai + q01 * aj);
        a(j, c) = narrow(q10 * ai + q11 * aj);
      }
    };
    mix_rows(m);
    for (Eigen::Index r = 0; r < n; ++r) {
      const i128 ai = m(r, i), aj = m(r, j);
      m(r, i) = narrow(q00 * ai + q01 * aj);
      m(r, j) = narrow(q10 * ai + q11 * aj);
    }
    mix_rows(w);
    // Columns of w_inv transform by Q^{-1} = det * [[q11, -q01], [-q10, q00]].
    for (Eigen::Index r = 0; r < n; ++r) {
      const i128 ci = w_inv(r, i), cj = w_inv(r, j);
      w_inv(r, i) = narrow(det * (ci * q11 - cj * q10));
      w_inv(r, j) = narrow(det * (-ci * q01 + cj * q00));
    }
  }

  void swap(Eigen::Index i, Eigen::Index j) {
    if (i != j) apply_pair(i, j, 0, 1, 1, 0);
  }

  // Replace e_j by e_j + k e_p.
  void add_multiple(Eigen::Index j, Eigen::Index p, std::int64_t k) {
    // Pair (p, j) with Q = [[1, 0], [k, 1]].
    apply_pair(p, j, 1, 0, k, 1);
  }

  // Row r: entries (a, b) in columns (i, j) become (gcd, 0).
  void euclid_pair(Eigen::Index r, Eigen::Index i, Eigen::Index j) {
    const std::int64_t a = m(r, i);
    const std::int64_t b = m(r, j);
    if (b == 0) return;
    const auto [g, x, y] = ext_gcd(a, b);
    apply_pair(i, j, x, y, -b / g, a / g);
  }

  // Clears rows/columns p and p+1 outside the 2x2 block at (p, p+1).
  void reduce_block(Eigen::Index p) {
    const Eigen::Index n = m.rows();
    for (;;) {
      for (Eigen::Index j = p + 2; j < n; ++j) euclid_pair(p, p + 1, j);
      const std::int64_t g = m(p, p + 1);
      bool restarted = false;
      for (Eigen::Index j = p + 2; j < n; ++j) {
        const std::int64_t c = m(p + 1, j);
        if (c == 0) continue;
        if (c % g == 0) {
          add_multiple(j, p, c / g);
        } else {
          // gcd(g, c) < |g|: shrink the pivot and start over.
          euclid_pair(p + 1, p, j);
          restarted = true;
          break;
        }
      }
      if (!restarted) return;
    }
  }
};

}  // namespace

std::int64_t symmetric_residue(std::int64_t x, std::int64_t nhat) {
  const std::int64_t r = floor_mod(x, nhat);
  const std::int64_t upper = (nhat + 1) / 2;
  return r > upper ? r - nhat : r;
}

IntMatrix SkewNormalForm::normal_form() const {
  IntMatrix out = IntMatrix::Zero(n, n);
  for (int j = 0; j < s; ++j) {
    out(2 * j, 2 * j + 1) = t_inv[static_cast<std::size_t>(j)];
    out(2 * j + 1, 2 * j) = -t_inv[static_cast<std::size_t>(j)];
  }
  return out;
}

std::vector<std::int64_t> SkewNormalForm::block_orders() const {
  std::vector<std::int64_t> orders;
  orders.reserve(t_inv.size());
  for (const auto t : t_inv) orders.push_back(nhat / std::gcd(t, nhat));
  return orders;
}

TMatrix validate_tmatrix(const IntMatrix& raw, std::int64_t nhat) {
  if (nhat < 2) {
    throw Error(ErrorCode::BadModulus, "nhat must be at least 2, got " + std::to_string(nhat));
  }
  if (raw.rows() != raw.cols() || raw.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "T must be a nonempty square matrix");
  }
  const Eigen::Index n = raw.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j; k < n; ++k) {
      const bool ok = j == k ? floor_mod(raw(j, j), nhat) == 0
                             : floor_mod(raw(j, k) + raw(k, j), nhat) == 0;
      if (!ok) {
        throw Error(ErrorCode::NotAntisymmetric,
                    "t[" + std::to_string(j) + "][" + std::to_string(k) + "] + t[" +
                        std::to_string(k) + "][" + std::to_string(j) + "] != 0 mod " +
                        std::to_string(nhat));
      }
    }
  }
  TMatrix out;
  out.nhat_ = nhat;
  out.t_ = IntMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      out.t_(j, k) = symmetric_residue(raw(j, k), nhat);
      out.t_(k, j) = -out.t_(j, k);
    }
  }
  return out;
}

namespace {

std::int64_t dot(const IntMatrix& u, Eigen::Index a, Eigen::Index b) {
  return u.col(a).dot(u.col(b));
}

std::int64_t nearest(std::int64_t num, std::int64_t den) {
  return static_cast<std::int64_t>(std::llround(static_cast<double>(num) / static_cast<double>(den)));
}

// Column operations that leave U T' U^T unchanged and det U = +-1: SL2 moves
// inside each block pair (Lagrange reduction) and adding multiples of any
// column to a null column.
void shrink_columns(IntMatrix& u, int s) {
  const Eigen::Index n = u.cols();
  for (int b = 0; b < s; ++b) {
    const Eigen::Index i = 2 * b;
    const Eigen::Index j = 2 * b + 1;
    for (int guard = 0; guard < 200; ++guard) {
      if (dot(u, j, j) < dot(u, i, i)) {
        const Eigen::VectorX<std::int64_t> tmp = u.col(i);
        u.col(i) = u.col(j);
        u.col(j) = -tmp;
      }
      const std::int64_t aa = dot(u, i, i);
      if (aa == 0) break;
      const std::int64_t mu = nearest(dot(u, i, j), aa);
      if (mu == 0) break;
      u.col(j) -= mu * u.col(i);
    }
  }
  for (int guard = 0; guard < 100; ++guard) {
    bool changed = false;
    for (Eigen::Index c = 2 * s; c < n; ++c) {
      for (Eigen::Index d = 0; d < n; ++d) {
        const std::int64_t dd = dot(u, d, d);
        if (d == c || dd == 0) continue;
        const std::int64_t mu = nearest(dot(u, c, d), dd);
        if (mu == 0) continue;
        const Eigen::VectorX<std::int64_t> next = u.col(c) - mu * u.col(d);
        if (next.squaredNorm() < u.col(c).squaredNorm()) {
          u.col(c) = next;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
}

std::int64_t lift_distance(std::int64_t det) { return std::min(std::abs(det - 1), std::abs(det + 1)); }

std::int64_t cofactor(const IntMatrix& v, Eigen::Index r, Eigen::Index c) {
  const Eigen::Index n = v.rows();
  IntMatrix minor(n - 1, n - 1);
  for (Eigen::Index i = 0, mi = 0; i < n; ++i) {
    if (i == r) continue;
    for (Eigen::Index j = 0, mj = 0; j < n; ++j) {
      if (j == c) continue;
      minor(mi, mj++) = v(i, j);
    }
    ++mi;
  }
  const std::int64_t d = integer_determinant(minor);
  return (r + c) % 2 == 0 ? d : -d;
}

// Moving row r by nhat * x shifts det by nhat * (x . cofactors of row r).
// Enumerates every x keeping the row inside [-nhat, nhat] and applies the
// first one that lands on det = +-1.
bool fix_by_row(IntMatrix& v, std::int64_t nhat) {
  const Eigen::Index n = v.rows();
  const std::int64_t det = integer_determinant(v);
  for (Eigen::Index r = 0; r < n; ++r) {
    std::vector<std::vector<std::int64_t>> options(static_cast<std::size_t>(n));
    std::vector<std::int64_t> cof(static_cast<std::size_t>(n));
    double combos = 1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      cof[static_cast<std::size_t>(j)] = cofactor(v, r, j);
      for (std::int64_t k = -2; k <= 2; ++k) {
        if (std::abs(v(r, j) + k * nhat) <= nhat) options[static_cast<std::size_t>(j)].push_back(k);
      }
      combos *= static_cast<double>(options[static_cast<std::size_t>(j)].size());
    }
    if (combos > 2e5) continue;
    std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
    while (true) {
      std::int64_t shift = 0;
      for (std::size_t j = 0; j < pos.size(); ++j) shift += options[j][pos[j]] * cof[j];
      if (lift_distance(det + nhat * shift) == 0) {
        for (std::size_t j = 0; j < pos.size(); ++j) v(r, static_cast<Eigen::Index>(j)) += options[j][pos[j]] * nhat;
        return true;
      }
      std::size_t j = 0;
      while (j < pos.size() && ++pos[j] == options[j].size()) pos[j++] = 0;
      if (j == pos.size()) break;
    }
  }
  return false;
}

// Re-lifts U mod nhat to entries with |u| <= nhat while keeping det = +-1:
// exact single row or column corrections of the residue matrix, interleaved
// with a seeded random walk over single-entry shifts. The original witness is
// kept if nothing is found.
IntMatrix bounded_lift(const IntMatrix& u, std::int64_t nhat) {
  const Eigen::Index n = u.rows();
  if (n == 0 || u.cwiseAbs().maxCoeff() <= nhat) return u;
  IntMatrix v = u;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) v(i, j) = symmetric_residue(v(i, j), nhat);
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
  for (int round = 0; round < 64; ++round) {
    if (lift_distance(integer_determinant(v)) == 0) return v;
    if (fix_by_row(v, nhat)) return v;
    IntMatrix vt = v.transpose();
    if (fix_by_row(vt, nhat)) return vt.transpose();
    std::int64_t det = integer_determinant(v);
    for (int step = 0; step < 200; ++step) {
      const Eigen::Index i = pick(rng);
      const Eigen::Index j = pick(rng);
      const std::int64_t k = (rng() % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(1 + rng() % 2);
      if (std::abs(v(i, j) + k * nhat) > nhat) continue;
      const std::int64_t next = det + k * nhat * cofactor(v, i, j);
      if (next != 0 && (lift_distance(next) <= lift_distance(det) || rng() % 8 == 0)) {
        v(i, j) += k * nhat;
        det = next;
      }
    }
  }
  return lift_distance(integer_determinant(v)) == 0 ? v : u;
}

}  // namespace

SkewNormalForm skew_normal_form(const TMatrix& t) {
  const Eigen::Index n = t.n();
  const std::int64_t nhat = t.nhat();
  Reducer red{t.entries(), IntMatrix::Identity(n, n), IntMatrix::Identity(n, n)};

  std::vector<std::int64_t> raw_blocks;
  Eigen::Index p = 0;
  while (p + 1 < n) {
    // Pivot: first nonzero (row, col) in the remaining block, row < col.
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = p; i < n && pi < 0; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        if (red.m(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) break;
    red.swap(p, pi);
    red.swap(p + 1, pj);
    red.reduce_block(p);
    if (red.m(p, p + 1) < 0) red.swap(p, p + 1);
    raw_blocks.push_back(red.m(p, p + 1));
    p += 2;
  }

  // Blocks that vanish mod nhat join the null part.
  std::vector<Eigen::Index> order;
  SkewNormalForm out;
  out.n = static_cast<int>(n);
  out.nhat = nhat;
  for (std::size_t b = 0; b < raw_blocks.size(); ++b) {
    const std::int64_t r = floor_mod(raw_blocks[b], nhat);
    if (r == 0) continue;
    out.t_inv.push_back(r);
    order.push_back(static_cast<Eigen::Index>(2 * b));
    order.push_back(static_cast<Eigen::Index>(2 * b + 1));
  }
  for (std::size_t b = 0; b < raw_blocks.size(); ++b) {
    if (floor_mod(raw_blocks[b], nhat) != 0) continue;
    order.push_back(static_cast<Eigen::Index>(2 * b));
    order.push_back(static_cast<Eigen::Index>(2 * b + 1));
  }
  for (Eigen::Index k = static_cast<Eigen::Index>(2 * raw_blocks.size()); k < n; ++k) {
    order.push_back(k);
  }
  out.s = static_cast<int>(out.t_inv.size());

  IntMatrix u(n, n);
  for (Eigen::Index c = 0; c < n; ++c) u.col(c) = red.w_inv.col(order[static_cast<std::size_t>(c)]);

  shrink_columns(u, out.s);
  out.u = bounded_lift(u, nhat);
  return out;
}

std::int64_t integer_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  }
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  Eigen::Matrix<i128, Eigen::Dynamic, Eigen::Dynamic> a = m.cast<i128>();
  int sign = 1;
  i128 prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap_row = -1;
      for (Eigen::Index r = k + 1; r < n; ++r) {
        if (a(r, k) != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      a.row(k).swap(a.row(swap_row));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return narrow(sign * a(n - 1, n - 1));
}

VerificationReport verify_congruence(const TMatrix& t, const SkewNormalForm& f) {
  VerificationReport report;
  const Eigen::Index n = t.n();
  if (f.n != n || f.u.rows() != n || f.u.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "normal form and T have different sizes");
  }

  const std::int64_t det = integer_determinant(f.u);
  report.add("unimodular", std::abs(det) == 1, "det U = " + std::to_string(det));

  bool shape_ok = f.s >= 0 && 2 * f.s <= n && static_cast<int>(f.t_inv.size()) == f.s;
  std::string shape_detail = "s = " + std::to_string(f.s);
  for (const auto tj : f.t_inv) {
    if (tj <= 0 || tj >= t.nhat()) {
      shape_ok = false;
      shape_detail += ", invariant " + std::to_string(tj) + " not in [1, nhat-1]";
    }
  }

  if (!shape_ok) {
    report.add("block-shape", false, shape_detail);
    report.add("congruence", false, "skipped: malformed normal form");
    return report;
  }
  const IntMatrix tau = f.normal_form();
  report.add("block-shape", true, shape_detail);

  std::string where;
  for (Eigen::Index j = 0; j < n && where.empty(); ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      i128 acc = 0;
      for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
          if (tau(a, b) != 0) acc += static_cast<i128>(f.u(j, a)) * tau(a, b) * f.u(k, b);
        }
      }
      const i128 diff = static_cast<i128>(t(static_cast<int>(j), static_cast<int>(k))) - acc;
      if (diff % t.nhat() != 0) {
        where = "first failure at (" + std::to_string(j) + "," + std::to_string(k) + ")";
        break;
      }
    }
  }
  report.add("congruence", where.empty(), where.empty() ? "T = U T' U^T mod " + std::to_string(t.nhat()) : where);
  return report;
}

}  // namespace gcakit
