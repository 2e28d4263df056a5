#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace k3pell::oracle {
namespace {

using i128 = __int128;

std::int64_t to64(const Int& n) {
  if (!mpz_fits_slong_p(n.get_mpz_t())) throw std::out_of_range("oracle: coefficient too large");
  return n.get_si();
}

bool square128(i128 n) {
  if (n < 0) return false;
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

std::int64_t root128(i128 n) {
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return static_cast<std::int64_t>(r);
}

}  // namespace

std::int64_t isqrt64(std::int64_t n) { return root128(n); }

std::optional<PellSolution> bf_pell(std::int64_t D, std::int64_t w_max) {
  for (std::int64_t w = 1; w <= w_max; ++w) {
    const i128 rhs = static_cast<i128>(D) * w * w + 4;
    if (square128(rhs)) return PellSolution{Int(static_cast<long>(root128(rhs))), Int(static_cast<long>(w)), Int(static_cast<long>(D)), 1};
  }
  return std::nullopt;
}

std::optional<PellSolution> bf_unit_pm4(std::int64_t D, std::int64_t w_max) {
  for (std::int64_t w = 1; w <= w_max; ++w) {
    const i128 base = static_cast<i128>(D) * w * w;
    // u^2 = D w^2 - 4 gives the smaller u, so it wins at equal w.
    for (const i128 rhs : {base - 4, base + 4}) {
      if (rhs > 0 && square128(rhs)) {
        return PellSolution{Int(static_cast<long>(root128(rhs))), Int(static_cast<long>(w)), Int(static_cast<long>(D)), 1};
      }
    }
  }
  return std::nullopt;
}

bool bf_represents(const EvenLattice& L, std::int64_t n, std::int64_t box) {
  const i128 a = to64(L.a), b = to64(L.b), c = to64(L.c);
  for (i128 x = -box; x <= box; ++x) {
    for (i128 y = -box; y <= box; ++y) {
      if (x == 0 && y == 0) continue;
      if (a * x * x + b * x * y + c * y * y == n) return true;
    }
  }
  return false;
}

std::vector<Mat2> bf_isometries(const EvenLattice& L, std::int64_t entry_bound) {
  const i128 a = to64(L.a), b = to64(L.b), c = to64(L.c);
  auto form = [&](i128 x, i128 y) { return a * x * x + b * x * y + c * y * y; };
  auto pair = [&](i128 x1, i128 y1, i128 x2, i128 y2) {
    return 2 * a * x1 * x2 + b * (x1 * y2 + x2 * y1) + 2 * c * y1 * y2;
  };
  // Columns g e1, g e2 must have the norms of e1, e2 and pair to b.
  std::vector<std::pair<i128, i128>> first, second;
  for (i128 x = -entry_bound; x <= entry_bound; ++x) {
    for (i128 y = -entry_bound; y <= entry_bound; ++y) {
      const i128 f = form(x, y);
      if (f == a) first.emplace_back(x, y);
      if (f == c) second.emplace_back(x, y);
    }
  }
  std::vector<Mat2> out;
  for (const auto& [x1, y1] : first) {
    for (const auto& [x2, y2] : second) {
      if (pair(x1, y1, x2, y2) != b) continue;
      const i128 det = x1 * y2 - x2 * y1;
      if (det != 1 && det != -1) continue;
      out.push_back(Mat2{Int(static_cast<long>(x1)), Int(static_cast<long>(x2)),
                         Int(static_cast<long>(y1)), Int(static_cast<long>(y2))});
    }
  }
  std::sort(out.begin(), out.end(), [](const Mat2& p, const Mat2& q) {
    return std::tie(p.m00, p.m01, p.m10, p.m11) < std::tie(q.m00, q.m01, q.m10, q.m11);
  });
  return out;
}

std::vector<EvenLattice> bf_reduced_forms(std::int64_t D) {
  std::vector<EvenLattice> out;
  const std::int64_t s = root128(D);
  for (std::int64_t a = -s; a <= s; ++a) {
    if (a == 0) continue;
    for (std::int64_t b = 1; b * b < D; ++b) {
      const std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      // |sqrt(D) - 2|a|| < b  <=>  sqrt(D) in (2|a| - b, 2|a| + b)
      const std::int64_t lo = 2 * std::abs(a) - b;
      const std::int64_t hi = 2 * std::abs(a) + b;
      const bool above_lo = lo < 0 || static_cast<i128>(lo) * lo < D;
      const bool below_hi = static_cast<i128>(hi) * hi > D;
      if (above_lo && below_hi) out.push_back(EvenLattice{Int(static_cast<long>(a)), Int(static_cast<long>(b)), Int(static_cast<long>(c))});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t bf_cf_period(std::int64_t delta) {
  const std::int64_t a0 = root128(delta);
  std::int64_t P = 0, Q = 1;
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> seen;
  for (std::int64_t i = 0;; ++i) {
    auto [it, fresh] = seen.emplace(std::make_pair(P, Q), i);
    if (!fresh) return i - it->second;
    const std::int64_t a = (a0 + P) / Q;
    P = a * Q - P;
    Q = (delta - P * P) / Q;
  }
}

bool bf_diagonal_solvable(std::int64_t a, std::int64_t b, std::int64_t n, bool xy_odd,
                          std::int64_t box) {
  for (i128 x = 0; x <= box; ++x) {
    for (i128 y = 0; y <= box; ++y) {
      if (a * x * x - b * y * y != n) continue;
      if (!xy_odd || (x % 2 == 1 && y % 2 == 1)) return true;
    }
  }
  return false;
}

}  // namespace k3pell::oracle
