#include "ahull/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace ahull {

IntMatrix::IntMatrix(std::size_t cols, std::vector<IntVector> rows) : cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw std::invalid_argument("ragged integer matrix");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::append_row(IntVector r) {
  if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
  rows_.push_back(std::move(r));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = rows_[i][j];
  return t;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << ahull::to_string(rows_[i][j]);
    os << ']';
  }
  os << ']';
  return os.str();
}

ModMatrix::ModMatrix(IntMatrix m, std::uint64_t p_, unsigned k_) : entries(std::move(m)), p(p_), k(k_) {
  const Integer q = modulus();
  for (std::size_t i = 0; i < entries.rows(); ++i)
    for (auto& v : entries.row(i)) v = mod(v, q);
}

Integer ModMatrix::modulus() const { return ipow(Integer(std::to_string(p)), k); }

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer norm_squared(const IntVector& v) { return dot(v, v); }

namespace {

void axpy(IntVector& y, const Integer& q, const IntVector& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= q * x[i];
}

}  // namespace

// Integral LLL in the formulation of Cohen, Algorithm 2.6.7 (1-based indices below).
IntMatrix lll_reduce(const IntMatrix& input, const Rational& delta) {
  if (delta <= Rational(1, 4) || delta > 1) throw std::invalid_argument("LLL parameter must lie in (1/4, 1]");
  const std::size_t n = input.rows();
  if (n <= 1) {
    if (n == 1 && norm_squared(input.row(0)) == 0) throw std::invalid_argument("LLL input rows are dependent");
    return input;
  }
  const Integer num = delta.get_num(), den = delta.get_den();
  std::vector<IntVector> b(n + 1);
  for (std::size_t i = 1; i <= n; ++i) b[i] = input.row(i - 1);
  std::vector<Integer> d(n + 1, Integer(0));
  std::vector<std::vector<Integer>> lam(n + 1, std::vector<Integer>(n + 1, Integer(0)));

  auto red = [&](std::size_t k, std::size_t l) {
    if (2 * abs(lam[k][l]) <= d[l]) return;
    const Integer q = round_div(lam[k][l], d[l]);
    axpy(b[k], q, b[l]);
    lam[k][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  std::size_t kmax = 1;
  auto swapi = [&](std::size_t k) {
    std::swap(b[k], b[k - 1]);
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const Integer l = lam[k][k - 1];
    const Integer B = (d[k - 2] * d[k] + l * l) / d[k - 1];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Integer t = lam[i][k];
      lam[i][k] = (d[k] * lam[i][k - 1] - l * t) / d[k - 1];
      lam[i][k - 1] = (B * t + l * lam[i][k]) / d[k];
    }
    d[k - 1] = B;
  };

  d[0] = 1;
  d[1] = norm_squared(b[1]);
  if (d[1] == 0) throw std::invalid_argument("LLL input rows are dependent");
  std::size_t k = 2;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        Integer u = dot(b[k], b[j]);
        for (std::size_t i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k) {
          lam[k][j] = u;
        } else {
          d[k] = u;
          if (u == 0) throw std::invalid_argument("LLL input rows are dependent");
        }
      }
    }
    red(k, k - 1);
    if (den * d[k] * d[k - 2] < num * d[k - 1] * d[k - 1] - den * lam[k][k - 1] * lam[k][k - 1]) {
      swapi(k);
      if (k > 2) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 1;) red(k, l);
      ++k;
    }
  }
  std::vector<IntVector> out(b.begin() + 1, b.end());
  return IntMatrix(input.cols(), std::move(out));
}

IntMatrix hnf(const IntMatrix& input) {
  std::vector<IntVector> a = input.row_list();
  const std::size_t m = a.size(), cols = input.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (a[i][c] == 0) continue;
      if (a[r][c] == 0) {
        std::swap(a[r], a[i]);
        continue;
      }
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a[r][c].get_mpz_t(), a[i][c].get_mpz_t());
      const Integer u = a[r][c] / g, v = a[i][c] / g;
      for (std::size_t j = c; j < cols; ++j) {
        const Integer ar = a[r][j], ai = a[i][j];
        a[r][j] = x * ar + y * ai;
        a[i][j] = u * ai - v * ar;
      }
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0) {
      for (std::size_t j = c; j < cols; ++j) a[r][j] = -a[r][j];
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i][c] == 0) continue;
      axpy(a[i], floor_div(a[i][c], a[r][c]), a[r]);
    }
    ++r;
  }
  a.resize(r);
  return IntMatrix(cols, std::move(a));
}

namespace {

unsigned pvaluation(Integer x, const Integer& p) {
  unsigned v = 0;
  while (x != 0 && mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
    x /= p;
    ++v;
  }
  return v;
}

bool is_zero_row(const IntVector& r) {
  for (const auto& v : r)
    if (v != 0) return false;
  return true;
}

}  // namespace

ModMatrix howell_form(const ModMatrix& input) {
  const Integer q = input.modulus();
  const Integer P(std::to_string(input.p));
  std::vector<IntVector> a = input.entries.row_list();
  const std::size_t cols = input.entries.cols();
  auto reduce = [&](IntVector& row) {
    for (auto& v : row) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t best = a.size();
    unsigned bv = 0;
    for (std::size_t i = r; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const unsigned v = pvaluation(a[i][c], P);
      if (best == a.size() || v < bv) {
        best = i;
        bv = v;
      }
    }
    if (best == a.size()) continue;
    std::swap(a[r], a[best]);
    const Integer pj = ipow(P, bv);
    Integer unit = a[r][c] / pj, inv;
    mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), q.get_mpz_t());
    for (auto& v : a[r]) v *= inv;
    reduce(a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      axpy(a[i], a[i][c] / pj, a[r]);
      reduce(a[i]);
    }
    if (bv > 0) {
      IntVector extra = a[r];
      const Integer s = ipow(P, input.k - bv);
      for (auto& v : extra) v *= s;
      reduce(extra);
      if (!is_zero_row(extra)) a.push_back(std::move(extra));
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i][c] < pj) continue;
      axpy(a[i], floor_div(a[i][c], pj), a[r]);
      reduce(a[i]);
    }
    ++r;
  }
  a.resize(r);
  ModMatrix out;
  out.entries = IntMatrix(cols, std::move(a));
  out.p = input.p;
  out.k = input.k;
  return out;
}

ModMatrix nullspace_mod(const ModMatrix& b) {
  const std::size_t m = b.entries.rows(), n = b.entries.cols();
  IntMatrix aug(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = b.entries(i, j);
    aug(i, n + i) = 1;
  }
  const ModMatrix h = howell_form(ModMatrix(std::move(aug), b.p, b.k));
  IntMatrix kernel(0, m);
  for (const auto& row : h.entries.row_list()) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = row[j] == 0;
    if (left_zero) kernel.append_row(IntVector(row.begin() + static_cast<std::ptrdiff_t>(n), row.end()));
  }
  ModMatrix out;
  out.entries = std::move(kernel);
  out.p = b.p;
  out.k = b.k;
  return out;
}

std::optional<Rational> rational_reconstruction(const Integer& a, const Integer& m) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  const Integer bound = isqrt((m - 1) / 2);
  Integer r0 = m, r1 = mod(a, m), t0 = 0, t1 = 1;
  while (r1 > bound) {
    const Integer q = r0 / r1;
    Integer r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), t1.get_mpz_t(), m.get_mpz_t());
  if (g != 1) return std::nullopt;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  return make_rational(r1, t1);
}

IntMatrix integer_left_kernel(const IntMatrix& b) {
  const std::size_t m = b.rows(), n = b.cols();
  IntMatrix aug(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = b(i, j);
    aug(i, n + i) = 1;
  }
  const IntMatrix h = hnf(aug);
  IntMatrix kernel(0, m);
  for (const auto& row : h.row_list()) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = row[j] == 0;
    if (left_zero) kernel.append_row(IntVector(row.begin() + static_cast<std::ptrdiff_t>(n), row.end()));
  }
  return kernel;
}

IntMatrix saturate(const IntMatrix& rows) {
  const std::size_t s = rows.cols();
  bool all_zero = true;
  for (const auto& r : rows.row_list()) all_zero = all_zero && is_zero_row(r);
  if (all_zero) return IntMatrix(0, s);
  const IntMatrix k = integer_left_kernel(rows.transpose());
  if (k.empty()) return IntMatrix::identity(s);
  return hnf(integer_left_kernel(k.transpose()));
}

IntMatrix saturate(const std::vector<RatVector>& rows, std::size_t cols) {
  IntMatrix a(0, cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("row length mismatch");
    Integer l(1);
    for (const auto& v : r) l = lcm(l, v.get_den());
    IntVector iv;
    for (const auto& v : r) iv.push_back(v.get_num() * (l / v.get_den()));
    a.append_row(std::move(iv));
  }
  return saturate(a);
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  return a.cols() == b.cols() && hnf(a) == hnf(b);
}

std::vector<RatVector> to_rational_rows(const IntMatrix& m) {
  std::vector<RatVector> out;
  for (const auto& r : m.row_list()) {
    RatVector v;
    for (const auto& x : r) v.emplace_back(x);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace ahull
