#include "ahull/foundations.hpp"

#include <sstream>
#include <stdexcept>

namespace ahull {

// ---------------------------------------------------------------------------
// Polynomials over Q

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RatPolynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational lead_inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] * lead_inv;
    quot[static_cast<std::size_t>(i - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coefficient(static_cast<std::size_t>(j));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial make_monic(const RatPolynomial& f) {
  if (f.is_zero()) return f;
  return (1 / f.leading()) * f;
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

RatPolynomial to_rational(const IntPolynomial& f) {
  std::vector<Rational> c;
  c.reserve(f.coefficients().size());
  for (const auto& v : f.coefficients()) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

IntPolynomial to_integral(const RatPolynomial& f) {
  std::vector<Integer> c;
  c.reserve(f.coefficients().size());
  for (const auto& v : f.coefficients()) {
    if (v.get_den() != 1) throw std::domain_error("polynomial has non-integral coefficient " + to_string(v));
    c.push_back(v.get_num());
  }
  return IntPolynomial(std::move(c));
}

namespace {

template <class T>
std::string poly_to_string(const Polynomial<T>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const T c = f.coefficient(static_cast<std::size_t>(i));
    if (c == 0) continue;
    const bool neg = c < 0;
    const T mag = neg ? T(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << to_string(mag);
    }
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const RatPolynomial& f) { return poly_to_string(f); }
std::string to_string(const IntPolynomial& f) { return poly_to_string(f); }

// ---------------------------------------------------------------------------
// Matrix spans

RatVector flatten(const RatMatrix& a) { return a.entries(); }

RatMatrix unflatten(const RatVector& v, std::size_t n) { return RatMatrix(n, n, v); }

namespace {

std::vector<RatVector> coordinates(const std::vector<RatMatrix>& ms) {
  std::vector<RatVector> rows;
  rows.reserve(ms.size());
  for (const auto& m : ms) rows.push_back(flatten(m));
  return rows;
}

void check_shape(std::size_t n, const RatMatrix& m) {
  if (m.rows() != n || m.cols() != n) {
    throw std::invalid_argument("matrix of size " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " in a span of " + std::to_string(n) +
                                "x" + std::to_string(n) + " matrices");
  }
}

}  // namespace

MatrixSpan::MatrixSpan(std::size_t n, std::vector<RatMatrix> basis) : n_(n), basis_(std::move(basis)) {
  for (const auto& m : basis_) check_shape(n_, m);
  if (rank(coordinates(basis_)) != basis_.size()) {
    throw std::invalid_argument("matrix span basis is linearly dependent");
  }
}

MatrixSpan MatrixSpan::spanned_by(std::size_t n, const std::vector<RatMatrix>& generators) {
  MatrixSpan s(n);
  std::vector<RatVector> echelon;
  for (const auto& g : generators) {
    check_shape(n, g);
    auto trial = echelon;
    trial.push_back(flatten(g));
    const std::size_t r = reduce_rows(trial).size();
    if (r > echelon.size()) {
      echelon = std::move(trial);
      s.basis_.push_back(g);
    }
  }
  return s;
}

bool MatrixSpan::contains(const RatMatrix& a) const {
  check_shape(n_, a);
  if (a.is_zero()) return true;
  return in_row_span(coordinates(basis_), flatten(a));
}

bool MatrixSpan::contains(const MatrixSpan& other) const {
  if (other.n_ != n_) throw std::invalid_argument("span size mismatch");
  auto rows = coordinates(basis_);
  const std::size_t before = reduce_rows(rows).size();
  for (const auto& m : other.basis_) rows.push_back(flatten(m));
  return reduce_rows(rows).size() == before;
}

MatrixSpan MatrixSpan::canonical() const {
  auto rows = coordinates(basis_);
  reduce_rows(rows);
  MatrixSpan s(n_);
  for (const auto& r : rows) s.basis_.push_back(unflatten(r, n_));
  return s;
}

// ---------------------------------------------------------------------------
// Characteristic and minimal polynomials

RatMatrix companion_matrix(const RatPolynomial& f) {
  if (f.degree() < 1) throw std::invalid_argument("companion matrix needs degree >= 1");
  const RatPolynomial g = make_monic(f);
  const auto n = static_cast<std::size_t>(g.degree());
  RatMatrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -g.coefficient(i);
  return c;
}

RatPolynomial char_poly(const RatMatrix& x) {
  if (!x.is_square()) throw std::domain_error("characteristic polynomial of non-square matrix");
  const std::size_t n = x.rows();
  RatMatrix h = x;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t p = c + 1;
    while (p < n && h(p, c) == 0) ++p;
    if (p == n) continue;
    if (p != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, c + 1));
    }
    for (std::size_t r = c + 2; r < n; ++r) {
      if (h(r, c) == 0) continue;
      const Rational u = h(r, c) / h(c + 1, c);
      for (std::size_t j = 0; j < n; ++j) h(r, j) -= u * h(c + 1, j);
      for (std::size_t i = 0; i < n; ++i) h(i, c + 1) += u * h(i, r);
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod_{j=m-i+1}^{m} h_{j,j-1}) p_{m-i-1}
  std::vector<RatPolynomial> p;
  p.reserve(n + 1);
  p.push_back(RatPolynomial::constant(1));
  const RatPolynomial xpoly = RatPolynomial::x();
  for (std::size_t m = 1; m <= n; ++m) {
    RatPolynomial pm = (xpoly - RatPolynomial::constant(h(m - 1, m - 1))) * p[m - 1];
    Rational t(1);
    for (std::size_t i = 1; i < m; ++i) {
      t *= h(m - i, m - i - 1);
      if (t == 0) break;
      pm = pm - (t * h(m - i - 1, m - 1)) * p[m - i - 1];
    }
    p.push_back(std::move(pm));
  }
  return p[n];
}

RatPolynomial min_poly(const RatMatrix& x) {
  if (!x.is_square()) throw std::domain_error("minimal polynomial of non-square matrix");
  const std::size_t n = x.rows();
  std::vector<RatVector> powers;
  RatMatrix current = RatMatrix::identity(n);
  for (std::size_t m = 0; m <= n; ++m) {
    powers.push_back(flatten(current));
    // Columns are the powers; look for a kernel vector with last entry nonzero.
    std::vector<RatVector> rows(n * n, RatVector(powers.size()));
    for (std::size_t c = 0; c < n * n; ++c)
      for (std::size_t j = 0; j < powers.size(); ++j) rows[c][j] = powers[j][c];
    auto kernel = right_kernel(std::move(rows), powers.size());
    if (!kernel.empty()) {
      // First dependency: kernel is one-dimensional with nonzero top coefficient.
      RatVector v = kernel.front();
      const Rational lead = v.back();
      for (auto& e : v) e /= lead;
      return RatPolynomial(std::move(v));
    }
    current = current * x;
  }
  throw std::logic_error("no polynomial dependency found up to degree n");
}

RatPolynomial squarefree_part(const RatPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
  const RatPolynomial g = gcd(f, f.derivative());
  return make_monic(divmod(f, g).first);
}

IntegralScaling scale_to_integral(const RatPolynomial& f) {
  if (!f.is_monic()) throw std::invalid_argument("scale_to_integral needs a monic polynomial");
  Integer d(1);
  for (const auto& c : f.coefficients()) d = lcm(d, c.get_den());
  const auto n = static_cast<std::size_t>(f.degree());
  std::vector<Integer> c(n + 1);
  Integer power(1);
  for (std::size_t j = n + 1; j-- > 0;) {
    const Rational v = f.coefficient(j) * Rational(power);
    c[j] = v.get_num();
    power *= d;
  }
  return {d, IntPolynomial(std::move(c))};
}

bool is_semisimple(const RatMatrix& x) {
  const RatPolynomial m = min_poly(x);
  return gcd(m, m.derivative()).degree() == 0;
}

bool is_nilpotent(const RatMatrix& x) {
  if (!x.is_square()) return false;
  return x.pow(x.rows()).is_zero();
}

JordanDecomposition jordan_decomposition(const RatMatrix& x) {
  if (!x.is_square()) throw std::domain_error("Jordan decomposition of non-square matrix");
  const std::size_t n = x.rows();
  const RatPolynomial g = squarefree_part(min_poly(x));
  const RatPolynomial dg = g.derivative();
  std::size_t steps = 1;
  while ((std::size_t{1} << (steps - 1)) < n) ++steps;  // ceil(log2 n) + 1
  RatMatrix s = x;
  std::size_t done = 0;
  while (true) {
    const RatMatrix gs = evaluate(g, s);
    if (gs.is_zero()) break;
    if (done >= steps + n) throw std::logic_error("Newton iteration for the semisimple part did not converge");
    s = s - gs * evaluate(dg, s).inverse();
    ++done;
  }
  return {s, x - s};
}

MatrixSpan power_basis(const RatMatrix& x) {
  const auto t1 = static_cast<std::size_t>(min_poly(x).degree());
  std::vector<RatMatrix> basis;
  basis.reserve(t1);
  RatMatrix current = RatMatrix::identity(x.rows());
  for (std::size_t i = 0; i < t1; ++i) {
    basis.push_back(current);
    current = current * x;
  }
  return MatrixSpan(x.rows(), std::move(basis));
}

// ---------------------------------------------------------------------------
// Lie operations

RatMatrix lie_bracket(const RatMatrix& a, const RatMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows() || b.cols() != a.cols()) {
    throw std::invalid_argument("bracket of incompatible matrices");
  }
  return a * b - b * a;
}

bool span_contains(const MatrixSpan& s, const RatMatrix& a) { return s.contains(a); }

MatrixSpan span_sum(const MatrixSpan& a, const MatrixSpan& b) {
  if (a.matrix_size() != b.matrix_size()) throw std::invalid_argument("span size mismatch");
  std::vector<RatMatrix> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return MatrixSpan::spanned_by(a.matrix_size(), gens);
}

MatrixSpan span_intersect(const MatrixSpan& a, const MatrixSpan& b) {
  if (a.matrix_size() != b.matrix_size()) throw std::invalid_argument("span size mismatch");
  const std::size_t n = a.matrix_size();
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<RatVector> rows(n * n, RatVector(da + db));
  for (std::size_t j = 0; j < da; ++j) {
    const auto v = flatten(a.basis()[j]);
    for (std::size_t c = 0; c < n * n; ++c) rows[c][j] = v[c];
  }
  for (std::size_t j = 0; j < db; ++j) {
    const auto v = flatten(b.basis()[j]);
    for (std::size_t c = 0; c < n * n; ++c) rows[c][da + j] = -v[c];
  }
  std::vector<RatMatrix> gens;
  for (const auto& k : right_kernel(std::move(rows), da + db)) {
    RatMatrix m(n, n);
    for (std::size_t j = 0; j < da; ++j) {
      if (k[j] != 0) m += k[j] * a.basis()[j];
    }
    gens.push_back(std::move(m));
  }
  return MatrixSpan::spanned_by(n, gens);
}

MatrixSpan bracket_closure(const MatrixSpan& s) {
  std::vector<RatMatrix> basis = s.basis();
  const std::size_t n = s.matrix_size();
  std::vector<RatVector> echelon;
  for (const auto& m : basis) echelon.push_back(flatten(m));
  reduce_rows(echelon);
  // Pairs (i, j) with j < i are bracketed once; new elements are appended and processed in turn.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      RatMatrix br = lie_bracket(basis[i], basis[j]);
      if (br.is_zero()) continue;
      auto trial = echelon;
      trial.push_back(flatten(br));
      if (reduce_rows(trial).size() > echelon.size()) {
        echelon = std::move(trial);
        basis.push_back(std::move(br));
      }
    }
  }
  return MatrixSpan(n, std::move(basis));
}

}  // namespace ahull
