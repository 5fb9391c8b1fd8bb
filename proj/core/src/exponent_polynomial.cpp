#include "ahull/exponent_polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ahull {

ExponentPolynomial::ExponentPolynomial(std::size_t nvars, std::vector<Term> terms)
    : nvars_(nvars), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.exponents.size() != nvars_) {
      throw std::invalid_argument("exponent vector of length " + std::to_string(t.exponents.size()) +
                                  " in a polynomial in " + std::to_string(nvars_) + " variables");
    }
  }
  normalize();
}

void ExponentPolynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.exponents < b.exponents; });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exponents == t.exponents) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(std::move(t));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term& t) { return t.coefficient == 0; }),
               merged.end());
  terms_ = std::move(merged);
}

ExponentPolynomial ExponentPolynomial::constant(std::size_t nvars, const Integer& c) {
  return ExponentPolynomial(nvars, {Term{c, std::vector<unsigned>(nvars, 0)}});
}

ExponentPolynomial ExponentPolynomial::variable(std::size_t nvars, std::size_t i, unsigned power) {
  if (i >= nvars) throw std::out_of_range("variable index out of range");
  std::vector<unsigned> e(nvars, 0);
  e[i] = power;
  return ExponentPolynomial(nvars, {Term{Integer(1), std::move(e)}});
}

unsigned ExponentPolynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, std::accumulate(t.exponents.begin(), t.exponents.end(), 0U));
  return d;
}

namespace {

void check_vars(const ExponentPolynomial& a, const ExponentPolynomial& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("polynomials in different variable sets");
}

}  // namespace

ExponentPolynomial operator+(const ExponentPolynomial& a, const ExponentPolynomial& b) {
  check_vars(a, b);
  auto terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return ExponentPolynomial(a.nvars_, std::move(terms));
}

ExponentPolynomial operator-(const ExponentPolynomial& a, const ExponentPolynomial& b) {
  return a + Integer(-1) * b;
}

ExponentPolynomial operator*(const ExponentPolynomial& a, const ExponentPolynomial& b) {
  check_vars(a, b);
  std::vector<ExponentPolynomial::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      std::vector<unsigned> e(a.nvars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = s.exponents[i] + t.exponents[i];
      terms.push_back({s.coefficient * t.coefficient, std::move(e)});
    }
  }
  return ExponentPolynomial(a.nvars_, std::move(terms));
}

ExponentPolynomial operator*(const Integer& c, const ExponentPolynomial& a) {
  auto terms = a.terms_;
  for (auto& t : terms) t.coefficient *= c;
  return ExponentPolynomial(a.nvars_, std::move(terms));
}

bool operator==(const ExponentPolynomial& a, const ExponentPolynomial& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coefficient != b.terms_[i].coefficient || a.terms_[i].exponents != b.terms_[i].exponents)
      return false;
  }
  return true;
}

ExponentPolynomial ExponentPolynomial::combination(const std::vector<Integer>& e,
                                                   const std::vector<ExponentPolynomial>& g) {
  if (e.size() != g.size()) throw std::invalid_argument("combination: length mismatch");
  if (g.empty()) return ExponentPolynomial(0);
  std::vector<Term> terms;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (e[j] == 0) continue;
    check_vars(g[0], g[j]);
    for (const auto& t : g[j].terms_) terms.push_back({e[j] * t.coefficient, t.exponents});
  }
  return ExponentPolynomial(g[0].nvars_, std::move(terms));
}

std::string ExponentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    if (k) os << (t.coefficient < 0 ? " - " : " + ");
    else if (t.coefficient < 0) os << '-';
    const Integer mag = abs(t.coefficient);
    bool any = false;
    if (mag != 1) {
      os << ahull::to_string(mag);
      any = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.exponents[i] == 0) continue;
      if (any) os << '*';
      os << 'x' << (i + 1);
      if (t.exponents[i] > 1) os << '^' << t.exponents[i];
      any = true;
    }
    if (!any) os << '1';
  }
  return os.str();
}

}  // namespace ahull
