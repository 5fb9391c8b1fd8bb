#include "ahull/io.hpp"

#include <stdexcept>

namespace ahull::io {

namespace {

std::string where(const json& j) {
  std::string s = j.dump();
  if (s.size() > 60) s = s.substr(0, 57) + "...";
  return s;
}

const json& require_array(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be a JSON array, got " + where(j));
  return j;
}

}  // namespace

Rational parse_rational(const json& j) {
  if (j.is_string()) return ahull::parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(ahull::parse_integer(j.dump()));
  throw std::invalid_argument("expected a rational as string or integer, got " + where(j));
}

Integer parse_integer(const json& j) {
  if (j.is_string()) return ahull::parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return ahull::parse_integer(j.dump());
  throw std::invalid_argument("expected an integer as string or number, got " + where(j));
}

json to_json(const Rational& q) { return ahull::to_string(q); }
json to_json(const Integer& z) { return ahull::to_string(z); }

RatMatrix parse_matrix(const json& j) {
  require_array(j, "matrix");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) {
    require_array(r, "matrix row");
    std::vector<Rational> row;
    for (const auto& v : r) row.push_back(parse_rational(v));
    rows.push_back(std::move(row));
  }
  RatMatrix m(rows);
  if (!m.is_square() || m.rows() == 0) throw std::invalid_argument("matrix must be square and nonempty");
  return m;
}

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix parse_int_matrix(const json& j) {
  require_array(j, "matrix");
  std::vector<IntVector> rows;
  for (const auto& r : j) {
    require_array(r, "matrix row");
    IntVector row;
    for (const auto& v : r) row.push_back(parse_integer(v));
    rows.push_back(std::move(row));
  }
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return IntMatrix(cols, std::move(rows));
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (const auto& r : m.row_list()) {
    json row = json::array();
    for (const auto& v : r) row.push_back(to_json(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatPolynomial parse_polynomial(const json& j) {
  require_array(j, "polynomial");
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(parse_rational(v));
  RatPolynomial f(std::move(c));
  if (f.degree() < 1) throw std::invalid_argument("polynomial must have degree >= 1");
  return f;
}

IntPolynomial parse_monic_integral(const json& j) {
  const RatPolynomial f = parse_polynomial(j);
  if (!f.is_monic()) throw std::invalid_argument("polynomial must be monic");
  return to_integral(f);
}

json to_json(const IntPolynomial& f) {
  json a = json::array();
  for (const auto& c : f.coefficients()) a.push_back(to_json(c));
  return a;
}

ExponentPolynomial parse_target(const json& j, std::size_t nvars) {
  require_array(j, "target");
  std::vector<ExponentPolynomial::Term> terms;
  for (const auto& t : j) {
    const json* coeff = nullptr;
    const json* exps = nullptr;
    if (t.is_array() && t.size() == 2) {
      coeff = &t[0];
      exps = &t[1];
    } else if (t.is_object() && t.contains("coeff") && t.contains("exps")) {
      coeff = &t["coeff"];
      exps = &t["exps"];
    } else {
      throw std::invalid_argument("malformed target term " + where(t));
    }
    require_array(*exps, "exponent vector");
    std::vector<unsigned> e;
    for (const auto& v : *exps) {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw std::invalid_argument("exponents must be non-negative integers");
      }
      e.push_back(v.get<unsigned>());
    }
    if (e.size() > nvars) throw std::invalid_argument("variable index out of range in target " + where(t));
    e.resize(nvars, 0);
    terms.push_back({parse_integer(*coeff), std::move(e)});
  }
  return ExponentPolynomial(nvars, std::move(terms));
}

json to_json(const ExponentPolynomial& g) {
  json a = json::array();
  for (const auto& t : g.terms()) a.push_back(json::array({to_json(t.coefficient), t.exponents}));
  return a;
}

std::vector<Permutation> parse_permutations(const json& j, std::size_t degree) {
  require_array(j, "group");
  std::vector<Permutation> out;
  for (const auto& p : j) {
    require_array(p, "permutation");
    std::vector<std::size_t> images;
    for (const auto& v : p) {
      if (!v.is_number_integer()) throw std::invalid_argument("permutation images must be integers");
      const auto x = v.get<long long>();
      if (x < 1) throw std::invalid_argument("permutation images are 1-based");
      images.push_back(static_cast<std::size_t>(x));
    }
    if (images.size() != degree) {
      throw std::invalid_argument("permutation of degree " + std::to_string(images.size()) + ", expected " +
                                  std::to_string(degree));
    }
    out.push_back(from_one_based(images));
  }
  return out;
}

json permutations_to_json(const std::vector<Permutation>& perms) {
  json a = json::array();
  for (const auto& p : perms) a.push_back(to_one_based(p));
  return a;
}

json to_json(const ApproxRoots& roots) {
  json rs = json::array();
  for (const auto& r : roots.roots) {
    json c = json::array();
    for (const auto& v : r.coefficients()) c.push_back(to_json(v));
    rs.push_back(std::move(c));
  }
  return json{{"p", roots.ring->p()},
              {"k", roots.precision()},
              {"omega", to_json(roots.ring->omega())},
              {"roots", std::move(rs)}};
}

json to_json(const BoundData& b) {
  return json{{"M_prime", to_json(b.root_bound)}, {"M", to_json(b.embedding)}, {"N", to_json(b.N)},
              {"r", to_json(b.r)},               {"k", b.k},                   {"lambda", to_json(b.lambda)},
              {"p", b.p},                        {"f_p", b.f_p},               {"s", b.s}};
}

json to_json(const RelationBasis& r) {
  return json{{"basis", to_json(r.basis)},
              {"rank", r.basis.rows()},
              {"mode", to_string(r.mode)},
              {"certification", r.certification},
              {"verify_precision", r.verify_precision},
              {"route", to_string(r.route)},
              {"fell_back", r.fell_back},
              {"iterations", r.iterations},
              {"bounds", to_json(r.bounds)}};
}

json to_json(const HullResult& h) {
  json basis = json::array();
  for (const auto& m : h.span.basis()) basis.push_back(to_json(m));
  json upsilon = json::array();
  for (const auto& g : h.witness.upsilon) {
    json row = json::array();
    for (const auto& v : g) row.push_back(to_json(v));
    upsilon.push_back(std::move(row));
  }
  json witnesses{{"lambda_basis", h.witness.lambda ? to_json(h.witness.lambda->basis) : json::array()},
                 {"upsilon_basis", std::move(upsilon)},
                 {"prime", h.witness.p},
                 {"f_p", h.witness.f_p},
                 {"precision", h.witness.precision},
                 {"scale", to_json(h.witness.scale)},
                 {"constraint_rank", h.witness.constraint_rank}};
  return json{{"basis", std::move(basis)},
              {"dim", h.dim()},
              {"route", to_string(h.route)},
              {"mode", to_string(h.mode)},
              {"certification", h.certification},
              {"witnesses", std::move(witnesses)}};
}

}  // namespace ahull::io
