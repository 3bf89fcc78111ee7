#include "k3/lattice.hpp"

#include <regex>

#include "k3/error.hpp"
#include "k3/linalg.hpp"
#include "k3/poly.hpp"

namespace k3::lattice {

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.square() || gram_.rows() == 0) throw Error(ErrorCode::BadGram, "Gram matrix must be square and nonempty");
  if (!gram_.is_symmetric()) throw Error(ErrorCode::BadGram, "Gram matrix must be symmetric");
  if (linalg::determinant(gram_) == 0) throw Error(ErrorCode::DegenerateForm, "Gram determinant is zero");
}

Integer Lattice::pair(const std::vector<Integer>& x, const std::vector<Integer>& y) const {
  if (x.size() != rank() || y.size() != rank()) throw Error(ErrorCode::RankMismatch, "vector length differs from rank");
  Integer acc = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) acc += x[i] * gram_(i, j) * y[j];
  }
  return acc;
}

namespace {

IntMatrix e8_cartan() {
  // Chain 1-2-3-4-5-6-7 with node 8 attached to node 5.
  IntMatrix c(8, 8);
  for (std::size_t i = 0; i < 8; ++i) c(i, i) = 2;
  auto link = [&c](std::size_t a, std::size_t b) {
    c(a - 1, b - 1) = -1;
    c(b - 1, a - 1) = -1;
  };
  for (std::size_t i = 1; i < 7; ++i) link(i, i + 1);
  link(5, 8);
  return c;
}

}  // namespace

Lattice standard_lattice(StandardName name, long two_d) {
  switch (name) {
    case StandardName::U:
      return Lattice(IntMatrix{{0, 1}, {1, 0}});
    case StandardName::E8:
      return Lattice(e8_cartan());
    case StandardName::E8Minus1:
      return Lattice(e8_cartan().scaled(Integer(-1)));
    case StandardName::Rank1:
      if (two_d == 0) throw Error(ErrorCode::DegenerateForm, "RANK1(0) is degenerate");
      if (two_d % 2 != 0) throw Error(ErrorCode::UnknownLattice, "RANK1 needs an even parameter");
      return Lattice(IntMatrix{{two_d}});
  }
  throw Error(ErrorCode::UnknownLattice, "unknown standard lattice");
}

Lattice standard_lattice(std::string_view name) {
  if (name == "U") return standard_lattice(StandardName::U);
  if (name == "E8") return standard_lattice(StandardName::E8);
  if (name == "E8_MINUS_1") return standard_lattice(StandardName::E8Minus1);
  static const std::regex rank1(R"(RANK1\((-?[0-9]{1,17})\))");
  std::cmatch match;
  if (std::regex_match(name.begin(), name.end(), match, rank1))
    return standard_lattice(StandardName::Rank1, std::stol(match[1].str()));
  throw Error(ErrorCode::UnknownLattice, "unknown lattice name '" + std::string(name) + "'");
}

Lattice twist(const Lattice& l, const Integer& m) {
  if (m == 0) throw Error(ErrorCode::DegenerateForm, "twist by zero");
  return Lattice(l.gram().scaled(m));
}

Lattice direct_sum(const Lattice& a, const Lattice& b) { return Lattice(block_diagonal(a.gram(), b.gram())); }

Invariants invariants(const Lattice& l) {
  Invariants inv;
  inv.det = linalg::determinant(l.gram());
  if (inv.det == 0) throw Error(ErrorCode::DegenerateForm, "Gram determinant is zero");
  inv.rank = l.rank();
  auto roots = poly::count_signed_real_roots(RatPoly::from_integers(linalg::characteristic_polynomial(l.gram())));
  inv.signature = {roots.positive, roots.negative};
  inv.even = true;
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (mpz_odd_p(l.gram()(i, i).get_mpz_t())) inv.even = false;
  inv.unimodular = abs(inv.det) == 1;
  return inv;
}

Integer DiscriminantGroup::order() const {
  Integer o = 1;
  for (const auto& f : invariant_factors) o *= f;
  return o;
}

DiscriminantGroup discriminant_group(const Lattice& l) {
  auto snf = linalg::smith_normal_form(l.gram());
  DiscriminantGroup g;
  for (const auto& d : snf.diagonal) {
    if (d == 0) throw Error(ErrorCode::DegenerateForm, "Gram determinant is zero");
    if (d > 1) g.invariant_factors.push_back(d);
  }
  return g;
}

Sublattice::Sublattice(Lattice ambient, IntMatrix basis) : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  if (basis_.cols() != ambient_.rank())
    throw Error(ErrorCode::BadSublattice, "basis rows must have ambient length");
  if (basis_.rows() == 0) {
    saturated_ = true;
    return;
  }
  auto snf = linalg::smith_normal_form(basis_);
  saturated_ = true;
  for (const auto& d : snf.diagonal) {
    if (d == 0) throw Error(ErrorCode::BadSublattice, "basis rows are linearly dependent");
    if (d != 1) saturated_ = false;
  }
}

IntMatrix Sublattice::induced_gram() const { return basis_ * ambient_.gram() * basis_.transpose(); }

Lattice Sublattice::induced_lattice() const { return Lattice(induced_gram()); }

bool Sublattice::contains(const std::vector<Integer>& v) const {
  if (v.size() != ambient_.rank()) return false;
  IntMatrix t(1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) t(0, i) = v[i];
  if (rank() == 0) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  auto coeffs = linalg::express_in_basis(to_rational(t), to_rational(basis_));
  return coeffs && to_integer(*coeffs).has_value();
}

bool Sublattice::same_span(const Sublattice& other) const {
  if (!(ambient_ == other.ambient_) || rank() != other.rank()) return false;
  for (std::size_t r = 0; r < other.rank(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  for (std::size_t r = 0; r < rank(); ++r)
    if (!other.contains(basis_.row(r))) return false;
  return true;
}

Isometry::Isometry(IntMatrix matrix, Lattice domain) : matrix_(std::move(matrix)), domain_(std::move(domain)) {
  if (!matrix_.square() || matrix_.rows() != domain_.rank())
    throw Error(ErrorCode::RankMismatch, "isometry size differs from lattice rank");
  if (!verify_isometry(matrix_, domain_, domain_))
    throw Error(ErrorCode::NotIsometry, "matrix does not preserve the form");
}

Sublattice orthogonal_complement(const Lattice& l, const Sublattice& s) {
  if (!(s.ambient() == l)) throw Error(ErrorCode::BadSublattice, "sublattice lives in a different lattice");
  if (s.rank() == 0) return Sublattice(l, IntMatrix::identity(l.rank()));
  return Sublattice(l, linalg::integer_kernel(s.basis() * l.gram()));
}

Sublattice saturate(const Sublattice& s) {
  if (s.saturated()) return s;
  // U B V = D, so row span of B over Q meets Z^n in the first k rows of V^{-1}.
  auto snf = linalg::smith_normal_form(s.basis());
  IntMatrix vinv = linalg::unimodular_inverse(snf.right);
  IntMatrix basis(s.rank(), s.ambient().rank());
  for (std::size_t r = 0; r < s.rank(); ++r)
    for (std::size_t c = 0; c < basis.cols(); ++c) basis(r, c) = vinv(r, c);
  return Sublattice(s.ambient(), std::move(basis));
}

Integer saturation_index(const Sublattice& s) {
  if (s.rank() == 0) return 1;
  Integer index = 1;
  for (const auto& d : linalg::smith_normal_form(s.basis()).diagonal) index *= d;
  return index;
}

std::pair<Sublattice, Sublattice> fixed_and_antifixed(const Lattice& l, const Isometry& iota) {
  if (!(iota.domain() == l)) throw Error(ErrorCode::RankMismatch, "isometry acts on a different lattice");
  const IntMatrix& m = iota.matrix();
  const IntMatrix id = IntMatrix::identity(l.rank());
  if (!(m * m == id)) throw Error(ErrorCode::NotInvolution, "isometry does not square to the identity");
  return {Sublattice(l, linalg::integer_kernel(m - id)), Sublattice(l, linalg::integer_kernel(m + id))};
}

bool verify_isometry(const IntMatrix& m, const Lattice& l1, const Lattice& l2) {
  if (!m.square() || m.rows() != l1.rank() || l1.rank() != l2.rank())
    throw Error(ErrorCode::RankMismatch, "witness size must equal both ranks");
  if (abs(linalg::determinant(m)) != 1) return false;
  return m.transpose() * l2.gram() * m == l1.gram();
}

nlohmann::json to_json(const Lattice& l) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < l.rank(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < l.rank(); ++c) {
      const Integer& v = l.gram()(r, c);
      if (v.fits_slong_p())
        row.push_back(v.get_si());
      else
        row.push_back(v.get_str());
    }
    rows.push_back(std::move(row));
  }
  return {{"rank", l.rank()}, {"gram", std::move(rows)}};
}

Lattice lattice_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("gram"))
    throw Error(ErrorCode::BadInput, "lattice literal needs 'rank' and 'gram'");
  if (!j["rank"].is_number_integer() || j["rank"].get<long>() <= 0)
    throw Error(ErrorCode::BadInput, "'rank' must be a positive integer");
  const auto n = j["rank"].get<std::size_t>();
  const auto& rows = j["gram"];
  if (!rows.is_array() || rows.size() != n) throw Error(ErrorCode::BadGram, "gram must have 'rank' rows");
  IntMatrix g(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) throw Error(ErrorCode::BadGram, "gram must be square");
    for (std::size_t c = 0; c < n; ++c) {
      const auto& e = rows[r][c];
      if (e.is_number_integer()) {
        g(r, c) = Integer(e.get<long>());
      } else if (e.is_string()) {
        Integer v;
        if (v.set_str(e.get<std::string>(), 10) != 0) throw Error(ErrorCode::BadInput, "bad integer entry");
        g(r, c) = v;
      } else {
        throw Error(ErrorCode::BadInput, "gram entries must be exact integers");
      }
    }
  }
  return Lattice(std::move(g));
}

}  // namespace k3::lattice
