#include "k3/poly.hpp"

#include <sstream>

#include "k3/error.hpp"
#include "k3/linalg.hpp"

namespace k3 {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return RatPoly(std::move(v));
}

RatPoly RatPoly::parse(std::string_view text) {
  std::vector<Rational> v;
  std::string token;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, token, ',')) {
    std::size_t b = token.find_first_not_of(" \t");
    std::size_t e = token.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorCode::BadInput, "empty coefficient in '" + std::string(text) + "'");
    token = token.substr(b, e - b + 1);
    if (token[0] == '+') token.erase(0, 1);
    Rational q;
    if (token.empty() || q.set_str(token, 10) != 0)
      throw Error(ErrorCode::BadInput, "bad rational coefficient '" + token + "'");
    if (q.get_den() == 0) throw Error(ErrorCode::BadInput, "zero denominator in '" + token + "'");
    q.canonicalize();
    v.push_back(q);
  }
  if (v.empty()) throw Error(ErrorCode::BadInput, "empty coefficient list");
  return RatPoly(std::move(v));
}

void RatPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> RatPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational RatPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

RatPoly RatPoly::operator+(const RatPoly& rhs) const {
  std::vector<Rational> v(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& rhs) const { return *this + (-rhs); }

RatPoly RatPoly::operator-() const {
  RatPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

RatPoly RatPoly::operator*(const RatPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> v(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const Rational& s) const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c *= s;
  return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division by the zero polynomial");
  std::vector<Rational> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() <= dd) return {RatPoly{}, *this};
  std::vector<Rational> quo(rem.size() - dd, Rational(0));
  const Rational& lead = divisor.coeffs_.back();
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / lead;
    quo[i - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.coeffs_[j];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RatPoly(std::move(v));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  return *this * (1 / leading());
}

Rational RatPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

std::vector<Integer> RatPoly::primitive_integer() const {
  if (is_zero()) return {};
  Integer den = 1;
  for (const auto& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (out.back() < 0) content = -content;
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return out;
}

std::string RatPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0) os << '*';
    }
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::string RatPoly::to_csv() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].get_str();
  }
  return out;
}

namespace poly {

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "gcd(0, 0) is undefined");
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "squarefree part of the zero polynomial");
  if (*p.degree() == 0) return RatPoly{1};
  return (p / gcd(p, p.derivative())).monic();
}

bool is_squarefree(const RatPoly& p) {
  if (p.is_zero()) return false;
  if (*p.degree() == 0) return true;
  return *gcd(p, p.derivative()).degree() == 0;
}

std::vector<std::pair<RatPoly, std::size_t>> squarefree_decomposition(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "squarefree decomposition of zero");
  std::vector<std::pair<RatPoly, std::size_t>> out;
  if (*p.degree() == 0) return out;
  RatPoly f = p.monic();
  RatPoly a = gcd(f, f.derivative());
  RatPoly b = f / a;
  RatPoly c = f.derivative() / a;
  RatPoly d = c - b.derivative();
  for (std::size_t i = 1; *b.degree() > 0; ++i) {
    RatPoly g = gcd(b, d);
    b = b / g;
    c = d / g;
    if (*g.degree() > 0) out.emplace_back(g.monic(), i);
    d = c - b.derivative();
  }
  return out;
}

Rational resultant(const RatPoly& p, const RatPoly& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  const std::size_t m = *p.degree();
  const std::size_t n = *q.degree();
  if (m == 0 && n == 0) return 1;
  RatMatrix s(m + n, m + n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s(r, r + j) = p.coeff(m - j);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s(n + r, r + j) = q.coeff(n - j);
  return linalg::determinant(s);
}

bool are_associates(const RatPoly& p, const RatPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return p.monic() == q.monic();
}

namespace {

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  std::vector<RatPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    RatPoly r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sign_of(const Rational& q) { return sgn(q); }

std::size_t count_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t changes_at(const std::vector<RatPoly>& seq, const Rational& x) {
  std::vector<int> signs;
  for (const auto& f : seq) signs.push_back(sign_of(f.evaluate(x)));
  return count_changes(signs);
}

// direction = +1 for +infinity, -1 for -infinity
std::size_t changes_at_infinity(const std::vector<RatPoly>& seq, int direction) {
  std::vector<int> signs;
  for (const auto& f : seq) {
    int s = sign_of(f.leading());
    if (direction < 0 && (*f.degree() % 2 == 1)) s = -s;
    signs.push_back(s);
  }
  return count_changes(signs);
}

}  // namespace

std::size_t sturm_count(const RatPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero() || *p.degree() == 0) return 0;
  auto seq = sturm_sequence(p);
  return changes_at(seq, lo) - changes_at(seq, hi);
}

SignedRootCount count_signed_real_roots(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::DegenerateForm, "root count of the zero polynomial");
  if (p.coeff(0) == 0) throw Error(ErrorCode::DegenerateForm, "zero is a root");
  SignedRootCount out;
  for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
    auto seq = sturm_sequence(factor);
    const std::size_t at_zero = changes_at(seq, Rational(0));
    out.positive += (at_zero - changes_at_infinity(seq, +1)) * multiplicity;
    out.negative += (changes_at_infinity(seq, -1) - at_zero) * multiplicity;
  }
  return out;
}

}  // namespace poly
}  // namespace k3
