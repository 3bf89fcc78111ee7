#include "k3/elliptic.hpp"

#include <algorithm>

#include "k3/error.hpp"
#include "k3/factor.hpp"

namespace k3::elliptic {

namespace {

bool deg_is(const RatPoly& p, std::size_t d) { return p.degree() && *p.degree() == d; }

GenericityResult fail(GenericityFailure f, std::string why) { return {f, std::move(why)}; }

}  // namespace

PolyCore poly_core(const RatPoly& p, const RatPoly& q) {
  PolyCore out;
  out.gcd = poly::gcd(p, q);
  out.derivative = p.derivative();
  if (p.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "squarefree part of the zero polynomial");
  out.squarefree_part = poly::squarefree_part(p);
  out.resultant = poly::resultant(p, q);
  return out;
}

RatPoly i1_locus(const WeierstrassModel& w) { return w.a * w.a - RatPoly::constant(4) * w.b; }

RatPoly discriminant(const WeierstrassModel& w) { return RatPoly::constant(16) * w.b * w.b * i1_locus(w); }

GenericityResult genericity_check(const WeierstrassModel& w) {
  if (w.a.degree() && *w.a.degree() > 4) return fail(GenericityFailure::DegreeA, "deg a > 4");
  if (!deg_is(w.b, 8)) return fail(GenericityFailure::DegreeB, "deg b != 8");
  const RatPoly d = i1_locus(w);
  if (!deg_is(d, 8)) return fail(GenericityFailure::DegreeI1, "deg(a^2 - 4b) != 8");
  if (poly::gcd(w.b, d).degree() != 0u)
    return fail(GenericityFailure::SharedRoots, "gcd(b, a^2 - 4b) != 1");
  if (!poly::is_squarefree(w.b)) return fail(GenericityFailure::BNotSquarefree, "b is not squarefree");
  if (!poly::is_squarefree(d)) return fail(GenericityFailure::I1NotSquarefree, "a^2 - 4b is not squarefree");
  if (w.b.coeff(0) == 0 || d.coeff(0) == 0)
    return fail(GenericityFailure::ZeroConstant, "b or a^2 - 4b has zero constant term");
  return {};
}

void require_generic(const WeierstrassModel& w) {
  auto r = genericity_check(w);
  if (!r.ok()) throw Error(ErrorCode::NonGeneric, r.reason);
}

const char* to_string(Kodaira k) { return k == Kodaira::I1 ? "I1" : "I2"; }

ShiodaTate shioda_tate(const std::vector<FiberEntry>& entries, long mw_rank) {
  if (mw_rank < 0) throw Error(ErrorCode::BadInput, "Mordell-Weil rank must be nonnegative");
  long rho = 2 + mw_rank;
  for (const auto& e : entries) rho += (components(e.kodaira) - 1) * static_cast<long>(e.root_count);
  return {rho, 22 - rho};
}

std::size_t FiberTable::root_count(Kodaira k) const {
  std::size_t n = 0;
  for (const auto& e : entries)
    if (e.kodaira == k) n += e.root_count;
  return n;
}

std::vector<RatPoly> FiberTable::factors(Kodaira k) const {
  std::vector<RatPoly> out;
  for (const auto& e : entries)
    if (e.kodaira == k) out.push_back(e.factor);
  return out;
}

FiberTable fiber_table(const WeierstrassModel& w, long mw_rank) {
  require_generic(w);
  FiberTable t;
  for (auto& f : poly::factor_squarefree(i1_locus(w))) {
    std::size_t deg = *f.degree();
    t.entries.push_back({std::move(f), Kodaira::I1, deg});
  }
  for (auto& f : poly::factor_squarefree(w.b)) {
    std::size_t deg = *f.degree();
    t.entries.push_back({std::move(f), Kodaira::I2, deg});
  }
  for (const auto& e : t.entries) t.euler_sum += euler_number(e.kodaira) * static_cast<long>(e.root_count);
  auto st = shioda_tate(t.entries, mw_rank);
  t.rho = st.rho;
  t.dim_t = st.dim_t;
  return t;
}

WeierstrassModel quotient_coefficients(const WeierstrassModel& w) {
  return {RatPoly::constant(-2) * w.a, i1_locus(w)};
}

WeierstrassModel quotient_model(const WeierstrassModel& w) {
  require_generic(w);
  return quotient_coefficients(w);
}

WeierstrassModel rescale(const WeierstrassModel& w, const Rational& u) {
  if (u == 0) throw Error(ErrorCode::BadInput, "scaling factor must be nonzero");
  const Rational u2 = u * u;
  const Rational u4 = u2 * u2;
  return {w.a * Rational(1 / u2), w.b * Rational(1 / u4)};
}

bool same_factor_sets(std::vector<RatPoly> lhs, std::vector<RatPoly> rhs) {
  if (lhs.size() != rhs.size()) return false;
  for (const auto& p : lhs)
    if (p.is_zero()) return false;
  for (const auto& p : lhs) {
    auto it = std::find_if(rhs.begin(), rhs.end(), [&](const RatPoly& q) { return poly::are_associates(p, q); });
    if (it == rhs.end()) return false;
    rhs.erase(it);
  }
  return true;
}

WeierstrassModel random_generic_model(std::mt19937_64& rng, long coeff_bound) {
  std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<long> lead(1, coeff_bound);
  for (;;) {
    std::vector<Integer> a(5), b(9);
    for (auto& c : a) c = coeff(rng);
    for (auto& c : b) c = coeff(rng);
    b[8] = lead(rng);
    WeierstrassModel w{RatPoly::from_integers(a), RatPoly::from_integers(b)};
    if (genericity_check(w).ok()) return w;
  }
}

}  // namespace k3::elliptic
