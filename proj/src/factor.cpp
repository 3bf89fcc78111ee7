#include "k3/factor.hpp"

#include <algorithm>
#include <functional>

#include "k3/error.hpp"

namespace k3::poly {

namespace {

using ZPoly = std::vector<Integer>;  // ascending; empty is zero

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::size_t deg(const ZPoly& f) { return f.size() - 1; }

// Arithmetic in F_p[x], coefficients kept in [0, p).
class ModRing {
 public:
  explicit ModRing(Integer p) : p_(std::move(p)) {}

  const Integer& modulus() const { return p_; }

  Integer reduce(const Integer& x) const {
    Integer r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), p_.get_mpz_t());
    return r;
  }

  Integer inverse(const Integer& x) const {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p_.get_mpz_t()) == 0)
      throw std::logic_error("non-invertible element mod p");
    return r;
  }

  ZPoly reduce(const ZPoly& f) const {
    ZPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = reduce(f[i]);
    trim(out);
    return out;
  }

  ZPoly sub(const ZPoly& a, const ZPoly& b) const {
    ZPoly out(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return reduce(out);
  }

  ZPoly mul(const ZPoly& a, const ZPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return reduce(out);
  }

  // Returns remainder; quotient written to *quo when given.
  ZPoly divmod(ZPoly a, const ZPoly& b, ZPoly* quo = nullptr) const {
    const std::size_t db = deg(b);
    const Integer inv = inverse(b.back());
    ZPoly q(a.size() > db ? a.size() - db : 1, Integer(0));
    while (!a.empty() && a.size() > db) {
      const std::size_t shift = a.size() - 1 - db;
      Integer f = reduce(a.back() * inv);
      q[shift] = f;
      for (std::size_t j = 0; j <= db; ++j) a[shift + j] = reduce(a[shift + j] - f * b[j]);
      trim(a);
    }
    if (quo) {
      trim(q);
      *quo = std::move(q);
    }
    return a;
  }

  ZPoly monic(const ZPoly& f) const {
    if (f.empty()) return f;
    Integer inv = inverse(f.back());
    ZPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = reduce(f[i] * inv);
    return out;
  }

  ZPoly gcd(ZPoly a, ZPoly b) const {
    while (!b.empty()) {
      ZPoly r = divmod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  ZPoly powmod(ZPoly base, Integer exponent, const ZPoly& modulus) const {
    ZPoly result{Integer(1)};
    base = divmod(base, modulus);
    while (exponent > 0) {
      if (mpz_odd_p(exponent.get_mpz_t())) result = divmod(mul(result, base), modulus);
      exponent >>= 1;
      if (exponent > 0) base = divmod(mul(base, base), modulus);
    }
    return result;
  }

  ZPoly derivative(const ZPoly& f) const {
    if (f.size() <= 1) return {};
    ZPoly out(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * static_cast<unsigned long>(i);
    return reduce(out);
  }

 private:
  Integer p_;
};

// Cantor-Zassenhaus equal-degree splitting of a product of degree-d irreducibles.
void split_equal_degree(const ModRing& ring, const ZPoly& f, std::size_t d, gmp_randclass& rng,
                        std::vector<ZPoly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  Integer exponent;
  mpz_pow_ui(exponent.get_mpz_t(), ring.modulus().get_mpz_t(), static_cast<unsigned long>(d));
  exponent = (exponent - 1) / 2;
  for (;;) {
    ZPoly a(deg(f));
    for (auto& c : a) c = rng.get_z_range(ring.modulus());
    trim(a);
    if (a.empty()) continue;
    ZPoly g = ring.gcd(a, f);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      ZPoly q;
      ring.divmod(f, g, &q);
      split_equal_degree(ring, g, d, rng, out);
      split_equal_degree(ring, q, d, rng, out);
      return;
    }
    ZPoly b = ring.sub(ring.powmod(a, exponent, f), ZPoly{Integer(1)});
    if (b.empty()) continue;
    g = ring.gcd(b, f);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      ZPoly q;
      ring.divmod(f, g, &q);
      split_equal_degree(ring, g, d, rng, out);
      split_equal_degree(ring, q, d, rng, out);
      return;
    }
  }
}

std::vector<ZPoly> factor_mod_p(const ModRing& ring, const ZPoly& monic_f) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x6b33);
  std::vector<ZPoly> out;
  ZPoly f = monic_f;
  const ZPoly x{Integer(0), Integer(1)};
  ZPoly h = x;
  for (std::size_t d = 1; !f.empty() && deg(f) >= 2 * d; ++d) {
    h = ring.powmod(h, ring.modulus(), f);
    ZPoly g = ring.gcd(ring.sub(h, x), f);
    if (deg(g) > 0) {
      split_equal_degree(ring, g, d, rng, out);
      ZPoly q;
      ring.divmod(f, g, &q);
      f = std::move(q);
      h = ring.divmod(h, f);
    }
  }
  if (!f.empty() && deg(f) > 0) out.push_back(f);
  return out;
}

Integer max_abs(const ZPoly& f) {
  Integer m = 0;
  for (const auto& c : f) m = std::max(m, Integer(abs(c)));
  return m;
}

ZPoly symmetric(const ModRing& ring, const ZPoly& f) {
  ZPoly out = ring.reduce(f);
  const Integer half = ring.modulus() / 2;
  for (auto& c : out)
    if (c > half) c -= ring.modulus();
  trim(out);
  return out;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

ZPoly primitive(ZPoly f) {
  Integer content = 0;
  for (const auto& c : f) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (f.back() < 0) content = -content;
  for (auto& c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return f;
}

std::vector<ZPoly> factor_primitive(const ZPoly& f) {
  const std::size_t n = deg(f);
  if (n <= 1) return {f};

  // |coefficients of lc * g| <= |lc| * 2^n * ||f||_2 for any factor g.
  Integer bound = max_abs(f) * Integer(static_cast<unsigned long>(n + 1)) * abs(f.back());
  bound <<= static_cast<mp_bitcnt_t>(n);
  Integer p;
  mpz_nextprime(p.get_mpz_t(), Integer(2 * bound + 1).get_mpz_t());
  for (;;) {
    ModRing ring(p);
    ZPoly fp = ring.reduce(f);
    if (fp.size() == f.size() && deg(ring.gcd(fp, ring.derivative(fp))) == 0) break;
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  const ModRing ring(p);
  std::vector<ZPoly> modular = factor_mod_p(ring, ring.monic(ring.reduce(f)));

  std::vector<ZPoly> found;
  ZPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= modular.size()) {
    bool progressed = false;
    std::vector<std::size_t> pick(s);
    std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t depth) -> bool {
      if (depth == s) {
        const Integer lc = rest.back();
        ZPoly g{lc}, h{lc};
        for (std::size_t i = 0, k = 0; i < modular.size(); ++i) {
          if (k < s && pick[k] == i) {
            g = ring.mul(g, modular[i]);
            ++k;
          } else {
            h = ring.mul(h, modular[i]);
          }
        }
        g = symmetric(ring, g);
        h = symmetric(ring, h);
        ZPoly target = rest;
        for (auto& c : target) c *= lc;
        if (zmul(g, h) != target) return false;
        found.push_back(primitive(g));
        rest = primitive(h);
        std::vector<ZPoly> remaining;
        for (std::size_t i = 0, k = 0; i < modular.size(); ++i) {
          if (k < s && pick[k] == i) {
            ++k;
            continue;
          }
          remaining.push_back(modular[i]);
        }
        modular = std::move(remaining);
        return true;
      }
      for (std::size_t i = start; i < modular.size(); ++i) {
        pick[depth] = i;
        if (search(i + 1, depth + 1)) return true;
      }
      return false;
    };
    while (2 * s <= modular.size() && search(0, 0)) progressed = true;
    if (!progressed || 2 * s > modular.size()) ++s;
  }
  found.push_back(rest);
  return found;
}

}  // namespace

std::vector<RatPoly> factor_squarefree(const RatPoly& p) {
  if (p.is_zero() || *p.degree() == 0)
    throw Error(ErrorCode::BadInput, "factorization needs a polynomial of positive degree");
  if (!is_squarefree(p)) throw Error(ErrorCode::BadInput, "factorization input must be squarefree");
  std::vector<RatPoly> out;
  for (const auto& z : factor_primitive(p.primitive_integer())) out.push_back(RatPoly::from_integers(z).monic());
  std::sort(out.begin(), out.end(), [](const RatPoly& a, const RatPoly& b) {
    if (*a.degree() != *b.degree()) return *a.degree() < *b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                        b.coeffs().end());
  });
  return out;
}

}  // namespace k3::poly
