#pragma once

#include <array>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "k3/matrix.hpp"

namespace k3::motive {

// ---------------------------------------------------------------------------
// Formal motives

struct Unit {
  auto operator<=>(const Unit&) const = default;
};
/// Lefschetz motive L^power.
struct Lef {
  int power = 1;
  auto operator<=>(const Lef&) const = default;
};
/// Transcendental motive t_2 of the surface `label`; dim is b2 - rho.
struct T2 {
  std::string label;
  long dim = 0;
  auto operator<=>(const T2&) const = default;
};

using Atom = std::variant<Unit, Lef, T2>;

/// Formal direct sum kept as a sorted multiset of atoms.
class MotiveExpr {
 public:
  MotiveExpr() = default;
  explicit MotiveExpr(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  MotiveExpr operator+(const MotiveExpr& rhs) const;
  MotiveExpr with(Atom atom, std::size_t copies = 1) const;
  std::size_t count(const Atom& atom) const;
  std::size_t lefschetz_count(int power) const;
  std::vector<T2> transcendental() const;

  bool operator==(const MotiveExpr&) const = default;
  std::string to_string() const;

 private:
  std::vector<Atom> atoms_;
};

struct SurfaceData {
  long rho = 0;
  long q = 0;
  long pg = 0;
  long b2 = 0;
  long e = 0;
  /// q = 0, p_g = 1, b2 = 22, e = 24; RankOutOfRange unless 1 <= rho <= 20.
  static SurfaceData k3(long rho);
};

/// 1 + L^rho + t2(dim 22 - rho) + L^2. RankOutOfRange unless 1 <= rho <= 20.
MotiveExpr chow_kunneth_k3(long rho, const std::string& label = "X");

/// Graded dimensions h^0..h^4: Unit -> h^0, L^k -> h^{2k}, t2(d) -> h^2 += d.
std::array<long, 5> betti_dims(const MotiveExpr& m);
long euler_characteristic(const MotiveExpr& m);

/// Blow-up at n points adds n copies of L; t2 is untouched.
MotiveExpr blowup_points(const MotiveExpr& m, std::size_t n);
inline MotiveExpr blowup_8(const MotiveExpr& m) { return blowup_points(m, 8); }

// ---------------------------------------------------------------------------
// Registered facts

struct Fact {
  std::string fact;                   // "T2Isomorphic" or "FiniteDimensional"
  std::vector<std::string> subjects;  // surface labels
  std::string citation;
  bool operator==(const Fact&) const = default;
};

inline constexpr const char* kT2Isomorphic = "T2Isomorphic";
inline constexpr const char* kFiniteDimensional = "FiniteDimensional";

/// The only mutable state of the motive calculus. Reads share a lock,
/// registration takes it exclusively.
class FactStore {
 public:
  FactStore() = default;
  FactStore(const FactStore& other);
  FactStore& operator=(const FactStore& other);

  void add(Fact fact);
  bool t2_isomorphic(const std::string& a, const std::string& b) const;
  bool finite_dimensional(const std::string& label) const;
  std::vector<Fact> facts() const;

  /// [{fact, subjects, citation}, ...] in registration order.
  nlohmann::json to_json() const;
  static FactStore from_json(const nlohmann::json& j);

 private:
  mutable std::shared_mutex mutex_;
  std::vector<Fact> facts_;
};

/// Atom-by-atom equality where t2 atoms match only with equal dims and either
/// the same label or a registered t2 isomorphism between the labels.
bool motives_isomorphic(const MotiveExpr& a, const MotiveExpr& b, const FactStore& facts);

/// t2(X) = t2(Y) + N with H(N) = 0 when the dims agree. N is dropped, and a
/// t2 isomorphism registered, only if X is registered finite dimensional.
/// Returns whether the isomorphism was registered.
bool eliminate_null_summand(FactStore& facts, const T2& x, const T2& y);

// ---------------------------------------------------------------------------
// Algebra generated by alpha with alpha^2 = [xi]

struct InvolutionElement {
  Rational unit;   // coefficient of [xi]
  Rational alpha;  // coefficient of alpha

  static InvolutionElement xi() { return {1, 0}; }
  static InvolutionElement generator() { return {0, 1}; }
  /// 1/2([xi] + alpha)
  static InvolutionElement p_plus() { return {Rational(1, 2), Rational(1, 2)}; }
  /// 1/2([xi] - alpha)
  static InvolutionElement p_minus() { return {Rational(1, 2), Rational(-1, 2)}; }

  InvolutionElement operator*(const InvolutionElement& o) const {
    return {unit * o.unit + alpha * o.alpha, unit * o.alpha + alpha * o.unit};
  }
  InvolutionElement operator+(const InvolutionElement& o) const { return {unit + o.unit, alpha + o.alpha}; }
  InvolutionElement operator-(const InvolutionElement& o) const { return {unit - o.unit, alpha - o.alpha}; }
  InvolutionElement scaled(const Rational& s) const { return {unit * s, alpha * s}; }
  bool operator==(const InvolutionElement& o) const { return unit == o.unit && alpha == o.alpha; }
  std::string to_string() const;
};

inline InvolutionElement alg_mul(const InvolutionElement& x, const InvolutionElement& y) { return x * y; }

/// Push-forward to the quotient: coefficient of [eta], 2(c1 + c_alpha).
Rational push(const InvolutionElement& x);
/// Pull-back of c[eta]: c([xi] + alpha).
InvolutionElement pull(const Rational& c);

// ---------------------------------------------------------------------------
// Valences

/// -v1 * v2; NoValence when either side is undefined.
Rational valence_compose(const std::optional<Rational>& v1, const std::optional<Rational>& v2);

/// A projector with a valence has valence 0 or -1.
bool projector_valence_check(const Rational& v);

/// Correspondence data tracked symbolically: optional valence and optional
/// Severi indices (alpha(T), beta(T)).
struct ValuedCorrespondence {
  std::optional<Rational> valence;
  std::optional<std::pair<Integer, Integer>> indices;

  ValuedCorrespondence operator+(const ValuedCorrespondence& o) const;
  ValuedCorrespondence scaled(const Rational& s) const;
  /// Valence -v v'; indices are not tracked through composition.
  ValuedCorrespondence compose(const ValuedCorrespondence& o) const;
  /// beta(T) = alpha(T^t).
  ValuedCorrespondence transpose() const;
};

/// The diagonal has valence -1.
inline ValuedCorrespondence diagonal_correspondence() { return {Rational(-1), std::nullopt}; }

enum class Theorem1Outcome { T2QuotientZero, T2Isomorphism };
/// p_g = 0 -> ValenceNotUnique; v outside {1, -1} -> InconsistentValence.
Theorem1Outcome theorem1_decide(const Rational& v_gamma, long pg);

enum class InvolutionAction { PlusOne, MinusOne, Mixed };
enum class TrichotomyOutcome { Isomorphism, QuotientZero, ProperSummand };
TrichotomyOutcome corollary1_trichotomy(InvolutionAction action);

/// Valences of Gamma_sigma allowed by the projector q = 1/2(Delta - Gamma)
/// having valence 0 or -1, restricted to those compatible with a nonzero
/// t2 of the quotient. For a K3 with a Nikulin involution this is {-1}.
std::vector<Rational> valences_with_nonzero_quotient(long pg);

const char* to_string(Theorem1Outcome o);
const char* to_string(TrichotomyOutcome o);
const char* to_string(InvolutionAction a);

}  // namespace k3::motive
