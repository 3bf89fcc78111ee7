#include "k3/motive.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

#include "k3/citations.hpp"
#include "k3/error.hpp"

namespace k3::motive {

MotiveExpr::MotiveExpr(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (const auto& a : atoms_) {
    if (const auto* l = std::get_if<Lef>(&a); l && l->power < 1)
      throw Error(ErrorCode::BadInput, "Lefschetz power must be >= 1");
    if (const auto* t = std::get_if<T2>(&a); t && t->dim < 0)
      throw Error(ErrorCode::BadInput, "t2 dimension must be nonnegative");
  }
  std::sort(atoms_.begin(), atoms_.end());
}

MotiveExpr MotiveExpr::operator+(const MotiveExpr& rhs) const {
  std::vector<Atom> all = atoms_;
  all.insert(all.end(), rhs.atoms_.begin(), rhs.atoms_.end());
  return MotiveExpr(std::move(all));
}

MotiveExpr MotiveExpr::with(Atom atom, std::size_t copies) const {
  std::vector<Atom> all = atoms_;
  all.insert(all.end(), copies, atom);
  return MotiveExpr(std::move(all));
}

std::size_t MotiveExpr::count(const Atom& atom) const {
  return static_cast<std::size_t>(std::count(atoms_.begin(), atoms_.end(), atom));
}

std::size_t MotiveExpr::lefschetz_count(int power) const { return count(Lef{power}); }

std::vector<T2> MotiveExpr::transcendental() const {
  std::vector<T2> out;
  for (const auto& a : atoms_)
    if (const auto* t = std::get_if<T2>(&a)) out.push_back(*t);
  return out;
}

std::string MotiveExpr::to_string() const {
  if (atoms_.empty()) return "0";
  // Collapse repeated atoms into exponents: 1 + L^{+9} + t2(X; 13) + L^2
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < atoms_.size();) {
    std::size_t j = i;
    while (j < atoms_.size() && atoms_[j] == atoms_[i]) ++j;
    const std::size_t copies = j - i;
    if (!first) os << " + ";
    first = false;
    std::visit(
        [&](const auto& a) {
          using A = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<A, Unit>) {
            os << "1";
          } else if constexpr (std::is_same_v<A, Lef>) {
            os << "L";
            if (a.power != 1) os << "^" << a.power;
          } else {
            os << "t2(" << a.label << "; " << a.dim << ")";
          }
        },
        atoms_[i]);
    if (copies > 1) os << "^{+" << copies << "}";
    i = j;
  }
  return os.str();
}

SurfaceData SurfaceData::k3(long rho) {
  if (rho < 1 || rho > 20) throw Error(ErrorCode::RankOutOfRange, "K3 Picard rank must be in [1, 20]");
  return {rho, 0, 1, 22, 24};
}

MotiveExpr chow_kunneth_k3(long rho, const std::string& label) {
  const SurfaceData s = SurfaceData::k3(rho);
  std::vector<Atom> atoms{Unit{}, Lef{2}, T2{label, s.b2 - s.rho}};
  atoms.insert(atoms.end(), static_cast<std::size_t>(s.rho), Lef{1});
  return MotiveExpr(std::move(atoms));
}

std::array<long, 5> betti_dims(const MotiveExpr& m) {
  std::array<long, 5> h{};
  for (const auto& a : m.atoms()) {
    if (std::holds_alternative<Unit>(a)) {
      h[0] += 1;
    } else if (const auto* l = std::get_if<Lef>(&a)) {
      if (l->power > 2) throw Error(ErrorCode::BadInput, "L^k with k > 2 does not occur in a surface motive");
      h[static_cast<std::size_t>(2 * l->power)] += 1;
    } else {
      h[2] += std::get<T2>(a).dim;
    }
  }
  return h;
}

long euler_characteristic(const MotiveExpr& m) {
  auto h = betti_dims(m);
  return h[0] - h[1] + h[2] - h[3] + h[4];
}

MotiveExpr blowup_points(const MotiveExpr& m, std::size_t n) { return m.with(Lef{1}, n); }

FactStore::FactStore(const FactStore& other) {
  std::shared_lock lock(other.mutex_);
  facts_ = other.facts_;
}

FactStore& FactStore::operator=(const FactStore& other) {
  if (this == &other) return *this;
  std::vector<Fact> copy = other.facts();
  std::unique_lock lock(mutex_);
  facts_ = std::move(copy);
  return *this;
}

void FactStore::add(Fact fact) {
  std::unique_lock lock(mutex_);
  if (std::find(facts_.begin(), facts_.end(), fact) == facts_.end()) facts_.push_back(std::move(fact));
}

bool FactStore::t2_isomorphic(const std::string& a, const std::string& b) const {
  if (a == b) return true;
  std::shared_lock lock(mutex_);
  // Isomorphism is an equivalence relation: search the connected component.
  std::vector<std::string> frontier{a}, seen{a};
  while (!frontier.empty()) {
    std::string cur = frontier.back();
    frontier.pop_back();
    for (const auto& f : facts_) {
      if (f.fact != kT2Isomorphic || f.subjects.size() != 2) continue;
      for (int side = 0; side < 2; ++side) {
        if (f.subjects[side] != cur) continue;
        const std::string& next = f.subjects[1 - side];
        if (next == b) return true;
        if (std::find(seen.begin(), seen.end(), next) == seen.end()) {
          seen.push_back(next);
          frontier.push_back(next);
        }
      }
    }
  }
  return false;
}

bool FactStore::finite_dimensional(const std::string& label) const {
  std::shared_lock lock(mutex_);
  return std::any_of(facts_.begin(), facts_.end(), [&](const Fact& f) {
    return f.fact == kFiniteDimensional && f.subjects.size() == 1 && f.subjects[0] == label;
  });
}

std::vector<Fact> FactStore::facts() const {
  std::shared_lock lock(mutex_);
  return facts_;
}

nlohmann::json FactStore::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& f : facts()) out.push_back({{"fact", f.fact}, {"subjects", f.subjects}, {"citation", f.citation}});
  return out;
}

FactStore FactStore::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::BadInput, "facts store must be a JSON array");
  FactStore store;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("fact") || !item.contains("subjects") || !item.contains("citation"))
      throw Error(ErrorCode::BadInput, "each fact needs 'fact', 'subjects' and 'citation'");
    store.add({item["fact"].get<std::string>(), item["subjects"].get<std::vector<std::string>>(),
               item["citation"].get<std::string>()});
  }
  return store;
}

bool motives_isomorphic(const MotiveExpr& a, const MotiveExpr& b, const FactStore& facts) {
  std::vector<Atom> rest_a, rest_b;
  for (const auto& x : a.atoms())
    if (!std::holds_alternative<T2>(x)) rest_a.push_back(x);
  for (const auto& x : b.atoms())
    if (!std::holds_alternative<T2>(x)) rest_b.push_back(x);
  if (rest_a != rest_b) return false;

  const auto ta = a.transcendental();
  const auto tb = b.transcendental();
  if (ta.size() != tb.size()) return false;
  // Perfect matching between t2 atoms; sizes are tiny so backtracking is fine.
  std::vector<bool> used(tb.size(), false);
  std::function<bool(std::size_t)> match = [&](std::size_t i) {
    if (i == ta.size()) return true;
    for (std::size_t j = 0; j < tb.size(); ++j) {
      if (used[j] || ta[i].dim != tb[j].dim || !facts.t2_isomorphic(ta[i].label, tb[j].label)) continue;
      used[j] = true;
      if (match(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return match(0);
}

bool eliminate_null_summand(FactStore& facts, const T2& x, const T2& y) {
  if (x.dim != y.dim) return false;  // H(N) != 0
  if (!facts.finite_dimensional(x.label)) return false;
  facts.add({kT2Isomorphic, {x.label, y.label}, std::string(cite::kNullSummand)});
  return true;
}

std::string InvolutionElement::to_string() const {
  std::ostringstream os;
  os << unit.get_str() << "[xi] + " << alpha.get_str() << "alpha";
  return os.str();
}

Rational push(const InvolutionElement& x) { return 2 * (x.unit + x.alpha); }

InvolutionElement pull(const Rational& c) { return {c, c}; }

Rational valence_compose(const std::optional<Rational>& v1, const std::optional<Rational>& v2) {
  if (!v1 || !v2) throw Error(ErrorCode::NoValence, "composition needs both valences");
  return -(*v1) * (*v2);
}

bool projector_valence_check(const Rational& v) { return v == 0 || v == -1; }

ValuedCorrespondence ValuedCorrespondence::operator+(const ValuedCorrespondence& o) const {
  ValuedCorrespondence out;
  if (valence && o.valence) out.valence = *valence + *o.valence;
  if (indices && o.indices)
    out.indices = std::pair<Integer, Integer>{indices->first + o.indices->first, indices->second + o.indices->second};
  return out;
}

ValuedCorrespondence ValuedCorrespondence::scaled(const Rational& s) const {
  ValuedCorrespondence out;
  if (valence) out.valence = *valence * s;
  if (indices && s.get_den() == 1) {
    const Integer k = s.get_num();
    out.indices = std::pair<Integer, Integer>{indices->first * k, indices->second * k};
  }
  return out;
}

ValuedCorrespondence ValuedCorrespondence::compose(const ValuedCorrespondence& o) const {
  ValuedCorrespondence out;
  if (valence && o.valence) out.valence = valence_compose(valence, o.valence);
  return out;
}

ValuedCorrespondence ValuedCorrespondence::transpose() const {
  ValuedCorrespondence out = *this;
  if (indices) out.indices = std::pair<Integer, Integer>{indices->second, indices->first};
  return out;
}

Theorem1Outcome theorem1_decide(const Rational& v_gamma, long pg) {
  if (pg <= 0) throw Error(ErrorCode::ValenceNotUnique, "with p_g = 0 the diagonal has two valences");
  if (v_gamma == 1) return Theorem1Outcome::T2QuotientZero;
  if (v_gamma == -1) return Theorem1Outcome::T2Isomorphism;
  throw Error(ErrorCode::InconsistentValence, "valence of Gamma_sigma must be 1 or -1, got " + v_gamma.get_str());
}

TrichotomyOutcome corollary1_trichotomy(InvolutionAction action) {
  switch (action) {
    case InvolutionAction::PlusOne: return TrichotomyOutcome::Isomorphism;
    case InvolutionAction::MinusOne: return TrichotomyOutcome::QuotientZero;
    case InvolutionAction::Mixed: return TrichotomyOutcome::ProperSummand;
  }
  return TrichotomyOutcome::ProperSummand;
}

std::vector<Rational> valences_with_nonzero_quotient(long pg) {
  std::vector<Rational> out;
  const ValuedCorrespondence delta = diagonal_correspondence();
  for (const Rational& vq : {Rational(0), Rational(-1)}) {
    if (!projector_valence_check(vq)) continue;
    // q = 1/2(Delta - Gamma)  =>  v(Gamma) = v(Delta) - 2 v(q)
    Rational v_gamma = *delta.valence - 2 * vq;
    if (theorem1_decide(v_gamma, pg) != Theorem1Outcome::T2QuotientZero) out.push_back(v_gamma);
  }
  return out;
}

const char* to_string(Theorem1Outcome o) {
  return o == Theorem1Outcome::T2QuotientZero ? "T2QuotientZero" : "T2Isomorphism";
}

const char* to_string(TrichotomyOutcome o) {
  switch (o) {
    case TrichotomyOutcome::Isomorphism: return "Isomorphism";
    case TrichotomyOutcome::QuotientZero: return "QuotientZero";
    case TrichotomyOutcome::ProperSummand: return "ProperSummand";
  }
  return "?";
}

const char* to_string(InvolutionAction a) {
  switch (a) {
    case InvolutionAction::PlusOne: return "PlusOne";
    case InvolutionAction::MinusOne: return "MinusOne";
    case InvolutionAction::Mixed: return "Mixed";
  }
  return "?";
}

}  // namespace k3::motive
