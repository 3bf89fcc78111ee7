#include "k3/classifier.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "k3/citations.hpp"
#include "k3/error.hpp"

namespace k3::classifier {

namespace {

constexpr std::array kKinds{SurfaceKind::K3,       SurfaceKind::GeneralType, SurfaceKind::Abelian,
                            SurfaceKind::Kummer,   SurfaceKind::Enriques,    SurfaceKind::Rational};
constexpr std::array kFeatureTypes{FeatureType::NikulinInvolution,
                                   FeatureType::NonSymplecticInvolution,
                                   FeatureType::NonSymplecticTrivialGroup,
                                   FeatureType::EllipticWithTwoTorsionSection,
                                   FeatureType::InvariantThreeQuadrics,
                                   FeatureType::EvenSet,
                                   FeatureType::ShiodaInose};
constexpr std::array kAssumptions{Assumption::FiniteDimensional, Assumption::ValenceExists,
                                  Assumption::IdentityOnZeroCycles};
constexpr std::array<long, 8> kAllowedRho{2, 4, 6, 10, 12, 16, 18, 20};

template <class E, std::size_t N>
E parse_enum(const std::array<E, N>& values, const std::string& name, const char* what) {
  for (E v : values)
    if (name == to_string(v)) return v;
  throw Error(ErrorCode::BadInput, std::string("unknown ") + what + " '" + name + "'");
}

[[noreturn]] void inconsistent(const std::string& what, std::string_view citation) {
  throw Error(ErrorCode::Inconsistent, what + " [" + std::string(citation) + "]");
}

std::optional<long> opt_long(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_number_integer()) throw Error(ErrorCode::BadInput, std::string("'") + key + "' must be an integer");
  return j[key].get<long>();
}

class Engine {
 public:
  explicit Engine(const SurfaceDescriptor& d) : d_(d) {}

  Derivation run() {
    check_consistency();
    // Every rule fires at most once, so eight passes reach the fixed point.
    for (int pass = 0; pass < 8; ++pass) {
      const std::size_t before = out_.facts.size();
      r1();
      r2();
      r3();
      r4();
      r5();
      r6();
      r7();
      r8();
      if (out_.facts.size() == before) break;
    }
    return out_;
  }

 private:
  bool k3() const { return d_.kind == SurfaceKind::K3; }

  void check_consistency() const {
    if (k3()) {
      if (d_.q && *d_.q != 0) inconsistent("K3 surface with q != 0", cite::kK3Invariants);
      if (d_.pg && *d_.pg != 1) inconsistent("K3 surface with p_g != 1", cite::kK3Invariants);
      if (d_.rho && (*d_.rho < 1 || *d_.rho > 20)) inconsistent("K3 surface with rho outside [1, 20]", cite::kK3Invariants);
      if (d_.has(FeatureType::NikulinInvolution) && d_.rho && *d_.rho < 9)
        inconsistent("Nikulin involution with rho < 9", cite::kNikulinRank);
    }
    for (const auto& f : d_.features) {
      if (f.type == FeatureType::EvenSet && f.k != 0 && f.k != 8 && f.k != 16)
        inconsistent("even set of " + std::to_string(f.k) + " nodal curves", cite::kEvenSets);
      if (f.type == FeatureType::NonSymplecticTrivialGroup && f.m < 1)
        throw Error(ErrorCode::BadInput, "group order m must be positive");
    }
  }

  std::vector<std::string> base() const {
    std::vector<std::string> p{std::string("kind=") + to_string(d_.kind)};
    return p;
  }

  std::string feature(FeatureType t) const { return "feature:" + to_string(*d_.find(t)); }

  /// Premise for a finite-dimensionality hypothesis: a derived fact wins.
  std::optional<std::string> finite_dimensional() const {
    if (auto i = out_.find("FiniteDimensional")) return "fact:" + std::to_string(*i);
    if (d_.assumes(Assumption::FiniteDimensional)) return std::string("assumption:FiniteDimensional");
    return std::nullopt;
  }

  bool fire(const std::string& rule, std::vector<std::string> conclusion, std::string_view citation,
            std::vector<std::string> premises) {
    if (fired_.count(rule)) return false;
    fired_.insert(rule);
    out_.facts.push_back({std::move(conclusion), rule, std::string(citation), std::move(premises)});
    return true;
  }

  void r1() {
    if (!k3() || !d_.rho || (*d_.rho != 19 && *d_.rho != 20)) return;
    auto p = base();
    p.push_back("rho=" + std::to_string(*d_.rho));
    fire("R1", {"FiniteDimensional", "AbelianSubcategory"}, cite::kTheorem2, p);
  }

  void r2() {
    if (!k3() || !d_.has(FeatureType::NikulinInvolution)) return;
    auto fd = finite_dimensional();
    if (!fd) return;
    auto p = base();
    p.push_back(feature(FeatureType::NikulinInvolution));
    p.push_back(*fd);
    fire("R2", {"MotiveIsoWithQuotient"}, cite::kTheorem3, p);
  }

  void r3() {
    if (!k3() || !d_.has(FeatureType::NikulinInvolution)) return;
    auto p = base();
    p.push_back(feature(FeatureType::NikulinInvolution));
    bool any = false;
    for (auto a : {Assumption::ValenceExists, Assumption::IdentityOnZeroCycles})
      if (d_.assumes(a)) {
        p.push_back(std::string("assumption:") + to_string(a));
        any = true;
      }
    if (any) fire("R3", {"T2IsoWithQuotient"}, cite::kTheorem4, p);
  }

  void r4() {
    if (!k3()) return;
    auto p = base();
    std::vector<std::string> conclusion;
    for (const auto& f : d_.features) {
      if (f.type != FeatureType::NonSymplecticTrivialGroup || f.m == 3) continue;
      const long n = f.unimodular ? f.m : 2 * f.m;
      if (n < 4) continue;
      p.push_back("feature:" + to_string(f));
      conclusion.push_back("FermatCover(" + std::to_string(n) + ")");
    }
    if (conclusion.empty()) return;
    if (d_.rho && std::find(kAllowedRho.begin(), kAllowedRho.end(), *d_.rho) == kAllowedRho.end())
      inconsistent("rho = " + std::to_string(*d_.rho) + " with a trivial non-symplectic group action", cite::kCorollary2);
    conclusion.push_back("FiniteDimensional");
    conclusion.push_back("RhoIn{2,4,6,10,12,16,18,20}");
    std::ostringstream citation;
    citation << cite::kTheorem5 << "; " << cite::kTheorem5Degree << "; " << cite::kCorollary2;
    fire("R4", conclusion, citation.str(), p);
  }

  void r5() {
    if (!k3()) return;
    auto f = d_.find(FeatureType::NonSymplecticInvolution);
    if (!f) return;
    auto p = base();
    p.push_back("feature:" + to_string(*f));
    fire("R5",
         {"T2QuotientZero", "NotT2Iso", std::string("QuotientKind(") + (f->fixed_locus_empty ? "Enriques" : "Rational") + ")"},
         cite::kRemark3, p);
  }

  void r6() {
    if (!k3()) return;
    auto p = base();
    std::ostringstream citation;
    if (d_.has(FeatureType::EllipticWithTwoTorsionSection)) {
      p.push_back(feature(FeatureType::EllipticWithTwoTorsionSection));
      citation << cite::kTheorem7;
    }
    if (d_.has(FeatureType::InvariantThreeQuadrics)) {
      p.push_back(feature(FeatureType::InvariantThreeQuadrics));
      if (!citation.str().empty()) citation << "; ";
      citation << cite::kThreeQuadrics;
    }
    if (p.size() > 1) fire("R6", {"T2IsoWithQuotient"}, citation.str(), p);
  }

  void r7() {
    std::vector<std::string> p, conclusion;
    std::ostringstream citation;
    for (const auto& f : d_.features) {
      if (f.type != FeatureType::EvenSet || f.k == 0) continue;
      p.push_back("feature:" + to_string(f));
      if (!citation.str().empty()) citation << "; ";
      if (f.k == 16) {
        conclusion.insert(conclusion.end(), {"KummerQuotient", "FiniteDimensional", "T2IsoAll"});
        citation << cite::kEvenSetKummer << "; " << cite::kKummerT2;
      } else {
        conclusion.push_back("CoverHasNikulinInvolution");
        citation << cite::kEvenSetK3;
      }
    }
    if (!conclusion.empty()) fire("R7", conclusion, citation.str(), p);
  }

  void r8() {
    if (!k3() || !d_.has(FeatureType::NikulinInvolution)) return;
    auto p = base();
    p.push_back(feature(FeatureType::NikulinInvolution));
    fire("R8", {"RhoQuotientEqualsRho", "SwapTrace(6)"}, cite::kLemma2Conclusion, p);
  }

  const SurfaceDescriptor& d_;
  Derivation out_;
  std::set<std::string> fired_;
};

}  // namespace

bool SurfaceDescriptor::has(FeatureType t) const { return find(t).has_value(); }

std::optional<Feature> SurfaceDescriptor::find(FeatureType t) const {
  for (const auto& f : features)
    if (f.type == t) return f;
  return std::nullopt;
}

SurfaceDescriptor descriptor_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::BadInput, "descriptor must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string()) throw Error(ErrorCode::BadInput, "descriptor needs a string 'kind'");
  SurfaceDescriptor d;
  d.kind = parse_enum(kKinds, j["kind"].get<std::string>(), "surface kind");
  d.rho = opt_long(j, "rho");
  d.pg = opt_long(j, "pg");
  d.q = opt_long(j, "q");
  if (d.kind == SurfaceKind::K3) {
    if (!d.pg) d.pg = 1;
    if (!d.q) d.q = 0;
  }
  if (j.contains("features")) {
    if (!j["features"].is_array()) throw Error(ErrorCode::BadInput, "'features' must be an array");
    for (const auto& fj : j["features"]) {
      if (!fj.is_object() || !fj.contains("type") || !fj["type"].is_string())
        throw Error(ErrorCode::BadInput, "each feature needs a string 'type'");
      Feature f;
      f.type = parse_enum(kFeatureTypes, fj["type"].get<std::string>(), "feature");
      switch (f.type) {
        case FeatureType::NonSymplecticInvolution:
          f.fixed_locus_empty = fj.value("fixed_locus_empty", false);
          break;
        case FeatureType::NonSymplecticTrivialGroup:
          if (!opt_long(fj, "m")) throw Error(ErrorCode::BadInput, "NonSymplecticTrivialGroup needs 'm'");
          f.m = *opt_long(fj, "m");
          f.unimodular = fj.value("unimodular", false);
          break;
        case FeatureType::EvenSet:
          if (!opt_long(fj, "k")) throw Error(ErrorCode::BadInput, "EvenSet needs 'k'");
          f.k = *opt_long(fj, "k");
          break;
        default:
          break;
      }
      d.features.insert(f);
    }
  }
  if (j.contains("assumptions")) {
    if (!j["assumptions"].is_array()) throw Error(ErrorCode::BadInput, "'assumptions' must be an array");
    for (const auto& a : j["assumptions"]) {
      if (!a.is_string()) throw Error(ErrorCode::BadInput, "assumptions are strings");
      d.assumptions.insert(parse_enum(kAssumptions, a.get<std::string>(), "assumption"));
    }
  }
  return d;
}

nlohmann::json to_json(const SurfaceDescriptor& d) {
  nlohmann::json j;
  j["kind"] = to_string(d.kind);
  if (d.rho) j["rho"] = *d.rho;
  if (d.pg) j["pg"] = *d.pg;
  if (d.q) j["q"] = *d.q;
  j["features"] = nlohmann::json::array();
  for (const auto& f : d.features) {
    nlohmann::json fj{{"type", to_string(f.type)}};
    if (f.type == FeatureType::NonSymplecticInvolution) fj["fixed_locus_empty"] = f.fixed_locus_empty;
    if (f.type == FeatureType::NonSymplecticTrivialGroup) {
      fj["m"] = f.m;
      fj["unimodular"] = f.unimodular;
    }
    if (f.type == FeatureType::EvenSet) fj["k"] = f.k;
    j["features"].push_back(fj);
  }
  j["assumptions"] = nlohmann::json::array();
  for (auto a : d.assumptions) j["assumptions"].push_back(to_string(a));
  return j;
}

std::optional<std::size_t> Derivation::find(const std::string& atom) const {
  for (std::size_t i = 0; i < facts.size(); ++i)
    if (std::find(facts[i].conclusion.begin(), facts[i].conclusion.end(), atom) != facts[i].conclusion.end()) return i;
  return std::nullopt;
}

Derivation classify(const SurfaceDescriptor& d) { return Engine(d).run(); }

std::string explain_text(const Derivation& d) {
  if (d.facts.empty()) return "no facts derived\n";
  std::ostringstream os;
  for (std::size_t i = 0; i < d.facts.size(); ++i) {
    const auto& f = d.facts[i];
    os << "[" << i << "] " << f.rule_id << ": ";
    for (std::size_t c = 0; c < f.conclusion.size(); ++c) os << (c ? ", " : "") << f.conclusion[c];
    os << "\n    from: ";
    for (std::size_t p = 0; p < f.premises.size(); ++p) os << (p ? ", " : "") << f.premises[p];
    os << "\n    cite: " << f.citation << "\n";
  }
  return os.str();
}

nlohmann::json explain_json(const Derivation& d) {
  nlohmann::json facts = nlohmann::json::array();
  for (const auto& f : d.facts)
    facts.push_back({{"conclusion", f.conclusion}, {"rule_id", f.rule_id}, {"citation", f.citation}, {"premises", f.premises}});
  return facts;
}

void register_facts(const Derivation& d, motive::FactStore& store, const std::string& x, const std::string& y) {
  for (const auto& f : d.facts)
    for (const auto& c : f.conclusion) {
      if (c == "FiniteDimensional") store.add({motive::kFiniteDimensional, {x}, f.citation});
      if (c == "T2IsoWithQuotient" || c == "MotiveIsoWithQuotient" || c == "T2IsoAll")
        store.add({motive::kT2Isomorphic, {x, y}, f.citation});
    }
}

const char* to_string(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::K3: return "K3";
    case SurfaceKind::GeneralType: return "GeneralType";
    case SurfaceKind::Abelian: return "Abelian";
    case SurfaceKind::Kummer: return "Kummer";
    case SurfaceKind::Enriques: return "Enriques";
    case SurfaceKind::Rational: return "Rational";
  }
  return "?";
}

const char* to_string(FeatureType t) {
  switch (t) {
    case FeatureType::NikulinInvolution: return "NikulinInvolution";
    case FeatureType::NonSymplecticInvolution: return "NonSymplecticInvolution";
    case FeatureType::NonSymplecticTrivialGroup: return "NonSymplecticTrivialGroup";
    case FeatureType::EllipticWithTwoTorsionSection: return "EllipticWithTwoTorsionSection";
    case FeatureType::InvariantThreeQuadrics: return "InvariantThreeQuadrics";
    case FeatureType::EvenSet: return "EvenSet";
    case FeatureType::ShiodaInose: return "ShiodaInose";
  }
  return "?";
}

const char* to_string(Assumption a) {
  switch (a) {
    case Assumption::FiniteDimensional: return "FiniteDimensional";
    case Assumption::ValenceExists: return "ValenceExists";
    case Assumption::IdentityOnZeroCycles: return "IdentityOnZeroCycles";
  }
  return "?";
}

std::string to_string(const Feature& f) {
  std::string out = to_string(f.type);
  switch (f.type) {
    case FeatureType::NonSymplecticInvolution:
      return out + "(fixed_locus_empty=" + (f.fixed_locus_empty ? "true" : "false") + ")";
    case FeatureType::NonSymplecticTrivialGroup:
      return out + "(m=" + std::to_string(f.m) + ", unimodular=" + (f.unimodular ? "true" : "false") + ")";
    case FeatureType::EvenSet:
      return out + "(" + std::to_string(f.k) + ")";
    default:
      return out;
  }
}

}  // namespace k3::classifier
