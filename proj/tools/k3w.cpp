// k3w: command-line front end for the K3 toolkit.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "k3/acceptance.hpp"
#include "k3/citations.hpp"
#include "k3/classifier.hpp"
#include "k3/elliptic.hpp"
#include "k3/error.hpp"
#include "k3/lattice.hpp"
#include "k3/motive.hpp"
#include "k3/nikulin.hpp"
#include "k3/nsclass.hpp"

using nlohmann::json;
using namespace k3;

namespace {

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  bool pass = true;
  std::vector<std::string> citations;

  void check(json& checks, const std::string& name, bool ok, json detail = nullptr) {
    json c{{"name", name}, {"pass", ok}};
    if (!detail.is_null()) c["detail"] = std::move(detail);
    checks.push_back(std::move(c));
    pass = pass && ok;
  }
  void cite(std::string_view c) { citations.emplace_back(c); }

  json to_json() const {
    return {{"command", command}, {"inputs", inputs}, {"results", results}, {"pass", pass}, {"citations", citations}};
  }
};

json num(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(num(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(num(x));
  return out;
}

json invariants_json(const lattice::Lattice& l) {
  auto inv = lattice::invariants(l);
  return {{"rank", inv.rank},
          {"det", num(inv.det)},
          {"signature", {inv.signature.positive, inv.signature.negative}},
          {"even", inv.even},
          {"unimodular", inv.unimodular},
          {"discriminant_group", vector_json(lattice::discriminant_group(l).invariant_factors)}};
}

void render_text(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty() && !(v.is_array() && !v[0].is_structured())) {
        os << pad << k << ":\n";
        render_text(os, v, indent + 2);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        os << pad << "-\n";
        render_text(os, v, indent + 2);
      } else {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Report& r, bool as_json) {
  if (as_json) {
    std::cout << r.to_json().dump(2) << "\n";
    return;
  }
  std::cout << r.command << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
  if (!r.inputs.empty()) {
    std::cout << "inputs:\n";
    render_text(std::cout, r.inputs, 2);
  }
  std::cout << "results:\n";
  render_text(std::cout, r.results, 2);
  if (!r.citations.empty()) {
    std::cout << "citations:\n";
    for (const auto& c : r.citations) std::cout << "  - " << c << "\n";
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open '" + path + "'");
  return json::parse(in);
}

// ---------------------------------------------------------------------------

Report cmd_lattice(const std::string& name, const std::string& gram_path, long twist_by) {
  Report r;
  r.command = "lattice invariants";
  lattice::Lattice l = gram_path.empty() ? lattice::standard_lattice(name) : lattice::lattice_from_json(read_json_file(gram_path));
  if (gram_path.empty()) {
    r.inputs["name"] = name;
  } else {
    r.inputs["gram_file"] = gram_path;
  }
  if (twist_by != 1) {
    r.inputs["twist"] = twist_by;
    l = lattice::twist(l, twist_by);
    r.cite(cite::kTwist);
  }
  r.results = invariants_json(l);
  r.results["gram"] = matrix_json(l.gram());
  if (name == "U") r.cite(cite::kHyperbolicPlane);
  if (name == "E8") r.cite(cite::kE8);
  return r;
}

Report cmd_nikulin() {
  Report r;
  r.command = "nikulin verify";
  json checks = json::array();
  auto model = nikulin::build_model();
  auto inv = lattice::invariants(model.lattice);
  r.check(checks, "model rank 22, signature (3,19), even unimodular",
          inv.rank == 22 && inv.signature == lattice::Signature{3, 19} && inv.even && inv.unimodular);
  r.check(checks, "swap is an involutive isometry with trace 6",
          model.swap.matrix() * model.swap.matrix() == IntMatrix::identity(22) && model.swap.trace() == 6,
          num(model.swap.trace()));
  auto rep = nikulin::verify_invariant_lattices(model);
  r.check(checks, "invariant lattice = U^3 + E8(-2)", rep.fixed_ok, rep.fixed_rank);
  r.check(checks, "anti-invariant lattice = E8(-2)", rep.antifixed_ok, rep.antifixed_rank);
  const long e_y = nikulin::euler_balance_solve(24, 6, 8);
  r.check(checks, "Euler balance e(Y) = 24 for t = 6, k = 8", e_y == 24, e_y);
  bool traces = true;
  json split = json::array();
  for (long rho = 9; rho <= 20; ++rho) {
    auto t = nikulin::ns_trace_decomposition(rho);
    traces = traces && t.total == 6;
    split.push_back({{"rho", rho}, {"ns_trace", t.ns_trace}, {"tr_trace", t.tr_trace}});
  }
  r.check(checks, "NS and transcendental traces sum to 6 for rho = 9..20", traces);
  r.results["checks"] = checks;
  r.results["trace_split"] = split;
  for (auto c : {cite::kH2Model, cite::kSwapAction, cite::kInvariantSublattice, cite::kAntiInvariant,
                 cite::kLemma2Balance, cite::kLemma2Conclusion, cite::kNsTrace})
    r.cite(c);
  return r;
}

Report cmd_ns(long d) {
  Report r;
  r.command = "ns classify";
  r.inputs["d"] = d;
  auto set = nsclass::ns_candidates(d);
  json cands = json::array();
  for (const auto& c : set.candidates) cands.push_back(invariants_json(c));
  r.results["candidate_count"] = set.candidates.size();
  r.results["candidates"] = cands;
  r.cite(cite::kLambda2d);
  json checks = json::array();
  r.check(checks, "Lambda_2d even with |det| = 512d",
          lattice::invariants(set.candidates[0]).even && abs(lattice::invariants(set.candidates[0]).det) == 512 * d);
  if (d % 2 == 0) {
    auto ext = nsclass::find_glue_and_extend(d);
    r.results["glue_vector"] = vector_json(ext.glue);
    r.results["glue_square"] = num(ext.glue_square);
    r.results["index"] = num(ext.index);
    r.results["overlattice_gram"] = matrix_json(ext.overlattice.gram());
    r.check(checks, "v^2 = -2d mod 8", ((ext.glue_square + 2 * d) % 8) == 0);
    r.check(checks, "overlattice even with |det| = 128d",
            lattice::invariants(ext.overlattice).even && abs(lattice::invariants(ext.overlattice).det) == 128 * d);
    r.check(checks, "E8(-2) primitive in the overlattice",
            nsclass::verify_primitive(nsclass::e8_in_overlattice(ext), ext.overlattice));
    r.cite(cite::kNsEvenBranch);
    r.cite(cite::kPrimitive);
    if (d == 2) r.cite(cite::kGlueExample);
  } else {
    r.cite(cite::kNsOddBranch);
  }
  r.results["checks"] = checks;
  return r;
}

json fiber_json(const elliptic::FiberTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries)
    entries.push_back({{"factor", e.factor.to_string()}, {"kodaira", elliptic::to_string(e.kodaira)}, {"root_count", e.root_count}});
  return {{"entries", entries},
          {"i1_roots", t.root_count(elliptic::Kodaira::I1)},
          {"i2_roots", t.root_count(elliptic::Kodaira::I2)},
          {"euler_sum", t.euler_sum},
          {"rho", t.rho},
          {"dim_t", t.dim_t}};
}

Report cmd_elliptic(const std::string& a_text, const std::string& b_text, bool quotient, long mw) {
  Report r;
  r.command = "elliptic analyze";
  elliptic::WeierstrassModel w{RatPoly::parse(a_text), RatPoly::parse(b_text)};
  r.inputs = {{"a", w.a.to_string()}, {"b", w.b.to_string()}, {"quotient", quotient}, {"mw_rank", mw}};
  elliptic::require_generic(w);
  auto t = elliptic::fiber_table(w, mw);
  r.results["discriminant"] = elliptic::discriminant(w).to_string();
  r.results["fibers"] = fiber_json(t);
  json checks = json::array();
  r.check(checks, "8 I1 and 8 I2 roots", t.root_count(elliptic::Kodaira::I1) == 8 && t.root_count(elliptic::Kodaira::I2) == 8);
  r.check(checks, "Euler sum 24", t.euler_sum == 24);
  for (auto c : {cite::kWeierstrass, cite::kI1Fibers, cite::kI2Fibers, cite::kEuler24, cite::kRho10, cite::kDimT12}) r.cite(c);
  if (quotient) {
    auto q = elliptic::quotient_model(w);
    auto tq = elliptic::fiber_table(q, mw);
    r.results["quotient"] = {{"a", q.a.to_string()},
                             {"b", q.b.to_string()},
                             {"fibers", fiber_json(tq)},
                             {"printed_b_coefficient", "9a^2-4b"},
                             {"implemented_b_coefficient", "a^2-4b"}};
    r.check(checks, "quotient swaps I1 and I2 loci",
            elliptic::same_factor_sets(t.factors(elliptic::Kodaira::I1), tq.factors(elliptic::Kodaira::I2)) &&
                elliptic::same_factor_sets(t.factors(elliptic::Kodaira::I2), tq.factors(elliptic::Kodaira::I1)));
    r.check(checks, "double quotient recovers the model under (x,y) -> (4x,8y)",
            elliptic::rescale(elliptic::quotient_model(q), 2) == w);
    r.cite(cite::kQuotientPrinted);
  }
  r.results["checks"] = checks;
  return r;
}

Report cmd_motive(long rho, long blowups) {
  Report r;
  r.command = "motive decompose";
  r.inputs = {{"rho", rho}, {"blowups", blowups}};
  if (blowups < 0) throw Error(ErrorCode::BadInput, "blow-up count must be nonnegative");
  auto m = motive::blowup_points(motive::chow_kunneth_k3(rho), static_cast<std::size_t>(blowups));
  auto h = motive::betti_dims(m);
  r.results["motive"] = m.to_string();
  r.results["betti"] = h;
  r.results["euler"] = motive::euler_characteristic(m);
  json checks = json::array();
  r.check(checks, "Euler characteristic 24 + blow-ups", motive::euler_characteristic(m) == 24 + blowups);
  using E = motive::InvolutionElement;
  r.check(checks, "alpha^2 = [xi]", E::generator() * E::generator() == E::xi());
  r.check(checks, "p+ and p- orthogonal idempotents summing to [xi]",
          E::p_plus() * E::p_plus() == E::p_plus() && E::p_minus() * E::p_minus() == E::p_minus() &&
              E::p_plus() * E::p_minus() == E{0, 0} && E::p_plus() + E::p_minus() == E::xi());
  r.check(checks, "push/pull identities",
          motive::push(E::xi()) == 2 && motive::push(E::generator()) == 2 && motive::pull(1) == E::xi() + E::generator() &&
              motive::pull(motive::push(E::xi())) == E{2, 2});
  r.results["checks"] = checks;
  for (auto c : {cite::kChowKunneth, cite::kBlowup, cite::kAlphaSquared, cite::kIdempotent, cite::kPush, cite::kPull,
                 cite::kPullPush})
    r.cite(c);
  return r;
}

Report cmd_classify(const std::string& path, const std::string& facts_out) {
  Report r;
  r.command = "classify";
  auto d = classifier::descriptor_from_json(read_json_file(path));
  r.inputs = classifier::to_json(d);
  auto der = classifier::classify(d);
  r.results["facts"] = classifier::explain_json(der);
  for (const auto& f : der.facts) r.citations.push_back(f.citation);
  if (!facts_out.empty()) {
    motive::FactStore store;
    classifier::register_facts(der, store);
    std::ofstream out(facts_out);
    if (!out) throw Error(ErrorCode::BadInput, "cannot write '" + facts_out + "'");
    out << store.to_json().dump(2) << "\n";
    r.results["facts_store"] = facts_out;
  }
  return r;
}

Report cmd_selftest() {
  Report r;
  r.command = "selftest";
  const auto seed = acceptance::seed_from_env();
  r.inputs["seed"] = seed;
  json criteria = json::array();
  for (const auto& c : acceptance::run_all(seed)) {
    criteria.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    r.pass = r.pass && c.pass;
  }
  r.results["criteria"] = criteria;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k3w: exact lattice, motive and fibration checks for K3 surfaces"};
  app.require_subcommand(1);
  bool as_json = false;

  auto* lat = app.add_subcommand("lattice", "Lattice invariants");
  auto* lat_inv = lat->add_subcommand("invariants", "det, signature, parity, discriminant group");
  lat->require_subcommand(1);
  std::string lat_name, lat_gram;
  long lat_twist = 1;
  auto* name_opt = lat_inv->add_option("--name", lat_name, "U, E8, E8_MINUS_1 or RANK1(n)");
  lat_inv->add_option("--gram", lat_gram, "JSON file {\"rank\": n, \"gram\": [[...]]}")->excludes(name_opt);
  lat_inv->add_option("--twist", lat_twist, "scale the form by m");
  lat_inv->add_flag("--json", as_json);

  auto* nik = app.add_subcommand("nikulin", "Nikulin involution on the K3 lattice");
  auto* nik_verify = nik->add_subcommand("verify", "certify the H^2 model and the swap");
  nik->require_subcommand(1);
  nik_verify->add_flag("--json", as_json);

  auto* ns = app.add_subcommand("ns", "Neron-Severi candidates for rho = 9");
  auto* ns_classify = ns->add_subcommand("classify", "Lambda_2d and its index-2 overlattice");
  ns->require_subcommand(1);
  long d = 0;
  ns_classify->add_option("--d", d, "half the polarization degree")->required();
  ns_classify->add_flag("--json", as_json);

  auto* ell = app.add_subcommand("elliptic", "y^2 = x(x^2 + a(t)x + b(t))");
  auto* ell_analyze = ell->add_subcommand("analyze", "fiber table, Shioda-Tate rank, 2-isogeny quotient");
  ell->require_subcommand(1);
  std::string a_text, b_text;
  bool quotient = false;
  long mw = 0;
  ell_analyze->add_option("--a", a_text, "ascending coefficients, e.g. 0,0,1")->required();
  ell_analyze->add_option("--b", b_text, "ascending coefficients")->required();
  ell_analyze->add_flag("--quotient", quotient, "also analyze the quotient model");
  ell_analyze->add_option("--mw", mw, "Mordell-Weil rank")->check(CLI::NonNegativeNumber);
  ell_analyze->add_flag("--json", as_json);

  auto* mot = app.add_subcommand("motive", "Symbolic motive of a K3 surface");
  auto* mot_decompose = mot->add_subcommand("decompose", "Chow-Kunneth decomposition and Betti numbers");
  mot->require_subcommand(1);
  long rho = 0, blowups = 0;
  mot_decompose->add_option("--rho", rho, "Picard rank")->required();
  mot_decompose->add_option("--blowups", blowups, "number of point blow-ups");
  mot_decompose->add_flag("--json", as_json);

  auto* cls = app.add_subcommand("classify", "Derive facts from a surface descriptor");
  std::string descriptor, facts_out;
  cls->add_option("--descriptor", descriptor, "descriptor JSON file")->required();
  cls->add_option("--facts-out", facts_out, "write registered facts as JSON");
  cls->add_flag("--json", as_json);

  auto* self = app.add_subcommand("selftest", "Run the acceptance suite (SEED env var seeds random models)");
  self->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Report r;
    if (*lat_inv) {
      if (lat_name.empty() && lat_gram.empty()) throw CLI::RequiredError("--name or --gram");
      r = cmd_lattice(lat_name, lat_gram, lat_twist);
    } else if (*nik_verify) {
      r = cmd_nikulin();
    } else if (*ns_classify) {
      r = cmd_ns(d);
    } else if (*ell_analyze) {
      r = cmd_elliptic(a_text, b_text, quotient, mw);
    } else if (*mot_decompose) {
      r = cmd_motive(rho, blowups);
    } else if (*cls) {
      r = cmd_classify(descriptor, facts_out);
    } else {
      r = cmd_selftest();
    }
    emit(r, as_json);
    return r.pass ? 0 : 1;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: BadInput: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::BadInput ? 2 : 1;
  }
}
