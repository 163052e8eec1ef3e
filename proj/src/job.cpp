#include "regquot/job.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "regquot/clifford.hpp"
#include "regquot/derivations.hpp"
#include "regquot/error.hpp"
#include "regquot/expr.hpp"
#include "regquot/ideal.hpp"
#include "regquot/morava.hpp"
#include "regquot/pairs.hpp"

namespace regquot {

using nlohmann::json;

const std::vector<std::string> kCommands = {"presentation", "cohomology",   "form",         "multiply",
                                            "antipode",     "derivations",  "check-regular", "tor",
                                            "condition-ii", "decompose",    "naturality",    "scenario"};

namespace {

[[noreturn]] void semantic(const std::string& path, const std::string& what) {
  fail(ErrorKind::SemanticError, path + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) semantic(path, "missing key '" + key + "'");
  return *it;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
  if (!obj.is_object()) semantic(path, "expected an object");
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) semantic(path, "unknown key '" + k + "'");
  }
}

std::string get_string(const json& v, const std::string& path) {
  if (!v.is_string()) semantic(path, "expected a string");
  return v.get<std::string>();
}

long get_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) semantic(path, "expected an integer");
  return v.get<long>();
}

bool get_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) semantic(path, "expected true or false");
  return v.get<bool>();
}

std::vector<std::string> get_strings(const json& v, const std::string& path) {
  if (!v.is_array()) semantic(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_string(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Everything a command needs, built from the job's ring or scenario block.
struct Context {
  Ring ring;
  std::optional<MoravaScenario> scenario;
  std::vector<RingElement> sequence;
  std::vector<RingElement> obstructions;
  std::optional<std::vector<RingElement>> target;
};

RingElement parse_element(const Ring& ring, const std::string& text, const std::string& path) {
  try {
    return ring.parse(text);
  } catch (const AlgebraError& e) {
    const ErrorKind kind = e.kind() == ErrorKind::ParseError ? ErrorKind::ParseError : ErrorKind::SemanticError;
    fail(kind, path + ": " + e.detail());
  }
}

std::vector<RingElement> parse_elements(const Ring& ring, const std::vector<std::string>& texts,
                                        const std::string& path) {
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    out.push_back(parse_element(ring, texts[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

BaseRing make_base(const JobDescription::RingBlock& rb) {
  const std::string path = "ring.base";
  if (rb.base == "integers") return BaseRing::integers();
  if (rb.base == "prime_field") {
    if (!is_prime(rb.modulus)) semantic(path, std::to_string(rb.modulus) + " is not prime");
    return BaseRing::prime_field(rb.modulus);
  }
  if (rb.base == "localized") {
    if (!is_prime(rb.modulus)) semantic(path, std::to_string(rb.modulus) + " is not prime");
    return BaseRing::localized(rb.modulus);
  }
  if (rb.base == "integers_mod") {
    if (rb.modulus < 2) semantic(path, "modulus must be at least 2");
    return BaseRing::integers_mod(rb.modulus);
  }
  semantic(path, "unknown base ring kind '" + rb.base + "'");
}

Context build_context(const JobDescription& job) {
  if (job.scenario) {
    std::optional<int> degree;
    int laurent = 2;
    if (job.window) {
      degree = job.window->degree;
      laurent = job.window->laurent;
    }
    MoravaScenario s = build_scenario(job.scenario->p, job.scenario->n, degree, laurent);
    Context ctx{s.ring, s, s.F.sequence(), {}, std::nullopt};
    for (const auto& t : s.F.tokens()) ctx.obstructions.push_back(t.obstruction);
    if (job.target) ctx.target = parse_elements(s.ring, *job.target, "target.sequence");
    return ctx;
  }
  const auto& rb = *job.ring;
  Ring ring = [&] {
    try {
      return Ring(make_base(rb), rb.generators, job.window.value_or(Window{}));
    } catch (const AlgebraError& e) {
      if (e.kind() == ErrorKind::SemanticError) semantic("ring.generators", e.detail());
      throw;
    }
  }();
  if (!rb.relations.empty()) ring = ring.with_relations(parse_elements(ring, rb.relations, "ring.relations"));
  Context ctx{ring, std::nullopt, {}, {}, std::nullopt};
  for (std::size_t i = 0; i < job.sequence.size(); ++i) {
    const std::string path = "sequence[" + std::to_string(i) + "]";
    RingElement x = parse_element(ring, job.sequence[i].element, path + ".element");
    if (!x.is_zero() && !x.is_homogeneous()) semantic(path + ".element", x.str() + " is not homogeneous");
    RingElement c = ring.zero();
    if (job.sequence[i].obstruction) {
      c = parse_element(ring, *job.sequence[i].obstruction, path + ".obstruction");
      const int expected = 2 * (x.is_zero() ? 0 : *x.degree()) + 2;
      if (!c.is_zero() && c.degree() != expected) {
        semantic(path + ".obstruction", "must be homogeneous of degree " + std::to_string(expected));
      }
    }
    ctx.sequence.push_back(std::move(x));
    ctx.obstructions.push_back(std::move(c));
  }
  if (job.target) ctx.target = parse_elements(ring, *job.target, "target.sequence");
  return ctx;
}

// ---- rendering helpers ----

json invariants_json(const ModuleInvariants& m) {
  json t = json::array();
  for (const auto& d : m.torsion) t.push_back(d.get_str());
  return {{"free_rank", m.free_rank}, {"torsion", t}, {"text", m.str()}};
}

json presentation_json(const AlgebraPresentation& p) {
  json gens = json::array();
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    gens.push_back({{"name", p.generators[i]}, {"degree", p.degrees[i]}});
  }
  return {{"kind", kind_name(p.kind)},     {"text", p.text},
          {"generators", gens},            {"relations", p.relations},
          {"coefficients", p.coefficients}, {"isomorphism_asserted", p.isomorphism_asserted}};
}

json form_json(const BilinearForm& b) {
  return {{"degrees", b.degrees()}, {"entries", b.table()}, {"diagonal", b.is_diagonal()}, {"zero", b.is_zero()}};
}

std::string form_text(const BilinearForm& b) {
  std::ostringstream os;
  for (const auto& row : b.table()) {
    os << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << row[j];
    os << "]\n";
  }
  return os.str();
}

std::string presentation_text(const AlgebraPresentation& p) {
  std::ostringstream os;
  os << p.text << "\n";
  os << "  over " << p.coefficients << "\n";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    os << "  |" << p.generators[i] << "| = " << p.degrees[i] << "\n";
  }
  for (const auto& r : p.relations) os << "  " << r << "\n";
  return os.str();
}

struct Output {
  json results = json::object();
  std::ostringstream text;
  std::vector<std::string> warnings;
  int code = 0;
};

struct CliffordEnv {
  using value_type = CliffordElement;
  const CliffordAlgebra& A;
  const Ring& ring;
  CliffordElement number(const Scalar& c) const { return A.scalar(ring.scalar(c)); }
  CliffordElement symbol(const std::string& name, std::size_t col) const {
    const auto& names = A.names();
    auto it = std::find(names.begin(), names.end(), name);
    if (it != names.end()) return A.generator(static_cast<std::size_t>(it - names.begin()));
    if (auto g = ring.generator_index(name)) return A.scalar(ring.generator(*g));
    fail(ErrorKind::SemanticError, "column " + std::to_string(col) + ": unknown symbol '" + name + "'");
  }
  CliffordElement add(const CliffordElement& a, const CliffordElement& b) const { return a + b; }
  CliffordElement sub(const CliffordElement& a, const CliffordElement& b) const { return a - b; }
  CliffordElement mul(const CliffordElement& a, const CliffordElement& b) const { return a * b; }
  CliffordElement neg(const CliffordElement& a) const { return -a; }
  CliffordElement pow(const CliffordElement& a, int e, std::size_t col) const {
    if (e < 0) {
      if (a.terms().size() == 1 && a.terms().begin()->first == 0) {
        return A.scalar(a.terms().begin()->second.pow(e));
      }
      fail(ErrorKind::SemanticError, "column " + std::to_string(col) + ": only coefficients can be inverted");
    }
    CliffordElement out = A.one();
    for (int i = 0; i < e; ++i) out = out * a;
    return out;
  }
};

CliffordElement parse_clifford(const CliffordAlgebra& A, const Ring& ring, const json& args, const std::string& key) {
  const std::string path = "args." + key;
  const std::string text = get_string(member(args, key, "args"), path);
  try {
    return expr::evaluate(expr::parse(text), CliffordEnv{A, ring});
  } catch (const AlgebraError& e) {
    const ErrorKind kind = e.kind() == ErrorKind::ParseError ? ErrorKind::ParseError : ErrorKind::SemanticError;
    fail(kind, path + ": " + e.detail());
  }
}

std::vector<HomogeneousIdeal> parse_ideals(const Context& ctx, const json& args) {
  const json& v = member(args, "ideals", "args");
  if (!v.is_array()) semantic("args.ideals", "expected an array of generator lists");
  std::vector<HomogeneousIdeal> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string path = "args.ideals[" + std::to_string(i) + "]";
    out.emplace_back(ctx.ring, parse_elements(ctx.ring, get_strings(v[i], path), path));
  }
  return out;
}

int arg_degree(const Context& ctx, const json& args) {
  if (!args.contains("degree")) return ctx.ring.max_degree();
  return static_cast<int>(get_int(args["degree"], "args.degree"));
}

QuotientRingSpec spec_of(const Context& ctx) {
  if (ctx.scenario) return ctx.scenario->F;
  return QuotientRingSpec(ctx.ring, ctx.sequence, ctx.obstructions);
}

QuotientRingSpec target_of(const Context& ctx, const QuotientRingSpec& F) {
  if (!ctx.target) return F;
  return QuotientRingSpec(ctx.ring, *ctx.target);
}

void add_regularity_warning(const QuotientRingSpec& F, Output& out) {
  if (!F.is_regular()) {
    out.warnings.push_back(kLiftOnly);
    out.warnings.push_back("sequence not regular: " + F.regularity().detail);
  } else {
    out.warnings.push_back("verified up to degree " + std::to_string(F.regularity().verified_up_to));
  }
}

// ---- commands ----

void cmd_presentation(const Context& ctx, const json&, Output& out) {
  const QuotientRingSpec F = spec_of(ctx);
  const QuotientRingSpec k = target_of(ctx, F);
  const PairAlgebra A(F, k.quotient());
  AlgebraPresentation p = A.presentation();
  out.results["presentation"] = presentation_json(p);
  out.text << presentation_text(p);
  out.warnings = p.warnings;
}

void cmd_cohomology(const Context& ctx, const json&, Output& out) {
  const QuotientRingSpec F = spec_of(ctx);
  AlgebraPresentation p = cohomology_presentation(F);
  out.results["presentation"] = presentation_json(p);
  out.text << presentation_text(p);
  out.warnings = p.warnings;
}

void cmd_form(const Context& ctx, const json& args, Output& out) {
  const QuotientRingSpec F = spec_of(ctx);
  const BilinearForm b = characteristic_form_diagonal(F);
  out.results["form"] = form_json(b);
  out.text << "b_F over " << b.coefficients().describe() << ":\n" << form_text(b);
  if (ctx.target) {
    const QuotientRingSpec k = target_of(ctx, F);
    const BilinearForm bk = base_change_form(b, QuotientMap(F.quotient(), k.quotient()));
    out.results["base_changed"] = form_json(bk);
    out.text << "k (x) b_F over " << bk.coefficients().describe() << ":\n" << form_text(bk);
  }
  std::optional<std::vector<RingElement>> opp;
  if (args.contains("opposite_obstructions")) {
    opp = parse_elements(ctx.ring, get_strings(args["opposite_obstructions"], "args.opposite_obstructions"),
                         "args.opposite_obstructions");
  } else if (ctx.scenario) {
    opp = ctx.scenario->opposite_obstructions;
  }
  if (opp) {
    const OppositeForms o = opposite_form(F, *opp);
    out.results["opposite"] = {{"ring_form", form_json(o.ring_form)},
                               {"mixed_form", form_json(o.mixed_form)},
                               {"equals_form", o.ring_form == b}};
    out.text << "b of the opposite ring:\n" << form_text(o.ring_form);
    out.text << "equals b_F: " << (o.ring_form == b ? "yes" : "no") << "\n";
    out.text << "mixed-pair form is zero: " << (o.mixed_form.is_zero() ? "yes" : "no") << "\n";
  }
  add_regularity_warning(F, out);
}

void cmd_multiply(const Context& ctx, const json& args, Output& out) {
  const QuotientRingSpec F = spec_of(ctx);
  const QuotientRingSpec k = target_of(ctx, F);
  const PairAlgebra A(F, k.quotient());
  const CliffordElement u = parse_clifford(A.algebra(), ctx.ring, args, "left");
  const CliffordElement v = parse_clifford(A.algebra(), ctx.ring, args, "right");
  const CliffordElement w = u * v;
  out.results["left"] = u.str();
  out.results["right"] = v.str();
  out.results["product"] = w.str();
  out.text << "(" << u.str() << ") * (" << v.str() << ") = " << w.str() << "\n";
  add_regularity_warning(F, out);
}

void cmd_antipode(const Context& ctx, const json& args, Output& out) {
  const QuotientRingSpec F = spec_of(ctx);
  const QuotientRingSpec k = target_of(ctx, F);
  const PairAlgebra A(F, k.quotient());
  const CliffordAlgebra& C = A.algebra();
  const CliffordElement u = parse_clifford(C, ctx.ring, args, "element");
  bool automorphism = true, involution = true;
  for (Mask a : C.basis()) {
    if (!(antipode(antipode(C.word(a))) == C.word(a))) involution = false;
    for (Mask b : C.basis()) {
      if (!(antipode(C.word(a) * C.word(b)) == antipode(C.word(a)) * antipode(C.word(b)))) automorphism = false;
    }
  }
  out.results["element"] = u.str();
  out.results["antipode"] = antipode(u).str();
  out.results["automorphism"] = automorphism;
  out.results["involution"] = involution;
  out.text << "alpha(" << u.str() << ") = " << antipode(u).str() << "\n";
  out.text << "automorphism: " << (automorphism ? "yes" : "no") << ", involution: " << (involution ? "yes" : "no")
           << "\n";
  if (!automorphism || !involution) out.code = 1;
}

void cmd_derivations(const Context& ctx, const json& args, Output& out) {
  const QuotientRingSpec F = spec_of(ctx);
  if (!F.is_regular()) fail(ErrorKind::NotRegular, F.regularity().detail);
  const QuotientRingSpec k = target_of(ctx, F);
  std::vector<int> degrees;
  for (std::size_t i = 0; i < F.length(); ++i) degrees.push_back(F.sequence_degree(i) + 1);
  const CliffordAlgebra L = CliffordAlgebra::exterior(k.quotient(), degrees);
  json bocksteins = json::array();
  bool all_leibniz = true;
  for (std::size_t i = 0; i < L.rank(); ++i) {
    const DerivationOperator Q = bockstein(L, i);
    const bool ok = leibniz_check(Q.as_operator());
    all_leibniz = all_leibniz && ok;
    bocksteins.push_back({{"name", "Q" + std::to_string(i)}, {"degree", Q.degree()}, {"leibniz", ok}});
    out.text << "Q" << i << ": degree " << Q.degree() << ", Leibniz " << (ok ? "yes" : "no") << "\n";
  }
  const bool relations = theta_relations_hold(L);
  const bool injective = theta_injective(L);
  const bool square = psi_theta_square_commutes(L);
  out.results["bocksteins"] = bocksteins;
  out.results["relations_hold"] = relations;
  out.results["theta_injective"] = injective;
  out.results["square_commutes"] = square;
  out.results["image_rank"] = injective ? (std::size_t{1} << L.rank()) : 0;
  out.text << "Q_i^2 = 0 and Q_iQ_j = -Q_jQ_i: " << (relations ? "yes" : "no") << "\n";
  out.text << "Theta injective: " << (injective ? "yes" : "no") << "\n";
  out.text << "Psi Theta = Delta Lambda(psi): " << (square ? "yes" : "no") << "\n";
  if (args.contains("word")) {
    std::vector<std::size_t> word;
    for (const auto& w : args["word"]) {
      const long i = get_int(w, "args.word");
      if (i < 0) semantic("args.word", "indices must be non-negative");
      word.push_back(static_cast<std::size_t>(i));
    }
    const DualFunctional f = Psi(theta(L, word).op);
    json values = json::object();
    for (Mask t = 0; t < f.size(); ++t) {
      if (!f[t].is_zero()) values[L.word_name(t)] = f[t].str();
    }
    out.results["psi_theta"] = values;
  }
  AlgebraPresentation p = cohomology_presentation(F);
  out.results["presentation"] = presentation_json(p);
  out.text << presentation_text(p);
  out.warnings = p.warnings;
  if (!all_leibniz || !relations || !injective || !square) out.code = 1;
}

void cmd_check_regular(const Context& ctx, const json& args, Output& out) {
  const RegularityReport r = check_regular_sequence(ctx.ring, ctx.sequence, arg_degree(ctx, args));
  out.results["regular"] = r.regular;
  out.results["first_failure_index"] = r.first_failure_index ? json(*r.first_failure_index) : json(nullptr);
  out.results["verified_up_to"] = r.verified_up_to;
  out.results["detail"] = r.detail;
  out.text << (r.regular ? "regular" : "not regular") << ": " << r.detail << "\n";
  if (r.first_failure_index) out.text << "first failure at element " << *r.first_failure_index << "\n";
  if (r.regular) out.warnings.push_back("verified up to degree " + std::to_string(r.verified_up_to));
  if (!r.regular) out.code = 1;
}

json graded_json(const GradedModuleReport& g) {
  json rows = json::array();
  for (const auto& [d, inv] : g.by_degree) {
    if (inv.is_zero()) continue;
    json row = invariants_json(inv);
    row["degree"] = d;
    rows.push_back(row);
  }
  return rows;
}

void cmd_tor(const Context& ctx, const json& args, Output& out) {
  const long i = args.contains("i") ? get_int(args["i"], "args.i") : 1;
  if (i < 0) semantic("args.i", "homological degree must be non-negative");
  std::vector<RingElement> kgens;
  if (args.contains("ideal")) {
    kgens = parse_elements(ctx.ring, get_strings(args["ideal"], "args.ideal"), "args.ideal");
  } else if (ctx.target) {
    kgens = *ctx.target;
  } else {
    semantic("args", "tor needs 'ideal' or a target block");
  }
  const int D = arg_degree(ctx, args);
  const HomogeneousIdeal J(ctx.ring, ctx.sequence), K(ctx.ring, kgens);
  const GradedModuleReport t = tor(J, K, static_cast<std::size_t>(i), D);
  out.results["i"] = i;
  out.results["by_degree"] = graded_json(t);
  out.text << "Tor_" << i << " by internal degree: " << t.str() << "\n";
  if (i == 1) {
    const GradedModuleReport q = intersection_over_product(J, K, D);
    out.results["intersection_over_product"] = graded_json(q);
    out.results["tor1_matches"] = q.by_degree == t.by_degree;
    out.text << "(J cap K)/JK: " << q.str() << "\n";
  }
  out.warnings.push_back("verified up to degree " + std::to_string(D));
}

void cmd_condition_ii(const Context& ctx, const json& args, Output& out) {
  const auto ideals = parse_ideals(ctx, args);
  const auto holds = check_condition_ii(ideals, arg_degree(ctx, args));
  out.results["holds"] = holds;
  for (std::size_t k = 0; k < holds.size(); ++k) {
    out.text << "ideal " << k + 2 << ": " << (holds[k] ? "holds" : "fails") << "\n";
    if (!holds[k]) out.code = 1;
  }
}

void cmd_decompose(const Context& ctx, const json& args, Output& out) {
  const auto ideals = parse_ideals(ctx, args);
  const int D = arg_degree(ctx, args);
  const ConormalDecomposition dec = decompose_conormal(ideals, D);
  json rows = json::array();
  for (const auto& d : dec.degrees) {
    json rhs = json::array();
    for (const auto& r : d.rhs) rhs.push_back(invariants_json(r));
    rows.push_back({{"degree", d.degree},
                    {"lhs", invariants_json(d.lhs)},
                    {"rhs", rhs},
                    {"forward_well_defined", d.forward_well_defined},
                    {"backward_well_defined", d.backward_well_defined},
                    {"backward_after_forward_is_identity", d.backward_after_forward_is_identity},
                    {"forward_after_backward_is_identity", d.forward_after_backward_is_identity}});
    if (!d.lhs.is_zero()) {
      out.text << "degree " << d.degree << ": " << d.lhs.str() << " = ";
      for (std::size_t i = 0; i < d.rhs.size(); ++i) out.text << (i ? " + " : "") << d.rhs[i].str();
      out.text << (d.ok() ? "  [inverse maps verified]" : "  [FAILED]") << "\n";
    }
  }
  out.results["degrees"] = rows;
  out.results["ok"] = dec.ok();
  out.text << (dec.ok() ? "decomposition verified" : "decomposition failed") << " up to degree " << D << "\n";
  if (!dec.ok()) out.code = 1;
}

void cmd_naturality(const Context& ctx, const json& args, Output& out) {
  const QuotientRingSpec F = spec_of(ctx);
  const QuotientRingSpec k = target_of(ctx, F);
  const auto gtexts = get_strings(member(args, "sequence", "args"), "args.sequence");
  const QuotientRingSpec G(ctx.ring, parse_elements(ctx.ring, gtexts, "args.sequence"));
  const QuotientRingSpec l =
      args.contains("target")
          ? QuotientRingSpec(ctx.ring, parse_elements(ctx.ring, get_strings(args["target"], "args.target"), "args.target"))
          : G;
  const bool mult = args.contains("multiplicative") ? get_bool(args["multiplicative"], "args.multiplicative") : true;
  const AdmissiblePair source = make_pair(F, k, mult);
  const AdmissiblePair target = make_pair(G, l, mult);
  for (const auto& w : source.warnings()) out.warnings.push_back(w);
  for (const auto& w : target.warnings()) out.warnings.push_back(w);
  const NaturalityReport rep = naturality_suite(make_morphism(source, target));
  out.results["images"] = rep.images;
  out.results["phi_square"] = rep.phi_square;
  out.results["base_change"] = rep.base_change;
  out.results["multiplicative"] = rep.multiplicative;
  out.results["failures"] = rep.failures;
  out.results["source"] = presentation_json(source.homology().presentation());
  out.results["target"] = presentation_json(target.homology().presentation());
  const auto& names = source.homology().algebra().names();
  for (std::size_t i = 0; i < rep.images.size(); ++i) out.text << names[i] << " -> " << rep.images[i] << "\n";
  out.text << "phi square: " << (rep.phi_square ? "commutes" : "fails") << "\n";
  out.text << "base change: " << (rep.base_change ? "functorial" : "fails") << "\n";
  out.text << "induced map multiplicative: " << (rep.multiplicative ? "yes" : "no") << "\n";
  if (!rep.ok()) out.code = 1;
}

void cmd_scenario(const Context& ctx, const json&, Output& out) {
  if (!ctx.scenario) semantic("scenario", "the scenario command needs a scenario block");
  const MoravaScenario& s = *ctx.scenario;
  const AlgebraPresentation h = kn_homology(s);
  const AlgebraPresentation c = kn_cohomology(s);
  const BilinearForm b = kn_form(s);
  const OppositeForms o = opposite_form(s.F, s.opposite_obstructions);
  const PairAlgebra A(s.F, s.F.quotient());
  const CliffordElement top = A.algebra().generator(static_cast<std::size_t>(s.n - 1));
  const std::string square = (top * top).str();
  out.results["p"] = s.p;
  out.results["n"] = s.n;
  out.results["ring"] = s.ring.describe();
  out.results["homology"] = presentation_json(h);
  out.results["cohomology"] = presentation_json(c);
  out.results["form"] = form_json(b);
  out.results["opposite_form_equal"] = o.ring_form == b;
  out.results["top_square"] = square;
  out.text << "K(" << s.n << ") at p = " << s.p << " over " << s.ring.describe() << "\n";
  out.text << "homology: " << presentation_text(h);
  out.text << "cohomology: " << presentation_text(c);
  out.text << "form:\n" << form_text(b);
  out.text << "a" << s.n - 1 << "^2 = " << square << "\n";
  out.text << "form of the opposite ring equal: " << (o.ring_form == b ? "yes" : "no") << "\n";
  out.warnings = h.warnings;
}

using Command = void (*)(const Context&, const json&, Output&);

Command lookup(const std::string& name) {
  static const std::map<std::string, Command> table = {
      {"presentation", cmd_presentation}, {"cohomology", cmd_cohomology},       {"form", cmd_form},
      {"multiply", cmd_multiply},         {"antipode", cmd_antipode},           {"derivations", cmd_derivations},
      {"check-regular", cmd_check_regular}, {"tor", cmd_tor},                   {"condition-ii", cmd_condition_ii},
      {"decompose", cmd_decompose},       {"naturality", cmd_naturality},       {"scenario", cmd_scenario}};
  return table.at(name);
}

std::string module_of(const std::string& command) {
  static const std::map<std::string, std::string> table = {
      {"presentation", "clifford"}, {"cohomology", "derivations"}, {"form", "conormal"},
      {"multiply", "clifford"},     {"antipode", "clifford"},      {"derivations", "derivations"},
      {"check-regular", "ideal"},   {"tor", "ideal"},              {"condition-ii", "ideal"},
      {"decompose", "ideal"},       {"naturality", "pairs"},       {"scenario", "morava"}};
  auto it = table.find(command);
  return it == table.end() ? "job" : it->second;
}

bool is_refutation(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotRegular:
    case ErrorKind::NotVerifiedRegular:
    case ErrorKind::ConditionIIFails:
    case ErrorKind::NotUnital:
    case ErrorKind::NotWellDefined:
    case ErrorKind::NotInIdeal:
    case ErrorKind::NotCompatible:
    case ErrorKind::NotExterior:
      return true;
    default:
      return false;
  }
}

std::string status_of(int code) { return code == 0 ? "ok" : code == 1 ? "refuted" : "error"; }

}  // namespace

JobDescription parse_job(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    fail(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }
  check_keys(doc, {"command", "ring", "sequence", "target", "window", "scenario", "args", "output"}, "job");
  JobDescription job;
  job.command = get_string(member(doc, "command", "job"), "command");
  if (std::find(kCommands.begin(), kCommands.end(), job.command) == kCommands.end()) {
    semantic("command", "unknown command '" + job.command + "'");
  }
  if (doc.contains("ring")) {
    const json& r = doc["ring"];
    check_keys(r, {"base", "generators", "relations"}, "ring");
    JobDescription::RingBlock rb;
    if (r.contains("base")) {
      const json& b = r["base"];
      check_keys(b, {"kind", "p", "m"}, "ring.base");
      rb.base = get_string(member(b, "kind", "ring.base"), "ring.base.kind");
      if (b.contains("p") && b.contains("m")) semantic("ring.base", "give either p or m");
      if (b.contains("p")) rb.modulus = get_int(b["p"], "ring.base.p");
      if (b.contains("m")) rb.modulus = get_int(b["m"], "ring.base.m");
      if ((rb.base == "prime_field" || rb.base == "localized") && !b.contains("p")) {
        semantic("ring.base", rb.base + " needs p");
      }
      if (rb.base == "integers_mod" && !b.contains("m")) semantic("ring.base", "integers_mod needs m");
    }
    if (r.contains("generators")) {
      const json& g = r["generators"];
      if (!g.is_array()) semantic("ring.generators", "expected an array");
      for (std::size_t i = 0; i < g.size(); ++i) {
        const std::string path = "ring.generators[" + std::to_string(i) + "]";
        check_keys(g[i], {"name", "degree", "invertible"}, path);
        Generator gen;
        gen.name = get_string(member(g[i], "name", path), path + ".name");
        gen.degree = static_cast<int>(get_int(member(g[i], "degree", path), path + ".degree"));
        if (g[i].contains("invertible")) gen.invertible = get_bool(g[i]["invertible"], path + ".invertible");
        if (gen.degree % 2 != 0) semantic(path + ".degree", "generator degrees must be even");
        if (gen.degree < 0) semantic(path + ".degree", "generator degrees must be non-negative");
        rb.generators.push_back(gen);
      }
    }
    if (r.contains("relations")) rb.relations = get_strings(r["relations"], "ring.relations");
    job.ring = rb;
  }
  if (doc.contains("sequence")) {
    const json& s = doc["sequence"];
    if (!s.is_array()) semantic("sequence", "expected an array");
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string path = "sequence[" + std::to_string(i) + "]";
      check_keys(s[i], {"element", "obstruction"}, path);
      JobDescription::SequenceEntry e;
      e.element = get_string(member(s[i], "element", path), path + ".element");
      if (s[i].contains("obstruction")) e.obstruction = get_string(s[i]["obstruction"], path + ".obstruction");
      job.sequence.push_back(e);
    }
  }
  if (doc.contains("target")) {
    check_keys(doc["target"], {"sequence"}, "target");
    job.target = get_strings(member(doc["target"], "sequence", "target"), "target.sequence");
  }
  if (doc.contains("window")) {
    const json& w = doc["window"];
    check_keys(w, {"degree", "laurent"}, "window");
    Window win;
    if (w.contains("degree")) win.degree = static_cast<int>(get_int(w["degree"], "window.degree"));
    if (w.contains("laurent")) win.laurent = static_cast<int>(get_int(w["laurent"], "window.laurent"));
    if (win.degree < 0 || win.laurent < 0) semantic("window", "window bounds must be non-negative");
    job.window = win;
  }
  if (doc.contains("scenario")) {
    check_keys(doc["scenario"], {"p", "n"}, "scenario");
    JobDescription::ScenarioBlock sc;
    sc.p = get_int(member(doc["scenario"], "p", "scenario"), "scenario.p");
    sc.n = static_cast<int>(get_int(member(doc["scenario"], "n", "scenario"), "scenario.n"));
    job.scenario = sc;
  }
  if (doc.contains("args")) {
    if (!doc["args"].is_object()) semantic("args", "expected an object");
    job.args = doc["args"];
  }
  if (doc.contains("output")) job.output = get_string(doc["output"], "output");

  if (job.scenario && (job.ring || !job.sequence.empty())) {
    semantic("scenario", "a scenario job defines its own ring and sequence");
  }
  if (!job.scenario && !job.ring) semantic("job", "either 'ring' or 'scenario' is required");
  if (job.command == "scenario" && !job.scenario) semantic("scenario", "the scenario command needs a scenario block");
  // Names, degrees and obstruction degrees.
  try {
    (void)build_context(job);
  } catch (const AlgebraError& e) {
    if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::SemanticError) throw;
    fail(ErrorKind::SemanticError, e.detail());
  }
  return job;
}

json job_to_json(const JobDescription& job) {
  json doc;
  doc["command"] = job.command;
  if (job.ring) {
    json base{{"kind", job.ring->base}};
    if (job.ring->base == "prime_field" || job.ring->base == "localized") base["p"] = job.ring->modulus;
    if (job.ring->base == "integers_mod") base["m"] = job.ring->modulus;
    json gens = json::array();
    for (const auto& g : job.ring->generators) {
      gens.push_back({{"name", g.name}, {"degree", g.degree}, {"invertible", g.invertible}});
    }
    doc["ring"] = {{"base", base}, {"generators", gens}, {"relations", job.ring->relations}};
  }
  if (!job.sequence.empty()) {
    json seq = json::array();
    for (const auto& e : job.sequence) {
      json entry{{"element", e.element}};
      if (e.obstruction) entry["obstruction"] = *e.obstruction;
      seq.push_back(entry);
    }
    doc["sequence"] = seq;
  }
  if (job.target) doc["target"] = {{"sequence", *job.target}};
  if (job.window) doc["window"] = {{"degree", job.window->degree}, {"laurent", job.window->laurent}};
  if (job.scenario) doc["scenario"] = {{"p", job.scenario->p}, {"n", job.scenario->n}};
  if (!job.args.empty()) doc["args"] = job.args;
  if (job.output) doc["output"] = *job.output;
  return doc;
}

std::string render_job(const JobDescription& job) { return job_to_json(job).dump(2) + "\n"; }

JobReport input_error_report(const std::string& message, const std::string& kind) {
  JobReport r;
  r.exit_code = 2;
  r.json = {{"command", nullptr},
            {"status", "error"},
            {"exit_code", 2},
            {"results", json::object()},
            {"warnings", json::array()},
            {"error", {{"kind", kind}, {"message", message}, {"module", "job"}}}};
  r.text = "error [" + kind + "] (job): " + message + "\n";
  return r;
}

JobReport run_job(const JobDescription& job) {
  JobReport report;
  Output out;
  json error = nullptr;
  try {
    const Context ctx = build_context(job);
    lookup(job.command)(ctx, job.args, out);
  } catch (const AlgebraError& e) {
    out.code = is_refutation(e.kind()) ? 1 : 2;
    error = {{"kind", std::string(to_string(e.kind()))}, {"message", e.detail()}, {"module", module_of(job.command)}};
  } catch (const json::exception& e) {
    out.code = 2;
    error = {{"kind", "SemanticError"}, {"message", std::string("args: ") + e.what()}, {"module", "job"}};
  }
  report.exit_code = out.code;
  report.json = {{"command", job.command},       {"status", status_of(out.code)}, {"exit_code", out.code},
                 {"job", job_to_json(job)},      {"results", out.results},        {"warnings", out.warnings}};
  std::ostringstream text;
  text << "command: " << job.command << "\n";
  if (!error.is_null()) {
    report.json["error"] = error;
    text << "error [" << error["kind"].get<std::string>() << "] (" << error["module"].get<std::string>()
         << "): " << error["message"].get<std::string>() << "\n";
  } else {
    text << out.text.str();
  }
  for (const auto& w : out.warnings) text << "warning: " << w << "\n";
  text << "status: " << status_of(out.code) << "\n";
  report.text = text.str();
  return report;
}

}  // namespace regquot
