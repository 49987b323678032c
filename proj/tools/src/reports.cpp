#include "sdcalc_cli/reports.hpp"

#include <algorithm>
#include <sstream>

#include "sdcalc/error.hpp"

namespace sdcalc::cli {
namespace {

std::string matrix_text(const IntMatrix& m, const std::string& indent) {
  std::ostringstream os;
  if (m.rows() == 0) return indent + "(empty)\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent;
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

std::string diagram_line(const Diagram& d) {
  std::ostringstream os;
  os << "genus " << d.genus() << ", length " << d.length() << ", " << (d.closed() ? "closed" : "open") << ", "
     << (d.twisted() ? "twisted" : "untwisted");
  return os.str();
}

void finish(Report& r, const char* command, int genus) {
  r.json["command"] = command;
  r.json["genus"] = genus;
  r.json["exactness"] = to_string(exactness_for(genus));
  if (genus >= 2) {
    r.json["banner"] = homological_banner(genus);
    r.text = homological_banner(genus) + "\n" + r.text;
  }
}

std::string sum_text(const SumForm& f) {
  std::ostringstream os;
  os << f.l << " S2xS2, " << f.m << " CP2, " << f.n << " CP2bar";
  return os.str();
}

}  // namespace

std::string homological_banner(int genus) {
  return "HOMOLOGICAL-ONLY: genus " + std::to_string(genus) +
         " >= 2, every check runs on homology classes and is a necessary condition only";
}

std::vector<CanonicalForm> closures_of(const SumForm& reduced) {
  std::vector<CanonicalForm> out;
  for (Closure c : {Closure::Spin0, Closure::NonSpin1}) {
    SumForm f = reduced;
    f.closure = c;
    const CanonicalForm form = normalize_sum(f);
    if (std::find(out.begin(), out.end(), form) == out.end()) out.push_back(form);
  }
  return out;
}

Report validate_report(const DiagramFile& f, const std::optional<Diagram>& d,
                       const std::vector<ValidationFailure>& failures) {
  Report r;
  r.json["valid"] = failures.empty();
  r.json["length"] = f.curves.size();
  r.json["closed"] = f.closed;
  Json fs = Json::array();
  std::ostringstream os;
  for (const ValidationFailure& v : failures) {
    fs.push_back({{"curve", v.index}, {"reason", v.reason}});
    if (v.index == 0)
      os << "  " << v.reason << '\n';
    else
      os << "  curve " << v.index << ": " << v.reason << '\n';
  }
  r.json["failures"] = fs;
  if (d) {
    r.json["diagram"] = to_json(*d);
    r.text = "valid: " + diagram_line(*d) + "\n";
  } else {
    r.text = "invalid:\n" + os.str();
  }
  finish(r, "validate", f.genus);
  return r;
}

Report info_report(const Diagram& d) {
  const Circuit& c = d.circuit();
  const LinkingMatrix lk = linking_matrix(c);
  const IntMatrix q = intersection_form(c);
  const FormInvariants lk_inv = form_invariants(lk);
  const FormInvariants q_inv = form_invariants(q);
  const EulerCharacteristics chi = euler_characteristics(c);
  const char* status = d.genus() == 1 ? "exact" : "conjectural";

  Report r;
  Json& j = r.json;
  j["diagram"] = to_json(d);
  j["length"] = d.length();
  j["closed"] = d.closed();
  j["twisted"] = d.twisted();
  Json fr = Json::array();
  for (const HClass& x : c.curves()) fr.push_back(to_json(fiber_framing(x)));
  j["framings"] = fr;
  j["linking_matrix"] = to_json(lk.entries);
  j["linking_invariants"] = to_json(lk_inv);
  j["intersection_form"] = to_json(q);
  Json qi = to_json(q_inv);
  qi["signature_status"] = status;
  j["form_invariants"] = qi;
  j["euler"] = {{"total_space_over_disk", chi.total_space_over_disk},
                {"closed_manifold", chi.closed_manifold ? Json(*chi.closed_manifold) : Json(nullptr)}};

  std::ostringstream os;
  os << "diagram: " << diagram_line(d) << '\n';
  os << "exactness: " << to_string(exactness_for(d.genus())) << '\n';
  os << "framings:";
  for (const HClass& x : c.curves()) os << ' ' << fiber_framing(x);
  os << "\nlinking matrix:\n" << matrix_text(lk.entries, "  ");
  os << "linking matrix invariants: rank " << lk_inv.rank << ", signature " << lk_inv.signature << ", "
     << to_string(lk_inv.parity) << '\n';
  os << "intersection form:\n" << matrix_text(q, "  ");
  os << "form invariants: rank " << q_inv.rank << ", signature " << q_inv.signature << " (" << status << "), "
     << to_string(q_inv.parity) << '\n';
  os << "chi(Z) = " << chi.total_space_over_disk << '\n';
  if (chi.closed_manifold) os << "chi(X) = " << *chi.closed_manifold << '\n';
  r.text = os.str();
  finish(r, "info", d.genus());
  return r;
}

Report classify_report(const Diagram& d) {
  const Classification cl = classify(d);
  Report r;
  Json forms = Json::array();
  for (const CanonicalForm& f : cl.canonical_forms) forms.push_back(to_json(f));
  r.json["canonical_forms"] = forms;
  r.json["reduced"] = to_json(cl.reduced);
  Json trace = Json::array();
  for (const ReductionStep& s : cl.trace)
    trace.push_back({{"step", s.step},
                     {"detection", to_json(s.detection)},
                     {"delta", to_json(s.delta)},
                     {"length_after", s.length_after}});
  r.json["trace"] = trace;
  r.json["diagram"] = to_json(d);

  std::ostringstream os;
  os << "diagram: " << diagram_line(d) << '\n';
  for (const ReductionStep& s : cl.trace)
    os << "step " << s.step << ": " << s.detection.describe() << "; length " << s.length_after << '\n';
  os << "split off: " << sum_text(cl.reduced) << '\n';
  if (cl.canonical_forms.size() == 1) {
    os << "result: " << cl.canonical_forms.front().str() << '\n';
  } else {
    os << "result: one of (the two closures differ)\n";
    for (const CanonicalForm& f : cl.canonical_forms) os << "  " << f.str() << '\n';
  }
  r.text = os.str();
  finish(r, "classify", d.genus());
  return r;
}

Report detect_report(const Diagram& d) {
  const std::vector<Detection> ds = detect(d);
  Report r;
  Json arr = Json::array();
  std::ostringstream os;
  for (const Detection& x : ds) {
    arr.push_back(to_json(x));
    os << x.describe() << '\n';
  }
  if (ds.empty()) os << "no patterns\n";
  r.json["detections"] = arr;
  r.json["diagram"] = to_json(d);
  r.text = os.str();
  finish(r, "detect", d.genus());
  return r;
}

Report substitute_report(const Diagram& d, const SubstituteArgs& a) {
  Report r;
  std::ostringstream head;
  Json op;
  op["op"] = a.op;
  op["position"] = a.pos;
  std::optional<Diagram> out;
  if (a.op == "blowup") {
    if (!a.exponent) throw PreconditionError("--op blowup needs --exp");
    out = apply_blowup(d, a.pos, *a.exponent);
    const Summand s = *a.exponent > 0 ? Summand::CP2Bar : Summand::CP2;
    op["exponent"] = *a.exponent;
    r.json["summand"] = to_string(s);
    head << "# blow-up at " << a.pos << " with exponent " << (*a.exponent > 0 ? "+1" : "-1") << ": summand "
         << to_string(s) << '\n';
  } else if (a.op == "stab") {
    if (!a.k) throw PreconditionError("--op stab needs --k");
    out = apply_stabilization(d, a.pos, *a.k);
    const Summand s = boost::multiprecision::bit_test(*a.k, 0) ? Summand::CP2SumCP2Bar : Summand::S2xS2;
    op["k"] = to_json(*a.k);
    r.json["summand"] = to_string(s);
    head << "# stabilization at " << a.pos << " with k = " << *a.k << ": summand " << to_string(s) << '\n';
  } else if (a.op == "hayano") {
    if (!a.dual) throw PreconditionError("--op hayano needs --dual");
    const Int k = a.k.value_or(0);
    SurgeryResult s = hayano_surgery(d, a.pos, *a.dual, k);
    out = std::move(s.diagram);
    op["dual"] = to_json(*a.dual);
    op["k"] = to_json(k);
    r.json["framing"] = to_string(s.framing);
    head << "# surgery pattern at " << a.pos << " with dual " << *a.dual << ", k = " << k << ": "
         << to_string(s.framing) << '\n';
  } else {
    throw PreconditionError("unknown substitution '" + a.op + "'");
  }
  r.json["operation"] = op;
  r.json["diagram"] = to_json(*out);
  r.text = head.str() + emit_sd(*out);
  finish(r, "substitute", d.genus());
  return r;
}

Report switch_report(const Diagram& d, long long k) {
  const Diagram out = switch_diagram(d, k);
  Report r;
  r.json["k"] = k;
  r.json["diagram"] = to_json(out);
  r.text = "# switched " + std::to_string(k) + " time(s)\n" + emit_sd(out);
  finish(r, "switch", d.genus());
  return r;
}

Report double_report(const Diagram& d) {
  const Diagram out(double_circuit(d.circuit()));
  Report r;
  r.json["diagram"] = to_json(out);
  r.text = "# double of a length " + std::to_string(d.length()) + " circuit\n" + emit_sd(out);
  finish(r, "double", d.genus());
  return r;
}

Report monodromy_report(const Diagram& d) {
  const Circuit& c = d.circuit();
  const TwistWord w = mu_tilde_word(d);
  const SpMatrix m = w.matrix();
  const SurgeredAction a = surgered_action_of(m, c[0]);
  const Verdict v = verdict(a);
  const HClass image = m * c[0];
  const Int sign = Int(c.length() % 2 == 0 ? 1 : -1) * c.closing_pairing();

  Report r;
  r.json["word"] = to_json(w);
  r.json["matrix"] = to_json(m.matrix());
  r.json["gamma1_image"] = to_json(image);
  r.json["gamma1_sign"] = to_json(sign);
  r.json["surgered_action"] = to_json(a);
  r.json["quotient_pairing"] = to_json(quotient_pairing(a));
  r.json["verdict"] = to_json(v);
  r.json["diagram"] = to_json(d);

  std::ostringstream os;
  os << "lift (rightmost factor applied first):";
  for (const Twist& t : w.factors()) os << " T" << t.axis;
  os << "\nmatrix:\n" << matrix_text(m.matrix(), "  ");
  os << "image of gamma_1: " << image << " = " << sign << " * gamma_1\n";
  os << "action on the surgered homology (rank " << a.quotient_rank << "):\n" << matrix_text(a.matrix, "  ");
  os << "verdict: " << v.text() << '\n';
  r.text = os.str();
  finish(r, "monodromy", d.genus());
  return r;
}

Report blf_report(const Diagram& d) {
  const BlfData b = to_blf(d.circuit());
  Report r;
  r.json["blf"] = to_json(b);
  r.json["diagram"] = to_json(d);
  std::ostringstream os;
  for (std::size_t i = 0; i < b.lefschetz_cycles.size(); ++i)
    os << "lefschetz " << i + 1 << ": " << b.lefschetz_cycles[i] << ", framing " << BlfData::lefschetz_framing
       << '\n';
  os << "round: " << b.round_cycle << ", framing " << BlfData::round_framing << '\n';
  r.text = os.str();
  finish(r, "blf", d.genus());
  return r;
}

Report kirby_report(const Diagram& d, std::optional<Int> section) {
  const KirbyData k = emit_kirby(d.circuit(), std::move(section));
  Report r;
  r.json["kirby"] = to_json(k);
  r.json["diagram"] = to_json(d);
  r.text = to_text(k);
  finish(r, "kirby", d.genus());
  return r;
}

Report generate_report(std::uint64_t seed, std::size_t steps) {
  const GeneratedDiagram g = generate(seed, steps);
  const std::vector<CanonicalForm> forms = closures_of(g.expected);
  Report r;
  r.json["seed"] = seed;
  r.json["steps"] = steps;
  r.json["diagram"] = to_json(g.diagram);
  Json moves = Json::array();
  for (const GeneratorMove& m : g.moves) moves.push_back(to_json(m));
  r.json["moves"] = moves;
  r.json["expected"] = to_json(g.expected);
  Json fs = Json::array();
  for (const CanonicalForm& f : forms) fs.push_back(to_json(f));
  r.json["expected_classification"] = fs;

  std::ostringstream os;
  os << "# seed " << seed << ", " << steps << " step(s)\n";
  for (const GeneratorMove& m : g.moves)
    os << "# " << (m.kind == GeneratorMove::Kind::BlowUp ? "blow-up" : "stabilization") << " at " << m.position
       << (m.kind == GeneratorMove::Kind::BlowUp ? (m.parameter > 0 ? ", exponent +" : ", exponent ") : ", k = ")
       << m.parameter << '\n';
  os << "# split off: " << sum_text(g.expected) << '\n';
  for (const CanonicalForm& f : forms) os << "# expected: " << f.str() << '\n';
  r.text = os.str() + emit_sd(g.diagram);
  finish(r, "generate", g.diagram.genus());
  return r;
}

}  // namespace sdcalc::cli
