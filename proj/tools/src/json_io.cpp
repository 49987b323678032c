#include "sdcalc_cli/json_io.hpp"

#include <cctype>

#include "sdcalc_cli/diagram_io.hpp"

namespace sdcalc::cli {

Json to_json(const Int& x) {
  if (const auto v = to_int64(x)) return *v;
  return x.str();
}

Json to_json(const std::vector<Int>& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const HClass& x) { return to_json(x.coeffs()); }

Json to_json(const std::vector<HClass>& xs) {
  Json out = Json::array();
  for (const HClass& x : xs) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const Diagram& d) {
  Json out;
  out["genus"] = d.genus();
  out["curves"] = to_json(d.circuit().curves());
  out["closed"] = d.closed();
  if (d.switch_matrix()) out["switch"] = to_json(d.switch_matrix()->matrix());
  return out;
}

Json to_json(const SumForm& f) {
  Json out;
  out["s2xs2"] = f.l;
  out["cp2"] = f.m;
  out["cp2bar"] = f.n;
  out["closure"] = to_string(f.closure);
  return out;
}

Json to_json(const CanonicalForm& f) {
  Json out;
  out["spin"] = f.spin;
  out["s2xs2"] = f.s2xs2;
  out["cp2"] = f.cp2;
  out["cp2bar"] = f.cp2bar;
  out["signature"] = f.signature();
  out["b2"] = f.b2();
  out["text"] = f.str();
  return out;
}

Json to_json(const FormInvariants& f) {
  Json out;
  out["rank"] = f.rank;
  out["signature"] = f.signature;
  out["parity"] = to_string(f.parity);
  return out;
}

Json to_json(const Detection& d) {
  Json out;
  out["position"] = d.position;
  out["exactness"] = to_string(d.exactness);
  out["window"] = to_json(d.window);
  out["description"] = d.describe();
  if (const auto* b = std::get_if<BlowUpPattern>(&d.kind)) {
    out["kind"] = "blowup";
    out["exponent"] = b->exponent;
    out["summand"] = to_string(b->summand);
    out["middle_framing"] = to_json(b->middle_framing);
  } else if (const auto* s = std::get_if<StabilizationPattern>(&d.kind)) {
    out["kind"] = "stabilization";
    out["k"] = to_json(s->k);
    out["summand"] = to_string(s->summand);
  } else {
    const auto& h = std::get<HayanoPattern>(d.kind);
    out["kind"] = "hayano";
    out["dual"] = to_json(h.dual);
    out["k"] = to_json(h.k);
  }
  return out;
}

Json to_json(const KirbyData& k) {
  Json out;
  out["genus"] = k.genus;
  out["one_handles"] = k.one_handles;
  out["fiber_handle"] = Json{{"framing", to_json(k.fiber_handle_framing)}};
  Json folds = Json::array();
  for (const FoldHandle& f : k.fold_handles)
    folds.push_back({{"curve", to_json(f.curve)}, {"framing", to_json(f.framing)}, {"position", f.position}});
  out["fold_handles"] = folds;
  if (k.last_handle)
    out["last_handle"] = Json{{"framing", to_json(*k.last_handle)}, {"attached_to", "meridian of the fiber handle"}};
  else
    out["last_handle"] = nullptr;
  out["linking_matrix"] = to_json(k.linking.entries);
  out["handle_count"] = k.handle_count();
  return out;
}

Json to_json(const BlfData& b) {
  Json out;
  out["lefschetz_cycles"] = to_json(b.lefschetz_cycles);
  out["lefschetz_framing"] = BlfData::lefschetz_framing;
  out["round_cycle"] = to_json(b.round_cycle);
  out["round_framing"] = BlfData::round_framing;
  return out;
}

Json to_json(const TwistWord& w) {
  Json out = Json::array();
  for (const Twist& t : w.factors()) out.push_back({{"axis", to_json(t.axis)}, {"exponent", to_json(t.exponent)}});
  return out;
}

Json to_json(const SurgeredAction& a) {
  Json out;
  out["base"] = to_json(a.base);
  out["quotient_rank"] = a.quotient_rank;
  out["matrix"] = to_json(a.matrix);
  out["basis"] = to_json(a.basis);
  return out;
}

Json to_json(const Verdict& v) {
  Json out;
  out["not_obstructed"] = v.not_obstructed;
  out["text"] = v.text();
  out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return out;
}

Json to_json(const GeneratorMove& m) {
  Json out;
  out["kind"] = m.kind == GeneratorMove::Kind::BlowUp ? "blowup" : "stabilization";
  out["position"] = m.position;
  out[m.kind == GeneratorMove::Kind::BlowUp ? "exponent" : "k"] = m.parameter;
  return out;
}

Int int_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    return Int(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    bool ok = i < s.size();
    for (; i < s.size(); ++i) ok = ok && std::isdigit(static_cast<unsigned char>(s[i]));
    if (ok) return Int(s);
  }
  throw ParseError(path + ": expected an integer");
}

}  // namespace sdcalc::cli
