#include "sdcalc/subst.hpp"

#include <optional>
#include <sstream>

#include "sdcalc/error.hpp"
#include "sdcalc/handles.hpp"

namespace sdcalc {

namespace {

void require_closed_valid(const Diagram& d) {
  if (!d.closed()) throw PreconditionError("substitutions need a closed diagram");
  require_valid(d);
}

void require_position(const Diagram& d, std::size_t pos) {
  if (pos < 1 || pos > d.length())
    throw PreconditionError("position " + std::to_string(pos) + " out of range 1.." + std::to_string(d.length()));
}

// Keeps gamma_1's orientation when the first curve is unchanged.
Diagram align_first(Diagram r, const Diagram& reference) {
  if (r.circuit()[0] == -reference.circuit()[0])
    return {r.circuit().negated(), r.switch_matrix()};
  return r;
}

// Inserts `extra` right after gamma_pos (pos < c).
Diagram insert_after(const Diagram& d, std::size_t pos, std::vector<HClass> extra) {
  std::vector<HClass> curves = d.circuit().curves();
  curves.insert(curves.begin() + static_cast<std::ptrdiff_t>(pos), extra.begin(), extra.end());
  return {normalize(std::move(curves), d.closed(), d.switch_matrix()), d.switch_matrix()};
}

// `make(a, b)` builds the curves that go right after a (after_second false)
// or right after b (after_second true), where (a, b) is the pair at pos.
template <class Insert>
Diagram substitute_at(const Diagram& d, std::size_t pos, bool after_second, Insert make) {
  require_closed_valid(d);
  require_position(d, pos);
  if (pos < d.length()) {
    const HClass& a = d.circuit()[pos - 1];
    const HClass& b = d.circuit()[pos];
    std::vector<HClass> extra = make(a, b);
    return align_first(insert_after(d, pos + (after_second ? 1 : 0), extra), d);
  }
  // Closing pair: switch it to the front, substitute, then switch the
  // pattern's leading curves back to the end so the pattern starts at pos.
  const Diagram front = switch_diagram(d, 1);
  std::vector<HClass> extra = make(front.circuit()[0], front.circuit()[1]);
  const std::size_t lead = 1 + extra.size();
  const Diagram done = insert_after(front, after_second ? 2 : 1, std::move(extra));
  return align_first(switch_diagram(done, -static_cast<long long>(lead)), d);
}

std::optional<Int> stabilization_exponent(const HClass& w, const HClass& x, const HClass& xi) {
  // xi = +-(w + k <x,w> x)
  const Int pxw = pairing(x, w);
  if (abs(pxw) != 1) return std::nullopt;
  std::size_t lead = 0;
  while (lead < x.dimension() && x[lead].is_zero()) ++lead;
  if (lead == x.dimension()) return std::nullopt;
  for (int s : {1, -1}) {
    const HClass r = Int(s) * xi - w;
    if (r[lead] % x[lead] != 0) continue;
    const Int t = r[lead] / x[lead];
    if (r != t * x) continue;
    return t * pxw;  // t = k <x,w>, <x,w> = +-1
  }
  return std::nullopt;
}

Summand stabilization_summand(const Int& k) {
  return boost::multiprecision::bit_test(k, 0) ? Summand::CP2SumCP2Bar : Summand::S2xS2;
}

}  // namespace

std::string Detection::describe() const {
  std::ostringstream os;
  if (const auto* b = std::get_if<BlowUpPattern>(&kind)) {
    os << "blow-up at " << position << " (exponent " << (b->exponent > 0 ? "+1" : "-1") << ", summand "
       << to_string(b->summand) << ", middle framing " << b->middle_framing << ")";
  } else if (const auto* s = std::get_if<StabilizationPattern>(&kind)) {
    os << "stabilization at " << position << " (k = " << s->k << ", summand " << to_string(s->summand) << ")";
  } else {
    const auto& h = std::get<HayanoPattern>(kind);
    os << "Hayano pattern at " << position << " (dual " << h.dual << ", k = " << h.k << ")";
  }
  if (exactness == Exactness::HomologicalOnly) os << " [homological-only]";
  return os.str();
}

Diagram apply_blowup(const Diagram& d, std::size_t pos, int e) {
  if (e != 1 && e != -1) throw PreconditionError("blow-up exponent must be +1 or -1");
  return substitute_at(d, pos, false, [e](const HClass& a, const HClass& b) {
    return std::vector<HClass>{twist(b, e, a)};
  });
}

Diagram apply_stabilization(const Diagram& d, std::size_t pos, const Int& k) {
  return substitute_at(d, pos, true, [&k](const HClass& a, const HClass& b) {
    return std::vector<HClass>{twist(b, k, a), b};
  });
}

const char* to_string(SurgeryFraming f) {
  return f == SurgeryFraming::Fiber ? "fiber-framed surgery on dual" : "opposite framing";
}

SurgeryResult hayano_surgery(const Diagram& d, std::size_t pos, const HClass& dual, const Int& k) {
  require_closed_valid(d);
  require_position(d, pos);
  const HClass& c = d.circuit()[pos - 1];
  if (abs(pairing(c, dual)) != 1)
    throw PreconditionError("dual " + dual.str() + " is not dual to curve " + std::to_string(pos));
  std::vector<HClass> curves = d.circuit().curves();
  const std::vector<HClass> extra{twist(c, k, dual), c};
  curves.insert(curves.begin() + static_cast<std::ptrdiff_t>(pos), extra.begin(), extra.end());
  Diagram out(normalize(std::move(curves), true, d.switch_matrix()), d.switch_matrix());
  const SurgeryFraming f = boost::multiprecision::bit_test(k, 0) ? SurgeryFraming::Opposite : SurgeryFraming::Fiber;
  return {align_first(std::move(out), d), f};
}

std::vector<Detection> detect(const Diagram& d) {
  require_valid(d);
  std::vector<Detection> out;
  const std::size_t c = d.length();
  const Exactness ex = exactness_for(d.genus());
  auto fits = [&](std::size_t pos, std::size_t len) { return len <= c && (d.closed() || pos - 1 + len <= c); };

  for (std::size_t pos = 1; pos <= c; ++pos) {
    if (fits(pos, 3)) {
      std::vector<HClass> w = cyclic_window(d, pos, 3);
      for (int e : {1, -1}) {
        if (same_curve(w[1], twist(w[2], e, w[0]))) {
          BlowUpPattern b{e, e == 1 ? Summand::CP2Bar : Summand::CP2, fiber_framing(w[1])};
          out.push_back({b, pos, ex, w});
          break;
        }
      }
    }
    if (c >= 4 && fits(pos, 4)) {
      std::vector<HClass> w = cyclic_window(d, pos, 4);
      if (same_curve(w[3], w[1])) {
        if (auto k = stabilization_exponent(w[0], w[1], w[2])) {
          StabilizationPattern s{*k, stabilization_summand(*k)};
          out.push_back({s, pos, ex, w});
        }
      }
    }
    if (fits(pos, 3)) {
      std::vector<HClass> w = cyclic_window(d, pos, 3);
      if (same_curve(w[0], w[2])) out.push_back({HayanoPattern{w[1], 0}, pos, ex, w});
    }
  }
  return out;
}

Contraction contract(const Diagram& d, const Detection& det) {
  if (det.is_hayano()) throw PreconditionError("Hayano patterns are reported, not contracted");
  require_valid(d);
  const std::size_t c = d.length();
  const std::size_t len = det.window.size();
  require_position(d, det.position);
  if (len > c || (!d.closed() && det.position - 1 + len > c))
    throw PreconditionError("stale detection: pattern does not fit the diagram");
  std::vector<HClass> now = cyclic_window(d, det.position, len);
  std::vector<HClass> flipped;
  for (const HClass& h : now) flipped.push_back(-h);
  if (now != det.window && flipped != det.window)
    throw PreconditionError("stale detection: pattern no longer matches at position " + std::to_string(det.position));

  SumForm delta;
  std::size_t first_removed = 0;  // offset inside the pattern
  std::size_t removed = 0;
  if (const auto* b = std::get_if<BlowUpPattern>(&det.kind)) {
    delta = delta_of(b->summand);
    first_removed = 1;
    removed = 1;
  } else {
    delta = delta_of(std::get<StabilizationPattern>(det.kind).summand);
    first_removed = 2;
    removed = 2;
  }

  if (!d.closed()) {
    std::vector<HClass> curves = d.circuit().curves();
    auto at = curves.begin() + static_cast<std::ptrdiff_t>(det.position - 1 + first_removed);
    curves.erase(at, at + static_cast<std::ptrdiff_t>(removed));
    return {align_first(Diagram(normalize(std::move(curves), false), d.switch_matrix()), d), delta};
  }

  // Rotate the pattern to the front, cut, and rotate the surviving curve that
  // started the input (gamma_1, or its successor if gamma_1 was cut) back.
  const Diagram front = switch_diagram(d, -static_cast<long long>(det.position - 1));
  std::vector<HClass> curves = front.circuit().curves();
  std::size_t anchor = (c - (det.position - 1)) % c;  // 0-based index of old gamma_1 in `front`
  // (a, b, xi, b): when gamma_1 is the second b, cut (b, xi) instead
  if (removed == 2 && anchor == 3) first_removed = 1;
  bool anchor_is_first = true;
  if (anchor >= first_removed && anchor < first_removed + removed) {
    anchor = first_removed;  // successor slides into the gap
    anchor_is_first = false;
  } else if (anchor >= first_removed + removed) {
    anchor -= removed;
  }
  auto at = curves.begin() + static_cast<std::ptrdiff_t>(first_removed);
  curves.erase(at, at + static_cast<std::ptrdiff_t>(removed));
  const std::size_t left = curves.size();
  Diagram cut(normalize(std::move(curves), true, d.switch_matrix()), d.switch_matrix());
  Diagram back = switch_diagram(cut, -static_cast<long long>(anchor % left));
  if (anchor_is_first) back = align_first(std::move(back), d);
  return {std::move(back), delta};
}

}  // namespace sdcalc
