#include "sdcalc/sum_form.hpp"

#include <sstream>

#include "sdcalc/error.hpp"

namespace sdcalc {

const char* to_string(Summand s) {
  switch (s) {
    case Summand::CP2: return "CP2";
    case Summand::CP2Bar: return "CP2bar";
    case Summand::S2xS2: return "S2xS2";
    case Summand::CP2SumCP2Bar: return "CP2#CP2bar";
  }
  return "?";
}

const char* to_string(Closure c) {
  switch (c) {
    case Closure::Spin0: return "S0";
    case Closure::NonSpin1: return "S1";
    case Closure::Unclosed: return "unclosed";
  }
  return "?";
}

void SumForm::add(Summand s) { *this += delta_of(s); }

SumForm& SumForm::operator+=(const SumForm& other) {
  l += other.l;
  m += other.m;
  n += other.n;
  return *this;
}

SumForm delta_of(Summand s) {
  SumForm f;
  switch (s) {
    case Summand::CP2: f.m = 1; break;
    case Summand::CP2Bar: f.n = 1; break;
    case Summand::S2xS2: f.l = 1; break;
    case Summand::CP2SumCP2Bar: f.m = f.n = 1; break;
  }
  return f;
}

std::string CanonicalForm::str() const {
  auto term = [](std::uint64_t k, const char* name) {
    return k == 1 ? std::string(name) : std::to_string(k) + " " + name;
  };
  if (spin) return term(s2xs2, "S2xS2");
  return term(cp2, "CP2") + " # " + term(cp2bar, "CP2bar");
}

CanonicalForm normalize_sum(const SumForm& f) {
  if (f.closure == Closure::Unclosed) throw PreconditionError("normalize_sum needs a closed form");
  CanonicalForm c;
  if (f.m == 0 && f.n == 0 && f.closure == Closure::Spin0) {
    c.spin = true;
    c.s2xs2 = f.l + 1;
    return c;
  }
  c.cp2 = f.m + f.l + 1;
  c.cp2bar = f.n + f.l + 1;
  return c;
}

}  // namespace sdcalc
