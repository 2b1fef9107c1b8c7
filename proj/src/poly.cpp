#include "swapalg/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace swapalg {

int pp_degree(const PowerProduct& p) {
  int d = 0;
  for (const auto& [v, e] : p) d += e;
  return d;
}

PowerProduct pp_mul(const PowerProduct& a, const PowerProduct& b) {
  PowerProduct out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first)
      out.push_back(a[i++]);
    else if (b[j].first < a[i].first)
      out.push_back(b[j++]);
    else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return out;
}

Poly Poly::constant(const Rat& c) {
  Poly f;
  if (c != 0) f.terms_.emplace(PowerProduct{}, c);
  return f;
}

Poly Poly::var(int v, int exp) {
  if (exp < 0) throw std::invalid_argument("Poly::var: negative exponent");
  if (exp == 0) return constant(Rat(1));
  Poly f;
  f.terms_.emplace(PowerProduct{{v, exp}}, Rat(1));
  return f;
}

Poly Poly::from_terms(TermMap terms) {
  Poly f;
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  f.terms_ = std::move(terms);
  return f;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

void Poly::add_term(const PowerProduct& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly Poly::operator+(const Poly& rhs) const {
  Poly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& rhs) const {
  Poly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
  return out;
}

Poly Poly::operator*(const Poly& rhs) const {
  Poly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(pp_mul(ma, mb), ca * cb);
  return out;
}

Poly Poly::operator*(const Rat& c) const {
  Poly out;
  if (c == 0) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly out = constant(Rat(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

Poly Poly::derivative(int v) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i].first != v) continue;
      PowerProduct d = m;
      const int e = d[i].second;
      if (e == 1)
        d.erase(d.begin() + static_cast<std::ptrdiff_t>(i));
      else
        d[i].second = e - 1;
      out.add_term(d, c * e);
      break;
    }
  }
  return out;
}

Rat Poly::eval(const std::vector<Rat>& values) const {
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (const auto& [v, e] : m) {
      const Rat& x = values.at(static_cast<size_t>(v));
      for (int i = 0; i < e; ++i) t *= x;
    }
    acc += t;
  }
  return acc;
}

std::string Poly::str(const std::function<std::string(int)>& var_name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    const bool unit = (a == 1);
    if (!unit || m.empty()) os << rat_str(a);
    bool need_star = !unit || m.empty();
    for (const auto& [v, e] : m) {
      for (int i = 0; i < e; ++i) {
        if (need_star) os << "*";
        os << var_name(v);
        need_star = true;
      }
    }
  }
  return os.str();
}

}  // namespace swapalg
