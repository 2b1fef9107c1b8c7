#include "swapalg/swap_poly.hpp"

#include <algorithm>
#include <sstream>

namespace swapalg {

SwapPoly SwapPoly::zero(PointSetPtr ps) { return SwapPoly(std::move(ps)); }

SwapPoly SwapPoly::constant(PointSetPtr ps, const Rat& c) {
  SwapPoly f(std::move(ps));
  if (c != 0) f.terms_.emplace(Monomial{}, c);
  return f;
}

SwapPoly SwapPoly::pair(PointSetPtr ps, const std::string& x, const std::string& y) {
  const int xi = ps->index_of(x);
  const int yi = ps->index_of(y);
  return pair_at(std::move(ps), xi, yi);
}

SwapPoly SwapPoly::pair_at(PointSetPtr ps, int x, int y) {
  if (x < 0 || x >= ps->size() || y < 0 || y >= ps->size())
    throw UnknownPoint("pair position out of range");
  SwapPoly f(std::move(ps));
  if (x != y) f.terms_.emplace(Monomial{PairVar{x, y}}, Rat(1));
  return f;
}

SwapPoly SwapPoly::monomial(PointSetPtr ps, const Rat& c, Monomial m) {
  SwapPoly f(std::move(ps));
  if (c == 0) return f;
  for (const PairVar& v : m) {
    if (v.l == v.r) return f;  // contains xx = 0
    if (v.l < 0 || v.l >= f.ps_->size() || v.r < 0 || v.r >= f.ps_->size())
      throw UnknownPoint("pair position out of range");
  }
  std::sort(m.begin(), m.end());
  f.terms_.emplace(std::move(m), c);
  return f;
}

SwapPoly SwapPoly::from_terms(PointSetPtr ps, TermMap terms) {
  SwapPoly f(std::move(ps));
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  f.terms_ = std::move(terms);
  return f;
}

int SwapPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.size());
}

void SwapPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SwapPoly::require_same_set(const SwapPoly& rhs) const {
  if (!(*ps_ == *rhs.ps_)) throw PointSetMismatch("operands built over different point sets");
}

SwapPoly SwapPoly::operator-() const {
  SwapPoly out(ps_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

SwapPoly SwapPoly::operator+(const SwapPoly& rhs) const {
  require_same_set(rhs);
  SwapPoly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

SwapPoly SwapPoly::operator-(const SwapPoly& rhs) const {
  require_same_set(rhs);
  SwapPoly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
  return out;
}

SwapPoly SwapPoly::operator*(const SwapPoly& rhs) const {
  require_same_set(rhs);
  SwapPoly out(ps_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(monomial_mul(ma, mb), ca * cb);
  return out;
}

SwapPoly SwapPoly::operator*(const Rat& c) const {
  SwapPoly out(ps_);
  if (c == 0) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

bool SwapPoly::operator==(const SwapPoly& rhs) const {
  return *ps_ == *rhs.ps_ && terms_ == rhs.terms_;
}

Monomial SwapPoly::content_monomial() const {
  if (terms_.empty()) return {};
  auto it = terms_.begin();
  Monomial gcd = it->first;
  for (++it; it != terms_.end() && !gcd.empty(); ++it) {
    const Monomial& m = it->first;
    Monomial keep;
    size_t j = 0;
    for (const PairVar& v : gcd) {
      while (j < m.size() && m[j] < v) ++j;
      if (j < m.size() && m[j] == v) {
        keep.push_back(v);
        ++j;
      }
    }
    gcd = std::move(keep);
  }
  return gcd;
}

SwapPoly SwapPoly::divide_by_monomial(const Monomial& m) const {
  if (m.empty()) return *this;
  SwapPoly out(ps_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace(monomial_div(mono, m), c);
  return out;
}

std::string SwapPoly::str() const {
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
    for (const PairVar& v : m) {
      if (need_star) os << "*";
      os << "p(" << ps_->name(v.l) << "," << ps_->name(v.r) << ")";
      need_star = true;
    }
  }
  return os.str();
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Monomial monomial_div(const Monomial& n, const Monomial& d) {
  Monomial out;
  out.reserve(n.size() - d.size());
  size_t j = 0;
  for (const PairVar& v : n) {
    if (j < d.size() && d[j] == v)
      ++j;
    else
      out.push_back(v);
  }
  if (j != d.size()) throw std::logic_error("monomial_div: divisor does not divide");
  return out;
}

int monomial_degree_of(const Monomial& m) { return static_cast<int>(m.size()); }

}  // namespace swapalg
