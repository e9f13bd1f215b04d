#include "sl3web/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace sl3web {

LaurentPoly::LaurentPoly(Int constant) {
  if (constant != 0) terms_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::s(int exponent) {
  LaurentPoly p;
  p.terms_[exponent] = 1;
  return p;
}

LaurentPoly LaurentPoly::q(int exponent) { return s(2 * exponent); }

Int LaurentPoly::coefficient_s(int s_exponent) const {
  auto it = terms_.find(s_exponent);
  return it == terms_.end() ? Int(0) : it->second;
}

bool LaurentPoly::even_q_powers() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

bool LaurentPoly::nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

void LaurentPoly::add_term(int s_exponent, const Int& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(s_exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  terms_ = std::move(out.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly out = one();
  for (unsigned i = 0; i < exponent; ++i) out *= *this;
  return out;
}

LaurentPoly LaurentPoly::shifted_q(int q_exponent) const {
  return shifted_s(2 * q_exponent);
}

LaurentPoly LaurentPoly::shifted_s(int s_exponent) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e + s_exponent] = c;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // std::map iterates ascending; render in decreasing degree.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    Int c = it->second;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    const bool unit = (c == 1) && e != 0;
    if (!unit) os << c;
    if (e != 0) {
      os << 'q';
      if (e == 2) {
        // plain "q"
      } else if (e % 2 == 0) {
        os << '^' << e / 2;
      } else {
        os << "^(" << e << "/2)";
      }
    }
  }
  return os.str();
}

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
  lhs += rhs;
  return lhs;
}

LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
  lhs -= rhs;
  return lhs;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out = lhs;
  out *= rhs;
  return out;
}

LaurentPoly operator*(const Int& scalar, LaurentPoly p) {
  p *= scalar;
  return p;
}

LaurentPoly quantum_integer(int n) {
  if (n < 1) throw std::invalid_argument("quantum_integer: n must be positive");
  LaurentPoly out;
  for (int i = 0; i < n; ++i) out += LaurentPoly::q(n - 1 - 2 * i);
  return out;
}

Int eval_at_one(const LaurentPoly& p) {
  Int sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c;
  return sum;
}

LaurentPoly bar_involution(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) out.terms_[-e] = c;
  return out;
}

}  // namespace sl3web
