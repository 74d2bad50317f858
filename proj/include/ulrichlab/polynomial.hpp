#pragma once

#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"
#include "monomial.hpp"
#include "prime_field.hpp"

namespace ulrichlab {

/// Sparse polynomial over F_p in a fixed number of variables x_0 .. x_{n_vars-1}.
/// Terms are kept largest-first under the graded lexicographic order and never
/// store a zero coefficient.
class Polynomial {
 public:
  using Coefficient = PrimeField::Element;
  using TermMap = std::map<Monomial, Coefficient, std::greater<>>;

  Polynomial(PrimeField field, std::size_t n_vars) : field_(field), n_vars_(n_vars) {}

  static Polynomial constant(PrimeField field, std::size_t n_vars, std::int64_t c) {
    Polynomial f(field, n_vars);
    f.add_term(Monomial::one(n_vars), c);
    return f;
  }

  static Polynomial monomial(PrimeField field, const Monomial& m, std::int64_t c = 1) {
    Polynomial f(field, m.n_vars());
    f.add_term(m, c);
    return f;
  }

  const PrimeField& field() const { return field_; }
  std::size_t n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Coefficient coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const Monomial& m, std::int64_t c) { add_reduced(m, field_.reduce(c)); }

  /// Largest total degree of a term; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  Polynomial scaled(std::int64_t c) const {
    Polynomial out(field_, n_vars_);
    const Coefficient s = field_.reduce(c);
    if (s == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, field_.mul(v, s));
    return out;
  }

  Polynomial operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial out(*this);
    for (const auto& [m, c] : o.terms_) out.add_reduced(m, c);
    return out;
  }

  Polynomial operator-(const Polynomial& o) const { return *this + o.scaled(-1); }

  Polynomial operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial out(field_, n_vars_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) out.add_reduced(ma * mb, field_.mul(ca, cb));
    return out;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(field_, n_vars_, 1);
    Polynomial base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += '+';
      const bool unit_monomial = m.degree() == 0;
      if (c != 1 || unit_monomial) {
        out += std::to_string(c);
        if (!unit_monomial) out += '*';
      }
      if (!unit_monomial) out += m.to_string();
    }
    return out;
  }

 private:
  void add_reduced(const Monomial& m, Coefficient c) {
    if (m.n_vars() != n_vars_) throw std::invalid_argument("Polynomial: monomial has wrong variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  void check_compatible(const Polynomial& o) const {
    if (!(field_ == o.field_) || n_vars_ != o.n_vars_)
      throw std::invalid_argument("Polynomial: operands live in different rings");
  }

  PrimeField field_;
  std::size_t n_vars_;
  TermMap terms_;
};

/// Parses text such as `x0^4+x1^4+x2^4+x3^4+x0*x1*x2*x3` or `3*x0^2 - x1*x2`.
/// Integer coefficients are reduced mod p and whitespace is ignored.
inline Polynomial parse_polynomial(std::string_view text, PrimeField field, std::size_t n_vars) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty polynomial");

  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("polynomial '" + std::string(text) + "': " + what + " at offset " + std::to_string(pos));
  };
  auto read_int = [&]() -> std::int64_t {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    if (pos - start > 18) fail("integer too long");
    return std::stoll(s.substr(start, pos - start));
  };

  Polynomial f(field, n_vars);
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;

    std::int64_t coeff = 1;
    std::vector<int> exps(n_vars, 0);
    for (;;) {
      if (pos >= s.size()) fail("unexpected end of term");
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff = static_cast<std::int64_t>(field.mul(field.reduce(coeff), field.reduce(read_int())));
      } else if (s[pos] == 'x') {
        ++pos;
        const std::int64_t var = read_int();
        if (var < 0 || static_cast<std::size_t>(var) >= n_vars)
          fail("variable x" + std::to_string(var) + " out of range");
        std::int64_t e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          e = read_int();
        }
        exps[static_cast<std::size_t>(var)] += static_cast<int>(e);
      } else {
        fail(std::string("unexpected character '") + s[pos] + "'");
      }
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    f.add_term(Monomial(std::move(exps)), sign * coeff);
  }
  return f;
}

}  // namespace ulrichlab
