#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "planemap/errors.hpp"
#include "planemap/polynomial.hpp"

namespace planemap {

namespace detail {

template <class K>
struct CoeffPrint;

template <>
struct CoeffPrint<Rational> {
  static bool negative(const Rational& c) { return c.sign() < 0; }
  static std::string magnitude(const Rational& c) { return c.abs().str(); }
  static bool is_unit_magnitude(const Rational& c) { return c.abs().is_one(); }
};

template <>
struct CoeffPrint<Fp> {
  // Residues print as-is; there is no canonical sign in F_p.
  static bool negative(const Fp&) { return false; }
  static std::string magnitude(const Fp& c) { return c.str(); }
  static bool is_unit_magnitude(const Fp& c) { return c.is_one(); }
};

template <class K>
K coeff_from_decimal(const std::string& num, const std::string& den,
                     const FieldSpec& spec, std::size_t offset);

template <>
inline Rational coeff_from_decimal<Rational>(const std::string& num,
                                             const std::string& den,
                                             const FieldSpec&,
                                             std::size_t offset) {
  if (den.empty()) return Rational::from_string(num);
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator", offset);
  return Rational(mpz_class(num), d);
}

template <>
inline Fp coeff_from_decimal<Fp>(const std::string& num,
                                 const std::string& den,
                                 const FieldSpec& spec, std::size_t offset) {
  const unsigned long p = static_cast<unsigned long>(spec.prime());
  mpz_class n(num);
  Fp value(mpz_fdiv_ui(n.get_mpz_t(), p), spec.prime());
  if (!den.empty()) {
    mpz_class d(den);
    Fp dv(mpz_fdiv_ui(d.get_mpz_t(), p), spec.prime());
    if (dv.is_zero()) {
      throw ParseError("denominator divisible by field characteristic",
                       offset);
    }
    value = value / dv;
  }
  return value;
}

}  // namespace detail

/// Canonical printing: descending lex in the ring's variable sequence, terms
/// joined with " + " / " - ", explicit '*' between factors, '^' for powers.
template <class K>
std::string to_string(const Polynomial<K>& p) {
  using CP = detail::CoeffPrint<K>;
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string mono;
    for (std::size_t v = 0; v < m.nvars(); ++v) {
      if (m.exp(v) == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += p.ring()->var_name(v);
      if (m.exp(v) > 1) {
        mono += '^';
        mono += std::to_string(m.exp(v));
      }
    }
    bool neg = CP::negative(c);
    std::string mag = CP::magnitude(c);
    std::string body;
    if (mono.empty()) {
      body = mag;
    } else if (CP::is_unit_magnitude(c)) {
      body = mono;
    } else {
      body = mag + "*" + mono;
    }
    if (first) {
      out += neg ? "-" : "";
      out += body;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

/// Recursive-descent parser for the term grammar: terms joined by '+'/'-';
/// a term is '*'-separated parts, each an integer (or a/b rational) literal
/// or var['^'k]; whitespace is insignificant. Throws ParseError with the
/// offending byte offset.
template <class K>
Polynomial<K> parse_polynomial(const RingPtr& ring, std::string_view text) {
  Polynomial<K> result(ring);
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_digits = [&]() -> std::string {
    std::size_t start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError("expected digits", i);
    return std::string(text.substr(start, i - start));
  };

  skip_ws();
  if (i >= n) throw ParseError("empty polynomial", i);

  bool expect_term = true;
  int sign = 1;
  // Leading sign.
  if (text[i] == '+' || text[i] == '-') {
    sign = text[i] == '-' ? -1 : 1;
    ++i;
  }

  while (expect_term) {
    skip_ws();
    if (i >= n) throw ParseError("expected a term", i);

    K coeff = coeff_from_int<K>(sign, ring->field());
    Monomial mono(ring->nvars());
    bool saw_part = false;

    while (true) {
      skip_ws();
      if (i >= n) break;
      char c = text[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t off = i;
        std::string num = parse_digits();
        std::size_t mark = i;
        skip_ws();
        std::string den;
        if (i < n && text[i] == '/') {
          ++i;
          skip_ws();
          if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError("expected denominator digits", i);
          }
          den = parse_digits();
        } else {
          i = mark;
        }
        coeff = coeff *
                detail::coeff_from_decimal<K>(num, den, ring->field(), off);
        saw_part = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t off = i;
        std::size_t start = i;
        while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                         text[i] == '_')) {
          ++i;
        }
        std::string name(text.substr(start, i - start));
        auto var = ring->var_index(name);
        if (!var) throw ParseError("unknown variable '" + name + "'", off);
        std::uint32_t exp = 1;
        std::size_t mark = i;
        skip_ws();
        if (i < n && text[i] == '^') {
          ++i;
          skip_ws();
          if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError("expected exponent", i);
          }
          unsigned long e = std::stoul(parse_digits());
          if (e > 100000) throw ParseError("exponent too large", off);
          exp = static_cast<std::uint32_t>(e);
        } else {
          i = mark;
        }
        mono.set_exp(*var, mono.exp(*var) + exp);
        saw_part = true;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", i);
      }
      skip_ws();
      if (i < n && text[i] == '*') {
        ++i;
        skip_ws();
        if (i >= n) throw ParseError("expected a factor after '*'", i);
        continue;
      }
      break;
    }
    if (!saw_part) throw ParseError("expected a term", i);
    result.add_term(mono, coeff);

    skip_ws();
    if (i >= n) {
      expect_term = false;
    } else if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      expect_term = true;
    } else {
      throw ParseError(std::string("unexpected character '") + text[i] + "'",
                       i);
    }
  }
  return result;
}

}  // namespace planemap
