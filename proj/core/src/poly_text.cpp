#include "berktree/poly_text.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include "berktree/hopf_norms.hpp"

namespace berktree {

namespace {

struct Tokenizer {
  explicit Tokenizer(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eof() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  Integer number() {
    skip_ws();
    size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a number");
    return Integer(s_.substr(start, i_ - start));
  }
  std::string ident() {
    skip_ws();
    size_t start = i_;
    while (i_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
      ++i_;
    if (start == i_) fail("expected an identifier");
    return s_.substr(start, i_ - start);
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at position " + std::to_string(i_) + " in \"" + s_ +
                                "\": " + msg);
  }

  const std::string& s_;
  size_t i_ = 0;
};

struct ParsedTerm {
  Rational coeff{1};
  std::map<std::string, long> vars;  // variable -> exponent (summed)
};

// term := factor ('*' factor)*; factor := number ['/' number] | var ['^' ['-'] number]
ParsedTerm parse_term(Tokenizer& tz, bool allow_negative_exponents) {
  ParsedTerm t;
  while (true) {
    char c = tz.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = tz.number();
      Integer den(1);
      if (tz.accept('/')) {
        den = tz.number();
        if (den == 0) tz.fail("zero denominator");
      }
      t.coeff *= make_rational(num, den);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string v = tz.ident();
      long k = 1;
      if (tz.accept('^')) {
        bool neg = tz.accept('-');
        if (neg && !allow_negative_exponents) tz.fail("negative exponent not allowed here");
        Integer n = tz.number();
        if (!n.fits_slong_p()) tz.fail("exponent out of range");
        k = n.get_si();
        if (neg) k = -k;
      }
      t.vars[v] += k;
    } else {
      tz.fail("expected a coefficient or a variable");
    }
    if (!tz.accept('*')) break;
  }
  return t;
}

std::vector<std::pair<ParsedTerm, int>> parse_sum(Tokenizer& tz, bool allow_negative_exponents) {
  std::vector<std::pair<ParsedTerm, int>> out;
  int sign = 1;
  if (tz.accept('-'))
    sign = -1;
  else
    tz.accept('+');
  while (true) {
    out.emplace_back(parse_term(tz, allow_negative_exponents), sign);
    if (tz.eof()) break;
    if (tz.accept('+'))
      sign = 1;
    else if (tz.accept('-'))
      sign = -1;
    else
      tz.fail("expected '+' or '-'");
  }
  return out;
}

std::string format_rational(const Rational& c) { return c.get_str(); }

}  // namespace

RatPoly parse_poly(const std::string& text, const std::string& var) {
  Tokenizer tz(text);
  auto terms = parse_sum(tz, /*allow_negative_exponents=*/false);
  std::vector<Rational> coeffs;
  for (const auto& [t, sign] : terms) {
    long deg = 0;
    for (const auto& [v, k] : t.vars) {
      if (v != var) tz.fail("unknown variable '" + v + "' (expected '" + var + "')");
      if (k < 0) tz.fail("negative exponent");
      deg += k;
    }
    if (deg > 64) tz.fail("exponent out of range");
    if (static_cast<size_t>(deg) >= coeffs.size()) coeffs.resize(static_cast<size_t>(deg) + 1, Rational(0));
    coeffs[static_cast<size_t>(deg)] += Rational(sign) * t.coeff;
  }
  return RatPoly(std::move(coeffs));
}

std::string format_poly(const RatPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const Rational& c = f.coeff(i);
    if (c == 0) continue;
    Rational a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = (a == 1);
    if (i == 0 || !unit) out += format_rational(a);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

FieldElt parse_element(const std::string& text, const ExtField& K) {
  RatPoly f = parse_poly(text, "alpha");
  return K.element(std::vector<Rational>(f.coeffs()));
}

std::string format_element(const FieldElt& x) {
  return format_poly(x.repr_poly(), "alpha");
}

LaurentPoly parse_laurent(const std::string& text, int rank) {
  Tokenizer tz(text);
  auto terms = parse_sum(tz, /*allow_negative_exponents=*/true);
  std::vector<LaurentTerm> out;
  for (const auto& [t, sign] : terms) {
    std::vector<long> exps(static_cast<size_t>(rank), 0);
    for (const auto& [v, k] : t.vars) {
      if (v.size() < 2 || v[0] != 'x') tz.fail("unknown variable '" + v + "' (expected x1..x" +
                                               std::to_string(rank) + ")");
      long idx = 0;
      try {
        idx = std::stol(v.substr(1));
      } catch (...) {
        tz.fail("unknown variable '" + v + "'");
      }
      if (idx < 1 || idx > rank) tz.fail("variable index out of range in '" + v + "'");
      exps[static_cast<size_t>(idx - 1)] += k;
    }
    out.push_back(LaurentTerm{std::move(exps), Rational(sign) * t.coeff});
  }
  return LaurentPoly(rank, std::move(out));
}

std::string format_laurent(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    Rational a = abs(t.coeff);
    if (out.empty()) {
      if (t.coeff < 0) out += "-";
    } else {
      out += t.coeff < 0 ? " - " : " + ";
    }
    std::string mono;
    for (size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (t.exps[i] != 1) mono += "^" + std::to_string(t.exps[i]);
    }
    if (mono.empty()) {
      out += format_rational(a);
    } else {
      if (a != 1) out += format_rational(a) + "*";
      out += mono;
    }
  }
  return out;
}

Valuation parse_valuation(const std::string& text) {
  Tokenizer tz(text);
  if (tz.peek() == 'i') {
    if (tz.ident() == "inf" && tz.eof()) return Valuation::infinity();
    tz.fail("expected a rational or \"inf\"");
  }
  bool neg = tz.accept('-');
  Integer num = tz.number();
  Integer den(1);
  if (tz.accept('/')) {
    den = tz.number();
    if (den == 0) tz.fail("zero denominator");
  }
  if (!tz.eof()) tz.fail("trailing input");
  Rational q = make_rational(num, den);
  return Valuation(neg ? Rational(-q) : q);
}

ExtField parse_field_id(const std::string& id) {
  Tokenizer tz(id);
  std::string head = tz.ident();
  if (head.size() < 3 || head[0] != 'Q' || head[1] != '_')
    tz.fail("expected a field id like Q_2 or Q_2[T]/(T^2 - 2)");
  unsigned long p = std::stoul(head.substr(2));
  if (tz.eof()) return ExtField::rationals(p);
  tz.expect('[');
  if (tz.ident() != "T") tz.fail("expected [T]");
  tz.expect(']');
  tz.expect('/');
  tz.expect('(');
  size_t open = id.find('(');
  size_t close = id.rfind(')');
  if (close == std::string::npos || close <= open) tz.fail("unbalanced parentheses");
  RatPoly f = parse_poly(id.substr(open + 1, close - open - 1), "T");
  return ExtField::make(p, f);
}

}  // namespace berktree
