#include "jetfields/text.hpp"

#include "jetfields/errors.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jetfields {

namespace {

constexpr unsigned kMaxExponent = 64;
constexpr unsigned kMaxIntermediateDegree = 256;

struct GradedLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return graded_less(a, b); }
};

// Exact polynomial with no truncation; degrees are checked once parsing ends.
using Poly = std::map<MultiIndex, Coefficient, GradedLess>;

void add_into(Poly& acc, const Poly& p, int sign) {
  for (const auto& [e, c] : p) {
    auto& slot = acc[e];
    slot += sign > 0 ? c : Coefficient(-c);
    if (sgn(slot) == 0) acc.erase(e);
  }
}

class Parser {
public:
  Parser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept(std::string_view s) {
    skip_ws();
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) { fail_at(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t at) { throw ParseError(what, at); }

  [[noreturn]] void unexpected() {
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + text_[pos_] + "'");
  }

  unsigned long number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) unexpected();
    if (pos_ - start > 9) fail_at("number '" + std::string(text_.substr(start, pos_ - start)) + "' too long", start);
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  mpz_class big_number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) unexpected();
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  // "x<k>"; returns the 0-based index
  std::size_t variable() {
    skip_ws();
    const std::size_t start = pos_;
    if (!accept('x')) unexpected();
    if (!std::isdigit(static_cast<unsigned char>(pos_ < text_.size() ? text_[pos_] : '\0')))
      fail_at("expected a variable index after 'x'", pos_);
    const unsigned long k = number();
    if (k < 1 || k > n_)
      fail_at("unknown variable x" + std::to_string(k) + " (variables are x1..x" + std::to_string(n_) + ")", start);
    return k - 1;
  }

  Poly series() {
    Poly acc;
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    add_into(acc, term(), sign);
    for (;;) {
      if (accept('+')) sign = 1;
      else if (accept('-')) sign = -1;
      else break;
      add_into(acc, term(), sign);
    }
    return acc;
  }

  Poly term() {
    Poly p = factor();
    while (accept('*')) p = multiply(p, factor());
    return p;
  }

  Poly factor() {
    const char c = peek();
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = big_number();
      mpz_class den = 1;
      if (accept('/')) {
        const std::size_t at = pos_;
        den = big_number();
        if (sgn(den) == 0) fail_at("division by zero", at);
      }
      Coefficient q(num, den);
      q.canonicalize();
      Poly p;
      if (sgn(q) != 0) p[MultiIndex(n_, 0)] = q;
      return p;
    }
    if (c == 'x') {
      const std::size_t i = variable();
      unsigned e = 1;
      if (accept('^')) e = exponent();
      MultiIndex m(n_, 0);
      m[i] = e;
      return Poly{{m, Coefficient(1)}};
    }
    if (c == '(') {
      ++pos_;
      Poly inner = series();
      if (!accept(')')) {
        if (at_end()) fail_at("unclosed '('", start);
        unexpected();
      }
      if (accept('^')) {
        const unsigned e = exponent();
        Poly r{{MultiIndex(n_, 0), Coefficient(1)}};
        for (unsigned k = 0; k < e; ++k) r = multiply(r, inner);
        return r;
      }
      return inner;
    }
    unexpected();
  }

  unsigned exponent() {
    const std::size_t at = pos_;
    const unsigned long e = number();
    if (e > kMaxExponent) fail_at("exponent " + std::to_string(e) + " too large", at);
    return static_cast<unsigned>(e);
  }

  Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        MultiIndex e(n_);
        for (std::size_t i = 0; i < n_; ++i) e[i] = ea[i] + eb[i];
        if (degree(e) > kMaxIntermediateDegree) fail("expression too large to expand");
        auto& slot = out[e];
        slot += ca * cb;
        if (sgn(slot) == 0) out.erase(e);
      }
    return out;
  }

private:
  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const MultiIndex& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

Jet to_jet(const Poly& p, std::size_t n, int order, std::size_t at) {
  std::vector<std::pair<MultiIndex, Coefficient>> terms;
  for (const auto& [e, c] : p) {
    if (static_cast<int>(degree(e)) > order)
      throw ParseError("term " + monomial_text(e) + " has degree " + std::to_string(degree(e)) +
                           " above order " + std::to_string(order),
                       at);
    terms.emplace_back(e, c);
  }
  return Jet::from_terms(n, order, terms);
}

void require_dims(std::size_t n, int order) {
  if (n < 1) throw DimensionError("need at least one variable");
  if (order < 0) throw PrecisionError("order must be non-negative");
}

} // namespace

Jet parse_series(std::string_view text, std::size_t n, int order) {
  require_dims(n, order);
  Parser p(text, n);
  Poly poly = p.series();
  if (!p.at_end()) p.unexpected();
  return to_jet(poly, n, order, 0);
}

Derivation parse_field(std::string_view text, std::size_t n, int order) {
  require_dims(n, order);
  Parser p(text, n);
  std::vector<Poly> slots(n);
  // a lone "0" is the zero field
  {
    Parser probe(text, n);
    if (probe.accept('0') && probe.at_end()) return Derivation::zero(n, order);
  }
  int sign = 1;
  if (p.accept('-')) sign = -1;
  else p.accept('+');
  for (;;) {
    Poly coef{{MultiIndex(n, 0), Coefficient(1)}};
    for (;;) {
      if (p.peek() == 'd') {
        const std::size_t start = p.pos();
        p.accept('d');
        const unsigned long k = p.number();
        if (k < 1 || k > n)
          p.fail_at("unknown basis field d" + std::to_string(k) + " (fields are d1..d" + std::to_string(n) + ")",
                    start);
        add_into(slots[k - 1], coef, sign);
        break;
      }
      coef = p.multiply(coef, p.factor());
      if (!p.accept('*')) p.fail("expected '*' followed by a basis field d<k>");
    }
    if (p.accept('+')) sign = 1;
    else if (p.accept('-')) sign = -1;
    else break;
  }
  if (!p.at_end()) p.unexpected();
  std::vector<Jet> coeffs;
  for (const auto& s : slots) coeffs.push_back(to_jet(s, n, order, 0));
  return Derivation(std::move(coeffs));
}

FormalMap parse_map(std::string_view text, std::size_t n, int order) {
  require_dims(n, order);
  Parser p(text, n);
  std::vector<std::optional<Jet>> images(n);
  do {
    if (p.at_end()) break; // trailing ';'
    const std::size_t rule_start = p.pos();
    const std::size_t i = p.variable();
    if (!p.accept("->")) p.fail("expected '->'");
    const std::size_t series_start = p.pos();
    Jet img = to_jet(p.series(), n, order, series_start);
    if (images[i]) p.fail_at("duplicate rule for x" + std::to_string(i + 1), rule_start);
    if (sgn(img.constant_term()) != 0)
      p.fail_at("image of x" + std::to_string(i + 1) + " has a nonzero constant term", series_start);
    images[i] = std::move(img);
  } while (p.accept(';'));
  if (!p.at_end()) p.unexpected();
  std::vector<Jet> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!images[i]) p.fail("missing rule for x" + std::to_string(i + 1));
    out.push_back(std::move(*images[i]));
  }
  return FormalMap(std::move(out));
}

std::string format_series(const Jet& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = sgn(t.coef) < 0;
    if (first) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    first = false;
    const Coefficient mag = abs(t.coef);
    const std::string mono = monomial_text(f.exponents(t));
    if (mono.empty()) s += mag.get_str();
    else if (mag == 1) s += mono;
    else s += mag.get_str() + "*" + mono;
  }
  return s;
}

std::string format_field(const Derivation& d) {
  std::string s;
  for (std::size_t i = 0; i < d.variables(); ++i) {
    if (d.coefficient(i).is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + format_series(d.coefficient(i)) + ")*d" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

std::string format_map(const FormalMap& s) {
  std::string out;
  for (std::size_t i = 0; i < s.variables(); ++i) {
    if (i) out += "; ";
    out += "x" + std::to_string(i + 1) + " -> " + format_series(s.image(i));
  }
  return out;
}

std::string format_matrix(const JetMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out += ", ";
      out += format_series(m.at(i, j));
    }
    out += "]";
    if (i + 1 < m.dim()) out += "\n";
  }
  return out;
}

} // namespace jetfields
