#include "monopole/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "monopole/error.hpp"

namespace monopole {

namespace {

MultiPoly::Monomial multiply_monomials(const MultiPoly::Monomial& a, const MultiPoly::Monomial& b) {
  MultiPoly::Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

template <class Scalar, class Convert>
Scalar evaluate(const std::map<MultiPoly::Monomial, Rat>& terms, const std::vector<Scalar>& point, Convert convert) {
  Scalar acc(0);
  for (const auto& [mono, coeff] : terms) {
    Scalar term = convert(coeff);
    for (const auto& [var, exp] : mono) {
      if (var >= point.size()) throw Error(Errc::index_out_of_range, "polynomial variable outside the chart");
      for (int e = 0; e < exp; ++e) term *= point[var];
    }
    acc += term;
  }
  return acc;
}

}  // namespace

MultiPoly MultiPoly::constant(const Rat& c) {
  MultiPoly p;
  p.add_term({}, c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t position) {
  MultiPoly p;
  p.add_term({{position, 1}}, 1);
  return p;
}

MultiPoly MultiPoly::elementary_x(const ChartLayout& layout, std::size_t color, int m) {
  if (color >= layout.colors()) throw Error(Errc::index_out_of_range, "color out of range");
  const int a = layout.alpha()[color];
  if (m < 0) throw Error(Errc::index_out_of_range, "negative symmetric-function index");
  if (m > a) return {};
  // e_m = sum over m-subsets via the generating product prod (1 + t x_k).
  std::vector<MultiPoly> e(static_cast<std::size_t>(a) + 1);
  e[0] = constant(1);
  for (int k = 0; k < a; ++k) {
    const MultiPoly xk = variable(layout.color_offset(color) + static_cast<std::size_t>(k));
    for (int d = std::min(k + 1, a); d >= 1; --d) e[static_cast<std::size_t>(d)] = e[static_cast<std::size_t>(d)] + e[static_cast<std::size_t>(d - 1)] * xk;
  }
  return e[static_cast<std::size_t>(m)];
}

MultiPoly MultiPoly::power_sum_x(const ChartLayout& layout, std::size_t color, int m) {
  if (color >= layout.colors()) throw Error(Errc::index_out_of_range, "color out of range");
  if (m < 0) throw Error(Errc::index_out_of_range, "negative power-sum index");
  MultiPoly out;
  for (int k = 0; k < layout.alpha()[color]; ++k) {
    const std::size_t var = layout.color_offset(color) + static_cast<std::size_t>(k);
    if (m == 0)
      out.add_term({}, 1);
    else
      out.add_term({{var, m}}, 1);
  }
  return out;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::size_t MultiPoly::arity() const {
  std::size_t n = 0;
  for (const auto& [mono, coeff] : terms_)
    for (const auto& [var, exp] : mono) n = std::max(n, var + 1);
  return n;
}

bool MultiPoly::depends_only_below(std::size_t half) const { return arity() <= half; }

MultiPoly MultiPoly::partial(std::size_t position) const {
  MultiPoly out;
  for (const auto& [mono, coeff] : terms_) {
    auto it = std::find_if(mono.begin(), mono.end(), [&](const auto& f) { return f.first == position; });
    if (it == mono.end()) continue;
    Monomial reduced = mono;
    auto& factor = reduced[static_cast<std::size_t>(it - mono.begin())];
    const int exp = factor.second;
    if (--factor.second == 0) reduced.erase(reduced.begin() + (it - mono.begin()));
    out.add_term(reduced, coeff * exp);
  }
  return out;
}

Rat MultiPoly::operator()(const std::vector<Rat>& point) const {
  return evaluate<Rat>(terms_, point, [](const Rat& c) { return c; });
}

Complex MultiPoly::operator()(const std::vector<Complex>& point) const {
  return evaluate<Complex>(terms_, point, [](const Rat& c) { return Complex(c.get_d(), 0.0); });
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply_monomials(ma, mb), ca * cb);
  return out;
}

MultiPoly operator*(const Rat& s, const MultiPoly& a) { return MultiPoly::constant(s) * a; }

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ChartLayout& layout) : text_(text), layout_(layout) {}

  MultiPoly parse() {
    MultiPoly out = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::parse_error, "in polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly out;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    out = term();
    if (negate) out = MultiPoly() - out;
    for (;;) {
      if (accept('+')) out = out + term();
      else if (accept('-')) out = out - term();
      else return out;
    }
  }

  MultiPoly term() {
    MultiPoly out = power();
    while (accept('*')) out = out * power();
    return out;
  }

  MultiPoly power() {
    MultiPoly base = factor();
    if (accept('^')) {
      const std::size_t n = number();
      MultiPoly out = MultiPoly::constant(1);
      for (std::size_t e = 0; e < n; ++e) out = out * base;
      return out;
    }
    return base;
  }

  std::size_t number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  // ":n" after a letter
  std::size_t tagged_number() {
    if (pos_ >= text_.size() || text_[pos_] != ':') fail("expected ':'");
    ++pos_;
    return number();
  }

  std::size_t color(std::size_t label) {
    if (label == 0 || label > layout_.colors()) fail("color " + std::to_string(label) + " out of range");
    return label - 1;
  }

  MultiPoly factor() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' || text_[pos_] == '.'))
        ++pos_;
      return MultiPoly::constant(parse_rat(text_.substr(start, pos_ - start)));
    }
    if (ch == 'x' || ch == 'y') {
      ++pos_;
      CoordIndex c;
      c.kind = ch == 'x' ? Kind::x : Kind::y;
      c.color = color(tagged_number());
      const std::size_t slot = tagged_number();
      if (slot == 0) fail("slots are 1-based");
      c.slot = slot - 1;
      return MultiPoly::variable(layout_.position(c));
    }
    if (ch == 'e' || ch == 'p') {
      ++pos_;
      const auto m = static_cast<int>(tagged_number());
      const std::size_t i = color(tagged_number());
      return ch == 'e' ? MultiPoly::elementary_x(layout_, i, m) : MultiPoly::power_sum_x(layout_, i, m);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  const ChartLayout& layout_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_multipoly(std::string_view text, const ChartLayout& layout) { return Parser(text, layout).parse(); }

}  // namespace monopole
