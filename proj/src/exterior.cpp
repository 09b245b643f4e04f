#include "g2solv/exterior.hpp"

#include <cctype>
#include <optional>

namespace g2solv {

std::vector<int> mask_indices(IndexMask m) {
  std::vector<int> out;
  for (int i = 1; i <= kDim; ++i)
    if (m & (1u << (i - 1))) out.push_back(i);
  return out;
}

int wedge_sign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  // Count pairs (x in a, y in b) with x > y: each is one transposition.
  int inversions = 0;
  for (int y = 0; y < kDim; ++y) {
    if (!(b & (1u << y))) continue;
    inversions += std::popcount(static_cast<unsigned>(a) >> (y + 1));
  }
  return inversions % 2 ? -1 : 1;
}

namespace {

class FormParser {
 public:
  explicit FormParser(std::string_view text) : text_(text) {}

  KForm<Rational> run() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty form literal");
    std::optional<KForm<Rational>> acc;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      KForm<Rational> term = parse_term();
      if (sign < 0) term = -term;
      if (!acc) {
        acc = std::move(term);
      } else {
        if (term.degree() != acc->degree()) fail("terms of different degree");
        *acc += term;
      }
      first = false;
    }
    return *acc;
  }

 private:
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("form literal: " + why + " at offset " + std::to_string(pos_) + " in \"" +
                       std::string(text_) + "\"");
  }

  KForm<Rational> parse_term() {
    Rational coeff(1);
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      try {
        coeff = Rational::parse(text_.substr(start, pos_ - start));
      } catch (const std::exception&) {
        fail("bad coefficient");
      }
      skip_ws();
      if (pos_ >= text_.size() || peek() != '*') {
        // A bare number is a 0-form term.
        return KForm<Rational>::constant(coeff);
      }
      ++pos_;
      skip_ws();
    }
    if (pos_ >= text_.size() || peek() != 'e') fail("expected monomial e<digits>");
    ++pos_;
    std::vector<int> idx;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      idx.push_back(peek() - '0');
      ++pos_;
    }
    if (idx.empty()) fail("monomial without indices");
    for (int i : idx)
      if (i < 1 || i > kDim) fail("frame index out of range 1..7");
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        if (idx[a] == idx[b]) fail("repeated index in monomial");
    return KForm<Rational>::monomial(idx, coeff);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

KForm<Rational> parse_form(std::string_view text) { return FormParser(text).run(); }

}  // namespace g2solv
