#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "g2solv/field.hpp"

namespace g2solv {

/// Dimension of the oriented orthonormal frame e_1, ..., e_7.
inline constexpr int kDim = 7;

/// Set of frame indices encoded as a bitmask (bit i-1 <-> e_i). A monomial
/// e_{i1...ik} with i1 < ... < ik is identified with its index set.
using IndexMask = std::uint8_t;

inline constexpr IndexMask kVolumeMask = 0x7F;

inline int mask_degree(IndexMask m) { return std::popcount(static_cast<unsigned>(m)); }

/// Frame indices (1-based, increasing) of a mask.
std::vector<int> mask_indices(IndexMask m);

/// Sign of e_A ^ e_B relative to e_{A u B}; 0 if A and B intersect.
int wedge_sign(IndexMask a, IndexMask b);

/// Exterior k-form with constant coefficients in the frame, stored as a
/// table from strictly increasing index tuples to coefficients. Zero
/// coefficients are never stored.
template <Field S>
class KForm {
 public:
  KForm() = default;
  explicit KForm(int degree) : degree_(degree) {
    if (degree < 0 || degree > kDim) throw InvalidInput("form degree out of range 0..7");
  }

  /// Monomial coeff * e_{i1} ^ ... ^ e_{ik} in any index order; the sign of
  /// the sorting permutation is absorbed and repeated indices give zero.
  static KForm monomial(std::initializer_list<int> indices, S coeff = FieldTraits<S>::one()) {
    return monomial(std::vector<int>(indices), std::move(coeff));
  }

  static KForm monomial(const std::vector<int>& indices, S coeff = FieldTraits<S>::one()) {
    KForm f(static_cast<int>(indices.size()));
    IndexMask mask = 0;
    int sign = 1;
    for (int idx : indices) {
      if (idx < 1 || idx > kDim) throw InvalidInput("frame index out of range 1..7");
      const IndexMask bit = static_cast<IndexMask>(1u << (idx - 1));
      if (mask & bit) return f;
      // Moving e_idx left past the already placed larger indices.
      if (std::popcount(static_cast<unsigned>(mask) >> idx) % 2) sign = -sign;
      mask |= bit;
    }
    f.add_term(mask, sign > 0 ? coeff : -coeff);
    return f;
  }

  static KForm from_mask(IndexMask mask, S coeff = FieldTraits<S>::one()) {
    KForm f(mask_degree(mask));
    f.add_term(mask, std::move(coeff));
    return f;
  }

  static KForm constant(S value) { return from_mask(0, std::move(value)); }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const std::map<IndexMask, S>& terms() const { return terms_; }

  S coeff(IndexMask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? FieldTraits<S>::zero() : it->second;
  }
  S coeff(std::initializer_list<int> indices) const {
    const KForm m = monomial(indices);
    if (m.is_zero()) return FieldTraits<S>::zero();
    const auto& [mask, sign] = *m.terms_.begin();
    return coeff(mask) * sign;
  }

  void add_term(IndexMask mask, const S& c) {
    if (mask_degree(mask) != degree_) throw InvalidInput("term degree does not match form degree");
    if (FieldTraits<S>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(mask, c);
    if (!inserted) {
      it->second += c;
      if (FieldTraits<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Terms in lexicographic order of their index tuples.
  std::vector<std::pair<IndexMask, S>> lex_terms() const {
    std::vector<std::pair<IndexMask, S>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return mask_indices(a.first) < mask_indices(b.first);
    });
    return out;
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
    KForm<T> out(degree_);
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  KForm& operator+=(const KForm& o) {
    if (o.is_zero()) return *this;
    if (is_zero() && terms_.empty()) degree_ = o.degree_;
    if (o.degree_ != degree_) throw InvalidInput("adding forms of different degree");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  KForm& operator-=(const KForm& o) { return *this += -o; }
  KForm& operator*=(const S& s) {
    if (FieldTraits<S>::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(KForm a, const S& s) { return a *= s; }
  friend KForm operator*(const S& s, KForm a) { return a *= s; }
  friend KForm operator-(KForm a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }

  /// Equal coefficient tables; zero forms compare equal regardless of degree.
  friend bool operator==(const KForm& a, const KForm& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  int degree_ = 0;
  std::map<IndexMask, S> terms_;
};

template <Field S>
KForm<S> wedge(const KForm<S>& a, const KForm<S>& b) {
  const int deg = a.degree() + b.degree();
  if (deg > kDim) return KForm<S>(0);
  KForm<S> out(deg);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      S c = ca * cb;
      out.add_term(static_cast<IndexMask>(ma | mb), s > 0 ? c : -c);
    }
  }
  return out;
}

/// Hodge star with orientation e_1 ^ ... ^ e_7 = +vol, fixed by
/// a ^ *a = <a,a> vol.
template <Field S>
KForm<S> hodge(const KForm<S>& a) {
  KForm<S> out(kDim - a.degree());
  for (const auto& [m, c] : a.terms()) {
    const IndexMask comp = static_cast<IndexMask>(kVolumeMask & ~m);
    out.add_term(comp, wedge_sign(m, comp) > 0 ? c : -c);
  }
  return out;
}

/// Interior product e_x _| a for a frame index x in 1..7.
template <Field S>
KForm<S> interior(int x, const KForm<S>& a) {
  if (x < 1 || x > kDim) throw InvalidInput("frame index out of range 1..7");
  if (a.degree() == 0) return KForm<S>(0);
  KForm<S> out(a.degree() - 1);
  const IndexMask bit = static_cast<IndexMask>(1u << (x - 1));
  for (const auto& [m, c] : a.terms()) {
    if (!(m & bit)) continue;
    const int before = std::popcount(static_cast<unsigned>(m & (bit - 1)));
    out.add_term(static_cast<IndexMask>(m & ~bit), before % 2 ? -c : c);
  }
  return out;
}

/// Pointwise inner product; the monomials e_I are orthonormal.
template <Field S>
S inner(const KForm<S>& a, const KForm<S>& b) {
  if (a.degree() != b.degree() && !a.is_zero() && !b.is_zero())
    throw InvalidInput("inner product of forms of different degree");
  S acc = FieldTraits<S>::zero();
  for (const auto& [m, c] : a.terms()) {
    auto it = b.terms().find(m);
    if (it != b.terms().end()) acc += c * it->second;
  }
  return acc;
}

template <Field S>
KForm<S> volume_form() {
  return KForm<S>::from_mask(kVolumeMask);
}

/// Renders "e125 - 3/5*e136"; the zero form renders as "0".
template <Field S>
std::string to_string(const KForm<S>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.lex_terms()) {
    std::string name = "e";
    for (int i : mask_indices(m)) name += static_cast<char>('0' + i);
    if (m == 0) name = "1";
    std::string coeff;
    bool negative = false;
    if constexpr (std::is_same_v<S, Rational>) {
      negative = c.sign() < 0;
      const Rational mag = negative ? -c : c;
      if (mag != Rational(1) || m == 0) coeff = mag.to_compact_string();
    } else {
      coeff = "(" + FieldTraits<S>::str(c) + ")";
    }
    if (!first) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    if (!coeff.empty()) out += (m == 0 ? coeff : coeff + "*" + name);
    else out += name;
    first = false;
  }
  return out;
}

/// Parses the form-literal grammar: signed terms `[+|-] [p/q*] e<digits>`,
/// e.g. "e125 - 3/5*e136". All terms must share one degree.
KForm<Rational> parse_form(std::string_view text);

}  // namespace g2solv
