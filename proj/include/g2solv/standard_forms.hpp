#pragma once

#include "g2solv/exterior.hpp"

namespace g2solv::forms {

/// omega = e14 - e23 + e56.
inline KForm<Rational> omega() { return parse_form("e14 - e23 + e56"); }

/// eta+ = e125 + e136 + e246 - e345.
inline KForm<Rational> eta_plus() { return parse_form("e125 + e136 + e246 - e345"); }

/// eta- = e126 - e135 - e245 - e346.
inline KForm<Rational> eta_minus() { return parse_form("e126 - e135 - e245 - e346"); }

inline KForm<Rational> e7() { return KForm<Rational>::monomial({7}); }

/// phi = omega ^ e7 + eta+.
inline KForm<Rational> base_phi() { return wedge(omega(), e7()) + eta_plus(); }

inline KForm<Rational> e(std::initializer_list<int> idx) { return KForm<Rational>::monomial(idx); }

}  // namespace g2solv::forms
