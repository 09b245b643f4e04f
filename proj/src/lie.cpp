#include "g2solv/lie.hpp"

#include <sstream>

namespace g2solv {

BracketTable::BracketTable(int dim) : dim_(dim) {
  if (dim != 6 && dim != 7) throw InvalidInput("Lie algebra dimension must be 6 or 7");
  c_.assign(static_cast<std::size_t>(dim * dim * dim), Rational(0));
}

std::size_t BracketTable::index(int i, int j, int k) const {
  if (i < 1 || i > dim_ || j < 1 || j > dim_ || k < 1 || k > dim_)
    throw InvalidInput("bracket index out of range");
  return static_cast<std::size_t>(((i - 1) * dim_ + (j - 1)) * dim_ + (k - 1));
}

void BracketTable::set(int i, int j, int k, const Rational& v) {
  if (i == j) {
    if (!v.is_zero()) throw InvalidInput("[e_i, e_i] must vanish");
    return;
  }
  c_[index(i, j, k)] = v;
  c_[index(j, i, k)] = -v;
}

void BracketTable::add(int i, int j, int k, const Rational& v) { set(i, j, k, (*this)(i, j, k) + v); }

Vector<Rational> BracketTable::bracket(int i, int j) const {
  Vector<Rational> out(static_cast<std::size_t>(dim_));
  for (int k = 1; k <= dim_; ++k) out[static_cast<std::size_t>(k - 1)] = (*this)(i, j, k);
  return out;
}

bool BracketTable::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

JacobiResult check_jacobi(const BracketTable& b) {
  const int n = b.dim();
  // [[e_i,e_j],e_k] coefficient on e_l.
  const auto double_bracket = [&](int i, int j, int k, int l) {
    Rational acc(0);
    for (int p = 1; p <= n; ++p) {
      const Rational& c = b(i, j, p);
      if (!c.is_zero()) acc += c * b(p, k, l);
    }
    return acc;
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          const Rational s = double_bracket(i, j, k, l) + double_bracket(j, k, i, l) + double_bracket(k, i, j, l);
          if (!s.is_zero()) {
            JacobiResult r;
            r.holds = false;
            r.triple = {i, j, k};
            std::ostringstream os;
            os << "Jacobi identity fails for (e" << i << ", e" << j << ", e" << k << "): coefficient " << s
               << " on e" << l;
            r.diagnostic = os.str();
            return r;
          }
        }
      }
    }
  }
  return {};
}

namespace {

KForm<Rational> ce_of_generator(const BracketTable& b, int k) {
  KForm<Rational> out(2);
  for (int i = 1; i <= b.dim(); ++i)
    for (int j = i + 1; j <= b.dim(); ++j)
      if (!b(i, j, k).is_zero()) out += KForm<Rational>::monomial({i, j}, -b(i, j, k));
  return out;
}

}  // namespace

KForm<Rational> ce_differential(const BracketTable& b, const KForm<Rational>& a) {
  std::vector<KForm<Rational>> de;
  for (int k = 1; k <= b.dim(); ++k) de.push_back(ce_of_generator(b, k));
  KForm<Rational> out(std::min(a.degree() + 1, kDim));
  for (const auto& [mask, c] : a.terms()) {
    const auto idx = mask_indices(mask);
    for (std::size_t p = 0; p < idx.size(); ++p) {
      if (idx[p] > b.dim()) throw InvalidInput("form index exceeds algebra dimension");
      KForm<Rational> term = KForm<Rational>::constant(p % 2 ? -c : c);
      for (std::size_t q = 0; q < idx.size(); ++q) {
        term = wedge(term, q == p ? de[static_cast<std::size_t>(idx[q] - 1)] : KForm<Rational>::monomial({idx[q]}));
      }
      out += term;
    }
  }
  return out;
}

bool ce_square_zero(const BracketTable& b) {
  for (int k = 1; k <= b.dim(); ++k)
    if (!ce_differential(b, ce_of_generator(b, k)).is_zero()) return false;
  return true;
}

LieAlgebraSpec parse_algebra(std::string_view spec) {
  const auto fail = [&](const std::string& why) -> void {
    throw InvalidInput("algebra spec: " + why + " in \"" + std::string(spec) + "\"");
  };
  std::size_t open = spec.find('(');
  std::size_t close = spec.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    fail("expected a parenthesized tuple");
  for (std::size_t p = 0; p < spec.size(); ++p) {
    if ((p < open || p > close) && !std::isspace(static_cast<unsigned char>(spec[p])))
      fail("unexpected text outside the tuple");
  }
  std::vector<std::string_view> entries;
  std::string_view body = spec.substr(open + 1, close - open - 1);
  while (true) {
    const std::size_t comma = body.find(',');
    entries.push_back(body.substr(0, comma));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  const int dim = static_cast<int>(entries.size());
  if (dim != 6 && dim != 7) fail("tuple must have 6 or 7 entries, got " + std::to_string(dim));

  LieAlgebraSpec out;
  out.brackets = BracketTable(dim);
  for (int k = 1; k <= dim; ++k) {
    KForm<Rational> de;
    try {
      de = parse_form(entries[static_cast<std::size_t>(k - 1)]);
    } catch (const InvalidInput& e) {
      fail("entry " + std::to_string(k) + ": " + e.what());
    }
    if (de.is_zero()) continue;
    if (de.degree() != 2) fail("entry " + std::to_string(k) + " is not a 2-form");
    for (const auto& [mask, c] : de.terms()) {
      const auto ij = mask_indices(mask);
      if (ij[1] > dim) fail("index exceeds dimension in entry " + std::to_string(k));
      out.brackets.set(ij[0], ij[1], k, -c);
    }
  }
  const JacobiResult jr = check_jacobi(out.brackets);
  if (!jr.holds) throw VerificationFailure(jr.diagnostic);
  return out;
}

LieAlgebraSpec extend(const LieAlgebraSpec& n, const std::vector<Rational>& C, const Rational& s_n,
                      const Rational& m) {
  if (n.dim() != 6) throw InvalidInput("extend expects a 6-dimensional nilpotent algebra");
  if (C.size() != 6) throw InvalidInput("extend expects six eigenvalues");
  LieAlgebraSpec out;
  out.brackets = BracketTable(7);
  out.eigenvalues = C;
  out.nilpotent_scale = s_n;
  const Rational factor = -s_n * m;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      for (int k = 1; k <= 6; ++k)
        if (!n.brackets(i, j, k).is_zero()) out.brackets.set(i, j, k, factor * n.brackets(i, j, k));
  for (int i = 1; i <= 6; ++i) out.brackets.set(i, 7, i, -C[static_cast<std::size_t>(i - 1)] * m);
  const JacobiResult jr = check_jacobi(out.brackets);
  if (!jr.holds) throw VerificationFailure("extension: " + jr.diagnostic);
  return out;
}

FrameConnection::FrameConnection() {
  for (auto& g : gamma_) g = Matrix<Rational>(kDim, kDim);
}

std::size_t FrameConnection::slot(int i) {
  if (i < 1 || i > kDim) throw InvalidInput("connection index out of range 1..7");
  return static_cast<std::size_t>(i - 1);
}
std::size_t FrameConnection::idx(int j) { return slot(j); }

void FrameConnection::add_generator(int i, int a, int b, const Rational& coeff) {
  (*this)(i, a, b) += coeff;
  (*this)(i, b, a) -= coeff;
}

bool FrameConnection::is_metric() const {
  for (const auto& g : gamma_)
    if (!(g + g.transpose()).is_zero()) return false;
  return true;
}

bool FrameConnection::is_zero() const {
  return std::all_of(gamma_.begin(), gamma_.end(), [](const auto& g) { return g.is_zero(); });
}

Vector<Rational> FrameConnection::derivative(int i, int j) const {
  const auto r = matrix(i).row(idx(j));
  return Vector<Rational>(r.begin(), r.end());
}

FrameConnection FrameConnection::scaled(const Rational& s) const {
  FrameConnection out = *this;
  for (auto& g : out.gamma_) g *= s;
  return out;
}

FrameConnection connection_from_generators(const Rational& scale, const std::vector<GeneratorTerm>& terms) {
  FrameConnection out;
  for (const auto& t : terms) out.add_generator(t.i, t.a, t.b, scale * t.coeff);
  return out;
}

FrameConnection koszul(const LieAlgebraSpec& g) {
  if (g.dim() != kDim) throw InvalidInput("koszul expects a 7-dimensional algebra");
  const BracketTable& b = g.brackets;
  FrameConnection out;
  const Rational half(1, 2);
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k) out(i, j, k) = half * (b(i, j, k) - b(j, k, i) + b(k, i, j));
  return out;
}

FrameConnection conformal_change(const FrameConnection& c, const Vector<Rational>& df) {
  if (df.size() != kDim) throw InvalidInput("df must have 7 components");
  FrameConnection out = c;
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      out(i, j, i) += df[static_cast<std::size_t>(j - 1)];
      out(i, i, j) -= df[static_cast<std::size_t>(j - 1)];
    }
  }
  return out;
}

KForm<Rational> covariant_derivative(const FrameConnection& c, int i, const KForm<Rational>& a) {
  KForm<Rational> out(a.degree());
  for (const auto& [mask, coeff] : a.terms()) {
    const auto idx = mask_indices(mask);
    for (std::size_t p = 0; p < idx.size(); ++p) {
      const Vector<Rational> dj = c.derivative(i, idx[p]);
      for (int k = 1; k <= kDim; ++k) {
        const Rational& g = dj[static_cast<std::size_t>(k - 1)];
        if (g.is_zero()) continue;
        std::vector<int> replaced = idx;
        replaced[p] = k;
        out += KForm<Rational>::monomial(replaced, coeff * g);
      }
    }
  }
  return out;
}

KForm<Rational> d_form(const FrameConnection& c, const KForm<Rational>& a) {
  KForm<Rational> out(std::min(a.degree() + 1, kDim));
  for (int i = 1; i <= kDim; ++i) out += wedge(KForm<Rational>::monomial({i}), covariant_derivative(c, i, a));
  return out;
}

KForm<Rational> delta_form(const FrameConnection& c, const KForm<Rational>& a) {
  KForm<Rational> out(std::max(a.degree() - 1, 0));
  for (int i = 1; i <= kDim; ++i) out -= interior(i, covariant_derivative(c, i, a));
  return out;
}

BracketTable brackets_from_connection(const FrameConnection& c) {
  BracketTable out(kDim);
  for (int i = 1; i <= kDim; ++i)
    for (int j = i + 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k) out.set(i, j, k, c(i, j, k) - c(j, i, k));
  return out;
}

std::string to_string(const BracketTable& b) {
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= b.dim(); ++i) {
    for (int j = i + 1; j <= b.dim(); ++j) {
      KForm<Rational> v(1);
      for (int k = 1; k <= b.dim(); ++k)
        if (!b(i, j, k).is_zero()) v += KForm<Rational>::monomial({k}, b(i, j, k));
      if (v.is_zero()) continue;
      if (!first) os << ", ";
      os << "[e" << i << ",e" << j << "] = " << to_string(v);
      first = false;
    }
  }
  return first ? "abelian" : os.str();
}

}  // namespace g2solv
