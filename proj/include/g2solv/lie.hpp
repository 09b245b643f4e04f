#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2solv/exterior.hpp"
#include "g2solv/matrix.hpp"

namespace g2solv {

/// Structure constants c^k_ij in a 1-based frame of dimension 6 or 7.
class BracketTable {
 public:
  explicit BracketTable(int dim = kDim);

  int dim() const { return dim_; }
  /// Coefficient of e_k in [e_i, e_j].
  const Rational& operator()(int i, int j, int k) const { return c_[index(i, j, k)]; }
  /// Sets c^k_ij and c^k_ji = -c^k_ij together.
  void set(int i, int j, int k, const Rational& v);
  void add(int i, int j, int k, const Rational& v);

  /// [e_i, e_j] as a coefficient vector (index k-1 holds c^k_ij).
  Vector<Rational> bracket(int i, int j) const;
  bool is_zero() const;

  friend bool operator==(const BracketTable&, const BracketTable&) = default;

 private:
  std::size_t index(int i, int j, int k) const;
  int dim_;
  std::vector<Rational> c_;
};

struct JacobiResult {
  bool holds = true;
  /// First failing triple (i < j < k), 1-based.
  std::array<int, 3> triple{};
  std::string diagnostic;
};

/// Lie algebra given by structure constants in an orthonormal frame.
struct LieAlgebraSpec {
  BracketTable brackets{6};
  /// Eigenvalues C_1..C_6 of ad_{e_7} in units of m, if known.
  std::optional<std::vector<Rational>> eigenvalues;
  /// Overall scale of the nilpotent brackets in units of m, if known.
  std::optional<Rational> nilpotent_scale;

  int dim() const { return brackets.dim(); }
};

JacobiResult check_jacobi(const BracketTable& b);

/// Chevalley-Eilenberg differential, de_k = -sum_{i<j} c^k_ij e_ij,
/// extended as an antiderivation.
KForm<Rational> ce_differential(const BracketTable& b, const KForm<Rational>& a);

/// True when d(de_k) = 0 for every k.
bool ce_square_zero(const BracketTable& b);

/// Parses the differential notation "(0,0,e15,e25,0,e12)": the k-th entry is
/// de_k, and de_k(e_i,e_j) = -c^k_ij. Throws InvalidInput on grammar errors
/// and VerificationFailure (naming the triple) when Jacobi fails.
LieAlgebraSpec parse_algebra(std::string_view spec);

/// Rank-one extension by e_7 with [e_i,e_7] = -C_i m e_i and nilpotent
/// brackets multiplied by -s_n m. Jacobi is re-checked.
LieAlgebraSpec extend(const LieAlgebraSpec& n, const std::vector<Rational>& C, const Rational& s_n,
                      const Rational& m = Rational(1));

/// Metric connection in an orthonormal frame at the base point:
/// gamma(i,j,k) = g(nabla_{e_i} e_j, e_k), all indices 1-based.
class FrameConnection {
 public:
  FrameConnection();

  const Rational& operator()(int i, int j, int k) const { return gamma_[slot(i)](idx(j), idx(k)); }
  Rational& operator()(int i, int j, int k) { return gamma_[slot(i)](idx(j), idx(k)); }

  /// The 7x7 matrix of nabla_{e_i}.
  const Matrix<Rational>& matrix(int i) const { return gamma_[slot(i)]; }

  /// Adds coeff * E_ab to nabla_{e_i}: gamma(i,a,b) += coeff, gamma(i,b,a) -= coeff.
  void add_generator(int i, int a, int b, const Rational& coeff);

  bool is_metric() const;
  bool is_zero() const;

  /// nabla_{e_i} e_j as a coefficient vector over e_1..e_7.
  Vector<Rational> derivative(int i, int j) const;

  FrameConnection scaled(const Rational& s) const;

  friend bool operator==(const FrameConnection& a, const FrameConnection& b) { return a.gamma_ == b.gamma_; }

 private:
  static std::size_t slot(int i);
  static std::size_t idx(int j);
  std::array<Matrix<Rational>, kDim> gamma_;
};

/// One printed component line: nabla_{e_i} += coeff * E_ab.
struct GeneratorTerm {
  int i;
  Rational coeff;
  int a;
  int b;
};

/// Builds scale * sum(terms), the way the printed components are written
/// ("nabla_{e_1} = -1/5 (2E_17 + E_35 - E_26)").
FrameConnection connection_from_generators(const Rational& scale, const std::vector<GeneratorTerm>& terms);

/// Levi-Civita connection of a 7-dimensional metric Lie algebra:
/// 2 gamma_ijk = c(i,j,k) - c(j,k,i) + c(k,i,j), c(i,j,k) = g([e_i,e_j],e_k).
FrameConnection koszul(const LieAlgebraSpec& g);

/// Levi-Civita connection of e^{2f} g in the rescaled orthonormal frame,
/// for df constant in the frame: gamma'_ijk = gamma_ijk + df_j d_ik - d_ij df_k.
/// (The df(X)Y term of the general formula is absorbed by the frame rescaling.)
FrameConnection conformal_change(const FrameConnection& c, const Vector<Rational>& df);

/// nabla_{e_i} acting on a frame-constant form (as a derivation).
KForm<Rational> covariant_derivative(const FrameConnection& c, int i, const KForm<Rational>& a);

/// d a = sum_i e_i ^ nabla_{e_i} a.
KForm<Rational> d_form(const FrameConnection& c, const KForm<Rational>& a);

/// delta a = -sum_i e_i _| nabla_{e_i} a.
KForm<Rational> delta_form(const FrameConnection& c, const KForm<Rational>& a);

/// Frame commutators from torsion-freeness: [e_i,e_j] = nabla_i e_j - nabla_j e_i.
BracketTable brackets_from_connection(const FrameConnection& c);

std::string to_string(const BracketTable& b);

}  // namespace g2solv
