#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "g2solv/lie.hpp"

namespace g2solv {

/// One algebra fixture: the nilpotent tuple, the ad_{e_7} eigenvalues and
/// the nilpotent scale, both in units of m.
struct AlgebraFixture {
  std::string id;
  std::string tuple;
  std::vector<Rational> eigenvalues;
  Rational nilpotent_scale;

  LieAlgebraSpec nilpotent() const;
  /// The 7-dimensional extension at the given m.
  LieAlgebraSpec extended(const Rational& m = Rational(1)) const;
};

/// Parses the three-line text format (tuple / eigenvalues / scale).
AlgebraFixture parse_fixture(std::string_view text, std::string id = "inline");

/// Resolves "example1".."example6" (first from $G2SOLV_FIXTURES/<id>.alg,
/// otherwise the bundled copy) or a path to a fixture file.
AlgebraFixture load_fixture(std::string_view id_or_path);

/// Example number 1..6 of an id such as "example4"; throws otherwise.
int example_number(std::string_view id);

/// Levi-Civita connection of g~ as printed for each example (m = 1).
FrameConnection printed_connection(int example);

/// Tuple in the frame the printed connection uses. Equals the listed
/// tuple except for (4) (e_6 -> -e_6) and (6) (e_2 -> -e_2).
std::string frame_aligned_tuple(int example);

/// Psi = (0,0,0,0,1,1,-1,1).
Vector<Rational> base_spinor();

/// LC-parallel spinors printed for each example (Psi included where the
/// text says so).
std::vector<Vector<Rational>> printed_lc_spinors(int example);

/// The 33 entries of the d / Hodge / delta table on example (2), m = 1,
/// as printed. Each row: basis 3-form, d, star, delta.
struct TableRow {
  std::string form;
  std::string d;
  std::string star;
  std::string delta;
};
const std::vector<TableRow>& printed_table2();

/// Eigenvalue rows of the ad_{e_7} table.
std::vector<Rational> printed_eigenvalues(int example);

}  // namespace g2solv
