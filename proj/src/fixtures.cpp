#include "g2solv/fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace g2solv {

namespace {

struct Bundled {
  const char* tuple;
  const char* eigenvalues;
  const char* scale;
};

// Scales other than (2) were read off the printed connections.
constexpr Bundled kBundled[6] = {
    {"(0,0,e15,0,0,0)", "2/3 1 4/3 1 2/3 1", "2/3"},
    {"(0,0,e15,e25,0,e12)", "3/5 3/5 6/5 6/5 3/5 6/5", "2/5"},
    {"(0,0,e15-e46,0,0,0)", "3/4 1 3/2 3/4 3/4 3/4", "1/2"},
    {"(0,e45,-e15-e46,0,0,0)", "4/5 6/5 7/5 3/5 3/5 4/5", "-2/5"},
    {"(0,e45,e46,0,0,0)", "1 5/4 5/4 1/2 3/4 3/4", "-1/2"},
    {"(0,e16+e45,e15-e46,0,0,0)", "2/3 4/3 4/3 2/3 2/3 2/3", "1/3"},
};

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

using G = GeneratorTerm;

}  // namespace

LieAlgebraSpec AlgebraFixture::nilpotent() const {
  LieAlgebraSpec n = parse_algebra(tuple);
  n.eigenvalues = eigenvalues;
  n.nilpotent_scale = nilpotent_scale;
  return n;
}

LieAlgebraSpec AlgebraFixture::extended(const Rational& m) const {
  return extend(nilpotent(), eigenvalues, nilpotent_scale, m);
}

AlgebraFixture parse_fixture(std::string_view text, std::string id) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    line = trim(line);
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  if (lines.size() != 3)
    throw InvalidInput("fixture " + id + ": expected 3 lines (tuple, eigenvalues, scale), got " +
                       std::to_string(lines.size()));
  AlgebraFixture f;
  f.id = std::move(id);
  f.tuple = lines[0];
  std::istringstream ev(lines[1]);
  for (std::string tok; ev >> tok;) f.eigenvalues.push_back(Rational::parse(tok));
  if (f.eigenvalues.size() != 6) throw InvalidInput("fixture " + f.id + ": expected 6 eigenvalues");
  f.nilpotent_scale = Rational::parse(lines[2]);
  return f;
}

int example_number(std::string_view id) {
  constexpr std::string_view prefix = "example";
  if (id.size() == prefix.size() + 1 && id.substr(0, prefix.size()) == prefix) {
    const char c = id.back();
    if (c >= '1' && c <= '6') return c - '0';
  }
  throw InvalidInput("unknown example id \"" + std::string(id) + "\" (expected example1..example6)");
}

AlgebraFixture load_fixture(std::string_view id_or_path) {
  const std::string key(id_or_path);
  const auto read_file = [](const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw InvalidInput("cannot read fixture file " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  int number = 0;
  try {
    number = example_number(key);
  } catch (const InvalidInput&) {
    return parse_fixture(read_file(key), key);
  }
  if (const char* dir = std::getenv("G2SOLV_FIXTURES"); dir && *dir) {
    const auto p = std::filesystem::path(dir) / (key + ".alg");
    if (std::filesystem::exists(p)) return parse_fixture(read_file(p), key);
  }
  const Bundled& b = kBundled[number - 1];
  return parse_fixture(std::string(b.tuple) + "\n" + b.eigenvalues + "\n" + b.scale, key);
}

std::string frame_aligned_tuple(int example) {
  switch (example) {
    case 4: return "(0,e45,-e15+e46,0,0,0)";
    case 6: return "(0,-e16-e45,e15-e46,0,0,0)";
    default:
      if (example < 1 || example > 6) throw InvalidInput("example number out of range 1..6");
      return kBundled[example - 1].tuple;
  }
}

std::vector<Rational> printed_eigenvalues(int example) {
  if (example < 1 || example > 6) throw InvalidInput("example number out of range 1..6");
  std::vector<Rational> out;
  std::istringstream ev(kBundled[example - 1].eigenvalues);
  for (std::string tok; ev >> tok;) out.push_back(Rational::parse(tok));
  return out;
}

FrameConnection printed_connection(int example) {
  switch (example) {
    case 1:
      return connection_from_generators(Rational(-1, 3), {G{1, 1, 1, 7}, G{1, 1, 3, 5},  //
                                                          G{3, 1, 1, 5}, G{3, -1, 3, 7},  //
                                                          G{5, 1, 1, 3}, G{5, 1, 5, 7}});
    case 2:
      return connection_from_generators(Rational(-1, 5),
                                        {G{1, 2, 1, 7}, G{1, 1, 3, 5}, G{1, -1, 2, 6},  //
                                         G{2, 1, 1, 6}, G{2, 2, 2, 7}, G{2, 1, 4, 5},   //
                                         G{3, 1, 1, 5}, G{3, -1, 3, 7},                 //
                                         G{4, 1, 2, 5}, G{4, -1, 4, 7},                 //
                                         G{5, 1, 1, 3}, G{5, 1, 2, 4}, G{5, 2, 5, 7},   //
                                         G{6, 1, 1, 2}, G{6, -1, 6, 7}});
    case 3:
      return connection_from_generators(Rational(-1, 4),
                                        {G{1, 1, 1, 7}, G{1, 1, 3, 5},                   //
                                         G{3, 1, 1, 5}, G{3, -2, 3, 7}, G{3, -1, 4, 6},  //
                                         G{4, -1, 3, 6}, G{4, 1, 4, 7},                  //
                                         G{5, 1, 1, 3}, G{5, 1, 5, 7},                   //
                                         G{6, 1, 3, 4}, G{6, 1, 6, 7}});
    case 4:
      return connection_from_generators(Rational(-1, 5),
                                        {G{1, 1, 1, 7}, G{1, 1, 3, 5},                                   //
                                         G{2, -1, 2, 7}, G{2, -1, 4, 5},                                 //
                                         G{3, 1, 1, 5}, G{3, -2, 3, 7}, G{3, -1, 4, 6},                  //
                                         G{4, -1, 2, 5}, G{4, -1, 3, 6}, G{4, 2, 4, 7},                  //
                                         G{5, 1, 1, 3}, G{5, 1, 2, 4}, G{5, 2, 5, 7},                    //
                                         G{6, 1, 3, 4}, G{6, 1, 6, 7}});
    case 5:
      return connection_from_generators(Rational(-1, 4),
                                        {G{2, -1, 2, 7}, G{2, -1, 4, 5},                  //
                                         G{3, -1, 3, 7}, G{3, -1, 4, 6},                  //
                                         G{4, -1, 2, 5}, G{4, -1, 3, 6}, G{4, 2, 4, 7},   //
                                         G{5, 1, 2, 4}, G{5, 1, 5, 7},                    //
                                         G{6, 1, 3, 4}, G{6, 1, 6, 7}});
    case 6:
      return connection_from_generators(Rational(-1, 6),
                                        {G{1, 2, 1, 7}, G{1, 1, 3, 5}, G{1, -1, 2, 6},    //
                                         G{2, -1, 1, 6}, G{2, -2, 2, 7}, G{2, -1, 4, 5},  //
                                         G{3, 1, 1, 5}, G{3, -2, 3, 7}, G{3, -1, 4, 6},   //
                                         G{4, -1, 2, 5}, G{4, -1, 3, 6}, G{4, 2, 4, 7},   //
                                         G{5, 1, 1, 3}, G{5, 1, 2, 4}, G{5, 2, 5, 7},     //
                                         G{6, -1, 1, 2}, G{6, 1, 3, 4}, G{6, 2, 6, 7}});
    default:
      throw InvalidInput("example number out of range 1..6");
  }
}

Vector<Rational> base_spinor() { return {0, 0, 0, 0, 1, 1, -1, 1}; }

std::vector<Vector<Rational>> printed_lc_spinors(int example) {
  switch (example) {
    case 1:
      return {{1, 1, 0, 0, 0, 0, 0, 0}, {0, 0, -1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 0, 0, -1, 1}};
    case 3: return {base_spinor(), {1, 1, 1, -1, 0, 0, 0, 0}};
    case 5: return {base_spinor(), {-1, 1, 1, 1, 0, 0, 0, 0}};
    case 2:
    case 4:
    case 6: return {base_spinor()};
    default: throw InvalidInput("example number out of range 1..6");
  }
}

const std::vector<TableRow>& printed_table2() {
  static const std::vector<TableRow> rows = {
      {"e125", "-6/5*e1257", "e3467", "2/5*e14 - 2/5*e23 + 2/5*e56"},
      {"e136", "0", "e2457", "0"},
      {"e246", "0", "e1357", "0"},
      {"e345", "0", "e1267", "0"},
      {"e126", "-3/5*e1267", "-e3457", "0"},
      {"e135", "-3/5*e1357", "-e2467", "0"},
      {"e245", "-3/5*e2457", "-e1367", "0"},
      // 1/5 omega^2 + 3/5 e3467, omega^2 = -2 e1234 + 2 e1456 - 2 e2356.
      {"e346", "-2/5*e1234 + 2/5*e1456 - 2/5*e2356 + 3/5*e3467", "-e1257", "0"},
      {"e147", "2/5*e1257", "e2356", "-2/5*e14"},
      {"e237", "2/5*e1257", "e1456", "-2/5*e23"},
      {"e567", "2/5*e1257", "e1234", "-2/5*e56"},
  };
  return rows;
}

}  // namespace g2solv
