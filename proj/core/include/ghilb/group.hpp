#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ghilb/intmat.hpp"
#include "ghilb/rational.hpp"

namespace ghilb {

struct Generator {
  long order = 1;
  std::array<long, 3> weights{};  // reduced mod order; sum == 0 mod order
};

struct GroupSpec {
  std::vector<Generator> generators;
};

// Grammar: 1/<r>(<a>,<b>,<c>), generators separated by ';', optional spaces.
GroupSpec parse_group_spec(std::string_view text);
std::string format_group_spec(const GroupSpec& spec);

// Canonical class of an exponent vector in Z^3/M, in Smith-basis coordinates.
struct Character {
  std::array<long, 3> coords{};
  friend bool operator==(const Character&, const Character&) = default;
};

class CharacterTable {
 public:
  CharacterTable() = default;
  CharacterTable(const Mat3z& mBasis, std::vector<Generator> generators);

  long order() const { return r_; }

  Character class_of(const Vec3l& exponent) const;
  Character class_of(const Vec3z& exponent) const;
  Character add(const Character& a, const Character& b) const;
  Character negate(const Character& a) const;
  bool is_trivial(const Character& a) const { return a.coords == std::array<long, 3>{0, 0, 0}; }

  long flat_index(const Character& a) const;
  Character from_flat(long index) const;

  // An integer exponent vector in the class (coordinates may be negative).
  Vec3l representative(const Character& a) const;

  // chi_j for single-generator groups, tuple labels otherwise.
  std::string label(const Character& a) const;

 private:
  long r_ = 1;
  Vec3z diag_{1, 1, 1};
  Mat3z v_{};     // Smith right transform: class(e) = (e * v) mod diag
  Mat3z vinv_{};  // representative(c) = c * v^{-1}
  std::vector<Generator> generators_;
};

struct JuniorPoint {
  Vec3q v;
  bool corner = false;
  bool boundary = false;  // some coordinate vanishes (corners included)
  friend bool operator==(const JuniorPoint& a, const JuniorPoint& b) { return a.v == b.v; }
};

struct LatticeContext {
  GroupSpec spec;
  std::vector<Vec3q> groupElements;  // canonical representatives in [0,1)^3
  long r = 1;
  Mat3q nBasis;  // rows generate N
  Mat3z mBasis;  // rows generate M = Hom(N, Z)
  CharacterTable characters;

  bool contains_in_n(const Vec3q& v) const;       // v in N
  Vec3z n_coordinates(const Vec3q& v) const;      // coordinates w.r.t. nBasis rows
};

LatticeContext build_lattice_context(const GroupSpec& spec);

Character character_of(const Vec3l& exponent, const LatticeContext& ctx);

// Corners plus the age-one group elements, sorted lexicographically.
std::vector<JuniorPoint> junior_points(const LatticeContext& ctx);

}  // namespace ghilb
