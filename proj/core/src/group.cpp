#include "ghilb/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "ghilb/errors.hpp"

namespace ghilb {

namespace {

struct Cursor {
  std::string_view s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  long number() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("group spec: expected a nonnegative integer at offset " +
                                     std::to_string(start));
    long v = 0;
    for (size_t k = start; k < i; ++k) {
      v = v * 10 + (s[k] - '0');
      if (v > 1000000) throw ParseError("group spec: integer too large");
    }
    return v;
  }
  bool done() {
    skip_ws();
    return i == s.size();
  }
};

Generator parse_generator(Cursor& c) {
  if (c.number() != 1) throw ParseError("group spec: generator must start with '1/'");
  if (!c.eat('/')) throw ParseError("group spec: expected '/'");
  long order = c.number();
  if (order == 0) throw ParseError("group spec: generator order must be positive");
  if (!c.eat('(')) throw ParseError("group spec: expected '('");
  std::array<long, 3> w{};
  for (int k = 0; k < 3; ++k) {
    w[k] = c.number();
    if (k < 2 && !c.eat(',')) throw ParseError("group spec: expected ','");
  }
  if (!c.eat(')')) throw ParseError("group spec: expected ')'");
  if ((w[0] + w[1] + w[2]) % order != 0)
    throw ParseError("group spec: weights (" + std::to_string(w[0]) + "," + std::to_string(w[1]) +
                     "," + std::to_string(w[2]) + ") violate the determinant-1 condition mod " +
                     std::to_string(order));
  for (auto& x : w) x %= order;
  return Generator{order, w};
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  Cursor c{text};
  GroupSpec spec;
  spec.generators.push_back(parse_generator(c));
  while (c.eat(';')) spec.generators.push_back(parse_generator(c));
  if (!c.done()) throw ParseError("group spec: trailing input at offset " + std::to_string(c.i));
  return spec;
}

std::string format_group_spec(const GroupSpec& spec) {
  std::string out;
  for (size_t i = 0; i < spec.generators.size(); ++i) {
    const auto& g = spec.generators[i];
    if (i) out += ";";
    out += "1/" + std::to_string(g.order) + "(" + std::to_string(g.weights[0]) + "," +
           std::to_string(g.weights[1]) + "," + std::to_string(g.weights[2]) + ")";
  }
  return out;
}

CharacterTable::CharacterTable(const Mat3z& mBasis, std::vector<Generator> generators)
    : generators_(std::move(generators)) {
  SmithDecomposition s = smith_form(mBasis);
  diag_ = s.diag;
  v_ = s.v;
  vinv_ = unimodular_inverse(s.v);
  Int r = diag_[0] * diag_[1] * diag_[2];
  if (!r.fits_slong_p()) throw ConsistencyError("character table: group order out of range");
  r_ = r.get_si();
}

Character CharacterTable::class_of(const Vec3l& e) const {
  return class_of(Vec3z{to_int(e[0]), to_int(e[1]), to_int(e[2])});
}

Character CharacterTable::class_of(const Vec3z& e) const {
  Character c;
  for (int j = 0; j < 3; ++j) {
    Int x = e[0] * v_[0][j] + e[1] * v_[1][j] + e[2] * v_[2][j];
    Int m;
    mpz_fdiv_r(m.get_mpz_t(), x.get_mpz_t(), diag_[j].get_mpz_t());
    c.coords[j] = m.get_si();
  }
  return c;
}

Character CharacterTable::add(const Character& a, const Character& b) const {
  Character c;
  for (int j = 0; j < 3; ++j) c.coords[j] = (a.coords[j] + b.coords[j]) % diag_[j].get_si();
  return c;
}

Character CharacterTable::negate(const Character& a) const {
  Character c;
  for (int j = 0; j < 3; ++j) c.coords[j] = (diag_[j].get_si() - a.coords[j]) % diag_[j].get_si();
  return c;
}

long CharacterTable::flat_index(const Character& a) const {
  long d0 = diag_[0].get_si(), d1 = diag_[1].get_si();
  return a.coords[0] + d0 * (a.coords[1] + d1 * a.coords[2]);
}

Character CharacterTable::from_flat(long index) const {
  long d0 = diag_[0].get_si(), d1 = diag_[1].get_si();
  Character c;
  c.coords[0] = index % d0;
  index /= d0;
  c.coords[1] = index % d1;
  c.coords[2] = index / d1;
  return c;
}

Vec3l CharacterTable::representative(const Character& a) const {
  Vec3l e{};
  for (int j = 0; j < 3; ++j) {
    Int x = a.coords[0] * vinv_[0][j] + a.coords[1] * vinv_[1][j] + a.coords[2] * vinv_[2][j];
    if (!x.fits_slong_p()) throw ConsistencyError("character representative out of range");
    e[j] = x.get_si();
  }
  return e;
}

std::string CharacterTable::label(const Character& a) const {
  Vec3l e = representative(a);
  std::vector<long> values;
  bool wide = false;
  for (const auto& g : generators_) {
    long v = 0;
    for (int k = 0; k < 3; ++k) v += e[k] % g.order * g.weights[k] % g.order;
    v %= g.order;
    if (v < 0) v += g.order;
    values.push_back(v);
    if (g.order > 10) wide = true;
  }
  std::string out = "χ";  // chi
  for (size_t i = 0; i < values.size(); ++i) {
    if (wide && i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

namespace {

Vec3q mod1(const Vec3q& v) {
  Vec3q out;
  for (int i = 0; i < 3; ++i) {
    Rat x = v[i];
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    out[i] = x - Rat(fl);
  }
  return out;
}

}  // namespace

LatticeContext build_lattice_context(const GroupSpec& spec) {
  if (spec.generators.empty()) throw ParseError("group spec: no generators");
  LatticeContext ctx;
  ctx.spec = spec;

  // closure of the generator vectors under addition mod 1
  std::vector<Vec3q> gens;
  for (const auto& g : spec.generators) {
    Vec3q v{Rat(g.weights[0], g.order), Rat(g.weights[1], g.order), Rat(g.weights[2], g.order)};
    v[0].canonicalize();
    v[1].canonicalize();
    v[2].canonicalize();
    gens.push_back(mod1(v));
  }
  std::set<Vec3q> seen;
  std::vector<Vec3q> frontier{Vec3q{Rat(0), Rat(0), Rat(0)}};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    Vec3q v = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      Vec3q w = mod1(Vec3q{v[0] + g[0], v[1] + g[1], v[2] + g[2]});
      if (seen.insert(w).second) frontier.push_back(w);
    }
  }
  ctx.groupElements.assign(seen.begin(), seen.end());
  ctx.r = static_cast<long>(ctx.groupElements.size());

  // N = Z^3 + sum Z.v_g; clear denominators by L = lcm of generator orders
  Int lcm = 1;
  for (const auto& g : spec.generators) lcm = lcm / gcd(lcm, Int(g.order)) * g.order;
  std::vector<Vec3z> rows;
  for (int i = 0; i < 3; ++i) {
    Vec3z row{Int(0), Int(0), Int(0)};
    row[i] = lcm;
    rows.push_back(row);
  }
  for (const auto& g : gens) {
    Vec3z row;
    for (int i = 0; i < 3; ++i) {
      Rat scaled = g[i] * Rat(lcm);
      if (scaled.get_den() != 1) throw ConsistencyError("lattice: generator does not scale to Z^3");
      row[i] = scaled.get_num();
    }
    rows.push_back(row);
  }
  Mat3z scaledBasis = hnf_row_basis(rows);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ctx.nBasis[i][j] = Rat(scaledBasis[i][j], lcm);
      ctx.nBasis[i][j].canonicalize();
    }

  // index [N : Z^3] must equal the group order
  Rat detN = det3(ctx.nBasis[0], ctx.nBasis[1], ctx.nBasis[2]);
  if (abs(detN) * ctx.r != 1)
    throw ConsistencyError("lattice: index [N:Z^3] disagrees with group order " +
                           std::to_string(ctx.r));

  // M = dual lattice: rows are the dual basis of nBasis, must be integral
  Mat3q inv = inverse3(ctx.nBasis[0], ctx.nBasis[1], ctx.nBasis[2]);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat entry = inv[j][i];  // row i of M = column i of nBasis^{-1}
      if (entry.get_den() != 1) throw ConsistencyError("lattice: dual basis is not integral");
      ctx.mBasis[i][j] = entry.get_num();
    }

  ctx.characters = CharacterTable(ctx.mBasis, spec.generators);
  if (ctx.characters.order() != ctx.r)
    throw ConsistencyError("lattice: character count disagrees with group order");

  // every N-point has integer coordinate sum (det-1 consequence)
  for (const auto& v : ctx.groupElements) {
    Rat s = v[0] + v[1] + v[2];
    if (s.get_den() != 1) throw ConsistencyError("lattice: group element with fractional age");
  }
  return ctx;
}

bool LatticeContext::contains_in_n(const Vec3q& v) const {
  for (int i = 0; i < 3; ++i) {
    Rat p = dot(mBasis[i], v);
    if (p.get_den() != 1) return false;
  }
  return true;
}

Vec3z LatticeContext::n_coordinates(const Vec3q& v) const {
  Vec3z out;
  for (int i = 0; i < 3; ++i) {
    Rat p = dot(mBasis[i], v);
    if (p.get_den() != 1) throw ConsistencyError("n_coordinates: point not in N");
    out[i] = p.get_num();
  }
  return out;
}

Character character_of(const Vec3l& exponent, const LatticeContext& ctx) {
  return ctx.characters.class_of(exponent);
}

std::vector<JuniorPoint> junior_points(const LatticeContext& ctx) {
  std::vector<JuniorPoint> pts;
  pts.push_back({Vec3q{Rat(1), Rat(0), Rat(0)}, true, true});
  pts.push_back({Vec3q{Rat(0), Rat(1), Rat(0)}, true, true});
  pts.push_back({Vec3q{Rat(0), Rat(0), Rat(1)}, true, true});
  for (const auto& v : ctx.groupElements) {
    if (v[0] + v[1] + v[2] == 1) {
      bool boundary = v[0] == 0 || v[1] == 0 || v[2] == 0;
      pts.push_back({v, false, boundary});
    }
  }
  std::sort(pts.begin(), pts.end(),
            [](const JuniorPoint& a, const JuniorPoint& b) { return a.v < b.v; });
  return pts;
}

}  // namespace ghilb
