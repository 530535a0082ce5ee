#pragma once

// Arc differences, difference coverage of a starter factor, and orbit
// development under the rotation that shifts every residue by one and fixes
// the infinity points.

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "owp/core.hpp"

namespace owp {

struct Difference {
  enum class Kind {
    PureFin,  // cyclic world (u_i, u_{i+d})
    InfIn,    // (u_i, inf_j); value = j
    InfOut,   // (inf_j, u_i); value = j
    Undef,    // between two infinity points
    LPure,    // (x_i, x_{i+d})
    RPure,    // (y_i, y_{i+d})
    LMixed,   // (x_i, y_{i+d})
    RMixed,   // (y_{i+d}, x_i)
    LInfIn,   // (x_i, inf)
    LInfOut,  // (inf, x_i)
    RInfIn,   // (y_i, inf)
    RInfOut,  // (inf, y_i)
  };

  Kind kind = Kind::Undef;
  int value = 0;

  static Difference pure(int d) { return {Kind::PureFin, d}; }
  static Difference inf_in(int j = 1) { return {Kind::InfIn, j}; }
  static Difference inf_out(int j = 1) { return {Kind::InfOut, j}; }
  static Difference undef() { return {Kind::Undef, 0}; }

  auto operator<=>(const Difference&) const = default;
};

std::string to_string(const Difference& d);

using DifferenceCoverage = std::map<Difference, int>;

/// Classifies an arc. Throws std::invalid_argument for labels outside the
/// space, loops, or arcs mixing the two vertex worlds.
Difference arc_difference(const VertexSpace& space, const Arc& a);

DifferenceCoverage coverage(const VertexSpace& space, const TwoFactor& f);

/// Shifts every finite index by `s` (any sign); infinity points are fixed.
VertexLabel rotate(const VertexSpace& space, const VertexLabel& v, long long s);
DirectedCycle rotate(const VertexSpace& space, const DirectedCycle& c, long long s);
TwoFactor rotate(const VertexSpace& space, const TwoFactor& f, long long s);

/// [rotate(starter, 0), ..., rotate(starter, count - 1)].
std::vector<TwoFactor> develop_orbit(const VertexSpace& space, const TwoFactor& starter,
                                     int count);

/// True iff every difference in `target` is covered exactly once and no
/// other difference is covered.
bool check_exact_once(const DifferenceCoverage& c, const std::set<Difference>& target);

/// {d, m - d} for each listed d, reduced mod m. Convenience for "+-d" sets.
std::set<Difference> symmetric_pure_set(int modulus, const std::vector<int>& ds);

}  // namespace owp
