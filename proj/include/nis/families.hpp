#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nis/graph.hpp"
#include "nis/polynomial.hpp"

namespace nis {

enum class Family { edgeless, star, complete, path, cycle, R, G_special };

struct FamilySpec {
  Family family = Family::edgeless;
  int n = 0;
};

std::string_view family_name(Family f);
/// Accepts the names produced by family_name. Throws std::invalid_argument.
Family parse_family(std::string_view name);
int family_min_order(Family f);
std::vector<Family> all_families();

/// Vertex labelings:
///   star     0 = center
///   path     0–1–…–(n−1)
///   cycle    path plus (n−1, 0)
///   R        0 = center, 1..n−3 leaves, n−2 subdivision vertex, n−1 its leaf
///   G_special edge (0,1), rest isolated
/// Throws std::invalid_argument below the family minimum order.
Graph build(const FamilySpec& spec);

/// Closed-form (σ, S, av) for l ∈ {0, 1}. Cycles have no closed form and
/// throw std::invalid_argument, as does any other l.
NisSummary closed_form_summary(const FamilySpec& spec, int l);

/// The exact value the R_n closed form gives for av₁.
Rational r_family_av1(int n);

struct RatioRow {
  std::string name;
  Graph graph;
  Rational engine_value;     // σ₁/σ₀ computed by the engine
  Rational reference_value;  // known exact value
};

/// σ₁/σ₀ for P₅, C₄, P₄, C₃, P₃ and the equality case P₂.
std::vector<RatioRow> ratio_table();

}  // namespace nis
