#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ndpoly/hull_analysis.hpp"
#include "ndpoly/polygon.hpp"

namespace ndpoly {

inline constexpr Coord kMaxEnumerationGenus = 10;
inline constexpr Coord kMaxBoundedBoxGenus = 5;

enum class EnumMethod { HullRecursion, BoundedBox };

struct EnumerateOptions {
    bool parallel = true;   // serial path kept as the reference implementation
    bool use_cache = true;  // per-genus memoization of hull_recursion corpora
};

// All equivalence classes of convex lattice polygons with exactly g interior
// lattice points; classes are stored in canonical form, sorted by
// (vertex count, vertex list).
struct GenusCorpus {
    Coord genus = 0;
    std::vector<LatticePolygon> classes;
    std::string provenance;
};

GenusCorpus enumerate_by_genus(Coord g, EnumMethod method = EnumMethod::HullRecursion,
                               const EnumerateOptions& opts = {});

// All classes (over every genus) with g^(1) = 1 and m = 2g+2: the interior
// hull must be one of the 16 genus-1 polygons and the polygon lies inside its
// relaxation, so the search is finite.
std::vector<LatticePolygon> exceptional_g1_polytopes(const EnumerateOptions& opts = {});

struct ModuliRow {
    Coord g = 0;
    std::optional<Coord> max_m_maximal_nonhyp;  // absent when no such class exists
    Coord hyperelliptic_dim = 0;                // 2g - 1
    Coord claimed_dim = 0;                      // min(2g+1, 3g-3), 16 at g = 7
    std::vector<LatticePolygon> witnesses;      // maximizers of m
};

std::vector<ModuliRow> moduli_table(Coord g_max, const EnumerateOptions& opts = {});

enum class Genus0Class { MultipleOf2Sigma, WidthLE1, Neither };

Genus0Class genus0_classifier(const LatticePolygon& p);

// Exhaustive enumeration of convex polygons with vertices in a finite window
// subject to interior-point constraints; the engine behind both enumeration
// methods, exposed for the oracle cross-checks in the tests.
struct WindowSearchSpec {
    std::vector<LatticePoint> window;
    // Exactly these points must be the interior lattice points (sorted).
    std::optional<std::vector<LatticePoint>> exact_interior;
    // Used when exact_interior is absent: emit polygons with this many
    // interior points (and prune chains exceeding it).
    Coord interior_count = -1;
    Coord max_twice_area = 0;
    bool normalize_translation = false;  // keep only polygons touching both axes
};

std::vector<LatticePolygon> search_window_polygons(const WindowSearchSpec& spec,
                                                   bool parallel);

}  // namespace ndpoly
