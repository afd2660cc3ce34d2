#pragma once

#include <utility>
#include <vector>

#include "json.hpp"
#include "maxgraph/components.hpp"
#include "maxgraph/params.hpp"

namespace maxgraph {

/// Cone directions along the positive axis (dirs_pos, j = 1..m) and the negative axis (dirs_neg, k = 1..n).
struct ConeConfig {
    int m = 0;
    int n = 0;
    std::vector<ConeDirection> dirs_pos;
    std::vector<ConeDirection> dirs_neg;

    friend bool operator==(const ConeConfig&, const ConeConfig&) = default;
};

/// Lexicographic order with up < down, positive list first.
bool operator<(const ConeConfig& a, const ConeConfig& b);

/// All (m, n) with m + n = total, m >= n >= 0, m >= 1.
std::vector<std::pair<int, int>> enumerate_types(int total);

/// The configurations identified with c: global up/down flip, reversal of both lists,
/// and (when m = n) exchange of the two lists.
std::vector<ConeConfig> orbit(const ConeConfig& c);

/// Lexicographically smallest element of the orbit (axes swapped first when n > m).
/// Its first positive-axis cone points up.
ConeConfig canonicalize(const ConeConfig& c);

struct CatalogClass {
    ConeConfig representative;
    int class_size = 0;  // number of raw direction assignments in the class
};

/// Canonical classes of type (m, n), sorted; class numbers in the CLI are 1-based positions here.
std::vector<CatalogClass> catalog_classes(int m, int n);

/// Evenly spaced branch points a_j = 1 + (j - 1) spacing, b_k = -1 - (k - 1) spacing,
/// signs from the directions (positive axis: up means alpha = -1; negative axis: up means beta = +1).
SurfaceParams instantiate(const ConeConfig& c, double spacing = 1.0);

/// Reads the directions back from the signs.
ConeConfig config_of(const SurfaceParams& p);

nlohmann::json to_json(const ConeConfig& c);
/// {"cones": N, "types": [{"m", "n", "classes": [...], "count"}], "total": T}
nlohmann::json catalog_json(int total);

}  // namespace maxgraph
