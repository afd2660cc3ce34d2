#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "maxgraph/components.hpp"
#include "maxgraph/integrator.hpp"
#include "maxgraph/params.hpp"

namespace maxgraph {

struct GridSpec {
    int radial_samples = 200;
    int angular_samples = 100;  // includes theta = 0 and theta = pi
    double r_min = 0.0;         // <= 0 selects 0.05 * min(a_1, |b_1|)
    double r_max = 0.0;         // <= 0 selects 20 * max(a_{2m}, |b_{2n}|)
    int seam_refinement = 3;    // extra radii per base cell touching a singular interval
};

/// Fills in the automatic radii and checks the grid invariants (throws InvalidArgument).
GridSpec resolve_grid(const GridSpec& g, const SurfaceParams& p);

/// Radii actually used: log-spaced base radii plus seam refinement.
std::vector<double> grid_radii(const GridSpec& resolved, const SurfaceParams& p);

struct MeshSamples {
    GridSpec grid;
    double basepoint = 0.0;
    std::vector<double> radii;
    std::vector<double> angles;
    /// Grid samples, radius-major: index = i * angles.size() + j.
    std::vector<ImmersionSample> grid_samples;
    /// Component index per grid sample for the theta = 0 / pi rows inside an interval, -1 otherwise.
    std::vector<int> collapsed;
    /// Third component of the Gauss vector at every grid sample.
    std::vector<double> nu3;
    std::vector<SingularComponent> components;
    std::vector<ImmersionSample> apexes;  // one per component, appended after the grid
    std::vector<ConeDirection> directions;
    double max_quad_error = 0.0;

    std::size_t size() const { return grid_samples.size() + apexes.size(); }
    std::size_t index(std::size_t i, std::size_t j) const { return i * angles.size() + j; }
};

/// Integrates f over the log-polar grid of the closed upper half-plane annulus.
/// Consecutive grid points are joined by short arcs and ray pieces along the standard route,
/// so every sample carries the same value as a direct immersion call.
MeshSamples sample_fundamental(const SurfaceParams& p, const GridSpec& g, double basepoint);
inline MeshSamples sample_fundamental(const SurfaceParams& p, const GridSpec& g = {}) {
    return sample_fundamental(p, g, default_basepoint(p));
}

struct GraphMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<std::uint32_t, 3>> triangles;
    std::vector<std::uint32_t> cone_vertices;
    std::vector<ConeDirection> cone_directions;
    int copies = 0;
    double mirror_constant = 0.0;

    /// Per-vertex Gauss third component; 0 at apex vertices.
    std::vector<double> nu3;
    std::vector<bool> is_apex;
    /// Vertices and triangles of one fundamental copy (copy 0 comes first).
    std::size_t block_vertices = 0;
    std::size_t block_triangles = 0;
    /// Boundary images in increasing radius, apexes included once: theta = 0 row, then the
    /// theta = pi row of the upper sheet and of the mirror sheet.
    std::vector<std::uint32_t> row_zero;
    std::vector<std::uint32_t> row_pi;
    std::vector<std::uint32_t> row_pi_mirror;
    /// Upper-sheet vertex of each mirror vertex (identity on the shared theta = 0 row).
    std::vector<std::pair<std::uint32_t, std::uint32_t>> mirror_pairs;
    double weld_residual = 0.0;
};

struct AssembleOptions {
    double weld_tolerance = 1e-6;
};

/// Triangulates the grid, collapses seam samples to the apexes, adds the mirror sheet
/// (x1, 2c - x2, x3) and `copies` translates by (0, 2 pi k, 0).
/// Throws WeldFailure when an integrated seam sample is farther than the tolerance from its apex.
GraphMesh assemble(const MeshSamples& s, const SurfaceParams& p, int copies, const AssembleOptions& opts = {});

struct GraphCheck {
    double min_nu3 = 0.0;
    bool normals_up = false;
    bool row_zero_monotone = false;
    bool row_pi_monotone = false;
    std::size_t overlapping_pairs = 0;
    std::size_t degenerate_triangles = 0;
    std::size_t pairs_tested = 0;
    bool closed_cone_fans = false;
    bool pass = false;
};

/// Checks the graph property on copy 0 of the mesh.
GraphCheck graph_check(const GraphMesh& mesh);

/// Brute-force O(T^2) overlap count of the projected triangles of copy 0.
std::size_t brute_force_overlaps(const GraphMesh& mesh);

/// True when the link of every cone vertex is a single cycle, after identifying coincident
/// vertices of neighboring copies (negative-axis cones close up across the copy seam).
bool cone_fans_closed(const GraphMesh& mesh);

void export_obj(const GraphMesh& mesh, const std::string& path);
std::string obj_string(const GraphMesh& mesh);
void export_ply(const GraphMesh& mesh, const std::string& path);

/// Writes `data` to a sibling temporary file and renames it over `path`. Throws IOFailure.
void write_file_atomic(const std::string& path, const std::string& data);

}  // namespace maxgraph
