#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "resona/allpairs.hpp"
#include "resona/features.hpp"
#include "resona/vec2.hpp"

namespace resona {

// Quadrant order. Boundary points are closed on the north/east side:
// x >= center.x counts as east, y >= center.y counts as north.
enum Quadrant : int { kNE = 0, kNW = 1, kSW = 2, kSE = 3 };

// One square tree cell. A leaf (no children) holds its bodies by value in
// `residents`; below max depth that is at most one body, and only the deepest
// level may bucket several coincident or indistinguishable positions.
// `mass` and `center_of_mass` are valid after compute_mass_distribution.
struct QuadNode {
  Vec2 center;
  double side = 0.0;
  std::uint32_t num_models = 0;
  std::vector<Body> residents;
  std::array<std::unique_ptr<QuadNode>, 4> children;
  double mass = 0.0;
  Vec2 center_of_mass;

  bool is_leaf() const {
    return !children[0] && !children[1] && !children[2] && !children[3];
  }
  bool contains(const Vec2& p) const {
    const double h = side / 2.0;
    return p.x >= center.x - h && p.x <= center.x + h && p.y >= center.y - h &&
           p.y <= center.y + h;
  }
};

inline constexpr std::uint32_t kDefaultMaxDepth = 64;

// The feature plane: the unit square widened by a hair so bodies sitting
// exactly on its edge still pass the containment check.
inline constexpr double kRootMargin = 1e-9;

struct QuadTree {
  std::unique_ptr<QuadNode> root;
  std::uint32_t max_depth = kDefaultMaxDepth;
  std::size_t body_count = 0;
};

Quadrant get_quadrant(const Vec2& center, const Vec2& position);

// Insert one body into the subtree rooted at `node` (at `depth`). An empty
// leaf adopts the body; an occupied leaf subdivides and pushes both bodies
// into child quadrants, except at max_depth where the leaf simply buckets
// them. num_models grows by one at every node the insertion visits.
void insert_to_node(QuadNode& node, const Body& body, std::uint32_t depth,
                    std::uint32_t max_depth);

// Fresh tree over the unit-square root containing all bodies, inserted in
// input order (equal inputs give structurally equal trees). A position
// outside the root bounds raises OutOfBounds with the body id.
QuadTree build_tree(std::span<const Body> bodies,
                    std::uint32_t max_depth = kDefaultMaxDepth);

// Post-order aggregation: each node's mass becomes the sum over its bodies
// and center_of_mass their mass-weighted mean position.
void compute_mass_distribution(QuadNode& node);

struct PointForce {
  Vec2 force;
  double amplitude = 0.0;
  std::uint64_t node_evaluations = 0;
};

// Accumulate the tree's contribution to one target. Leaves evaluate the pair
// kernel per resident (the target itself is skipped); an internal node whose
// side l and center-of-mass distance D satisfy l/D < theta is collapsed to a
// single pseudo-body evaluation; anything nearer is opened and the children
// summed. A node whose bounds contain the target is always opened, so no
// monopole can smuggle the target's own mass into its force.
PointForce calculate_force(const QuadNode& node, const Body& target,
                           const KernelConfig& k);

// calculate_force for every body, accumulated into an InteractionResult whose
// counter totals node evaluations. The tree is read-only here, so targets may
// be spread across workers. `bodies` must be the set the tree was built from.
InteractionResult compute_force(const QuadTree& tree, std::span<const Body> bodies,
                                const KernelConfig& k, unsigned workers = 0);

// Build + aggregate + evaluate in one call.
InteractionResult barnes_hut(std::span<const Body> bodies, const KernelConfig& k,
                             std::uint32_t max_depth = kDefaultMaxDepth,
                             unsigned workers = 0);

// One node per line, indented by depth: depth, center, side, num_models,
// mass, center of mass.
void dump_tree(const QuadTree& tree, std::ostream& os);

}  // namespace resona
