#include "resona/barneshut.hpp"

#include <atomic>
#include <cmath>
#include <ostream>

#include "resona/errors.hpp"
#include "resona/parallel.hpp"

namespace resona {
namespace {

std::unique_ptr<QuadNode> make_child(const QuadNode& parent, Quadrant q) {
  auto child = std::make_unique<QuadNode>();
  child->side = parent.side / 2.0;
  const double offset = parent.side / 4.0;
  switch (q) {
    case kNE:
      child->center = {parent.center.x + offset, parent.center.y + offset};
      break;
    case kNW:
      child->center = {parent.center.x - offset, parent.center.y + offset};
      break;
    case kSW:
      child->center = {parent.center.x - offset, parent.center.y - offset};
      break;
    case kSE:
      child->center = {parent.center.x + offset, parent.center.y - offset};
      break;
  }
  return child;
}

void insert_to_child(QuadNode& node, const Body& body, std::uint32_t depth,
                     std::uint32_t max_depth) {
  const Quadrant q = get_quadrant(node.center, body.position);
  if (!node.children[q]) node.children[q] = make_child(node, q);
  insert_to_node(*node.children[q], body, depth + 1, max_depth);
}

}  // namespace

Quadrant get_quadrant(const Vec2& center, const Vec2& position) {
  const bool east = position.x >= center.x;
  const bool north = position.y >= center.y;
  if (north) return east ? kNE : kNW;
  return east ? kSE : kSW;
}

void insert_to_node(QuadNode& node, const Body& body, std::uint32_t depth,
                    std::uint32_t max_depth) {
  if (depth > max_depth)
    throw Error("quadtree: insertion descended past max depth");
  ++node.num_models;

  if (!node.is_leaf()) {
    insert_to_child(node, body, depth, max_depth);
    return;
  }
  if (node.residents.empty() || depth == max_depth) {
    // Empty leaf adopts the body; the deepest level buckets whatever arrives,
    // since further subdivision cannot separate coincident positions.
    node.residents.push_back(body);
    return;
  }
  // Occupied leaf: push the prior resident and the new body one level down.
  std::vector<Body> prior;
  prior.swap(node.residents);
  for (const Body& r : prior) insert_to_child(node, r, depth, max_depth);
  insert_to_child(node, body, depth, max_depth);
}

QuadTree build_tree(std::span<const Body> bodies, std::uint32_t max_depth) {
  if (bodies.empty()) throw InvalidArgument("build_tree: empty body set");

  QuadTree tree;
  tree.max_depth = max_depth;
  tree.root = std::make_unique<QuadNode>();
  tree.root->center = {0.5, 0.5};
  tree.root->side = 1.0 + 2.0 * kRootMargin;

  for (const Body& b : bodies) {
    if (!tree.root->contains(b.position))
      throw OutOfBounds(b.id, "build_tree: body " + std::to_string(b.id) +
                                  " lies outside the unit square");
    insert_to_node(*tree.root, b, 0, max_depth);
    ++tree.body_count;
  }
  return tree;
}

void compute_mass_distribution(QuadNode& node) {
  node.mass = 0.0;
  node.center_of_mass = Vec2{};
  if (node.is_leaf()) {
    for (const Body& r : node.residents) {
      node.mass += r.mass;
      node.center_of_mass += r.mass * r.position;
    }
  } else {
    for (auto& child : node.children) {
      if (!child) continue;
      compute_mass_distribution(*child);
      node.mass += child->mass;
      node.center_of_mass += child->mass * child->center_of_mass;
    }
  }
  if (node.mass > 0.0) node.center_of_mass *= 1.0 / node.mass;
}

namespace {

void accumulate_force(const QuadNode& node, const Body& target,
                      const KernelConfig& k, PointForce& acc) {
  if (node.num_models == 0) return;

  if (node.is_leaf()) {
    for (const Body& r : node.residents) {
      if (r.id == target.id) continue;
      const double similarity = calculate_similarity(target, r, k);
      const PairContribution c = adjust_amplitude(target, r, similarity, k);
      acc.amplitude += c.d_amplitude;
      acc.force += c.d_force;
      ++acc.node_evaluations;
    }
    return;
  }

  // A node holding the target must be opened: its monopole would otherwise
  // fold the target's own mass into the result.
  if (!node.contains(target.position)) {
    const double dist = (node.center_of_mass - target.position).norm();
    if (dist > 0.0 && node.side / dist < k.theta) {
      Body pseudo;
      pseudo.id = -1;
      pseudo.position = node.center_of_mass;
      pseudo.mass = node.mass;
      const double similarity = calculate_similarity(target, pseudo, k);
      const PairContribution c = adjust_amplitude(target, pseudo, similarity, k);
      acc.amplitude += c.d_amplitude;
      acc.force += c.d_force;
      ++acc.node_evaluations;
      return;
    }
  }

  for (const auto& child : node.children) {
    if (child) accumulate_force(*child, target, k, acc);
  }
}

}  // namespace

PointForce calculate_force(const QuadNode& node, const Body& target,
                           const KernelConfig& k) {
  PointForce acc;
  accumulate_force(node, target, k, acc);
  return acc;
}

InteractionResult compute_force(const QuadTree& tree, std::span<const Body> bodies,
                                const KernelConfig& k, unsigned workers) {
  if (!tree.root) throw InvalidArgument("compute_force: tree not built");
  if (bodies.size() != tree.body_count)
    throw InvalidArgument("compute_force: " + std::to_string(bodies.size()) +
                          " bodies given but the tree holds " +
                          std::to_string(tree.body_count));
  k.validate();

  InteractionResult result;
  result.bodies.resize(bodies.size());

  std::atomic<std::uint64_t> evaluations{0};
  parallel_chunks(bodies.size(), workers,
                  [&](std::size_t begin, std::size_t end, unsigned) {
                    std::uint64_t local_evals = 0;
                    for (std::size_t i = begin; i < end; ++i) {
                      const PointForce pf =
                          calculate_force(*tree.root, bodies[i], k);
                      result.bodies[i] = {bodies[i].id, pf.force, pf.amplitude};
                      local_evals += pf.node_evaluations;
                    }
                    evaluations.fetch_add(local_evals, std::memory_order_relaxed);
                  });

  result.evaluations = evaluations.load();
  return result;
}

InteractionResult barnes_hut(std::span<const Body> bodies, const KernelConfig& k,
                             std::uint32_t max_depth, unsigned workers) {
  QuadTree tree = build_tree(bodies, max_depth);
  compute_mass_distribution(*tree.root);
  return compute_force(tree, bodies, k, workers);
}

namespace {

void dump_node(const QuadNode& node, int depth, std::ostream& os) {
  for (int i = 0; i < depth; ++i) os << "  ";
  os << depth << ", (" << node.center.x << ", " << node.center.y << "), "
     << node.side << ", " << node.num_models << ", " << node.mass << ", ("
     << node.center_of_mass.x << ", " << node.center_of_mass.y << ")\n";
  for (const auto& child : node.children) {
    if (child) dump_node(*child, depth + 1, os);
  }
}

}  // namespace

void dump_tree(const QuadTree& tree, std::ostream& os) {
  if (tree.root) dump_node(*tree.root, 0, os);
}

}  // namespace resona
