#pragma once

#include <span>
#include <string>
#include <vector>

#include "mawdist/measures.hpp"

namespace mawdist {

struct PhyloNode {
  std::string label;           // nonempty for leaves only
  int parent = -1;
  double length = 0.0;         // branch to parent; 0 at the root
  std::vector<int> children;   // empty for leaves
};

/// Tree over the labels of a distance matrix. UPGMA trees are rooted and
/// ultrametric; neighbor-joining trees are unrooted and are stored rooted at
/// the final three-way join for serialization.
class PhyloTree {
 public:
  PhyloTree(std::vector<PhyloNode> nodes, int root, bool rooted);

  const std::vector<PhyloNode>& nodes() const { return nodes_; }
  int root() const { return root_; }
  bool rooted() const { return rooted_; }

  std::size_t leaf_count() const { return leaf_count_; }
  /// Leaf labels in sorted order.
  std::vector<std::string> leaf_labels() const;

 private:
  std::vector<PhyloNode> nodes_;
  int root_;
  bool rooted_;
  std::size_t leaf_count_ = 0;
};

/// Size-weighted average-linkage clustering: repeatedly merges the closest
/// pair at height d/2. Ties break toward the pair whose clusters hold the
/// smallest labels, so relabeling permutations yield the identical tree.
/// Needs at least 2 taxa.
PhyloTree upgma(const DistanceMatrix& matrix);

/// Saitou-Nei neighbor joining with the standard Q criterion and limb-length
/// formulas; a negative limb is clamped to zero and its deficit moved to the
/// sibling branch. Same label-order tie-breaking as upgma. Needs at least
/// 3 taxa (InputError below that).
PhyloTree neighbor_joining(const DistanceMatrix& matrix);

/// Parenthesized serialization terminated by ';'. Children are ordered by
/// the smallest leaf label below them, so equal trees print identically.
/// Branch lengths use %.*g with the given significant digits.
std::string to_newick(const PhyloTree& tree, bool include_lengths = true,
                      int precision = 6);

/// True iff some edge of the tree, read as unrooted, splits exactly `labels`
/// from the remaining leaves. The full leaf set is trivially a clade; the
/// empty set never is. Unknown labels throw InputError.
bool has_clade(const PhyloTree& tree, std::span<const std::string> labels);

/// Indented outline of the tree for terminal inspection.
std::string render_ascii(const PhyloTree& tree, int precision = 6);

}  // namespace mawdist
