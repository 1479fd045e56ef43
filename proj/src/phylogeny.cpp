#include "mawdist/phylogeny.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <unordered_map>

#include "mawdist/errors.hpp"

namespace mawdist {

PhyloTree::PhyloTree(std::vector<PhyloNode> nodes, int root, bool rooted)
    : nodes_(std::move(nodes)), root_(root), rooted_(rooted) {
  if (root_ < 0 || root_ >= static_cast<int>(nodes_.size())) {
    throw InternalError("tree root out of range");
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const PhyloNode& n = nodes_[i];
    if (n.children.empty() && n.label.empty()) {
      throw InternalError("leaf without a label");
    }
    for (int c : n.children) {
      if (c < 0 || c >= static_cast<int>(nodes_.size()) ||
          nodes_[c].parent != static_cast<int>(i)) {
        throw InternalError("inconsistent parent/child links");
      }
    }
    if (n.children.empty()) {
      ++leaf_count_;
    }
  }
}

std::vector<std::string> PhyloTree::leaf_labels() const {
  std::vector<std::string> labels;
  for (const PhyloNode& n : nodes_) {
    if (n.children.empty()) {
      labels.push_back(n.label);
    }
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

namespace {

// Agglomeration state shared by both methods. Clusters live in slots (old
// taxa keep their slots, merges claim fresh ones); `active` stays sorted by
// key, the smallest label rank inside the cluster, which makes pair scans,
// sums, and tie-breaks independent of the input label permutation.
struct Agglomerator {
  explicit Agglomerator(const DistanceMatrix& matrix)
      : k(matrix.size()),
        slots(2 * k),
        work(slots * slots, 0.0),
        next_slot_(static_cast<int>(k)) {
    std::vector<int> rank_of(k);
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return matrix.labels()[a] < matrix.labels()[b];
    });
    for (std::size_t r = 0; r < k; ++r) {
      rank_of[order[r]] = static_cast<int>(r);
    }
    for (std::size_t i = 0; i < k; ++i) {
      nodes.push_back(PhyloNode{matrix.labels()[i], -1, 0.0, {}});
      clusters.push_back(Cluster{static_cast<int>(i), static_cast<int>(i),
                                 rank_of[i], 1, 0.0});
      for (std::size_t j = 0; j < k; ++j) {
        work[i * slots + j] = matrix.at(i, j);
      }
    }
    active.resize(k);
    std::iota(active.begin(), active.end(), 0);
    std::sort(active.begin(), active.end(),
              [&](int a, int b) { return clusters[a].key < clusters[b].key; });
  }

  struct Cluster {
    int slot;
    int node;
    int key;     // smallest label rank among members
    int size;
    double height;  // UPGMA merge height
  };

  double dist(int ca, int cb) const {
    return work[static_cast<std::size_t>(clusters[ca].slot) * slots +
                clusters[cb].slot];
  }
  void set_dist(int ca, int cb, double v) {
    work[static_cast<std::size_t>(clusters[ca].slot) * slots +
         clusters[cb].slot] = v;
    work[static_cast<std::size_t>(clusters[cb].slot) * slots +
         clusters[ca].slot] = v;
  }

  // new internal node adopting the two clusters with the given branch lengths
  int join(int ca, int cb, double len_a, double len_b) {
    int node = static_cast<int>(nodes.size());
    nodes.push_back(PhyloNode{{}, -1, 0.0, {clusters[ca].node,
                                            clusters[cb].node}});
    nodes[clusters[ca].node].parent = node;
    nodes[clusters[ca].node].length = len_a;
    nodes[clusters[cb].node].parent = node;
    nodes[clusters[cb].node].length = len_b;
    return node;
  }

  // replaces the pair (by positions in `active`) with the merged cluster;
  // the merged key is the smaller key, so sorted order is preserved by
  // writing it where the first pair member sat
  void replace_pair(std::size_t pos_a, std::size_t pos_b, Cluster merged) {
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pos_b));
    clusters.push_back(merged);
    active[pos_a] = static_cast<int>(clusters.size()) - 1;
  }

  std::size_t k;
  std::size_t slots;
  std::vector<double> work;
  std::vector<PhyloNode> nodes;
  std::vector<Cluster> clusters;
  std::vector<int> active;  // cluster ids sorted by key
  int next_slot() { return next_slot_++; }

 private:
  int next_slot_;
};

}  // namespace

PhyloTree upgma(const DistanceMatrix& matrix) {
  if (matrix.size() < 2) {
    throw InputError("upgma needs at least 2 taxa");
  }
  Agglomerator agg(matrix);
  while (agg.active.size() > 1) {
    std::size_t best_a = 0;
    std::size_t best_b = 1;
    double best_d = 0.0;
    bool first = true;
    for (std::size_t a = 0; a + 1 < agg.active.size(); ++a) {
      for (std::size_t b = a + 1; b < agg.active.size(); ++b) {
        double d = agg.dist(agg.active[a], agg.active[b]);
        if (first || d < best_d) {
          first = false;
          best_d = d;
          best_a = a;
          best_b = b;
        }
        // ties resolve to the smallest (key_a, key_b); scan order delivers it
      }
    }
    int ca = agg.active[best_a];
    int cb = agg.active[best_b];
    double height = best_d / 2.0;
    int node = agg.join(ca, cb, height - agg.clusters[ca].height,
                        height - agg.clusters[cb].height);
    Agglomerator::Cluster merged{
        agg.next_slot(), node, agg.clusters[ca].key,
        agg.clusters[ca].size + agg.clusters[cb].size, height};
    double size_a = agg.clusters[ca].size;
    double size_b = agg.clusters[cb].size;
    for (int other : agg.active) {
      if (other == ca || other == cb) {
        continue;
      }
      double mean = (size_a * agg.dist(ca, other) +
                     size_b * agg.dist(cb, other)) /
                    (size_a + size_b);
      agg.work[static_cast<std::size_t>(merged.slot) * agg.slots +
               agg.clusters[other].slot] = mean;
      agg.work[static_cast<std::size_t>(agg.clusters[other].slot) * agg.slots +
               merged.slot] = mean;
    }
    agg.replace_pair(best_a, best_b, merged);
  }
  int root = agg.clusters[agg.active.front()].node;
  return PhyloTree(std::move(agg.nodes), root, true);
}

PhyloTree neighbor_joining(const DistanceMatrix& matrix) {
  if (matrix.size() < 3) {
    throw InputError("neighbor joining needs at least 3 taxa");
  }
  Agglomerator agg(matrix);
  while (agg.active.size() > 3) {
    const double m = static_cast<double>(agg.active.size());
    // sums run in key order so the float result ignores input permutation
    std::vector<double> row_sum(agg.clusters.size(), 0.0);
    for (int a : agg.active) {
      double sum = 0.0;
      for (int b : agg.active) {
        if (b != a) {
          sum += agg.dist(a, b);
        }
      }
      row_sum[a] = sum;
    }
    std::size_t best_a = 0;
    std::size_t best_b = 1;
    double best_q = 0.0;
    bool first = true;
    for (std::size_t a = 0; a + 1 < agg.active.size(); ++a) {
      for (std::size_t b = a + 1; b < agg.active.size(); ++b) {
        double q = (m - 2.0) * agg.dist(agg.active[a], agg.active[b]) -
                   row_sum[agg.active[a]] - row_sum[agg.active[b]];
        if (first || q < best_q) {
          first = false;
          best_q = q;
          best_a = a;
          best_b = b;
        }
      }
    }
    int ca = agg.active[best_a];
    int cb = agg.active[best_b];
    double d_ab = agg.dist(ca, cb);
    double len_a =
        0.5 * d_ab + (row_sum[ca] - row_sum[cb]) / (2.0 * (m - 2.0));
    double len_b = d_ab - len_a;
    if (len_a < 0.0) {
      len_b -= len_a;
      len_a = 0.0;
    } else if (len_b < 0.0) {
      len_a -= len_b;
      len_b = 0.0;
    }
    int node = agg.join(ca, cb, len_a, len_b);
    Agglomerator::Cluster merged{agg.next_slot(), node, agg.clusters[ca].key,
                                 agg.clusters[ca].size + agg.clusters[cb].size,
                                 0.0};
    for (int other : agg.active) {
      if (other == ca || other == cb) {
        continue;
      }
      double v =
          0.5 * (agg.dist(ca, other) + agg.dist(cb, other) - d_ab);
      agg.work[static_cast<std::size_t>(merged.slot) * agg.slots +
               agg.clusters[other].slot] = v;
      agg.work[static_cast<std::size_t>(agg.clusters[other].slot) * agg.slots +
               merged.slot] = v;
    }
    agg.replace_pair(best_a, best_b, merged);
  }

  // final three-way join: the unrooted completion around one center node
  int cx = agg.active[0];
  int cy = agg.active[1];
  int cz = agg.active[2];
  double d_xy = agg.dist(cx, cy);
  double d_xz = agg.dist(cx, cz);
  double d_yz = agg.dist(cy, cz);
  double len_x = std::max(0.5 * (d_xy + d_xz - d_yz), 0.0);
  double len_y = std::max(d_xy - 0.5 * (d_xy + d_xz - d_yz), 0.0);
  double len_z = std::max(d_xz - 0.5 * (d_xy + d_xz - d_yz), 0.0);
  int center = static_cast<int>(agg.nodes.size());
  agg.nodes.push_back(PhyloNode{
      {}, -1, 0.0, {agg.clusters[cx].node, agg.clusters[cy].node,
                    agg.clusters[cz].node}});
  agg.nodes[agg.clusters[cx].node].parent = center;
  agg.nodes[agg.clusters[cx].node].length = len_x;
  agg.nodes[agg.clusters[cy].node].parent = center;
  agg.nodes[agg.clusters[cy].node].length = len_y;
  agg.nodes[agg.clusters[cz].node].parent = center;
  agg.nodes[agg.clusters[cz].node].length = len_z;
  return PhyloTree(std::move(agg.nodes), center, false);
}

namespace {

std::string format_length(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
  return buf;
}

// leaves get their label; internals the smallest label below them
std::vector<std::string> min_leaf_below(const PhyloTree& tree) {
  const auto& nodes = tree.nodes();
  std::vector<std::string> min_label(nodes.size());
  std::vector<int> stack{tree.root()};
  std::vector<int> order;
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    order.push_back(n);
    for (int c : nodes[n].children) {
      stack.push_back(c);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const PhyloNode& n = nodes[*it];
    if (n.children.empty()) {
      min_label[*it] = n.label;
    } else {
      std::string best;
      for (int c : n.children) {
        if (best.empty() || min_label[c] < best) {
          best = min_label[c];
        }
      }
      min_label[*it] = best;
    }
  }
  return min_label;
}

std::vector<int> ordered_children(const PhyloTree& tree, int node,
                                  const std::vector<std::string>& min_label) {
  std::vector<int> children = tree.nodes()[node].children;
  std::sort(children.begin(), children.end(),
            [&](int a, int b) { return min_label[a] < min_label[b]; });
  return children;
}

std::string quote_label(const std::string& label) {
  if (label.find_first_of("(),:;'[] \t\n") == std::string::npos) {
    return label;
  }
  std::string quoted = "'";
  for (char c : label) {
    quoted.push_back(c);
    if (c == '\'') {
      quoted.push_back('\'');
    }
  }
  quoted.push_back('\'');
  return quoted;
}

void newick_visit(const PhyloTree& tree, int node,
                  const std::vector<std::string>& min_label,
                  bool include_lengths, int precision, std::string& out) {
  const PhyloNode& n = tree.nodes()[node];
  if (n.children.empty()) {
    out += quote_label(n.label);
  } else {
    out.push_back('(');
    bool follower = false;
    for (int c : ordered_children(tree, node, min_label)) {
      if (follower) {
        out.push_back(',');
      }
      follower = true;
      newick_visit(tree, c, min_label, include_lengths, precision, out);
    }
    out.push_back(')');
  }
  if (include_lengths && n.parent >= 0) {
    out.push_back(':');
    out += format_length(n.length, precision);
  }
}

}  // namespace

std::string to_newick(const PhyloTree& tree, bool include_lengths,
                      int precision) {
  std::vector<std::string> min_label = min_leaf_below(tree);
  std::string out;
  newick_visit(tree, tree.root(), min_label, include_lengths, precision, out);
  out.push_back(';');
  return out;
}

bool has_clade(const PhyloTree& tree, std::span<const std::string> labels) {
  const auto& nodes = tree.nodes();
  std::unordered_map<std::string_view, std::size_t> leaf_index;
  std::size_t leaves = 0;
  for (const PhyloNode& n : nodes) {
    if (n.children.empty()) {
      leaf_index.emplace(n.label, leaves++);
    }
  }
  std::vector<bool> target(leaves, false);
  std::size_t target_size = 0;
  for (const std::string& label : labels) {
    auto it = leaf_index.find(label);
    if (it == leaf_index.end()) {
      throw InputError("unknown taxon \"" + label + "\"");
    }
    if (!target[it->second]) {
      target[it->second] = true;
      ++target_size;
    }
  }
  if (target_size == 0) {
    return false;
  }
  if (target_size == leaves) {
    return true;
  }

  std::vector<std::vector<bool>> below(nodes.size());
  std::vector<int> stack{tree.root()};
  std::vector<int> order;
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    order.push_back(n);
    for (int c : nodes[n].children) {
      stack.push_back(c);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& mask = below[*it];
    mask.assign(leaves, false);
    if (nodes[*it].children.empty()) {
      mask[leaf_index.find(nodes[*it].label)->second] = true;
    } else {
      for (int c : nodes[*it].children) {
        for (std::size_t b = 0; b < leaves; ++b) {
          if (below[c][b]) {
            mask[b] = true;
          }
        }
      }
    }
  }
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (static_cast<int>(n) == tree.root()) {
      continue;
    }
    bool equal = true;
    bool complement = true;
    for (std::size_t b = 0; b < leaves; ++b) {
      if (below[n][b] != target[b]) {
        equal = false;
      }
      if (below[n][b] == target[b]) {
        complement = false;
      }
    }
    if (equal || complement) {
      return true;
    }
  }
  return false;
}

namespace {

void ascii_visit(const PhyloTree& tree, int node,
                 const std::vector<std::string>& min_label,
                 const std::string& prefix, bool last, int precision,
                 std::string& out) {
  const PhyloNode& n = tree.nodes()[node];
  if (n.parent < 0) {
    out += n.children.empty() ? n.label : std::string("*");
  } else {
    out += prefix;
    out += last ? "`- " : "|- ";
    out += n.children.empty() ? n.label : std::string("*");
    out.push_back(':');
    out += format_length(n.length, precision);
  }
  out.push_back('\n');
  std::vector<int> children = ordered_children(tree, node, min_label);
  std::string child_prefix =
      n.parent < 0 ? std::string() : prefix + (last ? "   " : "|  ");
  for (std::size_t i = 0; i < children.size(); ++i) {
    ascii_visit(tree, children[i], min_label, child_prefix,
                i + 1 == children.size(), precision, out);
  }
}

}  // namespace

std::string render_ascii(const PhyloTree& tree, int precision) {
  std::vector<std::string> min_label = min_leaf_below(tree);
  std::string out;
  ascii_visit(tree, tree.root(), min_label, "", true, precision, out);
  return out;
}

}  // namespace mawdist
