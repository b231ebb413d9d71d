#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mexkit/exactnum.hpp"

namespace mexkit {

enum class StructureKind { IP, IC, IS, DP, SP, PT };

inline constexpr StructureKind kAllKinds[] = {StructureKind::IP, StructureKind::IC, StructureKind::IS,
                                              StructureKind::DP, StructureKind::SP, StructureKind::PT};

/// Lowercase short name: "ip", "ic", "is", "dp", "sp", "pt".
std::string_view to_string(StructureKind kind);
/// Inverse of to_string; throws UsageError on unknown names.
StructureKind parse_kind(std::string_view name);

/// Largest size the brute-force enumerators accept for each kind.
unsigned brute_force_bound(StructureKind kind);

/// Parts in nonincreasing order, all positive.
class Partition {
public:
    explicit Partition(std::vector<int> parts);
    const std::vector<int>& parts() const { return parts_; }
    unsigned size() const;

private:
    std::vector<int> parts_;
};

class Composition {
public:
    explicit Composition(std::vector<int> parts);
    const std::vector<int>& parts() const { return parts_; }
    unsigned size() const;

private:
    std::vector<int> parts_;
};

/// Entries x_1..x_n with 0 <= x_i <= i-1.
class InversionSequence {
public:
    explicit InversionSequence(std::vector<int> entries);
    const std::vector<int>& entries() const { return entries_; }
    unsigned size() const { return static_cast<unsigned>(entries_.size()); }

private:
    std::vector<int> entries_;
};

/// Peak at abscissa x (after the up step) and height y.
struct Peak {
    int x;
    int y;
    friend bool operator==(const Peak&, const Peak&) = default;
};

/// True iff `peaks` is the peak list of some Dyck path: x+y even, x strictly
/// increasing, y positive, x_1 = y_1, and |x_{i+1}-x_i-y_i| <= y_{i+1} < x_{i+1}-x_i+y_i.
bool is_valid_peak_list(const std::vector<Peak>& peaks);

/// A word over {U, D} that never dips below zero and returns to zero.
class DyckPath {
public:
    explicit DyckPath(std::string steps);
    const std::string& steps() const { return steps_; }
    unsigned size() const { return static_cast<unsigned>(steps_.size() / 2); }
    std::vector<Peak> peaks() const;

private:
    std::string steps_;
};

/// Blocks over {1..n}, each sorted, ordered by increasing minima.
class SetPartition {
public:
    explicit SetPartition(std::vector<std::vector<int>> blocks);
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    unsigned size() const;

private:
    std::vector<std::vector<int>> blocks_;
};

struct TreeNode {
    std::vector<TreeNode> children;
};

/// Ordered rooted tree; the empty tree has no root.
class PlanarTree {
public:
    PlanarTree() = default;
    explicit PlanarTree(TreeNode root) : root_(std::move(root)) {}

    /// Rebuild a tree from its breadth-first set presentation (A_1, ..., A_k),
    /// where A_i holds vertex i and its children. Throws UsageError if the
    /// sets violate the presentation's conditions.
    static PlanarTree from_bfs_sets(const std::vector<std::vector<int>>& sets);
    /// Rebuild from a preorder list of child counts; throws UsageError if invalid.
    static PlanarTree from_child_count_word(const std::vector<int>& word);

    const std::optional<TreeNode>& root() const { return root_; }
    unsigned size() const;
    /// Child count per vertex, preorder.
    std::vector<int> child_count_word() const;
    /// Breadth-first labels 1..k; set i is {i} union the labels of i's children.
    std::vector<std::vector<int>> bfs_sets() const;

private:
    std::optional<TreeNode> root_;
};

using Object = std::variant<Partition, Composition, InversionSequence, DyckPath, SetPartition, PlanarTree>;

StructureKind kind_of(const Object& obj);
unsigned size_of(const Object& obj);
/// Weights of the object's pieces: parts, entries, peak heights, block sizes, child counts.
std::vector<int> piece_weights(const Object& obj);
/// Smallest k >= 1 that is not the weight of any piece. The empty object has mex 1.
unsigned mex_of(const Object& obj);

using ObjectVisitor = std::function<void(const Object&)>;

/// Visits every size-n object exactly once in the canonical order:
///   IP, IC  parts sequence, reverse lexicographic (largest first part first)
///   IS      entries, lexicographic
///   DP      step word, lexicographic with U before D
///   SP      restricted growth string, lexicographic
///   PT      preorder child-count word, lexicographic
/// Throws BoundError when n exceeds brute_force_bound(kind).
void for_each_object(StructureKind kind, unsigned n, const ObjectVisitor& visit);
std::vector<Object> enumerate(StructureKind kind, unsigned n);

/// Brute-force count of size-n objects by mex (absent keys mean zero).
std::map<unsigned, BigInt> mex_distribution_bf(StructureKind kind, unsigned n);
/// Number of size-n inversion sequences by maximum entry, 1 <= n.
std::map<unsigned, BigInt> max_distribution_is(unsigned n);

/// Classical totals: p(n), 2^{n-1}, n!, Catalan, Bell, and Catalan(n-1) for trees.
BigInt count_objects(StructureKind kind, unsigned n);

} // namespace mexkit
