#include "mexkit/structures.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "mexkit/errors.hpp"

namespace mexkit {

std::string_view to_string(StructureKind kind)
{
    switch (kind) {
    case StructureKind::IP:
        return "ip";
    case StructureKind::IC:
        return "ic";
    case StructureKind::IS:
        return "is";
    case StructureKind::DP:
        return "dp";
    case StructureKind::SP:
        return "sp";
    case StructureKind::PT:
        return "pt";
    }
    return "?";
}

StructureKind parse_kind(std::string_view name)
{
    for (auto k : kAllKinds) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw UsageError("unknown structure '" + std::string(name) + "' (expected ip, ic, is, dp, sp or pt)");
}

unsigned brute_force_bound(StructureKind kind)
{
    switch (kind) {
    case StructureKind::IP:
        return 25;
    case StructureKind::IC:
        return 18;
    case StructureKind::IS:
        return 9;
    case StructureKind::DP:
        return 13;
    case StructureKind::SP:
        return 11;
    case StructureKind::PT:
        return 13;
    }
    return 0;
}

// ---------------------------------------------------------------- objects

namespace {

unsigned sum_parts(const std::vector<int>& parts)
{
    return static_cast<unsigned>(std::accumulate(parts.begin(), parts.end(), 0));
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw UsageError("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw UsageError("partition parts must be nonincreasing");
        }
    }
}

unsigned Partition::size() const { return sum_parts(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_) {
        if (p <= 0) {
            throw UsageError("composition parts must be positive");
        }
    }
}

unsigned Composition::size() const { return sum_parts(parts_); }

InversionSequence::InversionSequence(std::vector<int> entries) : entries_(std::move(entries))
{
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 0 || entries_[i] > static_cast<int>(i)) {
            throw UsageError("inversion sequence entry " + std::to_string(i + 1) + " out of range");
        }
    }
}

bool is_valid_peak_list(const std::vector<Peak>& peaks)
{
    for (std::size_t i = 0; i < peaks.size(); ++i) {
        const auto& p = peaks[i];
        if ((p.x + p.y) % 2 != 0 || p.y <= 0) {
            return false;
        }
        if (i == 0) {
            if (p.x != p.y) {
                return false;
            }
            continue;
        }
        const auto& q = peaks[i - 1];
        if (q.x >= p.x) {
            return false;
        }
        const int gap = p.x - q.x;
        if (std::abs(gap - q.y) > p.y || p.y >= gap + q.y) {
            return false;
        }
    }
    return true;
}

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps))
{
    int h = 0;
    for (char c : steps_) {
        if (c == 'U') {
            ++h;
        } else if (c == 'D') {
            if (--h < 0) {
                throw UsageError("Dyck path goes below the axis");
            }
        } else {
            throw UsageError("Dyck path steps must be U or D");
        }
    }
    if (h != 0) {
        throw UsageError("Dyck path does not return to the axis");
    }
}

std::vector<Peak> DyckPath::peaks() const
{
    std::vector<Peak> out;
    int h = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        h += steps_[i] == 'U' ? 1 : -1;
        if (steps_[i] == 'U' && i + 1 < steps_.size() && steps_[i + 1] == 'D') {
            out.push_back({static_cast<int>(i + 1), h});
        }
    }
    return out;
}

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks))
{
    std::size_t total = 0;
    for (auto& b : blocks_) {
        if (b.empty()) {
            throw UsageError("set partition blocks must be nonempty");
        }
        std::sort(b.begin(), b.end());
        total += b.size();
    }
    for (std::size_t i = 1; i < blocks_.size(); ++i) {
        if (blocks_[i - 1].front() >= blocks_[i].front()) {
            throw UsageError("set partition blocks must be ordered by increasing minima");
        }
    }
    std::vector<bool> seen(total + 1, false);
    for (const auto& b : blocks_) {
        for (int v : b) {
            if (v < 1 || static_cast<std::size_t>(v) > total || seen[v]) {
                throw UsageError("set partition blocks must be disjoint and cover {1..n}");
            }
            seen[v] = true;
        }
    }
}

unsigned SetPartition::size() const
{
    std::size_t total = 0;
    for (const auto& b : blocks_) {
        total += b.size();
    }
    return static_cast<unsigned>(total);
}

namespace {

unsigned count_nodes(const TreeNode& node)
{
    unsigned n = 1;
    for (const auto& c : node.children) {
        n += count_nodes(c);
    }
    return n;
}

void preorder_counts(const TreeNode& node, std::vector<int>& out)
{
    out.push_back(static_cast<int>(node.children.size()));
    for (const auto& c : node.children) {
        preorder_counts(c, out);
    }
}

TreeNode parse_word(const std::vector<int>& word, std::size_t& pos)
{
    if (pos >= word.size()) {
        throw UsageError("child-count word ends early");
    }
    const int k = word[pos++];
    if (k < 0) {
        throw UsageError("negative child count");
    }
    TreeNode node;
    node.children.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        node.children.push_back(parse_word(word, pos));
    }
    return node;
}

TreeNode build_from_labels(int label, const std::vector<std::vector<int>>& children_of)
{
    TreeNode node;
    for (int c : children_of[static_cast<std::size_t>(label)]) {
        node.children.push_back(build_from_labels(c, children_of));
    }
    return node;
}

} // namespace

unsigned PlanarTree::size() const { return root_ ? count_nodes(*root_) : 0; }

std::vector<int> PlanarTree::child_count_word() const
{
    std::vector<int> out;
    if (root_) {
        preorder_counts(*root_, out);
    }
    return out;
}

PlanarTree PlanarTree::from_child_count_word(const std::vector<int>& word)
{
    if (word.empty()) {
        return PlanarTree();
    }
    std::size_t pos = 0;
    TreeNode root = parse_word(word, pos);
    if (pos != word.size()) {
        throw UsageError("child-count word has trailing entries");
    }
    return PlanarTree(std::move(root));
}

std::vector<std::vector<int>> PlanarTree::bfs_sets() const
{
    std::vector<std::vector<int>> sets;
    if (!root_) {
        return sets;
    }
    std::vector<const TreeNode*> queue{&*root_};
    int next_label = 2;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        std::vector<int> set{static_cast<int>(i + 1)};
        for (const auto& c : queue[i]->children) {
            set.push_back(next_label++);
            queue.push_back(&c);
        }
        sets.push_back(std::move(set));
    }
    return sets;
}

PlanarTree PlanarTree::from_bfs_sets(const std::vector<std::vector<int>>& sets)
{
    if (sets.empty()) {
        return PlanarTree();
    }
    const int k = static_cast<int>(sets.size());
    std::vector<std::vector<int>> children_of(sets.size() + 1);
    int expected = 2;
    for (int i = 1; i <= k; ++i) {
        std::vector<int> a = sets[static_cast<std::size_t>(i - 1)];
        std::sort(a.begin(), a.end());
        if (a.empty() || a.front() != i) {
            throw UsageError("BFS set " + std::to_string(i) + " must have minimum " + std::to_string(i));
        }
        // Children occupy the next consecutive labels, which also makes them an interval.
        for (std::size_t j = 1; j < a.size(); ++j) {
            if (a[j] != expected || a[j] > k) {
                throw UsageError("BFS sets do not describe a breadth-first labelled tree");
            }
            children_of[static_cast<std::size_t>(i)].push_back(expected++);
        }
    }
    if (expected != k + 1) {
        throw UsageError("BFS children sets do not cover {2..k}");
    }
    return PlanarTree(build_from_labels(1, children_of));
}

// ---------------------------------------------------------------- mex

StructureKind kind_of(const Object& obj)
{
    return static_cast<StructureKind>(obj.index());
}

unsigned size_of(const Object& obj)
{
    return std::visit([](const auto& o) { return o.size(); }, obj);
}

namespace {

struct WeightCollector {
    std::vector<int> operator()(const Partition& p) const { return p.parts(); }
    std::vector<int> operator()(const Composition& c) const { return c.parts(); }
    std::vector<int> operator()(const InversionSequence& s) const { return s.entries(); }
    std::vector<int> operator()(const DyckPath& d) const
    {
        std::vector<int> w;
        for (const auto& p : d.peaks()) {
            w.push_back(p.y);
        }
        return w;
    }
    std::vector<int> operator()(const SetPartition& s) const
    {
        std::vector<int> w;
        for (const auto& b : s.blocks()) {
            w.push_back(static_cast<int>(b.size()));
        }
        return w;
    }
    std::vector<int> operator()(const PlanarTree& t) const { return t.child_count_word(); }
};

unsigned mex_of_weights(const std::vector<int>& weights)
{
    std::vector<bool> present(weights.size() + 2, false);
    for (int w : weights) {
        if (w >= 1 && static_cast<std::size_t>(w) < present.size()) {
            present[static_cast<std::size_t>(w)] = true;
        }
    }
    unsigned m = 1;
    while (present[m]) {
        ++m;
    }
    return m;
}

} // namespace

std::vector<int> piece_weights(const Object& obj) { return std::visit(WeightCollector{}, obj); }

unsigned mex_of(const Object& obj) { return mex_of_weights(piece_weights(obj)); }

// ---------------------------------------------------------------- enumeration

namespace {

void parts_descending(int remaining, int max_part, bool nonincreasing, std::vector<int>& cur,
                      const std::function<void(const std::vector<int>&)>& emit)
{
    if (remaining == 0) {
        emit(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        parts_descending(remaining - p, nonincreasing ? p : remaining - p, nonincreasing, cur, emit);
        cur.pop_back();
    }
}

void enumerate_inversion(unsigned n, std::vector<int>& cur, const ObjectVisitor& visit)
{
    const auto i = cur.size();
    if (i == n) {
        visit(Object(InversionSequence(cur)));
        return;
    }
    for (int v = 0; v <= static_cast<int>(i); ++v) {
        cur.push_back(v);
        enumerate_inversion(n, cur, visit);
        cur.pop_back();
    }
}

void enumerate_dyck(unsigned n, unsigned ups, unsigned downs, std::string& cur, const ObjectVisitor& visit)
{
    if (downs == n) {
        visit(Object(DyckPath(cur)));
        return;
    }
    if (ups < n) {
        cur.push_back('U');
        enumerate_dyck(n, ups + 1, downs, cur, visit);
        cur.pop_back();
    }
    if (downs < ups) {
        cur.push_back('D');
        enumerate_dyck(n, ups, downs + 1, cur, visit);
        cur.pop_back();
    }
}

void enumerate_rgs(unsigned n, std::vector<int>& rgs, int blocks, const ObjectVisitor& visit)
{
    if (rgs.size() == n) {
        std::vector<std::vector<int>> b(static_cast<std::size_t>(blocks));
        for (std::size_t i = 0; i < rgs.size(); ++i) {
            b[static_cast<std::size_t>(rgs[i])].push_back(static_cast<int>(i + 1));
        }
        visit(Object(SetPartition(std::move(b))));
        return;
    }
    for (int v = 0; v <= blocks; ++v) {
        rgs.push_back(v);
        enumerate_rgs(n, rgs, std::max(blocks, v + 1), visit);
        rgs.pop_back();
    }
}

// `open` is the number of subtrees still to be placed; `left` the vertices still to emit.
void enumerate_trees(unsigned left, unsigned open, std::vector<int>& word, const ObjectVisitor& visit)
{
    if (left == 0) {
        if (open == 0) {
            visit(Object(PlanarTree::from_child_count_word(word)));
        }
        return;
    }
    // After this vertex: open - 1 + c slots, each needing a vertex among left - 1.
    for (unsigned c = 0; open - 1 + c <= left - 1; ++c) {
        const unsigned next_open = open - 1 + c;
        if (next_open == 0 && left > 1) {
            continue;
        }
        word.push_back(static_cast<int>(c));
        enumerate_trees(left - 1, next_open, word, visit);
        word.pop_back();
    }
}

} // namespace

void for_each_object(StructureKind kind, unsigned n, const ObjectVisitor& visit)
{
    if (n > brute_force_bound(kind)) {
        throw BoundError("brute-force enumeration of " + std::string(to_string(kind)) + " is limited to n <= "
                         + std::to_string(brute_force_bound(kind)) + " (requested " + std::to_string(n) + ")");
    }
    switch (kind) {
    case StructureKind::IP:
    case StructureKind::IC: {
        const bool is_partition = kind == StructureKind::IP;
        std::vector<int> cur;
        parts_descending(static_cast<int>(n), static_cast<int>(n), is_partition, cur,
                         [&](const std::vector<int>& parts) {
                             if (is_partition) {
                                 visit(Object(Partition(parts)));
                             } else {
                                 visit(Object(Composition(parts)));
                             }
                         });
        break;
    }
    case StructureKind::IS: {
        std::vector<int> cur;
        enumerate_inversion(n, cur, visit);
        break;
    }
    case StructureKind::DP: {
        std::string cur;
        enumerate_dyck(n, 0, 0, cur, visit);
        break;
    }
    case StructureKind::SP: {
        std::vector<int> rgs;
        enumerate_rgs(n, rgs, 0, visit);
        break;
    }
    case StructureKind::PT: {
        if (n == 0) {
            visit(Object(PlanarTree()));
            break;
        }
        std::vector<int> word;
        enumerate_trees(n, 1, word, visit);
        break;
    }
    }
}

std::vector<Object> enumerate(StructureKind kind, unsigned n)
{
    std::vector<Object> out;
    for_each_object(kind, n, [&](const Object& o) { out.push_back(o); });
    return out;
}

std::map<unsigned, BigInt> mex_distribution_bf(StructureKind kind, unsigned n)
{
    std::map<unsigned, unsigned long> counts;
    for_each_object(kind, n, [&](const Object& o) { ++counts[mex_of(o)]; });
    std::map<unsigned, BigInt> out;
    for (const auto& [m, c] : counts) {
        out[m] = BigInt(c);
    }
    return out;
}

std::map<unsigned, BigInt> max_distribution_is(unsigned n)
{
    if (n < 1) {
        throw UsageError("max_distribution_is requires n >= 1");
    }
    std::map<unsigned, unsigned long> counts;
    for_each_object(StructureKind::IS, n, [&](const Object& o) {
        const auto& e = std::get<InversionSequence>(o).entries();
        ++counts[static_cast<unsigned>(*std::max_element(e.begin(), e.end()))];
    });
    std::map<unsigned, BigInt> out;
    for (const auto& [v, c] : counts) {
        out[v] = BigInt(c);
    }
    return out;
}

BigInt count_objects(StructureKind kind, unsigned n)
{
    switch (kind) {
    case StructureKind::IP:
        return partition_count(n);
    case StructureKind::IC: {
        if (n == 0) {
            return 1;
        }
        BigInt r;
        mpz_ui_pow_ui(r.get_mpz_t(), 2, n - 1);
        return r;
    }
    case StructureKind::IS:
        return factorial(n);
    case StructureKind::DP:
        return catalan_number(n);
    case StructureKind::SP:
        return bell(n);
    case StructureKind::PT:
        return n == 0 ? BigInt(1) : catalan_number(n - 1);
    }
    return 0;
}

} // namespace mexkit
