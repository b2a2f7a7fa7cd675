#pragma once

#include <string>
#include <utility>
#include <vector>

#include "indcx/complex.hpp"
#include "indcx/grid.hpp"
#include "indcx/homology.hpp"
#include "indcx/types.hpp"

namespace indcx {

/**
 * Rooted tree of split/match pivots. Node 0 is the root once the tree is
 * built with set_root(); children are stored by index.
 * Split: children {left (pivot absent), right (pivot present)}.
 * Match: one child. Leaf: none.
 */
class MatchingTree {
public:
    enum class Kind { Split, Match, Leaf };
    struct Node {
        Kind kind = Kind::Leaf;
        int pivot = -1;
        std::vector<int> children;
    };

    int add_leaf();
    int add_match(int pivot, int child);
    int add_split(int pivot, int left, int right);
    void set_root(int r) { root_ = r; }

    int root() const { return root_; }
    const Node& node(int i) const { return nodes_.at(i); }
    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return root_ < 0; }

    std::string to_json() const;
    static MatchingTree from_json(const std::string& text);

private:
    std::vector<Node> nodes_;
    int root_ = -1;
};

struct TreeCheck {
    bool ok = true;
    std::string message;
    std::vector<int> path;  // pivots from the root to the offending node
};

TreeCheck validate_tree(const Graph& g, const MatchingTree& t);

// Pairs (upper, lower) with lower = upper minus one vertex.
struct FaceMatching {
    std::vector<std::pair<Face, Face>> pairs;
};

struct TreeEvaluation {
    FaceMatching matching;
    std::vector<Face> critical;  // union of the leaf contents, sorted
    std::size_t face_count = 0;
};

/**
 * Contents are materialized top-down; at every match node both halves of
 * the hake lemma are asserted (std::logic_error on failure) and every face
 * is checked to land in exactly one F(t) or leaf content.
 */
TreeEvaluation evaluate_tree(const Graph& g, const MatchingTree& t, std::size_t max_faces = 2'000'000);

// sigma is paired with sigma +- o for the smallest o in O that lies in sigma or is free in it.
FaceMatching mo_matching(const Graph& g, Face O);
// Faces of I(g) left unmatched by a matching, sorted.
std::vector<Face> unmatched_faces(const SimplicialComplex& c, const FaceMatching& m);

struct AcyclicReport {
    bool ok = true;
    bool is_matching = true;
    std::string message;
    std::vector<Face> cycle;  // witness, in traversal order
};

// Per level pair (k, k+1) search of the modified Hasse digraph.
AcyclicReport check_acyclic(const SimplicialComplex& c, const FaceMatching& m);
// Same search over the whole face poset at once.
AcyclicReport check_acyclic_global(const SimplicialComplex& c, const FaceMatching& m);

struct MorseReport {
    std::vector<long long> critical_by_dim;  // index p+1 for dimension p >= -1
    HomologyProfile homology;
    bool inequalities_hold = true;
    bool euler_holds = true;
    long long critical_euler = 0;  // sum (-1)^p u_p
    std::string conclusion;
};

// Throws std::logic_error if a Morse inequality fails.
MorseReport morse_consistency(const SimplicialComplex& c, const FaceMatching& m);

enum class TreeFamily { SquareCyl2, SquareCyl3, SquareCyl4, SquareCyl5, HexCyl2 };

TreeFamily tree_family_from_name(const std::string& s);
std::string tree_family_name(TreeFamily f);

struct GeneratedTree {
    Graph graph;
    MatchingTree tree;
    std::vector<Face> predicted_critical;  // what the generator expects to survive
};

GeneratedTree tree_generator(TreeFamily f, int m);
// The three-node-deep tree for I(S_{3,2}) with one critical edge.
GeneratedTree example_tree_s32();

}  // namespace indcx
