#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sqwalk/graph.hpp"

namespace sqwalk {

// Vertex set of a simplex as a bitmask: bit v set <=> vertex v belongs.
using SimplexMask = std::uint32_t;

inline int mask_dim(SimplexMask x) { return __builtin_popcount(x) - 1; }
inline SimplexMask vertex_bit(int v) { return SimplexMask{1} << v; }

// Position of vertex v among the set bits of x (0-based rank in sorted order).
inline int rank_in(SimplexMask x, int v) {
    return __builtin_popcount(x & (vertex_bit(v) - 1));
}

std::vector<int> one_positions(SimplexMask x);         // ascending vertex ids
std::vector<int> zero_positions(SimplexMask x, int n); // ascending vertex ids
std::string mask_to_string(SimplexMask x, int n);      // "10110": position i = vertex i
SimplexMask mask_from_string(const std::string& bits);
SimplexMask mask_from_vertices(std::span<const int> vs);

// Basis label for one state of the walk space S_k: an oriented simplex
// (x, s, 0) or the absorbing state (0^n, 0, 1).
struct OrientedSimplexLabel {
    SimplexMask x = 0;
    std::uint8_t s = 0;     // orientation bit: 0 positive, 1 negative
    std::uint8_t theta = 0; // absorbing flag

    bool is_absorbing() const { return theta != 0; }
    OrientedSimplexLabel opposite() const { return {x, static_cast<std::uint8_t>(s ^ 1), theta}; }
    bool operator==(const OrientedSimplexLabel&) const = default;

    static OrientedSimplexLabel absorbing() { return {0, 0, 1}; }
};

enum class Similarity { similar, dissimilar, none };

struct AdjacencyVerdict {
    Similarity up = Similarity::none;
    Similarity down = Similarity::none;
};

// Clique complex of a vertex-weighted graph, enumerated up to dimension
// k_max. Immutable after construction; bases are sorted ascending by mask
// (= ascending sorted-vertex tuples), which fixes all matrix index orders.
class CliqueComplex {
public:
    static CliqueComplex build(VertexWeightedGraph graph, int k_max);

    int n() const { return graph_.n; }
    int k_max() const { return k_max_; }
    const VertexWeightedGraph& graph() const { return graph_; }

    // n_k; zero outside [0, k_max].
    int count(int k) const;
    std::span<const SimplexMask> basis(int k) const;
    // Index of x in the k-basis, or -1.
    int index_of(int k, SimplexMask x) const;

    // True iff all vertex pairs of x are adjacent (O(n^2) pair checks).
    bool is_clique(SimplexMask x) const;
    // Membership bit per the walk oracle convention: 0 iff x is a simplex of
    // this complex (clique of dimension <= k_max).
    int membership(SimplexMask x) const;

    double weight(int v) const { return graph_.weights[v]; }
    double simplex_weight(SimplexMask x) const;

    // Vertices u outside sigma with sigma+{u} a simplex of the complex.
    std::vector<int> up_vertices(SimplexMask sigma) const;
    // Sum of w(u)^2 over up_vertices (weighted up-degree).
    double up_degree_weight(SimplexMask sigma) const;
    int up_degree(SimplexMask sigma) const;

private:
    CliqueComplex(VertexWeightedGraph g, int k_max) : graph_(std::move(g)), k_max_(k_max) {}

    VertexWeightedGraph graph_;
    int k_max_;
    std::vector<std::vector<SimplexMask>> bases_;
    std::vector<std::unordered_map<SimplexMask, int>> index_;
};

CliqueComplex build_clique_complex(VertexWeightedGraph graph, int k_max);

// Label for an oriented simplex given by a vertex sequence; s is the parity
// of the permutation sorting the sequence. Rejects repeated vertices and
// non-member vertex sets.
OrientedSimplexLabel encode_label(std::span<const int> vertices, const CliqueComplex& X);

struct DecodedSimplex {
    std::vector<int> vertices; // ascending
    bool negative = false;
    bool absorbing = false;
};
DecodedSimplex decode_label(const OrientedSimplexLabel& label);

// Up/down adjacency of two oriented k-simplices with orientation similarity
// from the induced orientations. Distinct vertex sets required.
AdjacencyVerdict adjacency(const CliqueComplex& X, const OrientedSimplexLabel& a,
                           const OrientedSimplexLabel& b);

// Parity of set bits of x strictly between v_out (a 1 of x) and v_in (a 0 of
// x): the orientation flip when exchanging v_out for v_in through the common
// face.
int relative_down_orientation(SimplexMask x, int v_out, int v_in);

// Zero/one position tables for a simplex plus the coface/face bit strings and
// the weight products entering the walk normalizations.
struct CofaceFaceTables {
    std::vector<int> zeros; // i(sigma), ascending  (size n-k-1)
    std::vector<int> ones;  // i~(sigma), ascending (size k+1)
    std::vector<SimplexMask> coface_masks; // x^up(i) per zero position
    std::vector<SimplexMask> face_masks;   // x^down(i) per one position
    // w_updown[i][j] = w(i(sigma)) * w(j-th one of x^up(i)),  (n-k-1) x (k+2)
    std::vector<std::vector<double>> w_updown;
    // w_downup[i][j] = w(i-th one of sigma) * w(j-th zero of x^down(i)),  (k+1) x (n-k)
    std::vector<std::vector<double>> w_downup;
};
CofaceFaceTables coface_and_face_indices(const CliqueComplex& X, const OrientedSimplexLabel& sigma);

} // namespace sqwalk
