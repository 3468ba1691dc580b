#ifndef HKFACE_COMPLEX_HPP
#define HKFACE_COMPLEX_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hkface/rational.hpp"

namespace hkface {

// Vertex subsets of {1..r} as bitmasks, bit i-1 for vertex i. Vertices are
// 1-indexed throughout; names are CLI aliases only.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 63;

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

int popcount(VertexSet s);
std::vector<int> set_to_vertices(VertexSet s);
VertexSet vertices_to_set(const std::vector<int>& verts, int num_vertices);

// Simplicial complex given by its facets (maximal faces). Immutable after
// construction; every operation is const and safe to share across threads.
class SimplicialComplex {
public:
    // Reduces the given faces to the antichain of maximal ones. Throws
    // ValidationError if a vertex is out of range, a face is empty, the list
    // is empty, or some vertex of 1..r lies in no facet.
    SimplicialComplex(int num_vertices, const std::vector<std::vector<int>>& facets);

    int num_vertices() const { return num_vertices_; }
    const std::vector<VertexSet>& facet_masks() const { return facets_; }
    std::vector<std::vector<int>> facets() const;

    // Krull dimension of the face ring: max facet size.
    int dimension_d() const;
    bool is_pure() const;
    bool is_face(VertexSet s) const;

    // Every face, the empty face included. Guarded against blowup.
    std::vector<VertexSet> all_faces() const;

    // (f_{-1}, f_0, ..., f_{d-1}); f_{i-1} counts i-vertex faces.
    std::vector<Integer> f_vector() const;

    // Coefficients of sum_i f_{i-1} z^i (1-z)^{d-i} with trailing zeros
    // trimmed; s is the degree. The reduction-number reading of s is valid
    // only under a CM certificate, which is the audit module's business.
    struct HVector {
        std::vector<Integer> h;
        int s;
    };
    HVector h_vector() const;

    bool operator==(const SimplicialComplex& o) const {
        return num_vertices_ == o.num_vertices_ && facets_ == o.facets_;
    }

private:
    int num_vertices_;
    std::vector<VertexSet> facets_;  // antichain, sorted ascending as integers
};

// Finite simple graph; no loops, no duplicate edges, every vertex covered.
class Graph {
public:
    Graph(int num_vertices, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return num_vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    int num_vertices_;
    std::vector<std::pair<int, int>> edges_;  // normalized a < b, sorted
};

// All inclusion-minimal vertex covers, each one sorted; result ordered
// lexicographically. Every cover is verified against every edge.
std::vector<std::vector<int>> minimal_vertex_covers(const Graph& g);

// The complex whose face ring is S/I(G): facets are the maximal independent
// sets, i.e. complements of the minimal vertex covers.
SimplicialComplex edge_ideal_complex(const Graph& g);

// Prime components P_F = (x_i | i not in F), one per facet.
struct FaceIdealSet {
    std::vector<VertexSet> prime_components;
    std::vector<std::vector<int>> components() const;
};

FaceIdealSet face_ideal_decomposition(const SimplicialComplex& c);

// Exponents v_i >= 1 defining J = (x_1^{v_1}, ..., x_r^{v_r}).
class ExponentVector {
public:
    // All-ones vector (the maximal ideal).
    explicit ExponentVector(int num_vertices);
    explicit ExponentVector(std::vector<long> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    long operator[](int i) const { return entries_[static_cast<size_t>(i)]; }  // 0-based
    const std::vector<long>& entries() const { return entries_; }
    bool all_ones() const;
    Integer product() const;
    Integer product_over(VertexSet s) const;

private:
    std::vector<long> entries_;
};

enum class Family { path, cycle, complete_graph, complete_bipartite, simplex };

// path r>=3: facets {i,i+1}; cycle n>=3: path plus {n,1}; complete_graph
// r>=2 and complete_bipartite a,b>=1 go through edge_ideal_complex; simplex
// r>=1: the single facet {1..r}.
SimplicialComplex named_family(Family kind, const std::vector<long>& params);
SimplicialComplex named_family(const std::string& kind, const std::vector<long>& params);

}  // namespace hkface

#endif
