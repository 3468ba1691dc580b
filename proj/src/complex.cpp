#include "hkface/complex.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

namespace hkface {

int popcount(VertexSet s) { return std::popcount(s); }

std::vector<int> set_to_vertices(VertexSet s) {
    std::vector<int> out;
    for (int i = 0; s != 0; ++i, s >>= 1)
        if (s & 1u) out.push_back(i + 1);
    return out;
}

VertexSet vertices_to_set(const std::vector<int>& verts, int num_vertices) {
    VertexSet s = 0;
    for (int v : verts) {
        if (v < 1 || v > num_vertices)
            throw ValidationError("vertex " + std::to_string(v) + " out of range [1," +
                                  std::to_string(num_vertices) + "]");
        s |= VertexSet{1} << (v - 1);
    }
    return s;
}

SimplicialComplex::SimplicialComplex(int num_vertices, const std::vector<std::vector<int>>& facets)
    : num_vertices_(num_vertices) {
    if (num_vertices < 1) throw ValidationError("complex needs at least one vertex");
    if (num_vertices > kMaxVertices)
        throw ValidationError("at most " + std::to_string(kMaxVertices) + " vertices supported");
    if (facets.empty()) throw ValidationError("facet list is empty");

    std::vector<VertexSet> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) {
        if (f.empty()) throw ValidationError("empty facet");
        masks.push_back(vertices_to_set(f, num_vertices));
    }

    // Reduce to the antichain of maximal faces.
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    for (VertexSet m : masks) {
        bool maximal = true;
        for (VertexSet other : masks)
            if (other != m && (m & other) == m) {
                maximal = false;
                break;
            }
        if (maximal) facets_.push_back(m);
    }

    VertexSet covered = 0;
    for (VertexSet m : facets_) covered |= m;
    VertexSet everyone = (VertexSet{1} << num_vertices) - 1;
    if (covered != everyone) {
        VertexSet missing = everyone & ~covered;
        throw ValidationError("vertex " + std::to_string(set_to_vertices(missing).front()) +
                              " lies in no facet");
    }
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
    std::vector<std::vector<int>> out;
    out.reserve(facets_.size());
    for (VertexSet m : facets_) out.push_back(set_to_vertices(m));
    return out;
}

int SimplicialComplex::dimension_d() const {
    int d = 0;
    for (VertexSet m : facets_) d = std::max(d, popcount(m));
    return d;
}

bool SimplicialComplex::is_pure() const {
    int d = dimension_d();
    for (VertexSet m : facets_)
        if (popcount(m) != d) return false;
    return true;
}

bool SimplicialComplex::is_face(VertexSet s) const {
    for (VertexSet m : facets_)
        if ((s & m) == s) return true;
    return false;
}

std::vector<VertexSet> SimplicialComplex::all_faces() const {
    std::uint64_t bound = 0;
    for (VertexSet m : facets_) {
        bound += std::uint64_t{1} << popcount(m);
        if (bound > (std::uint64_t{1} << 24))
            throw ValidationError("face enumeration too large for this complex");
    }
    std::unordered_set<VertexSet> seen;
    for (VertexSet m : facets_) {
        // iterate all subsets of m, empty face included
        VertexSet sub = m;
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & m;
        }
    }
    std::vector<VertexSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Integer> SimplicialComplex::f_vector() const {
    std::vector<Integer> f(static_cast<size_t>(dimension_d()) + 1, Integer(0));
    for (VertexSet face : all_faces()) f[static_cast<size_t>(popcount(face))] += 1;
    return f;  // f[0] = f_{-1} = 1 (empty face)
}

SimplicialComplex::HVector SimplicialComplex::h_vector() const {
    const int d = dimension_d();
    const std::vector<Integer> f = f_vector();
    // sum_i f_{i-1} z^i (1-z)^{d-i} as an integer polynomial in z
    std::vector<Integer> h(static_cast<size_t>(d) + 1, Integer(0));
    for (int i = 0; i <= d; ++i) {
        // f[i] * z^i * (1-z)^(d-i)
        const int m = d - i;
        for (int j = 0; j <= m; ++j) {
            Integer term = binomial(static_cast<long>(m), static_cast<unsigned long>(j)) * f[static_cast<size_t>(i)];
            if (j % 2 == 1) term = -term;
            h[static_cast<size_t>(i + j)] += term;
        }
    }
    while (h.size() > 1 && h.back() == 0) h.pop_back();
    return HVector{h, static_cast<int>(h.size()) - 1};
}

Graph::Graph(int num_vertices, const std::vector<std::pair<int, int>>& edges) : num_vertices_(num_vertices) {
    if (num_vertices < 1) throw ValidationError("graph needs at least one vertex");
    if (num_vertices > kMaxVertices)
        throw ValidationError("at most " + std::to_string(kMaxVertices) + " vertices supported");
    if (edges.empty()) throw ValidationError("edge list is empty");
    std::set<std::pair<int, int>> norm;
    for (auto [a, b] : edges) {
        if (a < 1 || a > num_vertices || b < 1 || b > num_vertices)
            throw ValidationError("edge endpoint out of range [1," + std::to_string(num_vertices) + "]");
        if (a == b) throw ValidationError("loop at vertex " + std::to_string(a));
        norm.emplace(std::min(a, b), std::max(a, b));
    }
    edges_.assign(norm.begin(), norm.end());
    std::vector<bool> covered(static_cast<size_t>(num_vertices) + 1, false);
    for (auto [a, b] : edges_) covered[static_cast<size_t>(a)] = covered[static_cast<size_t>(b)] = true;
    for (int v = 1; v <= num_vertices; ++v)
        if (!covered[static_cast<size_t>(v)])
            throw ValidationError("vertex " + std::to_string(v) + " lies in no edge");
}

namespace {

bool covers_all_edges(VertexSet cover, const std::vector<std::pair<int, int>>& edges) {
    for (auto [a, b] : edges) {
        VertexSet ea = VertexSet{1} << (a - 1), eb = VertexSet{1} << (b - 1);
        if (!(cover & ea) && !(cover & eb)) return false;
    }
    return true;
}

}  // namespace

std::vector<std::vector<int>> minimal_vertex_covers(const Graph& g) {
    // Branch on an uncovered edge: one endpoint must join the cover. The
    // candidate set is then screened for inclusion-minimality, and each
    // survivor re-verified edge by edge.
    std::set<VertexSet> candidates;
    std::vector<VertexSet> stack{0};
    while (!stack.empty()) {
        VertexSet cur = stack.back();
        stack.pop_back();
        const std::pair<int, int>* open = nullptr;
        for (const auto& e : g.edges()) {
            VertexSet ea = VertexSet{1} << (e.first - 1), eb = VertexSet{1} << (e.second - 1);
            if (!(cur & ea) && !(cur & eb)) {
                open = &e;
                break;
            }
        }
        if (!open) {
            candidates.insert(cur);
            continue;
        }
        stack.push_back(cur | (VertexSet{1} << (open->first - 1)));
        stack.push_back(cur | (VertexSet{1} << (open->second - 1)));
    }

    std::vector<VertexSet> minimal;
    for (VertexSet c : candidates) {
        bool is_minimal = true;
        for (VertexSet other : candidates)
            if (other != c && (other & c) == other) {
                is_minimal = false;
                break;
            }
        if (!is_minimal) continue;
        // re-verify: covers every edge, and no single-vertex removal does
        if (!covers_all_edges(c, g.edges())) continue;
        for (int v : set_to_vertices(c))
            if (covers_all_edges(c & ~(VertexSet{1} << (v - 1)), g.edges())) {
                is_minimal = false;
                break;
            }
        if (is_minimal) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end());
    std::vector<std::vector<int>> out;
    out.reserve(minimal.size());
    for (VertexSet c : minimal) out.push_back(set_to_vertices(c));
    return out;
}

SimplicialComplex edge_ideal_complex(const Graph& g) {
    std::vector<std::vector<int>> facets;
    VertexSet everyone = (VertexSet{1} << g.num_vertices()) - 1;
    for (const auto& cover : minimal_vertex_covers(g))
        facets.push_back(set_to_vertices(everyone & ~vertices_to_set(cover, g.num_vertices())));
    return SimplicialComplex(g.num_vertices(), facets);
}

FaceIdealSet face_ideal_decomposition(const SimplicialComplex& c) {
    FaceIdealSet out;
    VertexSet everyone = (VertexSet{1} << c.num_vertices()) - 1;
    for (VertexSet f : c.facet_masks()) out.prime_components.push_back(everyone & ~f);
    return out;
}

std::vector<std::vector<int>> FaceIdealSet::components() const {
    std::vector<std::vector<int>> out;
    out.reserve(prime_components.size());
    for (VertexSet m : prime_components) out.push_back(set_to_vertices(m));
    return out;
}

ExponentVector::ExponentVector(int num_vertices)
    : entries_(static_cast<size_t>(num_vertices), 1) {
    if (num_vertices < 1) throw ValidationError("exponent vector needs positive length");
}

ExponentVector::ExponentVector(std::vector<long> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw ValidationError("exponent vector is empty");
    for (long v : entries_)
        if (v < 1) throw ValidationError("exponent entries must be >= 1");
}

bool ExponentVector::all_ones() const {
    for (long v : entries_)
        if (v != 1) return false;
    return true;
}

Integer ExponentVector::product() const {
    Integer p(1);
    for (long v : entries_) p *= v;
    return p;
}

Integer ExponentVector::product_over(VertexSet s) const {
    Integer p(1);
    for (int v : set_to_vertices(s)) p *= entries_[static_cast<size_t>(v - 1)];
    return p;
}

SimplicialComplex named_family(Family kind, const std::vector<long>& params) {
    auto need = [&](size_t n) {
        if (params.size() != n) throw ValidationError("family expects " + std::to_string(n) + " parameter(s)");
    };
    switch (kind) {
        case Family::path: {
            need(1);
            long r = params[0];
            if (r < 3) throw ValidationError("path family needs r >= 3");
            std::vector<std::vector<int>> facets;
            for (long i = 1; i < r; ++i) facets.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
            return SimplicialComplex(static_cast<int>(r), facets);
        }
        case Family::cycle: {
            need(1);
            long n = params[0];
            if (n < 3) throw ValidationError("cycle family needs n >= 3");
            std::vector<std::vector<int>> facets;
            for (long i = 1; i < n; ++i) facets.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
            facets.push_back({static_cast<int>(n), 1});
            return SimplicialComplex(static_cast<int>(n), facets);
        }
        case Family::complete_graph: {
            need(1);
            long r = params[0];
            if (r < 2) throw ValidationError("complete_graph family needs r >= 2");
            std::vector<std::pair<int, int>> edges;
            for (int a = 1; a <= r; ++a)
                for (int b = a + 1; b <= r; ++b) edges.emplace_back(a, b);
            return edge_ideal_complex(Graph(static_cast<int>(r), edges));
        }
        case Family::complete_bipartite: {
            need(2);
            long alpha = params[0], beta = params[1];
            if (alpha < 1 || beta < 1) throw ValidationError("complete_bipartite family needs alpha, beta >= 1");
            std::vector<std::pair<int, int>> edges;
            for (int a = 1; a <= alpha; ++a)
                for (int b = 1; b <= beta; ++b) edges.emplace_back(a, static_cast<int>(alpha) + b);
            return edge_ideal_complex(Graph(static_cast<int>(alpha + beta), edges));
        }
        case Family::simplex: {
            need(1);
            long r = params[0];
            if (r < 1) throw ValidationError("simplex family needs r >= 1");
            std::vector<int> all;
            for (int i = 1; i <= r; ++i) all.push_back(i);
            return SimplicialComplex(static_cast<int>(r), {all});
        }
    }
    throw ValidationError("unknown family");
}

SimplicialComplex named_family(const std::string& kind, const std::vector<long>& params) {
    if (kind == "path") return named_family(Family::path, params);
    if (kind == "cycle") return named_family(Family::cycle, params);
    if (kind == "complete" || kind == "complete_graph") return named_family(Family::complete_graph, params);
    if (kind == "bipartite" || kind == "complete_bipartite") return named_family(Family::complete_bipartite, params);
    if (kind == "simplex") return named_family(Family::simplex, params);
    throw ValidationError("unknown family '" + kind + "'");
}

}  // namespace hkface
