#include "hkface/oracle.hpp"

#include <algorithm>
#include <thread>

#include "hkface/engine.hpp"

namespace hkface {

bool in_power_of_pure_ideal(const std::vector<long>& a, const std::vector<long>& w, long k) {
    if (a.size() != w.size()) throw std::invalid_argument("exponent/threshold length mismatch");
    long total = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (w[i] < 1) throw std::invalid_argument("thresholds must be >= 1");
        total += a[i] / w[i];
        if (total >= k) return true;
    }
    return total >= k;
}

namespace {

// Count exponent vectors supported exactly on the vertices of `face` with
// 1 <= a_i <= box_i and sum_i floor(a_i / w_i) <= k-1.
std::uint64_t count_on_face(const std::vector<int>& face, const std::vector<long>& box,
                            const std::vector<long>& w, long k) {
    std::uint64_t count = 0;
    std::vector<long> a(face.size(), 1);
    if (face.empty()) return 1;  // the monomial 1, never in a proper ideal power (k >= 1)
    for (int vert : face)
        if (box[static_cast<size_t>(vert - 1)] < 1) return 0;  // no positive exponent fits
    while (true) {
        long floors = 0;
        for (size_t i = 0; i < face.size(); ++i) floors += a[i] / w[static_cast<size_t>(face[i] - 1)];
        if (floors < k) ++count;
        // odometer
        size_t pos = 0;
        while (pos < face.size()) {
            if (a[pos] < box[static_cast<size_t>(face[pos] - 1)]) {
                ++a[pos];
                break;
            }
            a[pos] = 1;
            ++pos;
        }
        if (pos == face.size()) break;
    }
    return count;
}

}  // namespace

std::uint64_t count_standard_monomials(const SimplicialComplex& c, const ExponentVector& v, long q, long k,
                                       const EnumerationBudget& budget, int threads) {
    if (q < 1 || k < 1) throw std::invalid_argument("oracle needs q, k >= 1");
    if (v.size() != c.num_vertices()) throw ValidationError("exponent vector length mismatch");

    // Box bound: x_i^{q v_i k} lies in (J^[q])^k, so a_i ranges over
    // 0 .. k q v_i - 1. Budget is checked on the full box up front, in exact
    // arithmetic so oversized q, k cannot overflow before the check fires.
    Integer volume(1);
    for (int i = 0; i < c.num_vertices(); ++i) volume *= Integer(k) * Integer(q) * Integer(v[i]);
    if (volume > Integer(static_cast<unsigned long>(budget.max_lattice_points)))
        throw BudgetExceeded("enumeration box " + volume.get_str() + " exceeds budget " +
                             std::to_string(budget.max_lattice_points));
    std::vector<long> box(static_cast<size_t>(c.num_vertices()));
    std::vector<long> w(static_cast<size_t>(c.num_vertices()));
    for (int i = 0; i < c.num_vertices(); ++i) {
        Integer wi = Integer(q) * Integer(v[i]);
        Integer boxi = Integer(k) * wi - 1;  // max exponent with support
        if (!boxi.fits_slong_p())
            throw BudgetExceeded("per-variable bound " + boxi.get_str() + " too large to enumerate");
        w[static_cast<size_t>(i)] = wi.get_si();
        box[static_cast<size_t>(i)] = boxi.get_si();
    }

    std::vector<VertexSet> faces = c.all_faces();
    std::vector<std::uint64_t> per_face(faces.size(), 0);

    auto work = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i)
            per_face[i] = count_on_face(set_to_vertices(faces[i]), box, w, k);
    };

    int nthreads = std::max(1, threads);
    if (nthreads == 1 || faces.size() < 2) {
        work(0, faces.size());
    } else {
        nthreads = std::min<int>(nthreads, static_cast<int>(faces.size()));
        std::vector<std::thread> pool;
        size_t chunk = (faces.size() + static_cast<size_t>(nthreads) - 1) / static_cast<size_t>(nthreads);
        for (int t = 0; t < nthreads; ++t) {
            size_t lo = static_cast<size_t>(t) * chunk;
            size_t hi = std::min(faces.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    std::uint64_t total = 0;
    for (std::uint64_t n : per_face) total += n;
    return total;
}

CrossValidationReport cross_validate(const SimplicialComplex& c, const ExponentVector& v, long q_max, long k_max,
                                     const EnumerationBudget& budget, int threads) {
    if (q_max < 1 || k_max < 1) throw std::invalid_argument("cross_validate needs q_max, k_max >= 1");
    const BivariatePolynomial closed = ghk_polynomial(c, v);
    CrossValidationReport report;
    report.all_match = true;
    for (long q = 1; q <= q_max; ++q) {
        for (long k = 1; k <= k_max; ++k) {
            Rational predicted = closed.evaluate(Rational(q), Rational(k));
            std::uint64_t counted = count_standard_monomials(c, v, q, k, budget, threads);
            bool match = is_integer(predicted) && predicted.get_num() == Integer(static_cast<unsigned long>(counted));
            report.points.push_back({q, k, predicted, counted, match});
            if (!match) report.all_match = false;
        }
    }
    return report;
}

std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& c) {
    if (c.num_vertices() > 20) throw ValidationError("minimal non-face enumeration limited to 20 vertices");
    std::vector<VertexSet> out;
    const VertexSet everyone = (VertexSet{1} << c.num_vertices()) - 1;
    for (VertexSet s = 1; s <= everyone; ++s) {
        if (c.is_face(s)) continue;
        bool minimal = true;
        for (int v : set_to_vertices(s))
            if (!c.is_face(s & ~(VertexSet{1} << (v - 1)))) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }
    return out;
}

}  // namespace hkface
