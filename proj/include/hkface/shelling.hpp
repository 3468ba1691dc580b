#ifndef HKFACE_SHELLING_HPP
#define HKFACE_SHELLING_HPP

#include <vector>

#include "hkface/complex.hpp"

namespace hkface {

enum class ShellStatus { shellable, not_shellable, undecided };

struct ShellingResult {
    ShellStatus status;
    // Facet indices into facet_masks(); the lexicographically least valid
    // order when status == shellable, empty otherwise.
    std::vector<int> order;
};

// Exhaustive search with pruning over facet orderings, non-pure
// (Bjorner-Wachs) shelling condition: for each j > 1 the intersection of
// facet_j with the union of the earlier facets is a nonempty union of
// codimension-1 faces of facet_j. Complexes with more than max_facets
// facets come back undecided, never guessed.
ShellingResult is_shellable(const SimplicialComplex& c, int max_facets = 12);

// Independent verifier of the shelling condition: materializes the
// intersection subcomplex face-by-face rather than reusing the search's
// incremental test. order holds facet indices.
bool verify_shelling(const SimplicialComplex& c, const std::vector<int>& order);

}  // namespace hkface

#endif
