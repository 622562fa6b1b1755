#pragma once

#include "motives/root_datum.hpp"
#include "motives/target_poly.hpp"

#include <map>
#include <vector>

namespace motives {

enum class PoincareMethod { Bfs, Formula };

/// One Weyl group element, stored as integer matrix actions (row-major).
struct WeylElement {
    std::vector<int> coroot_action;
    std::vector<int> root_action;
    std::vector<int> root_action_inv;
    int length = 0;
    int parent = -1;  // BFS predecessor
    int gen = -1;     // generator applied to the predecessor
};

struct WeylGroupTable {
    RootDatum rd;
    std::vector<WeylElement> elements;        // breadth-first, by length
    std::map<std::vector<int>, int> index;    // coroot_action -> position
    int max_length = 0;

    size_t size() const { return elements.size(); }
    /// Applies element w to a vector in coroot coordinates.
    std::vector<int> apply_coroot(int w, const std::vector<int>& c) const;
    std::vector<int> apply_root_inv(int w, const std::vector<int>& n) const;
};

/// Breadth-first enumeration; throws LimitExceeded past `limit` elements.
WeylGroupTable weyl_enumerate(const RootDatum& rd, size_t limit = 1000000);

/// Length generating polynomial, by enumeration or as
/// prod_i (1 + t + ... + t^{d_i - 1}).
TargetPoly weyl_poincare(const RootDatum& rd, PoincareMethod method);

/// Minimal-length coset representatives for the stabilizer of a dominant
/// cocharacter: sum of t^depth over the orbit of lambda.
TargetPoly parabolic_coset_poincare(const RootDatum& rd, const Cocharacter& lambda);

struct AffineEnumeration {
    std::vector<Integer> counts;   // counts[k] = number of elements of length k
    bool lengths_consistent;       // BFS depth agrees with the hyperplane count
};

/// Affine Weyl group elements up to the given length, with an independent
/// length computation by counting separating reflection hyperplanes.
AffineEnumeration affine_enumerate(const RootDatum& rd, int maxlen,
                                   size_t limit = 4000000);

/// Affine length generating series through t^maxlen: either from the BFS or
/// from the finite Poincare polynomial divided by prod_i (1 - t^{d_i - 1}).
TargetPoly affine_poincare(const RootDatum& rd, int maxlen, PoincareMethod method);

}  // namespace motives
