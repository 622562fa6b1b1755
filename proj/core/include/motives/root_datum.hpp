#pragma once

#include "motives/numeric.hpp"

#include <string>
#include <vector>

namespace motives {

enum class Isogeny { SimplyConnected, Adjoint };

struct CartanFactor {
    char type;  // 'A'..'G'
    int rank;
};

/// One irreducible block of the root system, in simple-root index ranges.
struct Component {
    int begin;  // first simple-root index of this block
    int end;    // one past the last
    std::vector<int> highest_root;        // simple-root coords, full-rank width
    std::vector<int> highest_coroot;      // coroot coords of its coroot
};

/// Split semisimple root datum, possibly a product of irreducible factors.
/// cartan[i][j] is the value of simple root i on simple coroot j.
struct RootDatum {
    std::string label;
    std::vector<CartanFactor> factors;
    Isogeny isogeny = Isogeny::SimplyConnected;
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    std::vector<std::vector<int>> positive_roots;  // simple-root coordinates
    std::vector<int> heights;                      // height of each positive root
    std::vector<int> degrees;                      // invariant degrees, ascending
    std::vector<int> height_mult;  // coordinate sums over positive roots = (2rho pairings)
    std::vector<long> symmetrizer; // d_i with d_i * cartan[i][j] symmetric... see build
    std::vector<Component> components;
    int dim = 0;                   // rank + number of roots
    Integer pi1_order = 1;

    int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }
    Integer weyl_order() const;
    bool is_irreducible() const { return components.size() == 1; }
};

/// Parses "A2", "G2-sc", "B3-adjoint", "A2xA1", "A2-adjointxA1-adjoint".
/// All annotated factors must agree on the isogeny; default simply connected.
RootDatum build_root_datum(const std::string& spec);

/// Cocharacter of the maximal torus, stored in the lattice basis fixed by the
/// isogeny type: coroot-lattice coordinates when simply connected, pairing
/// (coweight) coordinates when adjoint.
struct Cocharacter {
    std::vector<int> coords;
    std::vector<int> pairings;  // value on each simple root
    int pairing_2rho = 0;

    bool is_dominant() const;
};

Cocharacter make_cocharacter(const RootDatum& rd, const std::vector<int>& coords);
Cocharacter zero_cocharacter(const RootDatum& rd);

/// All dominant cocharacters with (lambda, 2rho) <= bound, sorted by
/// (pairing_2rho, coords lexicographic).
std::vector<Cocharacter> dominant_cochars_upto(const RootDatum& rd, int bound);

/// Pairing of a cocharacter with a character given in simple-root coordinates.
long pairing(const RootDatum& rd, const Cocharacter& lambda, const std::vector<int>& chi);

/// Diagonal of the Smith normal form of an integer matrix.
std::vector<Integer> smith_normal_diagonal(std::vector<std::vector<Integer>> m);

}  // namespace motives
