#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "aci/polynomial.hpp"
#include "aci/resolution.hpp"

// Brute-force references built from plain linear algebra over the graded
// pieces S_d. None of them touch Gröbner bases or resolutions.
namespace aci::verify {

/// beta_{i,j} = dim H_i(K(x) (x) S/I)_j for all j <= max_degree. Requires
/// homogeneous generators.
BettiTable koszul_tor_table(const Ideal& I, int max_degree);

/// dim I_d for d = 0..max_degree.
std::vector<std::size_t> ideal_dims(const Ideal& I, int max_degree);

/// dim (I : f)_d for d = 0..max_degree, from the kernel of S_d -> (S/I)_{d+deg f}.
std::vector<std::size_t> colon_dims(const Ideal& I, const Polynomial& f, int max_degree);

/// Orbits of the symmetric group on labeled graphs with `edges` edges on
/// 2 * edges vertices, keyed by the number of non-isolated vertices. Each
/// orbit is one isomorphism class. Supports edges <= 5.
std::map<int, long long> labeled_orbit_census(int edges);

}  // namespace aci::verify
