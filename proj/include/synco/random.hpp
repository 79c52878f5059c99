#pragma once

// Seeded generators for property tests. Complexes are built in a normal form
// (cohomology classes plus acyclic pairs x ↦ dx) and then moved by a random
// change of basis in every degree, so every structure map stays exact.

#include <cstdint>
#include <random>

#include "synco/phc.hpp"
#include "synco/spectral.hpp"

namespace synco {

using Rng = std::mt19937_64;

/// Uniform in [−bound, bound], with small denominators now and then.
Rational random_rational(Rng& rng, int bound = 3);
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound = 3);
Matrix random_invertible(Rng& rng, std::size_t n);

struct ComplexShape {
    int lo = 0, hi = 1;
    std::size_t max_classes = 2;  ///< per degree
    std::size_t max_pairs = 1;    ///< acyclic pairs between consecutive degrees
};

Complex random_complex(Rng& rng, const ComplexShape& shape);

/// Filtration levels lie in [level_lo, level_hi]. With `jumps`, the target of
/// an acyclic pair may sit deeper than its source, which breaks strictness.
FilteredComplex random_filtered_complex(Rng& rng, const ComplexShape& shape, int level_lo = 0, int level_hi = 2,
                                        bool jumps = false);

/// M₀, M_dR and M_K share a normal form; c and s are chain isomorphisms.
PHodgeComplex random_phc(Rng& rng, const CoefficientFrame& frame, const ComplexShape& shape, int level_lo = -1,
                         int level_hi = 2);
/// Concentrated in degree 0 (no differentials).
PHodgeComplex random_phc_degree0(Rng& rng, const CoefficientFrame& frame, std::size_t max_dim = 2);

/// m → m ⊕ A with A acyclic and its de Rham part filtered acyclic.
PHMorphism random_quasi_iso(Rng& rng, const PHodgeComplex& m, const ComplexShape& shape);
/// m → m ⊕ K(j)[−n] for a random twist: never a quasi-isomorphism.
PHMorphism random_non_quasi_iso(Rng& rng, const PHodgeComplex& m);

/// Sum of a tensor product of two random complexes and a few staircases
/// (which carry higher differentials), moved by a change of basis at every bidegree.
DoubleComplex random_double_complex(Rng& rng, int size = 2);

}  // namespace synco
