// Deterministic seeded generation of Haar-random states, Ginibre matrices
// and random Boolean-oracle states.
//
// Reproducibility contract: a SeededRng is fully determined by its
// (seed, stream) pair. Independent trials should each derive their own
// stream id so that parallel and serial executions see identical draws.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "statedist/complex_matrix.hpp"
#include "statedist/ensemble.hpp"

namespace statedist {

class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::uint64_t next_u64();
    double uniform01();  // [0, 1)
    double gaussian();   // standard normal (Box-Muller; engine-only state)
    cplx complex_gaussian(double variance);  // CN(0, variance)

  private:
    std::uint64_t seed_ = 0;
    std::uint64_t stream_ = 0;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

struct BooleanFunction {
    std::size_t n_bits = 0;
    std::vector<std::uint8_t> table;  // 2^n_bits values in {0, 1}

    std::size_t domain_size() const { return table.size(); }
};

// Uniform state on the complex unit sphere: i.i.d. CN(0, 1/d) components,
// explicitly normalized to exact unit norm.
std::vector<cplx> haar_state(std::size_t d, SeededRng& rng);

// d x n matrix of i.i.d. CN(0, 1) entries.
ComplexMatrix ginibre(std::size_t d, std::size_t n, SeededRng& rng);

BooleanFunction random_boolean_function(std::size_t n_bits, SeededRng& rng);

// |psi_f> with components (-1)^{f(x)} / sqrt(D), D = 2^n_bits.
std::vector<cplx> boolean_to_state(const BooleanFunction& f);

std::size_t hamming_distance(const BooleanFunction& f, const BooleanFunction& g);

// N equiprobable oracle states from truth tables drawn uniformly with
// replacement.
PureEnsemble random_oracle_ensemble(std::size_t big_n, std::size_t n_bits, SeededRng& rng);

// n equiprobable Haar-random d-dimensional states.
PureEnsemble random_pure_ensemble(std::size_t n, std::size_t d, SeededRng& rng);

}  // namespace statedist
