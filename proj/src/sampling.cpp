#include "statedist/sampling.hpp"

#include <cmath>
#include <numbers>

namespace statedist {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
    // mix seed and stream so distinct streams give unrelated engine states
    std::uint64_t state = seed;
    std::uint64_t mixed = splitmix64(state);
    state ^= stream * 0xda942042e4dd58b5ULL + 0x2545f4914f6cdd1dULL;
    mixed ^= splitmix64(state);
    engine_.seed(mixed);
}

std::uint64_t SeededRng::next_u64() { return engine_(); }

double SeededRng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededRng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller on explicitly constructed uniforms; avoids the
    // implementation-defined std::normal_distribution algorithm
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

cplx SeededRng::complex_gaussian(double variance) {
    const double scale = std::sqrt(0.5 * variance);
    return {scale * gaussian(), scale * gaussian()};
}

std::vector<cplx> haar_state(std::size_t d, SeededRng& rng) {
    if (d < 1) throw ValidationError("haar_state: dimension must be >= 1");
    std::vector<cplx> v(d);
    double norm2 = 0.0;
    const double variance = 1.0 / static_cast<double>(d);
    for (auto& a : v) {
        a = rng.complex_gaussian(variance);
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : v) a *= inv;
    return v;
}

ComplexMatrix ginibre(std::size_t d, std::size_t n, SeededRng& rng) {
    if (d < 1 || n < 1) throw ValidationError("ginibre: dimensions must be >= 1");
    ComplexMatrix m(d, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.complex_gaussian(1.0);
    return m;
}

BooleanFunction random_boolean_function(std::size_t n_bits, SeededRng& rng) {
    BooleanFunction f;
    f.n_bits = n_bits;
    f.table.resize(std::size_t{1} << n_bits);
    for (auto& bit : f.table) bit = static_cast<std::uint8_t>(rng.next_u64() >> 63);
    return f;
}

std::vector<cplx> boolean_to_state(const BooleanFunction& f) {
    const std::size_t d = f.domain_size();
    if (d == 0 || d != (std::size_t{1} << f.n_bits))
        throw ValidationError("boolean_to_state: truth table length must be 2^n_bits");
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<cplx> v(d);
    for (std::size_t x = 0; x < d; ++x) v[x] = f.table[x] ? -amp : amp;
    return v;
}

std::size_t hamming_distance(const BooleanFunction& f, const BooleanFunction& g) {
    if (f.table.size() != g.table.size())
        throw ValidationError("hamming_distance: mismatched truth tables");
    std::size_t count = 0;
    for (std::size_t x = 0; x < f.table.size(); ++x)
        if ((f.table[x] != 0) != (g.table[x] != 0)) ++count;
    return count;
}

PureEnsemble random_oracle_ensemble(std::size_t big_n, std::size_t n_bits, SeededRng& rng) {
    if (big_n < 1) throw ValidationError("random_oracle_ensemble: need at least one state");
    std::vector<std::vector<cplx>> states;
    states.reserve(big_n);
    for (std::size_t i = 0; i < big_n; ++i)
        states.push_back(boolean_to_state(random_boolean_function(n_bits, rng)));
    return make_pure_ensemble(std::move(states));
}

PureEnsemble random_pure_ensemble(std::size_t n, std::size_t d, SeededRng& rng) {
    if (n < 1) throw ValidationError("random_pure_ensemble: need at least one state");
    std::vector<std::vector<cplx>> states;
    states.reserve(n);
    for (std::size_t i = 0; i < n; ++i) states.push_back(haar_state(d, rng));
    return make_pure_ensemble(std::move(states));
}

}  // namespace statedist
