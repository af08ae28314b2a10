#ifndef PWAVG_RNG_HPP
#define PWAVG_RNG_HPP

#include <cstdint>
#include <random>

#include "pwavg/rational.hpp"

namespace pwavg {

/// Deterministic random source; the seed is part of every reproducible
/// run report.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed), seed_(seed) {}

    uint64_t seed() const { return seed_; }

    long uniform_int(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng_);
    }

    /// Random positive rational with numerator/denominator in [1, bound].
    Rat random_rational(long bound = 10000) {
        return rat(uniform_int(1, bound), uniform_int(1, bound));
    }

    /// Random signed rational, zero excluded.
    Rat random_signed_rational(long bound = 10000) {
        Rat q = random_rational(bound);
        return uniform_int(0, 1) ? q : Rat(-q);
    }

    /// Rational surrogate for Pi: a random rational in a small window
    /// around it, so magnitudes stay natural while the transcendence
    /// argument keeps polynomial evaluations generically nonzero.
    Rat random_pi_surrogate() {
        Rat base(314159, 100000);
        base.canonicalize();
        Rat jitter(uniform_int(1, 10000), 100000000);
        jitter.canonicalize();
        return base + jitter;
    }

    double uniform_real(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(eng_);
    }

private:
    std::mt19937_64 eng_;
    uint64_t seed_;
};

} // namespace pwavg

#endif
