#ifndef LOJEX_RNG_HPP
#define LOJEX_RNG_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace lojex {

// splitmix64; used both as a generator and to derive child stream seeds.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic, platform-independent generator. std::normal_distribution is
// implementation-defined, so all sampling goes through this class to keep
// outputs byte-reproducible from a seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {
        // decorrelate trivially related seeds
        splitmix64(state_);
    }

    // child stream for an indexed subtask; independent of draws on *this
    Rng child(uint64_t index) const {
        uint64_t s = state_ ^ (0x9e3779b97f4a7c15ULL * (index + 1));
        return Rng(s);
    }

    uint64_t next_u64() { return splitmix64(state_); }

    // uniform in [0,1)
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller without spare caching (one draw costs two uniforms)
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    std::vector<double> normal_vec(int n) {
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) v[i] = normal();
        return v;
    }

    // uniform direction on the unit sphere in R^n
    std::vector<double> direction(int n) {
        std::vector<double> v(n);
        double s = 0.0;
        do {
            s = 0.0;
            for (int i = 0; i < n; ++i) {
                v[i] = normal();
                s += v[i] * v[i];
            }
        } while (s == 0.0);
        s = 1.0 / std::sqrt(s);
        for (double& c : v) c *= s;
        return v;
    }

    // uniform in the closed ball of given radius
    std::vector<double> ball(int n, double radius) {
        std::vector<double> v = direction(n);
        double r = radius * std::pow(uniform(), 1.0 / n);
        for (double& c : v) c *= r;
        return v;
    }

    // uniform in the annulus r in [lo, hi] (radius density uniform in r^n)
    std::vector<double> annulus(int n, double lo, double hi) {
        std::vector<double> v = direction(n);
        double un = uniform();
        double r = std::pow(std::pow(lo, n) + un * (std::pow(hi, n) - std::pow(lo, n)), 1.0 / n);
        for (double& c : v) c *= r;
        return v;
    }

private:
    uint64_t state_;
};

}  // namespace lojex

#endif
