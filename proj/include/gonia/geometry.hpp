#pragma once

#include <cmath>
#include <cstdint>

namespace gonia {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }

inline Vec3 normalized(const Vec3& a) {
    double n = norm(a);
    return {a.x / n, a.y / n, a.z / n};
}

// Angle between unit vectors, stable near 0 and pi.
inline double geodesic_distance(const Vec3& u, const Vec3& v) {
    return std::atan2(norm(cross(u, v)), dot(u, v));
}

inline double triple_product(const Vec3& u, const Vec3& v, const Vec3& w) {
    return dot(u, cross(v, w));
}

// Counter-based deterministic generator: sample i is a pure function of
// (seed, i), so any partitioning of the index range reproduces the same
// stream. SplitMix64 finalizer over a Weyl sequence.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    // Uniform in [0, 1).
    double uniform(std::uint64_t index) const {
        return static_cast<double>(mix(seed_ + (index + 1) * 0x9E3779B97F4A7C15ull) >> 11) *
               0x1.0p-53;
    }

    // Uniform direction on the unit sphere for sample i: uniform cosine of
    // the polar angle, uniform azimuth.
    Vec3 direction(std::uint64_t i) const {
        double z = 2.0 * uniform(2 * i) - 1.0;
        double phi = 2.0 * 3.14159265358979323846 * uniform(2 * i + 1);
        double s = std::sqrt(std::fmax(0.0, 1.0 - z * z));
        return {s * std::cos(phi), s * std::sin(phi), z};
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
};

// Monte Carlo estimate with its standard error.
struct McEstimate {
    double value = 0.0;
    double stderr_value = 0.0;
    std::uint64_t samples = 0;
};

}  // namespace gonia
