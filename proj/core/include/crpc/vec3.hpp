#ifndef CRPC_VEC3_HPP
#define CRPC_VEC3_HPP

#include <cmath>

namespace crpc {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double c) const { return {c * x, c * y, c * z}; }
    Vec3 operator/(double c) const { return {x / c, y / c, z / c}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const { return *this / norm(); }
};

inline Vec3 operator*(double c, const Vec3& v) { return v * c; }

} // namespace crpc

#endif
