#pragma once

#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace mollipath {

enum class PNorm { One, Two, Inf };

// Small fixed-capacity vector for points in R^1..R^3.
class Vec {
public:
    Vec() : dim_(0) {}
    explicit Vec(int dim) : dim_(dim) {
        if (dim < 1 || dim > 3) throw std::invalid_argument("Vec: dimension must be 1, 2 or 3");
    }
    Vec(double x, double y) : dim_(2) { c_[0] = x; c_[1] = y; }
    Vec(double x, double y, double z) : dim_(3) { c_[0] = x; c_[1] = y; c_[2] = z; }

    static Vec scalar(double x) {
        Vec v(1);
        v.c_[0] = x;
        return v;
    }

    int dim() const { return dim_; }
    double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    Vec operator+(const Vec& o) const {
        Vec r(dim_);
        for (int i = 0; i < dim_; ++i) r.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] + o[i];
        return r;
    }
    Vec operator-(const Vec& o) const {
        Vec r(dim_);
        for (int i = 0; i < dim_; ++i) r.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] - o[i];
        return r;
    }
    Vec operator*(double s) const {
        Vec r(dim_);
        for (int i = 0; i < dim_; ++i) r.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] * s;
        return r;
    }
    friend Vec operator*(double s, const Vec& v) { return v * s; }

    double dot(const Vec& o) const {
        double s = 0.0;
        for (int i = 0; i < dim_; ++i) s += c_[static_cast<std::size_t>(i)] * o[i];
        return s;
    }

    double norm2() const { return std::sqrt(dot(*this)); }

    double norm(PNorm p) const {
        switch (p) {
        case PNorm::One: {
            double s = 0.0;
            for (int i = 0; i < dim_; ++i) s += std::abs(c_[static_cast<std::size_t>(i)]);
            return s;
        }
        case PNorm::Two:
            return norm2();
        case PNorm::Inf: {
            double m = 0.0;
            for (int i = 0; i < dim_; ++i) m = std::max(m, std::abs(c_[static_cast<std::size_t>(i)]));
            return m;
        }
        }
        return 0.0;
    }

    bool operator==(const Vec& o) const {
        if (dim_ != o.dim_) return false;
        for (int i = 0; i < dim_; ++i)
            if (c_[static_cast<std::size_t>(i)] != o[i]) return false;
        return true;
    }

private:
    std::array<double, 3> c_{};
    int dim_;
};

}  // namespace mollipath
