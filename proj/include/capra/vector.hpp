#pragma once

#include "capra/scalar.hpp"

#include <initializer_list>
#include <variant>
#include <vector>

namespace capra {

using VecR = std::vector<Rat>;     // exact coordinates
using VecD = std::vector<double>;  // float coordinates

/// Point of R^d whose coordinates all share one Scalar mode.
class Vector {
public:
    explicit Vector(VecR c) : rep_(std::move(c)) { require_nonempty(); }
    explicit Vector(VecD c) : rep_(std::move(c)) { require_nonempty(); }

    static Vector exact(std::initializer_list<long> c) {
        VecR v;
        for (long x : c) v.emplace_back(x);
        return Vector(std::move(v));
    }

    Mode mode() const { return std::holds_alternative<VecR>(rep_) ? Mode::exact : Mode::real; }
    std::size_t dim() const {
        return mode() == Mode::exact ? std::get<VecR>(rep_).size() : std::get<VecD>(rep_).size();
    }

    Scalar operator[](std::size_t i) const {
        return mode() == Mode::exact ? Scalar(std::get<VecR>(rep_)[i]) : Scalar(std::get<VecD>(rep_)[i]);
    }

    const VecR& exact_coords() const {
        if (mode() != Mode::exact) throw ModeMismatchError("Vector: exact coordinates requested from float vector");
        return std::get<VecR>(rep_);
    }
    const VecD& real_coords() const {
        if (mode() != Mode::real) throw ModeMismatchError("Vector: float coordinates requested from exact vector");
        return std::get<VecD>(rep_);
    }

    /// Lossless: float coordinates are dyadic rationals.
    VecR exactified() const {
        if (mode() == Mode::exact) return std::get<VecR>(rep_);
        VecR out;
        out.reserve(dim());
        for (double v : std::get<VecD>(rep_)) out.push_back(rat_from_double(v));
        return out;
    }

    /// Lossy for exact vectors.
    VecD realized() const {
        if (mode() == Mode::real) return std::get<VecD>(rep_);
        VecD out;
        out.reserve(dim());
        for (const Rat& v : std::get<VecR>(rep_)) out.push_back(rat_to_double(v));
        return out;
    }

    bool is_zero() const {
        if (mode() == Mode::exact) {
            for (const Rat& v : std::get<VecR>(rep_))
                if (!v.is_zero()) return false;
        } else {
            for (double v : std::get<VecD>(rep_))
                if (v != 0.0) return false;
        }
        return true;
    }

    bool operator==(const Vector& o) const {
        if (mode() != o.mode() || dim() != o.dim()) return false;
        return rep_ == o.rep_;
    }

private:
    void require_nonempty() const {
        if (dim() == 0) throw InvalidInputError("Vector: dimension must be >= 1");
    }

    std::variant<VecR, VecD> rep_;
};

inline void check_compatible(const Vector& a, const Vector& b) {
    if (a.mode() != b.mode()) throw ModeMismatchError("Vector: mixed exact/float operands");
    if (a.dim() != b.dim()) throw DimensionMismatchError("Vector: dimension mismatch");
}

inline Scalar dot(const Vector& a, const Vector& b) {
    check_compatible(a, b);
    if (a.mode() == Mode::exact) {
        Rat s(0);
        const VecR &x = a.exact_coords(), &y = b.exact_coords();
        for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
        return Scalar(std::move(s));
    }
    double s = 0;
    const VecD &x = a.real_coords(), &y = b.real_coords();
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return Scalar(s);
}

inline Rat dot_r(const VecR& x, const VecR& y) {
    Rat s(0);
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline double dot_d(const VecD& x, const VecD& y) {
    double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

}  // namespace capra
