#pragma once

#include "capra/errors.hpp"
#include "capra/rational.hpp"

#include <cmath>
#include <variant>

namespace capra {

enum class Mode { exact, real };

/// Dual-mode number: an exact rational or a binary double, never both.
/// Arithmetic requires both operands in the same mode; there is no
/// silent promotion between modes.
class Scalar {
public:
    explicit Scalar(Rat r) : rep_(std::move(r)) {}
    explicit Scalar(double v) : rep_(v) {}

    static Scalar exact(long n) { return Scalar(Rat(n)); }
    static Scalar zero(Mode m) { return m == Mode::exact ? Scalar(Rat(0)) : Scalar(0.0); }

    Mode mode() const { return std::holds_alternative<Rat>(rep_) ? Mode::exact : Mode::real; }
    bool is_exact() const { return mode() == Mode::exact; }

    const Rat& rat() const {
        if (!is_exact()) throw ModeMismatchError("Scalar: exact value requested from float-mode scalar");
        return std::get<Rat>(rep_);
    }
    double real() const {
        if (is_exact()) throw ModeMismatchError("Scalar: float value requested from exact-mode scalar");
        return std::get<double>(rep_);
    }

    /// Lossy read usable in either mode (reporting, plots).
    double to_double() const { return is_exact() ? rat_to_double(std::get<Rat>(rep_)) : std::get<double>(rep_); }

    Scalar operator+(const Scalar& o) const { return apply(o, [](auto a, auto b) { return a + b; }); }
    Scalar operator-(const Scalar& o) const { return apply(o, [](auto a, auto b) { return a - b; }); }
    Scalar operator*(const Scalar& o) const { return apply(o, [](auto a, auto b) { return a * b; }); }
    Scalar operator/(const Scalar& o) const {
        if (o.is_zero()) throw InvalidInputError("Scalar: division by zero");
        return apply(o, [](auto a, auto b) { return a / b; });
    }
    Scalar operator-() const {
        return is_exact() ? Scalar(Rat(-std::get<Rat>(rep_))) : Scalar(-std::get<double>(rep_));
    }

    bool operator==(const Scalar& o) const {
        check_mode(o);
        return is_exact() ? std::get<Rat>(rep_) == std::get<Rat>(o.rep_)
                          : std::get<double>(rep_) == std::get<double>(o.rep_);
    }
    bool operator<(const Scalar& o) const {
        check_mode(o);
        return is_exact() ? std::get<Rat>(rep_) < std::get<Rat>(o.rep_)
                          : std::get<double>(rep_) < std::get<double>(o.rep_);
    }

    bool is_zero() const { return is_exact() ? std::get<Rat>(rep_).is_zero() : std::get<double>(rep_) == 0.0; }
    int sign() const {
        if (is_exact()) return std::get<Rat>(rep_).sign();
        double v = std::get<double>(rep_);
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    }

private:
    void check_mode(const Scalar& o) const {
        if (mode() != o.mode()) throw ModeMismatchError("Scalar: mixed exact/float operands");
    }
    template <class F>
    Scalar apply(const Scalar& o, F f) const {
        check_mode(o);
        if (is_exact()) return Scalar(Rat(f(std::get<Rat>(rep_), std::get<Rat>(o.rep_))));
        return Scalar(f(std::get<double>(rep_), std::get<double>(o.rep_)));
    }

    std::variant<Rat, double> rep_;
};

}  // namespace capra
