#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rwl/bigmath.hpp"
#include "rwl/errors.hpp"

namespace rwl {

// Truncated power series with exact rational coefficients. The truncation
// order is part of the value: binary operations require matching orders and
// every product is cut back to that order, so coefficients up to order N are
// exact regardless of what was discarded above it.
class RationalSeries {
public:
    explicit RationalSeries(int order) : coeffs_(static_cast<size_t>(check_order(order)) + 1) {}

    RationalSeries(int order, std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
        check_order(order);
        coeffs_.resize(static_cast<size_t>(order) + 1);
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const BigRat& coeff(int i) const {
        if (i < 0 || i > order())
            throw parameter_error("series coefficient index " + std::to_string(i) +
                                  " out of range for order " + std::to_string(order()));
        return coeffs_[static_cast<size_t>(i)];
    }

    void set_coeff(int i, BigRat v) {
        coeff(i); // bounds check
        coeffs_[static_cast<size_t>(i)] = std::move(v);
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    RationalSeries operator+(const RationalSeries& o) const {
        require_same_order(o, "add");
        RationalSeries r(order());
        for (int i = 0; i <= order(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        return r;
    }

    RationalSeries operator-(const RationalSeries& o) const {
        require_same_order(o, "subtract");
        RationalSeries r(order());
        for (int i = 0; i <= order(); ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        return r;
    }

    RationalSeries operator*(const BigRat& s) const {
        RationalSeries r(order());
        for (int i = 0; i <= order(); ++i) r.coeffs_[i] = coeffs_[i] * s;
        return r;
    }

    // Truncated Cauchy product. Coefficient i of the result depends only on
    // inputs up to order i.
    RationalSeries operator*(const RationalSeries& o) const {
        require_same_order(o, "multiply");
        RationalSeries r(order());
        for (int i = 0; i <= order(); ++i) {
            BigRat acc = 0;
            for (int j = 0; j <= i; ++j) acc += coeffs_[j] * o.coeffs_[i - j];
            r.coeffs_[i] = acc;
        }
        return r;
    }

    // d/dx; the representable order drops by one.
    RationalSeries derivative() const {
        if (order() == 0) return RationalSeries(0);
        RationalSeries r(order() - 1);
        for (int i = 1; i <= order(); ++i) r.coeffs_[i - 1] = coeffs_[i] * i;
        return r;
    }

    // Multiplication by x at fixed order: coefficients shift up, the top one
    // falls off.
    RationalSeries shift_mul_x() const {
        RationalSeries r(order());
        for (int i = order(); i >= 1; --i) r.coeffs_[i] = coeffs_[i - 1];
        r.coeffs_[0] = 0;
        return r;
    }

    RationalSeries truncate(int new_order) const {
        if (new_order > order())
            throw parameter_error("truncate: order " + std::to_string(new_order) +
                                  " exceeds current order " + std::to_string(order()));
        RationalSeries r(new_order);
        for (int i = 0; i <= new_order; ++i) r.coeffs_[i] = coeffs_[i];
        return r;
    }

    bool operator==(const RationalSeries& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const RationalSeries& o) const { return !(*this == o); }

private:
    static int check_order(int order) {
        if (order < 0) throw parameter_error("series order must be >= 0, got " + std::to_string(order));
        return order;
    }

    void require_same_order(const RationalSeries& o, const char* op) const {
        if (order() != o.order())
            throw parameter_error(std::string("series ") + op + ": order mismatch " +
                                  std::to_string(order()) + " vs " + std::to_string(o.order()));
    }

    std::vector<BigRat> coeffs_;
};

} // namespace rwl
