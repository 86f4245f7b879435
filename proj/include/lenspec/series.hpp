#pragma once

#include "lenspec/rational.hpp"

#include <string>
#include <vector>

namespace lenspec {

/// Power-series prefix with exact rational coefficients: coefficients of
/// z^0 .. z^order.  Arithmetic is closed at the truncation order; the order
/// of a sum or product is the minimum of the operand orders.
class TruncatedSeries {
public:
    TruncatedSeries(std::vector<Rat> coeffs, int order);
    static TruncatedSeries zero(int order);

    int order() const { return order_; }
    const Rat& coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a,
                                     const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a,
                                     const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a,
                                     const TruncatedSeries& b);

    /// Same order and identical coefficients.
    bool operator==(const TruncatedSeries& o) const;
    /// Coefficients agree through min(order, o.order).
    bool agrees_with(const TruncatedSeries& o) const;

    TruncatedSeries truncated(int order) const;

    std::string to_string() const;

private:
    std::vector<Rat> c_;
    int order_;
};

/// Maclaurin coefficients 0..K of f.  Requires the denominator to have a
/// nonzero constant term once the z-power prefactor is separated; a negative
/// prefactor additionally requires the leading coefficients it consumes to
/// vanish.  Throws non_expandable otherwise.
TruncatedSeries series_expand(const RationalFunction& f, int K);

} // namespace lenspec
