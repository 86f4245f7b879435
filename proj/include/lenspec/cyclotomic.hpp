#pragma once

#include "lenspec/intpoly.hpp"
#include "lenspec/series.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace lenspec {

class CycloElem;

/// Arithmetic context for Q(zeta_q): the q-th cyclotomic polynomial and the
/// reduction table for powers z^k, phi(q) <= k < 2 phi(q) - 1.  Immutable
/// after construction; share freely across threads.
class CycloField : public std::enable_shared_from_this<CycloField> {
public:
    static std::shared_ptr<const CycloField> make(unsigned q);

    unsigned conductor() const { return q_; }
    unsigned dim() const { return dim_; }
    const IntPoly& minimal_poly() const { return phi_; }

    CycloElem zero() const;
    CycloElem one() const;
    CycloElem from_rational(Rat v) const;
    /// zeta_q^e for any integer e.
    CycloElem zeta_pow(long e) const;

    /// Coordinates of z^(dim + j) mod Phi_q, 0 <= j <= dim - 2.
    const std::vector<Rat>& reduction_row(unsigned j) const
    {
        return reduction_[j];
    }

private:
    explicit CycloField(unsigned q);
    friend class CycloElem;

    unsigned q_;
    unsigned dim_; // phi(q)
    IntPoly phi_;
    // reduction_[j] = coordinates of z^(dim_ + j) mod Phi_q, j = 0..dim_-2.
    std::vector<std::vector<Rat>> reduction_;
};

/// Element of Q(zeta_q), stored as the representative polynomial of degree
/// < phi(q) reduced modulo the q-th cyclotomic polynomial.
class CycloElem {
public:
    CycloElem() = default;

    unsigned conductor() const { return field_->conductor(); }
    const std::vector<Rat>& coords() const { return coords_; }
    const std::shared_ptr<const CycloField>& field() const { return field_; }

    bool is_zero() const;
    /// True when the reduced representative is a constant polynomial.
    bool is_rational() const;
    /// Throws not_rational when coordinates beyond degree 0 survive.
    Rat as_rational() const;

    friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
    CycloElem& operator+=(const CycloElem& o) { return *this = *this + o; }
    CycloElem& operator-=(const CycloElem& o) { return *this = *this - o; }
    CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }
    CycloElem operator*(const Rat& k) const;
    bool operator==(const CycloElem& o) const;

private:
    friend class CycloField;
    CycloElem(std::shared_ptr<const CycloField> f, std::vector<Rat> coords);

    std::shared_ptr<const CycloField> field_;
    std::vector<Rat> coords_;
};

/// Sum_{h=0}^{q-1} term(h), reduced in Q(zeta_q); the total must come out
/// rational (Galois-symmetric input), otherwise not_rational is thrown.
Rat cyclo_average(unsigned q, const std::function<CycloElem(unsigned)>& term);

/// Power series with coefficients in Q(zeta_q); just enough arithmetic for
/// the character-sum oracles (inversion of a polynomial with unit constant
/// term, products, scalar shifts).
class CycloSeries {
public:
    CycloSeries(std::shared_ptr<const CycloField> f, int order);

    int order() const { return order_; }
    const CycloElem& coeff(int k) const { return c_.at(k); }
    CycloElem& coeff(int k) { return c_.at(k); }

    friend CycloSeries operator+(const CycloSeries& a, const CycloSeries& b);
    friend CycloSeries operator*(const CycloSeries& a, const CycloSeries& b);
    CycloSeries& operator+=(const CycloSeries& o) { return *this = *this + o; }
    CycloSeries scaled(const CycloElem& k) const;

    /// Series inverse; the constant term must be a unit (nonzero).
    CycloSeries inverse() const;

    /// All coefficients rational; throws not_rational otherwise.
    TruncatedSeries as_rational_series() const;

private:
    std::shared_ptr<const CycloField> field_;
    std::vector<CycloElem> c_;
    int order_;
};

/// Series form of sum_{h=0}^{q-1} term(h): every coefficient must reduce to
/// a rational number.
TruncatedSeries
cyclo_average_series(unsigned q, int order,
                     const std::function<CycloSeries(unsigned)>& term);

} // namespace lenspec
