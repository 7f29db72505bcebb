#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "krtrace/error.hpp"

namespace krt {

using Rational = mpq_class;

// Monic minimal polynomial of 2cos(pi/N) over Q, as coefficients c[0] + c[1]x + ... + x^deg.
// Obtained from the cyclotomic polynomial Phi_{2N} via the palindromic substitution
// y = x + 1/x, so no factoring over Q is ever needed.
std::vector<Rational> minpoly_2cos(int N);

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Element of Q(theta), theta = 2cos(pi/N): a polynomial in theta of degree < [Q(theta):Q],
// with exact rational coefficients.
class FieldElem {
public:
    FieldElem() : field_(nullptr) {}
    FieldElem(const NumberField* field, std::vector<Rational> coeffs);

    const NumberField* field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool isZero() const;
    bool isRational() const; // no theta component
    Rational rationalValue() const;

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem inverse() const;

    void addMul(const FieldElem& a, const FieldElem& b); // *this += a*b

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    std::string str() const; // human-readable, e.g. "1/2 - 1/2*h" with h = theta

private:
    const NumberField* field_;
    std::vector<Rational> c_;
    friend class NumberField;
};

// The real cyclotomic field Q(2cos(pi/N)). Immutable and shared; all elements keep a
// raw pointer to their field, so fields must outlive their elements.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    static FieldPtr make(int N);

    int order() const { return n_; }    // the N in theta = 2cos(pi/N)
    int degree() const { return deg_; } // [Q(theta) : Q]
    const std::vector<Rational>& minimalPolynomial() const { return minpoly_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem theta() const;
    FieldElem fromRational(const Rational& r) const;
    FieldElem fromInt(long v) const { return fromRational(Rational(v)); }

    // 2cos(k*pi/N) as a field element, via p_0 = 2, p_1 = theta, p_{r+1} = theta p_r - p_{r-1}.
    FieldElem twoCos(long k) const;

    // Numeric embedding at theta ~ 2cos(pi/N). Used for diagnostics and tests only;
    // never feeds back into exact results.
    double embed(const FieldElem& e) const;

    // Reduce a coefficient vector of length up to 2*deg-1 modulo the minimal polynomial.
    std::vector<Rational> reduce(std::vector<Rational> v) const;

private:
    NumberField(int N);
    int n_ = 1;
    int deg_ = 1;
    std::vector<Rational> minpoly_;
    // reduction_[i] = coefficient vector (length deg) of theta^(deg+i) reduced
    std::vector<std::vector<Rational>> reduction_;
    double thetaApprox_ = 0.0;
};

// lcm-based field order for a set of Coxeter exponents: entries 2 and 3 contribute
// rational cosines and do not enlarge the field.
int field_order_for_coxeter_entries(const std::vector<int>& finiteEntries);

} // namespace krt
