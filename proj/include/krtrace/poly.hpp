#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "krtrace/field.hpp"
#include "krtrace/linalg.hpp"

namespace krt {

// Monomial in up to 8 variables, exponents < 256, packed into a word with
// variable 0 in the most significant byte so plain integer comparison is lex order.
using Mono = std::uint64_t;

constexpr int kMaxVars = 8;

inline Mono monoOne() { return 0; }
inline Mono monoVar(int i) { return Mono(1) << (8 * (kMaxVars - 1 - i)); }
inline int monoExp(Mono m, int i) { return static_cast<int>((m >> (8 * (kMaxVars - 1 - i))) & 0xff); }
inline Mono monoMul(Mono a, Mono b) { return a + b; }
inline int monoDeg(Mono m) {
    int d = 0;
    while (m) {
        d += static_cast<int>(m & 0xff);
        m >>= 8;
    }
    return d;
}
// graded lex: total degree first, then lex with variable 0 dominant
inline bool monoLess(Mono a, Mono b) {
    int da = monoDeg(a), db = monoDeg(b);
    if (da != db) return da < db;
    return a < b;
}
std::string monoStr(Mono m, int nvars);

// All monomials of exact total degree d in nvars variables, graded-lex descending.
std::vector<Mono> monomials_of_degree(int nvars, int d);
long count_monomials(int nvars, int d); // C(d + nvars - 1, nvars - 1), 0 for d < 0

// Sparse multivariate polynomial over a number field. Terms are kept sorted by
// monoLess descending with no zero coefficients; the zero polynomial has no terms.
class MultiPoly {
public:
    using Term = std::pair<Mono, FieldElem>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<Term> terms); // normalizes

    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly constant(const FieldElem& c);
    static MultiPoly variable(const NumberField* field, int i);
    static MultiPoly monomial(const FieldElem& c, Mono m);

    const std::vector<Term>& terms() const { return t_; }
    bool isZero() const { return t_.empty(); }
    bool isConstant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
    FieldElem constantValue() const; // requires isConstant and nonzero poly... zero handled by caller
    int degree() const; // max total degree, -1 for zero
    bool isHomogeneous() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    bool operator==(const MultiPoly& o) const { return t_ == o.t_; }

    MultiPoly scaled(const FieldElem& c) const;
    MultiPoly mulMonomial(const FieldElem& c, Mono m) const;
    void addScaled(const MultiPoly& o, const FieldElem& c); // *this += c*o

    // coefficient of a monomial (zero element if absent); field taken from any term
    FieldElem coeff(Mono m, const NumberField* field) const;

    // substitution x_i -> sum_j A(j,i) x_j for an nvars x nvars matrix A
    MultiPoly applyLinear(const ScalarMatrix& a, int nvars) const;

    // exact division by a homogeneous linear form; throws Internal on nonzero remainder
    MultiPoly divideByLinear(const MultiPoly& linear, int nvars) const;

    std::string str(int nvars) const;

private:
    std::vector<Term> t_;
};

// Small dense matrix of polynomials.
class MatMP {
public:
    MatMP() : rows_(0), cols_(0) {}
    MatMP(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    MultiPoly& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const MultiPoly& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    static MatMP identity(const NumberField* field, int n);
    MatMP operator*(const MatMP& o) const;
    MatMP operator+(const MatMP& o) const;
    MatMP scaled(const FieldElem& c) const;
    void addScaled(const MatMP& o, const FieldElem& c);
    bool operator==(const MatMP& o) const;
    bool isZero() const;

private:
    int rows_, cols_;
    std::vector<MultiPoly> a_;
};

} // namespace krt
