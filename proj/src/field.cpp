#include "krtrace/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace krt {

namespace {

using ZPoly = std::vector<mpz_class>; // coefficient vector, lowest degree first

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; den must be monic.
ZPoly zdivExact(ZPoly num, const ZPoly& den) {
    ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpz_class(0));
    while (num.size() >= den.size() && !num.empty()) {
        size_t shift = num.size() - den.size();
        mpz_class c = num.back();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        ztrim(num);
    }
    if (!num.empty()) fail(ErrorKind::Internal, "inexact polynomial division");
    return q;
}

// Phi_m via Phi_m(x) = (x^m - 1) / prod_{d | m, d < m} Phi_d(x).
const ZPoly& cyclotomic(int m) {
    static std::map<int, ZPoly> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    ZPoly num(m + 1, mpz_class(0));
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) num = zdivExact(std::move(num), cyclotomic(d));
    return cache.emplace(m, std::move(num)).first->second;
}

std::vector<Rational> qtrim(std::vector<Rational> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

} // namespace

std::vector<Rational> minpoly_2cos(int N) {
    if (N < 1) fail(ErrorKind::Usage, "minpoly_2cos: N must be >= 1");
    if (N == 1) return {Rational(2), Rational(1)}; // 2cos(pi) = -2
    // Phi_{2N} is palindromic of even degree 2m; with y = x + 1/x,
    // x^{-m} Phi_{2N}(x) = a_m + sum_{k=1..m} a_{m+k} (x^k + x^{-k}) and
    // x^k + x^{-k} = p_k(y) with p_0 = 2, p_1 = y, p_{k+1} = y p_k - p_{k-1}.
    const ZPoly& phi = cyclotomic(2 * N);
    int m = static_cast<int>(phi.size() - 1) / 2;
    std::vector<std::vector<mpz_class>> p(m + 1);
    p[0] = {mpz_class(2)};
    if (m >= 1) p[1] = {mpz_class(0), mpz_class(1)};
    for (int k = 2; k <= m; ++k) {
        std::vector<mpz_class> next(k + 1, mpz_class(0));
        for (size_t i = 0; i < p[k - 1].size(); ++i) next[i + 1] += p[k - 1][i];
        for (size_t i = 0; i < p[k - 2].size(); ++i) next[i] -= p[k - 2][i];
        p[k] = std::move(next);
    }
    std::vector<mpz_class> res(m + 1, mpz_class(0));
    res[0] = phi[m];
    for (int k = 1; k <= m; ++k)
        for (size_t i = 0; i < p[k].size(); ++i) res[i] += phi[m + k] * p[k][i];
    std::vector<Rational> out(res.size());
    for (size_t i = 0; i < res.size(); ++i) out[i] = Rational(res[i]);
    return out;
}

int field_order_for_coxeter_entries(const std::vector<int>& finiteEntries) {
    long N = 1;
    for (int m : finiteEntries)
        if (m >= 4) N = std::lcm(N, static_cast<long>(m));
    if (N > 1000000) fail(ErrorKind::Resource, "field order exceeds cap");
    return static_cast<int>(N);
}

// ---------------------------------------------------------------- NumberField

NumberField::NumberField(int N) : n_(N) {
    minpoly_ = minpoly_2cos(N);
    deg_ = static_cast<int>(minpoly_.size()) - 1;
    // theta^(deg+i) for i = 0..deg-2, reduced
    reduction_.assign(std::max(0, deg_ - 1), {});
    std::vector<Rational> cur(deg_, Rational(0)); // running value of theta^(deg+i)
    for (int j = 0; j < deg_; ++j) cur[j] = -minpoly_[j];
    for (int i = 0; i + 1 < deg_; ++i) {
        reduction_[i] = cur;
        // multiply by theta, reduce top coefficient
        Rational top = cur[deg_ - 1];
        for (int j = deg_ - 1; j > 0; --j) cur[j] = cur[j - 1] - top * minpoly_[j];
        cur[0] = -top * minpoly_[0];
    }
    thetaApprox_ = 2.0 * std::cos(M_PI / static_cast<double>(N));
}

FieldPtr NumberField::make(int N) { return FieldPtr(new NumberField(N)); }

std::vector<Rational> NumberField::reduce(std::vector<Rational> v) const {
    if (v.size() > static_cast<size_t>(2 * deg_ - 1))
        fail(ErrorKind::Internal, "reduce: vector too long");
    std::vector<Rational> out(deg_, Rational(0));
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (i < static_cast<size_t>(deg_)) {
            out[i] += v[i];
        } else {
            const auto& row = reduction_[i - deg_];
            for (int j = 0; j < deg_; ++j) out[j] += v[i] * row[j];
        }
    }
    return out;
}

FieldElem NumberField::zero() const { return FieldElem(this, std::vector<Rational>(deg_, Rational(0))); }

FieldElem NumberField::one() const {
    std::vector<Rational> c(deg_, Rational(0));
    c[0] = 1;
    return FieldElem(this, std::move(c));
}

FieldElem NumberField::theta() const {
    if (deg_ == 1) {
        // theta is rational: theta = -minpoly[0]
        return FieldElem(this, {-minpoly_[0]});
    }
    std::vector<Rational> c(deg_, Rational(0));
    c[1] = 1;
    return FieldElem(this, std::move(c));
}

FieldElem NumberField::fromRational(const Rational& r) const {
    std::vector<Rational> c(deg_, Rational(0));
    c[0] = r;
    return FieldElem(this, std::move(c));
}

FieldElem NumberField::twoCos(long k) const {
    k = std::abs(k) % (2L * n_);
    if (k > n_) k = 2L * n_ - k; // cos symmetry around pi
    FieldElem pPrev = fromInt(2);
    if (k == 0) return pPrev;
    FieldElem th = theta();
    FieldElem pCur = th;
    for (long r = 1; r < k; ++r) {
        FieldElem next = th * pCur - pPrev;
        pPrev = pCur;
        pCur = next;
    }
    return pCur;
}

double NumberField::embed(const FieldElem& e) const {
    double acc = 0.0;
    for (int i = deg_ - 1; i >= 0; --i) acc = acc * thetaApprox_ + e.c_[i].get_d();
    return acc;
}

// ------------------------------------------------------------------ FieldElem

FieldElem::FieldElem(const NumberField* field, std::vector<Rational> coeffs)
    : field_(field), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != field->degree())
        fail(ErrorKind::Internal, "FieldElem: wrong coefficient length");
}

bool FieldElem::isZero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool FieldElem::isRational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational FieldElem::rationalValue() const {
    if (!isRational()) fail(ErrorKind::Internal, "rationalValue: element not rational");
    return c_[0];
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    FieldElem r = *this;
    r += o;
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    FieldElem r = *this;
    r -= o;
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    size_t d = c_.size();
    if (d == 1) return FieldElem(field_, {c_[0] * o.c_[0]});
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    return FieldElem(field_, field_->reduce(std::move(prod)));
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    *this = *this * o;
    return *this;
}

void FieldElem::addMul(const FieldElem& a, const FieldElem& b) {
    if (c_.size() == 1) {
        c_[0] += a.c_[0] * b.c_[0];
        return;
    }
    *this += a * b;
}

FieldElem FieldElem::inverse() const {
    if (isZero()) fail(ErrorKind::Internal, "division by zero field element");
    size_t d = c_.size();
    if (d == 1) return FieldElem(field_, {Rational(1) / c_[0]});
    // Extended Euclid in Q[x] against the minimal polynomial.
    std::vector<Rational> r0 = field_->minimalPolynomial();
    std::vector<Rational> r1 = qtrim(c_);
    std::vector<Rational> s0 = {}, s1 = {Rational(1)}; // s tracks the coefficient of *this
    while (!(r1.size() == 1)) {
        // divide r0 by r1
        std::vector<Rational> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
        std::vector<Rational> rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            size_t shift = rem.size() - r1.size();
            Rational c = rem.back() / r1.back();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            rem = qtrim(std::move(rem));
        }
        if (rem.empty()) fail(ErrorKind::Internal, "inverse: element not invertible (minpoly reducible?)");
        // s_next = s0 - q*s1
        std::vector<Rational> sn(std::max(s0.size(), q.size() + s1.size() - 1), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) sn[i] += s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) sn[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = qtrim(std::move(sn));
    }
    Rational lead = r1[0];
    std::vector<Rational> inv(d, Rational(0));
    for (size_t i = 0; i < s1.size() && i < d; ++i) inv[i] = s1[i] / lead;
    return FieldElem(field_, field_->reduce(std::move(inv)));
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

bool FieldElem::operator==(const FieldElem& o) const { return c_ == o.c_; }

std::string FieldElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        Rational a = first ? c_[i] : Rational(abs(c_[i]));
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "h";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace krt
