#include "krtrace/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace krt {

std::string monoStr(Mono m, int nvars) {
    if (m == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < nvars; ++i) {
        int e = monoExp(m, i);
        if (!e) continue;
        if (!first) os << "*";
        os << "x" << (i + 1);
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

std::vector<Mono> monomials_of_degree(int nvars, int d) {
    std::vector<Mono> out;
    if (d < 0) return out;
    if (d > 250) fail(ErrorKind::Resource, "monomial degree exceeds packing bound");
    std::vector<int> e(nvars, 0);
    // iterative enumeration in lex-descending order: first variable gets the most
    std::function<void(int, int, Mono)> rec = [&](int i, int rem, Mono acc) {
        if (i == nvars - 1) {
            out.push_back(monoMul(acc, Mono(rem) << (8 * (kMaxVars - 1 - i))));
            return;
        }
        for (int k = rem; k >= 0; --k) rec(i + 1, rem - k, monoMul(acc, Mono(k) << (8 * (kMaxVars - 1 - i))));
    };
    if (nvars == 0) {
        if (d == 0) out.push_back(0);
        return out;
    }
    rec(0, d, 0);
    return out;
}

long count_monomials(int nvars, int d) {
    if (d < 0) return 0;
    if (nvars == 0) return d == 0 ? 1 : 0;
    // C(d + nvars - 1, nvars - 1)
    long num = 1;
    for (int i = 1; i <= nvars - 1; ++i) num = num * (d + i) / i;
    return num;
}

MultiPoly::MultiPoly(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return monoLess(b.first, a.first); });
    for (auto& tm : terms) {
        if (!t_.empty() && t_.back().first == tm.first) {
            t_.back().second += tm.second;
            if (t_.back().second.isZero()) t_.pop_back();
        } else if (!tm.second.isZero()) {
            t_.push_back(std::move(tm));
        }
    }
}

MultiPoly MultiPoly::constant(const FieldElem& c) {
    MultiPoly p;
    if (!c.isZero()) p.t_.emplace_back(monoOne(), c);
    return p;
}

MultiPoly MultiPoly::variable(const NumberField* field, int i) {
    MultiPoly p;
    p.t_.emplace_back(monoVar(i), field->one());
    return p;
}

MultiPoly MultiPoly::monomial(const FieldElem& c, Mono m) {
    MultiPoly p;
    if (!c.isZero()) p.t_.emplace_back(m, c);
    return p;
}

FieldElem MultiPoly::constantValue() const {
    if (t_.empty()) fail(ErrorKind::Internal, "constantValue of zero polynomial");
    return t_[0].second;
}

int MultiPoly::degree() const { return t_.empty() ? -1 : monoDeg(t_[0].first); }

bool MultiPoly::isHomogeneous() const {
    if (t_.empty()) return true;
    int d = monoDeg(t_[0].first);
    for (const auto& tm : t_)
        if (monoDeg(tm.first) != d) return false;
    return true;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& tm : r.t_) tm.second = -tm.second;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

namespace {
// merge o (scaled) into t_, both sorted descending
void mergeInto(std::vector<MultiPoly::Term>& t, const std::vector<MultiPoly::Term>& o,
               const FieldElem* scale, bool negate) {
    std::vector<MultiPoly::Term> out;
    out.reserve(t.size() + o.size());
    size_t i = 0, j = 0;
    while (i < t.size() || j < o.size()) {
        if (j >= o.size() || (i < t.size() && monoLess(o[j].first, t[i].first))) {
            out.push_back(std::move(t[i++]));
        } else if (i >= t.size() || monoLess(t[i].first, o[j].first)) {
            FieldElem v = scale ? o[j].second * *scale : o[j].second;
            if (negate) v = -v;
            if (!v.isZero()) out.emplace_back(o[j].first, std::move(v));
            ++j;
        } else {
            FieldElem v = scale ? o[j].second * *scale : o[j].second;
            if (negate) v = -v;
            v += t[i].second;
            if (!v.isZero()) out.emplace_back(t[i].first, std::move(v));
            ++i, ++j;
        }
    }
    t.swap(out);
}
} // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    mergeInto(t_, o.t_, nullptr, false);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    mergeInto(t_, o.t_, nullptr, true);
    return *this;
}

void MultiPoly::addScaled(const MultiPoly& o, const FieldElem& c) {
    if (c.isZero()) return;
    mergeInto(t_, o.t_, &c, false);
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (isZero() || o.isZero()) return MultiPoly();
    // accumulate via map keyed by monomial
    std::map<Mono, FieldElem> acc;
    for (const auto& a : t_)
        for (const auto& b : o.t_) {
            Mono m = monoMul(a.first, b.first);
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(m, a.second * b.second);
            } else {
                it->second.addMul(a.second, b.second);
            }
        }
    MultiPoly r;
    r.t_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (!it->second.isZero()) r.t_.emplace_back(it->first, std::move(it->second));
    // map order is plain integer order on Mono; re-sort into graded-lex
    std::sort(r.t_.begin(), r.t_.end(),
              [](const Term& a, const Term& b) { return monoLess(b.first, a.first); });
    return r;
}

MultiPoly MultiPoly::scaled(const FieldElem& c) const {
    if (c.isZero()) return MultiPoly();
    MultiPoly r = *this;
    for (auto& tm : r.t_) tm.second *= c;
    return r;
}

MultiPoly MultiPoly::mulMonomial(const FieldElem& c, Mono m) const {
    if (c.isZero()) return MultiPoly();
    MultiPoly r = *this;
    for (auto& tm : r.t_) {
        tm.first = monoMul(tm.first, m);
        tm.second *= c;
    }
    return r;
}

FieldElem MultiPoly::coeff(Mono m, const NumberField* field) const {
    for (const auto& tm : t_)
        if (tm.first == m) return tm.second;
    return field->zero();
}

MultiPoly MultiPoly::applyLinear(const ScalarMatrix& a, int nvars) const {
    const NumberField* field = a.field();
    // images of the variables
    std::vector<MultiPoly> img(nvars);
    for (int i = 0; i < nvars; ++i) {
        std::vector<Term> terms;
        for (int j = 0; j < nvars; ++j)
            if (!a.at(j, i).isZero()) terms.emplace_back(monoVar(j), a.at(j, i));
        img[i] = MultiPoly(std::move(terms));
    }
    // power cache per variable
    std::vector<std::vector<MultiPoly>> pow(nvars);
    auto power = [&](int i, int e) -> const MultiPoly& {
        auto& cache = pow[i];
        if (cache.empty()) cache.push_back(MultiPoly::constant(field->one()));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * img[i]);
        return cache[e];
    };
    MultiPoly out;
    for (const auto& tm : t_) {
        MultiPoly term = MultiPoly::constant(tm.second);
        for (int i = 0; i < nvars; ++i) {
            int e = monoExp(tm.first, i);
            if (e) term = term * power(i, e);
        }
        out += term;
    }
    return out;
}

MultiPoly MultiPoly::divideByLinear(const MultiPoly& linear, int nvars) const {
    if (isZero()) return MultiPoly();
    if (linear.isZero()) fail(ErrorKind::Internal, "divideByLinear: zero form");
    for (const auto& tm : linear.terms())
        if (monoDeg(tm.first) != 1) fail(ErrorKind::Internal, "divideByLinear: form not linear");
    // terms are sorted graded-lex descending, so the leading term carries the
    // lowest-index variable appearing in the form
    int pivot = -1;
    FieldElem c = linear.terms()[0].second;
    for (int i = 0; i < nvars; ++i)
        if (monoExp(linear.terms()[0].first, i) == 1) {
            pivot = i;
            break;
        }
    if (pivot < 0) fail(ErrorKind::Internal, "divideByLinear: malformed form");
    FieldElem cinv = c.inverse();
    MultiPoly rem = *this;
    MultiPoly quot;
    while (!rem.isZero()) {
        // leading group: maximal pivot exponent
        int e = 0;
        for (const auto& tm : rem.terms()) e = std::max(e, monoExp(tm.first, pivot));
        if (e == 0) fail(ErrorKind::Internal, "divideByLinear: nonzero remainder");
        std::vector<Term> qterms;
        for (const auto& tm : rem.terms())
            if (monoExp(tm.first, pivot) == e)
                qterms.emplace_back(tm.first - monoVar(pivot), tm.second * cinv);
        MultiPoly q(std::move(qterms));
        quot += q;
        rem -= q * linear;
    }
    return quot;
}

std::string MultiPoly::str(int nvars) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& tm : t_) {
        if (!first) os << " + ";
        os << "(" << tm.second.str() << ")";
        if (tm.first != 0) os << "*" << monoStr(tm.first, nvars);
        first = false;
    }
    return os.str();
}

MatMP MatMP::identity(const NumberField* field, int n) {
    MatMP m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = MultiPoly::constant(field->one());
    return m;
}

MatMP MatMP::operator*(const MatMP& o) const {
    if (cols_ != o.rows_) fail(ErrorKind::Internal, "MatMP product: shape mismatch");
    MatMP r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const MultiPoly& x = at(i, k);
            if (x.isZero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).isZero()) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    return r;
}

MatMP MatMP::operator+(const MatMP& o) const {
    MatMP r = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) += o.at(i, j);
    return r;
}

MatMP MatMP::scaled(const FieldElem& c) const {
    MatMP r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).scaled(c);
    return r;
}

void MatMP::addScaled(const MatMP& o, const FieldElem& c) {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) at(i, j).addScaled(o.at(i, j), c);
}

bool MatMP::operator==(const MatMP& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (!(a_[i] == o.a_[i])) return false;
    return true;
}

bool MatMP::isZero() const {
    for (const auto& p : a_)
        if (!p.isZero()) return false;
    return true;
}

} // namespace krt
