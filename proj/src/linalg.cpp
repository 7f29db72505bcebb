#include "krtrace/linalg.hpp"

#include <algorithm>

namespace krt {

ScalarMatrix::ScalarMatrix(int rows, int cols, const FieldElem& fill)
    : rows_(rows), cols_(cols), field_(fill.field()), a_(static_cast<size_t>(rows) * cols, fill) {}

ScalarMatrix ScalarMatrix::identity(const NumberField* field, int n) {
    ScalarMatrix m(n, n, field->zero());
    for (int i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) fail(ErrorKind::Internal, "matrix product: shape mismatch");
    ScalarMatrix r(rows_, o.cols_, field_->zero());
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElem& x = at(i, k);
            if (x.isZero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j).addMul(x, o.at(k, j));
        }
    return r;
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix r(cols_, rows_, field_->zero());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (!(a_[i] == o.a_[i])) return false;
    return true;
}

std::vector<Rational> ScalarMatrix::flatten() const {
    std::vector<Rational> out;
    out.reserve(a_.size());
    for (const auto& e : a_)
        for (const auto& c : e.coeffs()) out.push_back(c);
    return out;
}

RankNullspace rank_nullspace(const ScalarMatrix& m) {
    ScalarMatrix w = m;
    int rows = w.rows(), cols = w.cols();
    std::vector<int> pivotColOfRow;
    std::vector<bool> colIsPivot(cols, false);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!w.at(i, c).isZero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols; ++j) std::swap(w.at(pr, j), w.at(r, j));
        FieldElem inv = w.at(r, c).inverse();
        for (int j = c; j < cols; ++j) w.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || w.at(i, c).isZero()) continue;
            FieldElem f = w.at(i, c);
            for (int j = c; j < cols; ++j) w.at(i, j) -= f * w.at(r, j);
        }
        pivotColOfRow.push_back(c);
        colIsPivot[c] = true;
        ++r;
    }
    RankNullspace out;
    out.rank = r;
    const NumberField* field = m.field();
    for (int c = 0; c < cols; ++c) {
        if (colIsPivot[c]) continue;
        std::vector<FieldElem> v(cols, field->zero());
        v[c] = field->one();
        for (int i = 0; i < r; ++i) v[pivotColOfRow[i]] = -w.at(i, c);
        out.nullspaceBasis.push_back(std::move(v));
    }
    return out;
}

int matrix_rank(const ScalarMatrix& m) { return rank_nullspace(m).rank; }

bool SparseEchelon::insert(Vec v) {
    Vec tmp;
    while (!v.empty()) {
        int lead = v.front().first;
        int row = lead < static_cast<int>(rowOfLead_.size()) ? rowOfLead_[lead] : -1;
        if (row < 0) break;
        // v -= v.lead * rows_[row]  (basis rows are normalized to leading value 1)
        const FieldElem pivot = v.front().second;
        const Vec& b = rows_[row];
        tmp.clear();
        tmp.reserve(v.size() + b.size());
        size_t i = 0, j = 0;
        while (i < v.size() || j < b.size()) {
            if (j >= b.size() || (i < v.size() && v[i].first < b[j].first)) {
                tmp.push_back(std::move(v[i++]));
            } else if (i >= v.size() || b[j].first < v[i].first) {
                tmp.emplace_back(b[j].first, -(pivot * b[j].second));
                ++j;
            } else {
                FieldElem x = v[i].second - pivot * b[j].second;
                if (!x.isZero()) tmp.emplace_back(v[i].first, std::move(x));
                ++i, ++j;
            }
        }
        v.swap(tmp);
    }
    if (v.empty()) return false;
    FieldElem inv = v.front().second.inverse();
    for (auto& e : v) e.second *= inv;
    int lead = v.front().first;
    if (lead >= static_cast<int>(rowOfLead_.size())) rowOfLead_.resize(lead + 1, -1);
    rowOfLead_[lead] = static_cast<int>(rows_.size());
    leadOfRow_.push_back(lead);
    rows_.push_back(std::move(v));
    return true;
}

} // namespace krt
