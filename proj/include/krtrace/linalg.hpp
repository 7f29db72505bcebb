#pragma once

#include <vector>

#include "krtrace/field.hpp"

namespace krt {

// Dense matrix over a number field. Row-major.
class ScalarMatrix {
public:
    ScalarMatrix() : rows_(0), cols_(0) {}
    ScalarMatrix(int rows, int cols, const FieldElem& fill);
    static ScalarMatrix identity(const NumberField* field, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const NumberField* field() const { return field_; }
    FieldElem& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const FieldElem& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ScalarMatrix transpose() const;
    bool operator==(const ScalarMatrix& o) const;

    // Flattened rational coordinates, used as a deduplication key.
    std::vector<Rational> flatten() const;

private:
    int rows_, cols_;
    const NumberField* field_ = nullptr;
    std::vector<FieldElem> a_;
};

struct RankNullspace {
    int rank = 0;
    std::vector<std::vector<FieldElem>> nullspaceBasis; // vectors of length cols
};

// Exact Gauss-Jordan elimination, first-nonzero pivoting. M v = 0 for every basis
// vector; rank + |basis| = cols.
RankNullspace rank_nullspace(const ScalarMatrix& m);

int matrix_rank(const ScalarMatrix& m);

// Incremental echelon basis over a number field for rank computations on large
// sparse column sets. Vectors are sparse (index, value) lists sorted by index.
class SparseEchelon {
public:
    using Entry = std::pair<int, FieldElem>;
    using Vec = std::vector<Entry>;

    // Reduces v against the basis; if a nonzero remainder survives it is
    // normalized and inserted. Returns true if the rank grew.
    bool insert(Vec v);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::vector<Vec> rows_;            // normalized: leading value 1
    std::vector<int> leadOfRow_;       // leading index of rows_[i]
    std::vector<int> rowOfLead_;       // lead index -> row position (-1 none), grown on demand
};

} // namespace krt
