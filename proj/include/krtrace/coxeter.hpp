#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krtrace/linalg.hpp"
#include "krtrace/poly.hpp"

namespace krt {

// Coxeter system (W, S) together with the geometric representation on V, its
// contragredient on V*, and the root forms u_s. The bilinear form is
// B(e_s, e_t) = -cos(pi/m_st) with B(e_s, e_s) = 1 and -1 for m_st infinite;
// reflections act by s(v) = v - 2 B(v, e_s) e_s.
struct CoxeterSystem {
    int rank = 0;
    std::vector<std::vector<int>> coxeterMatrix; // 0 encodes infinity
    FieldPtr field;
    std::vector<std::vector<FieldElem>> bform;   // B(e_s, e_t)
    std::vector<ScalarMatrix> reflectionOnV;     // column-vector action on V
    std::vector<ScalarMatrix> reflectionOnVdual; // coordinate action on covectors
    std::vector<std::vector<FieldElem>> rootForm; // u_s coordinates in the x basis

    std::string describeEntry(int s, int t) const; // "3" or "inf"
};

// Input format: {"rank": n, "m": [[...]]} with 0 meaning infinity.
CoxeterSystem parse_coxeter(const std::string& jsonText);
CoxeterSystem coxeter_from_matrix(int rank, const std::vector<std::vector<int>>& m);
// Presets: A1, A2, A3, B2, B3, H2, H3, Atilde1.
CoxeterSystem coxeter_preset(const std::string& name);
// Resolves a preset name or a path to a JSON file.
CoxeterSystem load_coxeter(const std::string& spec);

ScalarMatrix reflection_action(const CoxeterSystem& sys, int s, bool dual);

// u_s with u_s(v) = B(v, e_s); satisfies u_s(e_s) = 1 and s.u_s = -u_s.
std::vector<FieldElem> root_form(const CoxeterSystem& sys, int s);
MultiPoly root_form_poly(const CoxeterSystem& sys, int s);

// Action of generator s on a polynomial through the dual representation.
MultiPoly reflect_poly(const CoxeterSystem& sys, const MultiPoly& f, int s);

// f = a + u_s * b with a, b both s-invariant; exact.
std::pair<MultiPoly, MultiPoly> invariant_split(const CoxeterSystem& sys, const MultiPoly& f, int s);

// Nonzero covector fixed by every generator other than s.
std::vector<FieldElem> invariant_vector(const CoxeterSystem& sys, int s);
MultiPoly invariant_vector_poly(const CoxeterSystem& sys, int s);

// Breadth-first table of all group elements of length <= lengthBound, with
// canonical (lexicographically least) reduced words, deduplicated by the exact
// matrix of the action on V.
class GroupElementTable {
public:
    struct Entry {
        std::vector<int> word; // canonical reduced word
        ScalarMatrix matrix;   // action on V
        int length = 0;
    };

    int lengthBound() const { return lengthBound_; }
    size_t size() const { return entries_.size(); }
    const Entry& entry(int i) const { return entries_[i]; }
    int identity() const { return 0; }

    // index of the element w*s, or -1 when it falls outside the length bound
    int mulGen(int element, int s) const;
    int lookup(const ScalarMatrix& m) const; // -1 if absent

private:
    friend GroupElementTable element_table(const CoxeterSystem&, int, size_t);
    int lengthBound_ = 0;
    std::vector<Entry> entries_;
    std::vector<std::vector<int>> mulGen_; // [element][s] -> index or -1
    std::vector<std::pair<std::vector<Rational>, int>> index_; // sorted flatten -> id
};

GroupElementTable element_table(const CoxeterSystem& sys, int lengthBound, size_t sizeCap = 2000000);

} // namespace krt
