#include "krtrace/coxeter.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace krt {

std::string CoxeterSystem::describeEntry(int s, int t) const {
    int m = coxeterMatrix[s][t];
    return m == 0 ? std::string("inf") : std::to_string(m);
}

CoxeterSystem coxeter_from_matrix(int rank, const std::vector<std::vector<int>>& m) {
    if (rank < 1) fail(ErrorKind::Usage, "rank must be >= 1");
    if (rank > kMaxVars) fail(ErrorKind::Usage, "rank exceeds supported maximum of 8");
    if (static_cast<int>(m.size()) != rank) fail(ErrorKind::Usage, "Coxeter matrix has wrong size");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != rank) fail(ErrorKind::Usage, "Coxeter matrix not square");
    for (int s = 0; s < rank; ++s) {
        if (m[s][s] != 1) fail(ErrorKind::Usage, "diagonal Coxeter entries must equal 1");
        for (int t = 0; t < rank; ++t) {
            if (m[s][t] != m[t][s]) fail(ErrorKind::Usage, "Coxeter matrix must be symmetric");
            if (s != t && (m[s][t] < 0 || m[s][t] == 1))
                fail(ErrorKind::Usage, "off-diagonal entry must be >= 2 or inf");
        }
    }

    CoxeterSystem sys;
    sys.rank = rank;
    sys.coxeterMatrix = m;
    std::vector<int> finiteEntries;
    for (int s = 0; s < rank; ++s)
        for (int t = s + 1; t < rank; ++t)
            if (m[s][t] > 0) finiteEntries.push_back(m[s][t]);
    sys.field = NumberField::make(field_order_for_coxeter_entries(finiteEntries));
    const NumberField* F = sys.field.get();

    sys.bform.assign(rank, std::vector<FieldElem>(rank, F->zero()));
    auto half = F->fromRational(Rational(1, 2));
    for (int s = 0; s < rank; ++s)
        for (int t = 0; t < rank; ++t) {
            int mst = m[s][t];
            if (s == t) {
                sys.bform[s][t] = F->one();
            } else if (mst == 0) {
                sys.bform[s][t] = -F->one(); // cos(pi/inf) = 1
            } else if (mst == 2) {
                sys.bform[s][t] = F->zero();
            } else if (mst == 3) {
                sys.bform[s][t] = -half;
            } else {
                // -cos(pi/m) = -(1/2) * 2cos((N/m) * pi/N)
                sys.bform[s][t] = -(half * F->twoCos(F->order() / mst));
            }
        }

    for (int s = 0; s < rank; ++s) {
        // s(e_t) = e_t - 2 B(e_t, e_s) e_s: only row s differs from the identity
        ScalarMatrix mv = ScalarMatrix::identity(F, rank);
        for (int t = 0; t < rank; ++t) {
            FieldElem two = F->fromInt(2);
            mv.at(s, t) -= two * sys.bform[t][s];
        }
        sys.reflectionOnV.push_back(mv);
        // (s.f)(v) = f(s.v), i.e. the transpose on covector coordinates
        sys.reflectionOnVdual.push_back(mv.transpose());
        std::vector<FieldElem> u;
        u.reserve(rank);
        for (int t = 0; t < rank; ++t) u.push_back(sys.bform[t][s]);
        sys.rootForm.push_back(std::move(u));
    }
    return sys;
}

CoxeterSystem parse_coxeter(const std::string& jsonText) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(jsonText);
    } catch (const std::exception& e) {
        fail(ErrorKind::Usage, std::string("invalid Coxeter JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rank") || !j.contains("m"))
        fail(ErrorKind::Usage, "Coxeter JSON must contain \"rank\" and \"m\"");
    int rank = j["rank"].get<int>();
    std::vector<std::vector<int>> m;
    for (const auto& row : j["m"]) m.push_back(row.get<std::vector<int>>());
    return coxeter_from_matrix(rank, m);
}

CoxeterSystem coxeter_preset(const std::string& name) {
    auto build = [](std::vector<std::vector<int>> m) {
        return coxeter_from_matrix(static_cast<int>(m.size()), m);
    };
    if (name == "A1") return build({{1}});
    if (name == "A2") return build({{1, 3}, {3, 1}});
    if (name == "A3") return build({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
    if (name == "B2") return build({{1, 4}, {4, 1}});
    if (name == "B3") return build({{1, 4, 2}, {4, 1, 3}, {2, 3, 1}});
    if (name == "H2") return build({{1, 5}, {5, 1}});
    if (name == "H3") return build({{1, 5, 2}, {5, 1, 3}, {2, 3, 1}});
    if (name == "Atilde1") return build({{1, 0}, {0, 1}});
    fail(ErrorKind::Usage, "unknown Coxeter preset: " + name);
}

CoxeterSystem load_coxeter(const std::string& spec) {
    static const char* presets[] = {"A1", "A2", "A3", "B2", "B3", "H2", "H3", "Atilde1"};
    for (const char* p : presets)
        if (spec == p) return coxeter_preset(spec);
    std::ifstream in(spec);
    if (!in) fail(ErrorKind::Usage, "cannot open Coxeter spec file: " + spec);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_coxeter(ss.str());
}

ScalarMatrix reflection_action(const CoxeterSystem& sys, int s, bool dual) {
    if (s < 0 || s >= sys.rank) fail(ErrorKind::Usage, "generator index out of range");
    return dual ? sys.reflectionOnVdual[s] : sys.reflectionOnV[s];
}

std::vector<FieldElem> root_form(const CoxeterSystem& sys, int s) {
    if (s < 0 || s >= sys.rank) fail(ErrorKind::Usage, "generator index out of range");
    return sys.rootForm[s];
}

MultiPoly root_form_poly(const CoxeterSystem& sys, int s) {
    std::vector<MultiPoly::Term> terms;
    for (int t = 0; t < sys.rank; ++t)
        if (!sys.rootForm[s][t].isZero()) terms.emplace_back(monoVar(t), sys.rootForm[s][t]);
    return MultiPoly(std::move(terms));
}

MultiPoly reflect_poly(const CoxeterSystem& sys, const MultiPoly& f, int s) {
    return f.applyLinear(sys.reflectionOnVdual[s], sys.rank);
}

std::pair<MultiPoly, MultiPoly> invariant_split(const CoxeterSystem& sys, const MultiPoly& f, int s) {
    const NumberField* F = sys.field.get();
    auto half = F->fromRational(Rational(1, 2));
    MultiPoly sf = reflect_poly(sys, f, s);
    MultiPoly a = (f + sf).scaled(half);
    MultiPoly anti = f - sf;
    MultiPoly b = anti.isZero() ? MultiPoly()
                                : anti.divideByLinear(root_form_poly(sys, s), sys.rank).scaled(half);
    return {std::move(a), std::move(b)};
}

std::vector<FieldElem> invariant_vector(const CoxeterSystem& sys, int s) {
    const NumberField* F = sys.field.get();
    int n = sys.rank;
    // stack (dual(s') - I) for all s' != s and take a nullspace vector
    int nconstraints = (n - 1) * n;
    ScalarMatrix m(nconstraints, n, F->zero());
    int r = 0;
    for (int sp = 0; sp < n; ++sp) {
        if (sp == s) continue;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                m.at(r, j) = sys.reflectionOnVdual[sp].at(i, j);
                if (i == j) m.at(r, j) -= F->one();
            }
            ++r;
        }
    }
    auto rn = rank_nullspace(m);
    if (rn.nullspaceBasis.empty())
        fail(ErrorKind::Internal, "invariant_vector: nullspace unexpectedly empty");
    return rn.nullspaceBasis.front();
}

MultiPoly invariant_vector_poly(const CoxeterSystem& sys, int s) {
    auto v = invariant_vector(sys, s);
    std::vector<MultiPoly::Term> terms;
    for (int t = 0; t < sys.rank; ++t)
        if (!v[t].isZero()) terms.emplace_back(monoVar(t), v[t]);
    return MultiPoly(std::move(terms));
}

int GroupElementTable::mulGen(int element, int s) const { return mulGen_[element][s]; }

int GroupElementTable::lookup(const ScalarMatrix& m) const {
    auto key = m.flatten();
    auto it = std::lower_bound(index_.begin(), index_.end(), key,
                               [](const auto& a, const std::vector<Rational>& k) { return a.first < k; });
    if (it != index_.end() && it->first == key) return it->second;
    return -1;
}

GroupElementTable element_table(const CoxeterSystem& sys, int lengthBound, size_t sizeCap) {
    if (lengthBound < 0) fail(ErrorKind::Usage, "length bound must be >= 0");
    GroupElementTable table;
    table.lengthBound_ = lengthBound;

    std::map<std::vector<Rational>, int> seen;
    ScalarMatrix id = ScalarMatrix::identity(sys.field.get(), sys.rank);
    table.entries_.push_back({{}, id, 0});
    seen.emplace(id.flatten(), 0);

    // Breadth-first by length; iterating a level in canonical-word order and
    // generators in increasing order yields lexicographically least reduced words.
    std::vector<int> level = {0};
    for (int len = 1; len <= lengthBound && !level.empty(); ++len) {
        std::vector<int> next;
        for (int e : level) {
            for (int s = 0; s < sys.rank; ++s) {
                ScalarMatrix m = table.entries_[e].matrix * sys.reflectionOnV[s];
                auto key = m.flatten();
                auto it = seen.find(key);
                if (it != seen.end()) continue;
                if (table.entries_.size() >= sizeCap)
                    fail(ErrorKind::Resource, "element table exceeds size cap");
                std::vector<int> word = table.entries_[e].word;
                word.push_back(s);
                int idx = static_cast<int>(table.entries_.size());
                table.entries_.push_back({std::move(word), std::move(m), len});
                seen.emplace(std::move(key), idx);
                next.push_back(idx);
            }
        }
        level = std::move(next);
    }

    table.mulGen_.assign(table.entries_.size(), std::vector<int>(sys.rank, -1));
    for (size_t e = 0; e < table.entries_.size(); ++e)
        for (int s = 0; s < sys.rank; ++s) {
            ScalarMatrix m = table.entries_[e].matrix * sys.reflectionOnV[s];
            auto it = seen.find(m.flatten());
            table.mulGen_[e][s] = it == seen.end() ? -1 : it->second;
        }
    table.index_.reserve(seen.size());
    for (auto& kv : seen) table.index_.emplace_back(kv.first, kv.second);
    return table;
}

} // namespace krt
