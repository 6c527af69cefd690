// Leftmost row maxima of an implicit totally monotone matrix. Entries carry
// an exact infinitesimal: ordinary area values, or positive / negative
// multiples of an epsilon smaller than any area difference. The epsilon is
// represented by tag and column index, never by a number.
#ifndef TERRATRI_SMAWK_HPP
#define TERRATRI_SMAWK_HPP

#include <cassert>
#include <functional>
#include <vector>

#include "terratri/scalar.hpp"

namespace terratri {

template <class S>
struct MatrixEntry {
    enum Kind { NegEpsK = 0, PosEpsK = 1, AreaK = 2 };
    int kind = NegEpsK;
    S value{};
    int col = -1;

    static MatrixEntry area(S v) { return {AreaK, std::move(v), -1}; }
    static MatrixEntry pos_eps(int j) { return {PosEpsK, S{}, j}; }
    static MatrixEntry neg_eps(int j) { return {NegEpsK, S{}, j}; }
};

// -1, 0, +1. Every area beats every positive epsilon, which beats every
// negative one; j*eps grows with j while -j*eps shrinks.
template <class S>
int entry_compare(const MatrixEntry<S>& a, const MatrixEntry<S>& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    switch (a.kind) {
        case MatrixEntry<S>::AreaK:
            if (a.value < b.value) return -1;
            if (b.value < a.value) return 1;
            return 0;
        case MatrixEntry<S>::PosEpsK:
            if (a.col != b.col) return a.col < b.col ? -1 : 1;
            return 0;
        default:
            if (a.col != b.col) return a.col < b.col ? 1 : -1;
            return 0;
    }
}

template <class S>
bool entry_less(const MatrixEntry<S>& a, const MatrixEntry<S>& b) {
    return entry_compare(a, b) < 0;
}

template <class S>
struct MatrixOracle {
    int rows = 0, cols = 0;
    std::function<MatrixEntry<S>(int, int)> at;
};

// Total monotonicity for row maxima: a strict left preference in a lower row
// forces it in every higher row. Quartic, for small matrices and tests only.
template <class S>
bool is_totally_monotone(const MatrixOracle<S>& m) {
    for (int i = 0; i < m.rows; ++i)
        for (int i2 = i + 1; i2 < m.rows; ++i2)
            for (int j = 0; j < m.cols; ++j)
                for (int j2 = j + 1; j2 < m.cols; ++j2)
                    if (entry_less(m.at(i2, j2), m.at(i2, j)) &&
                        !entry_less(m.at(i, j2), m.at(i, j)))
                        return false;
    return true;
}

template <class S>
std::vector<int> naive_row_maxima(const MatrixOracle<S>& m) {
    std::vector<int> out;
    if (m.rows == 0 || m.cols == 0) return out;
    out.reserve(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        int best = 0;
        MatrixEntry<S> bv = m.at(i, 0);
        for (int j = 1; j < m.cols; ++j) {
            MatrixEntry<S> v = m.at(i, j);
            if (entry_less(bv, v)) {
                best = j;
                bv = v;
            }
        }
        out.push_back(best);
    }
    return out;
}

namespace detail {

template <class S>
void smawk_rec(const MatrixOracle<S>& m, const std::vector<int>& rows,
               const std::vector<int>& cols, std::vector<int>& phi) {
    if (rows.empty()) return;

    // REDUCE: keep at most |rows| columns that can still host a maximum.
    // Popping only on a strictly better challenger preserves leftmost ties.
    std::vector<int> kept;
    kept.reserve(rows.size());
    for (int c : cols) {
        while (!kept.empty()) {
            int r = rows[kept.size() - 1];
            if (entry_less(m.at(r, kept.back()), m.at(r, c)))
                kept.pop_back();
            else
                break;
        }
        if (kept.size() < rows.size()) kept.push_back(c);
    }

    if (rows.size() == 1) {
        int best = kept[0];
        MatrixEntry<S> bv = m.at(rows[0], best);
        for (std::size_t j = 1; j < kept.size(); ++j) {
            MatrixEntry<S> v = m.at(rows[0], kept[j]);
            if (entry_less(bv, v)) {
                best = kept[j];
                bv = v;
            }
        }
        phi[rows[0]] = best;
        return;
    }

    std::vector<int> odd;
    for (std::size_t k = 1; k < rows.size(); k += 2) odd.push_back(rows[k]);
    smawk_rec(m, odd, kept, phi);

    // even rows: the answer sits between the answers of the odd neighbors
    std::size_t lo = 0;
    for (std::size_t k = 0; k < rows.size(); k += 2) {
        std::size_t hi = kept.size() - 1;
        if (k + 1 < rows.size()) {
            hi = lo;
            while (kept[hi] != phi[rows[k + 1]]) ++hi;
        }
        int best = kept[lo];
        MatrixEntry<S> bv = m.at(rows[k], best);
        for (std::size_t j = lo + 1; j <= hi; ++j) {
            MatrixEntry<S> v = m.at(rows[k], kept[j]);
            if (entry_less(bv, v)) {
                best = kept[j];
                bv = v;
            }
        }
        phi[rows[k]] = best;
        lo = hi;
    }
}

} // namespace detail

// phi[i] = smallest column index attaining the maximum of row i. Linear
// number of entry evaluations; behavior undefined if the oracle is not
// totally monotone (asserted on tiny inputs in debug builds).
template <class S>
std::vector<int> row_maxima(const MatrixOracle<S>& m) {
    if (m.rows == 0 || m.cols == 0) return {};
#ifndef NDEBUG
    if (m.rows * m.cols <= 64) assert(is_totally_monotone(m));
#endif
    std::vector<int> rows(m.rows), cols(m.cols);
    for (int i = 0; i < m.rows; ++i) rows[i] = i;
    for (int j = 0; j < m.cols; ++j) cols[j] = j;
    std::vector<int> phi(m.rows, -1);
    detail::smawk_rec(m, rows, cols, phi);
    return phi;
}

} // namespace terratri

#endif
