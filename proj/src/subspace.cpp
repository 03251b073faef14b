#include "sympolar/subspace.hpp"

#include <algorithm>

namespace sympolar {

namespace detail {

int rrefInPlace(const Field& k, Mat& m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        const std::uint8_t invp = k.inv(m.at(rank, col));
        if (invp != 1)
            for (int c = col; c < m.cols; ++c) m.at(rank, c) = k.mul(m.at(rank, c), invp);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            const std::uint8_t f = m.at(r, col);
            if (f == 0) continue;
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) = k.sub(m.at(r, c), k.mul(f, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

int rankOf(const Field& k, Mat m) {
    // Forward elimination only; cheaper than full RREF for rank queries.
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        const std::uint8_t inv = k.inv(m.at(rank, col));
        for (int r = rank + 1; r < m.rows; ++r) {
            const std::uint8_t f = m.at(r, col);
            if (f == 0) continue;
            const std::uint8_t scale = k.mul(f, inv);
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) = k.sub(m.at(r, c), k.mul(scale, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

Mat stackRows(const Subspace& a, const Subspace& b) {
    Mat m(a.dim() + b.dim(), a.ambient());
    int r = 0;
    for (const Vec& v : a.rows()) {
        std::copy(v.begin(), v.end(), m.a.begin() + static_cast<std::size_t>(r) * m.cols);
        ++r;
    }
    for (const Vec& v : b.rows()) {
        std::copy(v.begin(), v.end(), m.a.begin() + static_cast<std::size_t>(r) * m.cols);
        ++r;
    }
    return m;
}

void reduceVectorInPlace(const Field& k, const Subspace& a, Vec& v) {
    for (const Vec& row : a.rows()) {
        int pivot = 0;
        while (row[pivot] == 0) ++pivot;  // canonical rows are nonzero
        const std::uint8_t f = v[pivot];
        if (f == 0) continue;
        for (int c = pivot; c < static_cast<int>(v.size()); ++c)
            v[c] = k.sub(v[c], k.mul(f, row[c]));
    }
}

namespace {

Subspace fromMat(const Field& k, int ambient, Mat m) {
    const int rank = rrefInPlace(k, m);
    std::vector<Vec> rows(rank);
    for (int r = 0; r < rank; ++r) {
        rows[r].assign(m.a.begin() + static_cast<std::size_t>(r) * m.cols,
                       m.a.begin() + static_cast<std::size_t>(r + 1) * m.cols);
    }
    return Subspace::fromCanonicalRows(ambient, std::move(rows));
}

}  // namespace

}  // namespace detail

using detail::Mat;

Subspace reduce(const Field& k, int ambient, const std::vector<Vec>& rows) {
    for (const Vec& v : rows)
        require(static_cast<int>(v.size()) == ambient, Errc::length_mismatch,
                "row length != ambient dimension");
    Mat m(static_cast<int>(rows.size()), ambient);
    for (int r = 0; r < m.rows; ++r)
        std::copy(rows[r].begin(), rows[r].end(),
                  m.a.begin() + static_cast<std::size_t>(r) * ambient);
    return detail::fromMat(k, ambient, std::move(m));
}

static void checkSameAmbient(const Subspace& a, const Subspace& b) {
    require(a.ambient() == b.ambient(), Errc::ambient_mismatch,
            "subspaces live in different ambient spaces");
}

Subspace sum(const Field& k, const Subspace& a, const Subspace& b) {
    checkSameAmbient(a, b);
    return detail::fromMat(k, a.ambient(), detail::stackRows(a, b));
}

Subspace intersect(const Field& k, const Subspace& a, const Subspace& b) {
    checkSameAmbient(a, b);
    // Zassenhaus: reduce [A|A; B|0]; rows with zero left half carry a basis
    // of A∩B in the right half.
    const int n = a.ambient();
    Mat m(a.dim() + b.dim(), 2 * n);
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < n; ++c) {
            m.at(r, c) = a.rows()[r][c];
            m.at(r, n + c) = a.rows()[r][c];
        }
    for (int r = 0; r < b.dim(); ++r)
        for (int c = 0; c < n; ++c) m.at(a.dim() + r, c) = b.rows()[r][c];
    detail::rrefInPlace(k, m);
    std::vector<Vec> meet;
    for (int r = 0; r < m.rows; ++r) {
        bool leftZero = true;
        for (int c = 0; c < n && leftZero; ++c) leftZero = (m.at(r, c) == 0);
        if (!leftZero) continue;
        Vec v(n);
        bool nonzero = false;
        for (int c = 0; c < n; ++c) {
            v[c] = m.at(r, n + c);
            nonzero |= (v[c] != 0);
        }
        if (nonzero) meet.push_back(std::move(v));
    }
    return reduce(k, n, meet);
}

int dimIntersect(const Field& k, const Subspace& a, const Subspace& b) {
    checkSameAmbient(a, b);
    const int rank = detail::rankOf(k, detail::stackRows(a, b));
    return a.dim() + b.dim() - rank;
}

bool contains(const Field& k, const Subspace& a, const Subspace& b) {
    checkSameAmbient(a, b);
    for (const Vec& row : b.rows())
        if (!containsVector(k, a, row)) return false;
    return true;
}

bool containsVector(const Field& k, const Subspace& a, const Vec& v) {
    require(static_cast<int>(v.size()) == a.ambient(), Errc::length_mismatch,
            "vector length != ambient dimension");
    Vec w = v;
    detail::reduceVectorInPlace(k, a, w);
    return std::all_of(w.begin(), w.end(), [](std::uint8_t x) { return x == 0; });
}

bool isCanonicalRref(const Field& k, int ambient, const std::vector<Vec>& rows) {
    int lastPivot = -1;
    std::vector<int> pivots;
    for (const Vec& row : rows) {
        if (static_cast<int>(row.size()) != ambient) return false;
        int pivot = 0;
        while (pivot < ambient && row[pivot] == 0) ++pivot;
        if (pivot == ambient) return false;       // zero row
        if (pivot <= lastPivot) return false;     // pivots must strictly increase
        if (row[pivot] != 1) return false;        // normalized leading entry
        for (std::uint8_t x : row)
            if (x >= k.q()) return false;
        pivots.push_back(pivot);
        lastPivot = pivot;
    }
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t s = 0; s < rows.size(); ++s)
            if (r != s && rows[s][pivots[r]] != 0) return false;
    return true;
}

Subspace fullSpace(int ambient) {
    std::vector<Vec> rows(ambient, Vec(ambient, 0));
    for (int i = 0; i < ambient; ++i) rows[i][i] = 1;
    return Subspace::fromCanonicalRows(ambient, std::move(rows));
}

Subspace coordinateSpan(int ambient, const std::vector<int>& coords) {
    std::vector<int> sorted = coords;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Vec> rows;
    for (int c : sorted) {
        Vec v(ambient, 0);
        v[c] = 1;
        rows.push_back(std::move(v));
    }
    return Subspace::fromCanonicalRows(ambient, std::move(rows));
}

std::vector<Subspace> enumerateSubspaces(const Field& k, const Subspace& within, int dim) {
    const int d = within.dim();
    require(dim >= 0 && dim <= d, Errc::bad_dimension,
            "requested dimension outside [0, dim(within)]");
    std::vector<Subspace> out;
    if (dim == 0) {
        out.push_back(Subspace::zero(within.ambient()));
        return out;
    }

    // Enumerate RREF coefficient matrices (dim x d), then map rows through
    // within's basis; the image of an RREF coefficient matrix under a
    // canonical basis is again canonical.
    std::vector<int> pivots(dim);
    for (int i = 0; i < dim; ++i) pivots[i] = i;

    const int q = k.q();
    const int n = within.ambient();

    auto emit = [&](const std::vector<Vec>& coeff) {
        std::vector<Vec> rows(dim, Vec(n, 0));
        for (int r = 0; r < dim; ++r)
            for (int j = 0; j < d; ++j) {
                const std::uint8_t c = coeff[r][j];
                if (c == 0) continue;
                const Vec& base = within.rows()[j];
                for (int col = 0; col < n; ++col)
                    rows[r][col] = k.add(rows[r][col], k.mul(c, base[col]));
            }
        out.push_back(Subspace::fromCanonicalRows(n, std::move(rows)));
    };

    while (true) {
        // free positions: (r, c) with c > pivots[r], c not a pivot column
        std::vector<std::pair<int, int>> free;
        std::vector<bool> isPivotCol(d, false);
        for (int c : pivots) isPivotCol[c] = true;
        for (int r = 0; r < dim; ++r)
            for (int c = pivots[r] + 1; c < d; ++c)
                if (!isPivotCol[c]) free.emplace_back(r, c);

        std::vector<Vec> coeff(dim, Vec(d, 0));
        for (int r = 0; r < dim; ++r) coeff[r][pivots[r]] = 1;
        std::vector<std::uint8_t> assign(free.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < free.size(); ++i)
                coeff[free[i].first][free[i].second] = assign[i];
            emit(coeff);
            std::size_t i = 0;
            while (i < assign.size() && assign[i] == q - 1) assign[i++] = 0;
            if (i == assign.size()) break;
            ++assign[i];
        }

        // next pivot combination in lex order
        int i = dim - 1;
        while (i >= 0 && pivots[i] == d - dim + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < dim; ++j) pivots[j] = pivots[j - 1] + 1;
    }

    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sympolar
