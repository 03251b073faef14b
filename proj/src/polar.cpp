#include "sympolar/polar.hpp"

#include <algorithm>

namespace sympolar {

using detail::Mat;

PolarSpace::PolarSpace(Field field, int nu) : field_(std::move(field)), nu_(nu) {
    require(nu >= 1, Errc::bad_dimension, "nu must be >= 1");
    const int n = 2 * nu_;
    gram_ = Mat(n, n);
    const std::uint8_t minusOne = field_.neg(1);
    for (int i = 0; i < nu_; ++i) {
        gram_.at(i, nu_ + i) = 1;
        gram_.at(nu_ + i, i) = minusOne;
    }
}

std::uint8_t PolarSpace::formEval(const Vec& u, const Vec& v) const {
    const int n = ambient();
    require(static_cast<int>(u.size()) == n && static_cast<int>(v.size()) == n,
            Errc::length_mismatch, "vectors must have length 2*nu");
    const Field& k = field_;
    std::uint8_t acc = 0;
    for (int i = 0; i < nu_; ++i) {
        acc = k.add(acc, k.mul(u[i], v[nu_ + i]));
        acc = k.sub(acc, k.mul(u[nu_ + i], v[i]));
    }
    return acc;
}

bool PolarSpace::isIsotropic(const Subspace& w) const {
    require(w.ambient() == ambient(), Errc::ambient_mismatch, "subspace not in this space");
    const auto& rows = w.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (formEval(rows[i], rows[j]) != 0) return false;
    return true;
}

std::pair<int, int> PolarSpace::typeOf(const Subspace& w) const {
    require(w.ambient() == ambient(), Errc::ambient_mismatch, "subspace not in this space");
    require(w.dim() > 0, Errc::zero_subspace, "type is undefined for the zero subspace");
    const int m = w.dim();
    Mat g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g.at(i, j) = formEval(w.rows()[i], w.rows()[j]);
    const int rank = detail::rankOf(field_, std::move(g));
    // alternating forms have even rank
    require(rank % 2 == 0, Errc::precondition_violated, "Gram rank of an alternating form is even");
    return {m, rank / 2};
}

Subspace PolarSpace::perp(const Subspace& w) const {
    require(w.ambient() == ambient(), Errc::ambient_mismatch, "subspace not in this space");
    const int n = ambient();
    if (w.isZero()) return fullSpace(n);
    const Field& k = field_;

    // Kernel of the (dim W) x n system  (W J) v = 0.
    Mat m(w.dim(), n);
    for (int r = 0; r < w.dim(); ++r)
        for (int c = 0; c < n; ++c) {
            std::uint8_t acc = 0;
            for (int j = 0; j < n; ++j) acc = k.add(acc, k.mul(w.rows()[r][j], gram_.at(j, c)));
            m.at(r, c) = acc;
        }
    const int rank = detail::rrefInPlace(k, m);

    std::vector<int> pivotCols;
    std::vector<int> pivotRowOf(n, -1);
    for (int r = 0; r < rank; ++r) {
        int c = 0;
        while (m.at(r, c) == 0) ++c;
        pivotCols.push_back(c);
        pivotRowOf[c] = r;
    }
    std::vector<Vec> basis;
    for (int c = 0; c < n; ++c) {
        if (pivotRowOf[c] >= 0) continue;  // free columns index kernel basis vectors
        Vec v(n, 0);
        v[c] = 1;
        for (int pc : pivotCols) v[pc] = k.neg(m.at(pivotRowOf[pc], c));
        basis.push_back(std::move(v));
    }
    return reduce(k, n, basis);
}

namespace detail {

namespace {

struct EnumFrame {
    std::vector<Vec> rows;   // current RREF basis (engine coords)
    std::vector<int> pivots;
    Mat pool;                // RREF basis of perp(span(rows)) ∩ within
};

class RawEnumerator {
public:
    RawEnumerator(const Field& k, int d, const Mat& gram, int m,
                  const std::function<bool(const Subspace&)>& visit)
        : k_(k), d_(d), gram_(gram), m_(m), visit_(visit) {}

    bool run(const std::optional<Subspace>& within) {
        Mat pool;
        if (within) {
            pool = Mat(within->dim(), d_);
            for (int r = 0; r < within->dim(); ++r)
                std::copy(within->rows()[r].begin(), within->rows()[r].end(),
                          pool.a.begin() + static_cast<std::size_t>(r) * d_);
        } else {
            pool = Mat(d_, d_);
            for (int i = 0; i < d_; ++i) pool.at(i, i) = 1;
        }
        EnumFrame root{{}, {}, std::move(pool)};
        return extend(root);
    }

private:
    // f(u, v) over the engine Gram matrix.
    std::uint8_t form(const Vec& u, const Vec& v) const {
        std::uint8_t acc = 0;
        for (int i = 0; i < d_; ++i) {
            if (u[i] == 0) continue;
            std::uint8_t row = 0;
            for (int j = 0; j < d_; ++j)
                if (v[j] != 0) row = k_.add(row, k_.mul(gram_.at(i, j), v[j]));
            acc = k_.add(acc, k_.mul(u[i], row));
        }
        return acc;
    }

    bool emit(const EnumFrame& f) {
        return visit_(Subspace::fromCanonicalRows(d_, f.rows));
    }

    // pool rows reduced modulo the current basis, re-echelonized: a basis of
    // canonical coset representatives for pool / span(rows).
    Mat reducedPool(const EnumFrame& f) const {
        Mat red(f.pool.rows, d_);
        red.a = f.pool.a;
        for (int r = 0; r < red.rows; ++r)
            for (std::size_t i = 0; i < f.rows.size(); ++i) {
                const int pc = f.pivots[i];
                const std::uint8_t c = red.at(r, pc);
                if (c == 0) continue;
                for (int col = pc; col < d_; ++col)
                    red.at(r, col) = k_.sub(red.at(r, col), k_.mul(c, f.rows[i][col]));
            }
        const int rank = rrefInPlace(k_, red);
        red.rows = rank;
        red.a.resize(static_cast<std::size_t>(rank) * d_);
        return red;
    }

    bool extend(const EnumFrame& f) {
        const int kdim = static_cast<int>(f.rows.size());
        if (kdim == m_) return emit(f);

        const Mat red = reducedPool(f);
        if (red.rows < m_ - kdim) return true;  // not enough room left

        const int lastPivot = f.pivots.empty() ? -1 : f.pivots.back();
        for (int i = 0; i < red.rows; ++i) {
            int lead = 0;
            while (red.at(i, lead) == 0) ++lead;
            if (lead <= lastPivot) continue;
            // canonical-parent rule: existing rows must be zero at the new
            // pivot column, so the appended matrix is RREF without fixups
            bool clean = true;
            for (const Vec& row : f.rows)
                if (row[lead] != 0) {
                    clean = false;
                    break;
                }
            if (!clean) continue;

            // candidates: red[i] plus any combination of strictly later rows
            const int tail = red.rows - i - 1;
            std::vector<std::uint8_t> coeff(tail, 0);
            while (true) {
                Vec v(red.a.begin() + static_cast<std::size_t>(i) * d_,
                      red.a.begin() + static_cast<std::size_t>(i + 1) * d_);
                for (int t = 0; t < tail; ++t) {
                    const std::uint8_t c = coeff[t];
                    if (c == 0) continue;
                    const int rr = i + 1 + t;
                    for (int col = 0; col < d_; ++col)
                        v[col] = k_.add(v[col], k_.mul(c, red.at(rr, col)));
                }
                if (!descend(f, std::move(v), lead)) return false;

                int t = 0;
                while (t < tail && coeff[t] == k_.q() - 1) coeff[t++] = 0;
                if (t == tail) break;
                ++coeff[t];
            }
        }
        return true;
    }

    bool descend(const EnumFrame& f, Vec v, int lead) {
        EnumFrame child;
        child.rows = f.rows;
        child.rows.push_back(std::move(v));
        child.pivots = f.pivots;
        child.pivots.push_back(lead);
        const Vec& added = child.rows.back();

        // shrink pool to perp(added): one elimination step against the
        // linear functional x -> f(x, added)
        std::vector<std::uint8_t> phi(f.pool.rows);
        int pivotRow = -1;
        for (int r = 0; r < f.pool.rows; ++r) {
            Vec row(f.pool.a.begin() + static_cast<std::size_t>(r) * d_,
                    f.pool.a.begin() + static_cast<std::size_t>(r + 1) * d_);
            phi[r] = form(row, added);
            if (pivotRow < 0 && phi[r] != 0) pivotRow = r;
        }
        if (pivotRow < 0) {
            child.pool = f.pool;
        } else {
            child.pool = Mat(f.pool.rows - 1, d_);
            const std::uint8_t invPhi = k_.inv(phi[pivotRow]);
            int out = 0;
            for (int r = 0; r < f.pool.rows; ++r) {
                if (r == pivotRow) continue;
                const std::uint8_t scale = k_.mul(phi[r], invPhi);
                for (int c = 0; c < d_; ++c) {
                    std::uint8_t x = f.pool.at(r, c);
                    if (scale != 0) x = k_.sub(x, k_.mul(scale, f.pool.at(pivotRow, c)));
                    child.pool.at(out, c) = x;
                }
                ++out;
            }
            rrefInPlace(k_, child.pool);
        }
        return extend(child);
    }

    const Field& k_;
    int d_;
    const Mat& gram_;
    int m_;
    const std::function<bool(const Subspace&)>& visit_;
};

}  // namespace

bool forEachIsotropicRaw(const Field& k, int d, const Mat& gram, int m,
                         const std::optional<Subspace>& within,
                         const std::function<bool(const Subspace&)>& visit) {
    if (m == 0) return visit(Subspace::zero(d));
    if (within && within->dim() < m) return true;
    RawEnumerator e(k, d, gram, m, visit);
    return e.run(within);
}

}  // namespace detail

bool PolarSpace::forEachIsotropic(const EnumQuery& query,
                                  const std::function<bool(const Subspace&)>& visit) const {
    const Field& k = field_;
    const int n = ambient();
    require(query.m >= 0 && query.m <= nu_, Errc::bad_dimension,
            "isotropic dimension must lie in [0, nu]");
    if (query.containing) {
        require(query.containing->ambient() == n, Errc::ambient_mismatch, "containing: wrong ambient");
        require(isIsotropic(*query.containing), Errc::non_isotropic_seed,
                "containing subspace must be totally isotropic");
    }
    if (query.within)
        require(query.within->ambient() == n, Errc::ambient_mismatch, "within: wrong ambient");

    if (!query.containing || query.containing->isZero()) {
        return detail::forEachIsotropicRaw(k, n, gram_, query.m, query.within, visit);
    }

    const Subspace& c = *query.containing;
    if (query.m < c.dim()) return true;  // nothing can contain it
    if (query.within && !contains(k, *query.within, c)) return true;

    // Subspaces between C and (within ∩ perp(C)) correspond to subspaces of
    // the quotient by C; enumerate there with the induced form and lift.
    Subspace hull = perp(c);
    if (query.within) hull = intersect(k, hull, *query.within);

    // complement of C inside hull: hull's rows reduced mod C, re-echelonized
    std::vector<Vec> compRows;
    for (Vec row : hull.rows()) {
        detail::reduceVectorInPlace(k, c, row);
        if (std::any_of(row.begin(), row.end(), [](std::uint8_t x) { return x != 0; }))
            compRows.push_back(std::move(row));
    }
    const Subspace comp = reduce(k, n, compRows);
    const int d = comp.dim();
    const int mbar = query.m - c.dim();
    if (d < mbar) return true;

    detail::Mat quotGram(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) quotGram.at(i, j) = formEval(comp.rows()[i], comp.rows()[j]);

    auto lift = [&](const Subspace& wbar) -> Subspace {
        std::vector<Vec> rows;
        rows.reserve(c.dim() + wbar.dim());
        for (const Vec& r : c.rows()) rows.push_back(r);
        for (const Vec& qr : wbar.rows()) {
            Vec g(n, 0);
            for (int j = 0; j < d; ++j) {
                if (qr[j] == 0) continue;
                for (int col = 0; col < n; ++col)
                    g[col] = k.add(g[col], k.mul(qr[j], comp.rows()[j][col]));
            }
            rows.push_back(std::move(g));
        }
        return reduce(k, n, rows);
    };

    return detail::forEachIsotropicRaw(
        k, d, quotGram, mbar, std::nullopt,
        [&](const Subspace& wbar) { return visit(lift(wbar)); });
}

std::vector<Subspace> PolarSpace::enumerateIsotropic(const EnumQuery& query) const {
    std::vector<Subspace> out;
    forEachIsotropic(query, [&](const Subspace& w) {
        out.push_back(w);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

unsigned long long PolarSpace::countIsotropic(const EnumQuery& query) const {
    unsigned long long n = 0;
    forEachIsotropic(query, [&](const Subspace&) {
        ++n;
        return true;
    });
    return n;
}

}  // namespace sympolar
