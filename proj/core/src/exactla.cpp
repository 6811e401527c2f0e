#include "contextkit/exactla.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace contextkit {

namespace {

// Integer working copy: each row scaled by the lcm of its denominators.
// Inputs here are almost always 0/±1 already, so this is usually a copy.
std::vector<std::vector<mpz_class>> to_integer_rows(const RatMatrix& m) {
    std::vector<std::vector<mpz_class>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class scale = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.at(r, c).den().get_mpz_t());
        rows[r].resize(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c)
            rows[r][c] = m.at(r, c).num() * (scale / m.at(r, c).den());
    }
    return rows;
}

}  // namespace

RrefResult rref(const RatMatrix& m) {
    if (m.empty()) throw std::invalid_argument("rref: empty matrix");

    auto a = to_integer_rows(m);
    const std::size_t nr = m.rows(), nc = m.cols();

    std::vector<std::size_t> pivot_cols;
    mpz_class prev_pivot = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t pr = r;
        while (pr < nr && a[pr][c] == 0) ++pr;
        if (pr == nr) continue;
        std::swap(a[r], a[pr]);

        // Bareiss Gauss-Jordan step: eliminate column c in every other row.
        // Entries stay integral (they are minors of the scaled input).
        const mpz_class pivot = a[r][c];
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r) continue;
            const mpz_class factor = a[i][c];
            for (std::size_t j = 0; j < nc; ++j) {
                mpz_class t = pivot * a[i][j] - factor * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
                a[i][j] = t;
            }
        }
        prev_pivot = pivot;
        pivot_cols.push_back(c);
        ++r;
    }
    const std::size_t rk = r;

    RrefResult out;
    out.rank = rk;
    out.pivot_cols = pivot_cols;
    out.matrix = RatMatrix(nr, nc);
    for (std::size_t i = 0; i < rk; ++i) {
        const mpz_class& lead = a[i][pivot_cols[i]];
        for (std::size_t j = 0; j < nc; ++j) {
            if (a[i][j] == 0) continue;
            out.matrix.at(i, j) = Rational(mpq_class(a[i][j], lead));
        }
    }
    return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

bool RowSpace::contains(const std::vector<Rational>& v) const {
    const RatMatrix& R = rref_.matrix;
    if (v.size() != R.cols())
        throw std::invalid_argument("RowSpace::contains: dimension mismatch");

    // In reduced form the combination is forced: row i enters with
    // coefficient v[pivot_cols[i]].
    std::vector<Rational> acc(v.size());
    for (std::size_t i = 0; i < rref_.rank; ++i) {
        const Rational& coef = v[rref_.pivot_cols[i]];
        if (coef.is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
            const Rational& e = R.at(i, j);
            if (!e.is_zero()) acc[j] += coef * e;
        }
    }
    return acc == v;
}

bool in_row_space(const RatMatrix& m, const std::vector<Rational>& v) {
    if (v.size() != m.cols())
        throw std::invalid_argument("in_row_space: dimension mismatch");
    return RowSpace(m).contains(v);
}

}  // namespace contextkit
