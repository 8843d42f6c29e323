#include "rimsurg/smith.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace rimsurg {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

BigInt IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::vector<BigInt> SmithDecomposition::diagonal() const {
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
    return out;
}

namespace {

struct Reducer {
    IntMatrix a;
    IntMatrix u, v;
    bool track;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        if (track)
            for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        if (track)
            for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    }
    // row_i += q * row_j
    void add_row(std::size_t i, std::size_t j, const BigInt& q) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(j, c) != 0) a(i, c) += q * a(j, c);
        if (track)
            for (std::size_t c = 0; c < u.cols(); ++c)
                if (u(j, c) != 0) u(i, c) += q * u(j, c);
    }
    // col_i += q * col_j
    void add_col(std::size_t i, std::size_t j, const BigInt& q) {
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (a(r, j) != 0) a(r, i) += q * a(r, j);
        if (track)
            for (std::size_t r = 0; r < v.rows(); ++r)
                if (v(r, j) != 0) v(r, i) += q * v(r, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        if (track)
            for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    }

    // Moves the nonzero entry of least absolute value in the trailing block to (t, t).
    bool place_pivot(std::size_t t) {
        bool found = false;
        std::size_t br = t, bc = t;
        BigInt best;
        for (std::size_t r = t; r < a.rows(); ++r)
            for (std::size_t c = t; c < a.cols(); ++c) {
                if (a(r, c) == 0) continue;
                BigInt m = abs(a(r, c));
                if (!found || m < best) {
                    found = true;
                    best = m;
                    br = r;
                    bc = c;
                    if (best == 1) break;
                }
            }
        if (!found) return false;
        swap_rows(t, br);
        swap_cols(t, bc);
        return true;
    }

    void run() {
        const std::size_t n = std::min(a.rows(), a.cols());
        for (std::size_t t = 0; t < n; ++t) {
            if (!place_pivot(t)) break;
            while (true) {
                bool dirty = false;
                for (std::size_t r = t + 1; r < a.rows(); ++r) {
                    if (a(r, t) == 0) continue;
                    BigInt q;
                    mpz_fdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
                    add_row(r, t, -q);
                    if (a(r, t) != 0) dirty = true;
                }
                for (std::size_t c = t + 1; c < a.cols(); ++c) {
                    if (a(t, c) == 0) continue;
                    BigInt q;
                    mpz_fdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
                    add_col(c, t, -q);
                    if (a(t, c) != 0) dirty = true;
                }
                if (dirty) {
                    place_pivot(t);
                    continue;
                }
                // Row and column cleared; the pivot must divide the rest.
                bool fixed = false;
                for (std::size_t r = t + 1; r < a.rows() && !fixed; ++r)
                    for (std::size_t c = t + 1; c < a.cols(); ++c)
                        if (a(r, c) % a(t, t) != 0) {
                            add_row(t, r, 1);
                            fixed = true;
                            break;
                        }
                if (!fixed) break;
            }
            if (a(t, t) < 0) negate_row(t);
        }
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a, bool with_transforms) {
    Reducer r{a, {}, {}, with_transforms};
    if (with_transforms) {
        r.u = IntMatrix::identity(a.rows());
        r.v = IntMatrix::identity(a.cols());
    }
    r.run();
    return {std::move(r.u), std::move(r.a), std::move(r.v)};
}

bool AbelianInvariants::is_cyclic_of_order(long d) const {
    if (free_rank != 0) return false;
    if (d == 1) return torsion.empty();
    return torsion.size() == 1 && torsion[0] == d;
}

std::string AbelianInvariants::to_string() const {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (int i = 0; i < free_rank; ++i) {
        out << (first ? "" : ", ") << 0;
        first = false;
    }
    for (const auto& t : torsion) {
        out << (first ? "" : ", ") << t.get_str();
        first = false;
    }
    out << "]";
    return out.str();
}

IntMatrix relation_matrix(const GroupPresentation& p) {
    const auto& rels = p.relators();
    IntMatrix m(rels.size(), static_cast<std::size_t>(p.generator_count()));
    for (std::size_t i = 0; i < rels.size(); ++i)
        for (const auto& s : rels[i].syllables()) m(i, static_cast<std::size_t>(s.gen)) += s.exp;
    return m;
}

AbelianInvariants abelian_invariants(const GroupPresentation& p) {
    const auto snf = smith_normal_form(relation_matrix(p), false);
    AbelianInvariants inv;
    int rank = 0;
    for (const auto& d : snf.diagonal()) {
        if (d == 0) continue;
        ++rank;
        if (d != 1) inv.torsion.push_back(d);
    }
    inv.free_rank = p.generator_count() - rank;
    return inv;
}

}  // namespace rimsurg
