#include "rackh/snf.hpp"

#include <algorithm>

namespace rackh {

Int determinant(IntMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

namespace {

// Find the entry of smallest nonzero absolute value in the submatrix D[t.., t..].
bool min_pivot(const IntMatrix &d, int t, int &pi, int &pj) {
    bool found = false;
    Int best;
    for (int i = t; i < d.rows(); ++i)
        for (int j = t; j < d.cols(); ++j) {
            const Int &x = d.at(i, j);
            if (x == 0) continue;
            Int a = abs(x);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

bool row_col_clear(const IntMatrix &d, int t) {
    for (int i = t + 1; i < d.rows(); ++i)
        if (d.at(i, t) != 0) return false;
    for (int j = t + 1; j < d.cols(); ++j)
        if (d.at(t, j) != 0) return false;
    return true;
}

} // namespace

SnfResult snf(const IntMatrix &m) {
    SnfResult r{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix &d = r.D;
    const int nmin = std::min(m.rows(), m.cols());
    for (int t = 0; t < nmin; ++t) {
        int pi, pj;
        if (!min_pivot(d, t, pi, pj)) break;
        for (;;) {
            d.swap_rows(t, pi);
            r.U.swap_rows(t, pi);
            d.swap_cols(t, pj);
            r.V.swap_cols(t, pj);
            for (int i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                d.add_row(i, t, -q);
                r.U.add_row(i, t, -q);
            }
            for (int j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                d.add_col(j, t, -q);
                r.V.add_col(j, t, -q);
            }
            if (!row_col_clear(d, t)) {
                min_pivot(d, t, pi, pj);
                continue;
            }
            // pivot must divide the rest of the submatrix
            bool divides = true;
            for (int i = t + 1; i < d.rows() && divides; ++i)
                for (int j = t + 1; j < d.cols(); ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row(t, i, 1);
                        r.U.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
            min_pivot(d, t, pi, pj);
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            r.U.negate_row(t);
        }
    }
    return r;
}

IntMatrix kernel_basis(const IntMatrix &m) {
    SnfResult s = snf(m);
    const int nmin = std::min(m.rows(), m.cols());
    int rank = 0;
    while (rank < nmin && s.D.at(rank, rank) != 0) ++rank;
    IntMatrix k(m.cols(), m.cols() - rank);
    for (int j = rank; j < m.cols(); ++j)
        for (int i = 0; i < m.cols(); ++i) k.at(i, j - rank) = s.V.at(i, j);
    return k;
}

namespace {

// Solve B * Y = M where B has full column rank and every column of M lies in
// the column lattice of B.
IntMatrix solve_in_lattice(const IntMatrix &b, const IntMatrix &m) {
    SnfResult s = snf(b);
    IntMatrix um = s.U * m;
    const int k = b.cols();
    IntMatrix w(k, m.cols());
    for (int i = 0; i < k; ++i) {
        const Int &di = s.D.at(i, i);
        if (di == 0) throw std::invalid_argument("solve_in_lattice: basis not of full column rank");
        for (int j = 0; j < m.cols(); ++j) {
            if (um.at(i, j) % di != 0) throw std::invalid_argument("solve_in_lattice: column outside lattice");
            w.at(i, j) = um.at(i, j) / di;
        }
    }
    for (int i = k; i < b.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (um.at(i, j) != 0) throw std::invalid_argument("solve_in_lattice: column outside lattice");
    return s.V * w;
}

// Invariants of Z^k / column-lattice(Y).
AbelianInvariants lattice_quotient(const IntMatrix &y) {
    SnfResult s = snf(y);
    AbelianInvariants inv;
    const int nmin = std::min(y.rows(), y.cols());
    int rank = 0;
    for (int i = 0; i < nmin; ++i) {
        if (s.D.at(i, i) == 0) break;
        ++rank;
        if (s.D.at(i, i) > 1) inv.torsion.push_back(s.D.at(i, i));
    }
    inv.betti = y.rows() - rank;
    return inv;
}

} // namespace

AbelianInvariants cohomology_invariants(const IntMatrix &d_out, const IntMatrix &d_in) {
    return quotient_invariants_mod(d_out, d_in, 0);
}

AbelianInvariants quotient_invariants_mod(const IntMatrix &d_out, const IntMatrix &d_in, long m) {
    if (d_out.cols() != d_in.rows()) throw std::invalid_argument("cohomology_invariants: dimension mismatch");
    if (m < 0) throw std::invalid_argument("cohomology_invariants: negative modulus");
    {
        IntMatrix dd = d_out * d_in;
        if (m > 0) {
            for (int i = 0; i < dd.rows(); ++i)
                for (int j = 0; j < dd.cols(); ++j)
                    if (dd.at(i, j) % m != 0) throw std::invalid_argument("cohomology_invariants: d_out * d_in != 0");
        } else if (!dd.is_zero()) {
            throw std::invalid_argument("cohomology_invariants: d_out * d_in != 0");
        }
    }
    const int a = d_out.cols();
    IntMatrix kernel, relations;
    if (m == 0) {
        kernel = kernel_basis(d_out);
        relations = d_in;
    } else {
        // kernel of x -> d_out x (mod m): project ker[d_out | mI] to the x block
        IntMatrix ext(d_out.rows(), a + d_out.rows());
        for (int i = 0; i < d_out.rows(); ++i) {
            for (int j = 0; j < a; ++j) ext.at(i, j) = d_out.at(i, j);
            ext.at(i, a + i) = m;
        }
        IntMatrix kext = kernel_basis(ext);
        kernel = IntMatrix(a, kext.cols());
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < kext.cols(); ++j) kernel.at(i, j) = kext.at(i, j);
        relations = IntMatrix(a, d_in.cols() + a);
        for (int i = 0; i < a; ++i) {
            for (int j = 0; j < d_in.cols(); ++j) relations.at(i, j) = d_in.at(i, j);
            relations.at(i, d_in.cols() + i) = m;
        }
    }
    return lattice_quotient(solve_in_lattice(kernel, relations));
}

namespace {

// Row-reduced echelon form mod p; returns the pivot column of each row.
std::vector<int> rref_mod_p(const IntMatrix &m, long p, std::vector<std::vector<long>> &a) {
    if (p < 2) throw std::invalid_argument("rank_mod_p: p must be prime");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("rank_mod_p: p must be prime");
    a.assign(m.rows(), std::vector<long>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Int r = m.at(i, j) % p;
            if (r < 0) r += p;
            a[i][j] = static_cast<long>(r);
        }
    std::vector<int> pivots;
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        long inv = 1, base = a[rank][col] % p, e = p - 2;
        while (e) { // fermat inverse
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int j = col; j < m.cols(); ++j) a[rank][j] = a[rank][j] * inv % p;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank || a[i][col] == 0) continue;
            long f = a[i][col];
            for (int j = col; j < m.cols(); ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

} // namespace

int rank_mod_p(const IntMatrix &m, long p) {
    std::vector<std::vector<long>> a;
    return static_cast<int>(rref_mod_p(m, p, a).size());
}

IntMatrix nullspace_mod_p(const IntMatrix &m, long p) {
    std::vector<std::vector<long>> a;
    std::vector<int> pivots = rref_mod_p(m, p, a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    IntMatrix ns(m.cols(), m.cols() - static_cast<int>(pivots.size()));
    int col = 0;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        ns.at(free, col) = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            if (a[r][free] != 0) ns.at(pivots[r], col) = p - a[r][free];
        ++col;
    }
    return ns;
}

} // namespace rackh
