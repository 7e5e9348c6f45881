#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "selfsim/error.hpp"

namespace selfsim {

using integer = boost::multiprecision::cpp_int;

class int_matrix {
  public:
    int_matrix() : rows_(0), cols_(0) {}
    int_matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static int_matrix identity(std::size_t n) {
        int_matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static int_matrix from_rows(const std::vector<std::vector<long long>>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows[0].size();
        int_matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw dimension_error("ragged matrix literal");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    integer& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const integer& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const int_matrix& a, const int_matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    friend int_matrix operator*(const int_matrix& a, const int_matrix& b) {
        if (a.cols_ != b.rows_) throw dimension_error("matrix product shape mismatch");
        int_matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return c;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<integer> a_;
};

// invariant-factor form of a finitely generated abelian group
struct abelian_group {
    std::size_t rank = 0;
    std::vector<integer> torsion;  // each > 1, ascending divisibility

    friend bool operator==(const abelian_group&, const abelian_group&) = default;

    // output grammar: `Z^r` plus `Z/d` factors joined by ` x `; the trivial
    // group prints `0`, rank one with no torsion prints plain `Z`
    std::string str() const {
        std::vector<std::string> parts;
        if (rank == 1)
            parts.push_back("Z");
        else if (rank > 1)
            parts.push_back("Z^" + std::to_string(rank));
        for (const auto& d : torsion) parts.push_back("Z/" + d.str());
        if (parts.empty()) return "0";
        std::string out = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
        return out;
    }
};

struct snf_result {
    int_matrix d;  // diagonal, d = u * m * v
    int_matrix u;  // unimodular, rows x rows
    int_matrix v;  // unimodular, cols x cols
    abelian_group group;  // cokernel of m acting on Z^cols by row relations
};

// Smith normal form with transform certificates.  The cokernel reading: the
// input rows are relations over cols generators, and `group` is
// Z^cols / rowspace.
inline snf_result smith_normal_form(const int_matrix& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    snf_result res{m, int_matrix::identity(rows), int_matrix::identity(cols), {}};
    int_matrix& d = res.d;
    int_matrix& u = res.u;
    int_matrix& v = res.v;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(d.at(i, c), d.at(j, c));
        for (std::size_t c = 0; c < rows; ++c) std::swap(u.at(i, c), u.at(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(d.at(r, i), d.at(r, j));
        for (std::size_t r = 0; r < cols; ++r) std::swap(v.at(r, i), v.at(r, j));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const integer& q) {
        // row_dst += q * row_src
        for (std::size_t c = 0; c < cols; ++c) d.at(dst, c) += q * d.at(src, c);
        for (std::size_t c = 0; c < rows; ++c) u.at(dst, c) += q * u.at(src, c);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const integer& q) {
        for (std::size_t r = 0; r < rows; ++r) d.at(r, dst) += q * d.at(r, src);
        for (std::size_t r = 0; r < cols; ++r) v.at(r, dst) += q * v.at(r, src);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t c = 0; c < cols; ++c) d.at(i, c) = -d.at(i, c);
        for (std::size_t c = 0; c < rows; ++c) u.at(i, c) = -u.at(i, c);
    };

    std::size_t t = 0;
    std::size_t steps = std::min(rows, cols);
    while (t < steps) {
        // locate a nonzero pivot of minimal absolute value in the trailing block
        std::size_t pi = t, pj = t;
        integer best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const integer& x = d.at(i, j);
                if (x == 0) continue;
                integer ax = abs(x);
                if (best == 0 || ax < best) {
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d.at(i, t) == 0) continue;
                integer q = d.at(i, t) / d.at(t, t);
                add_row(i, t, -q);
                if (d.at(i, t) != 0) {
                    // remainder became the smaller pivot candidate
                    swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d.at(t, j) == 0) continue;
                integer q = d.at(t, j) / d.at(t, t);
                add_col(j, t, -q);
                if (d.at(t, j) != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
            if (clean) {
                // enforce divisibility of the trailing block by the pivot
                for (std::size_t i = t + 1; i < rows && clean; ++i)
                    for (std::size_t j = t + 1; j < cols && clean; ++j)
                        if (d.at(i, j) % d.at(t, t) != 0) {
                            add_row(t, i, 1);
                            clean = false;
                        }
            }
        }
        if (d.at(t, t) < 0) negate_row(t);
        ++t;
    }

    for (std::size_t i = 0; i < t; ++i)
        if (d.at(i, i) > 1) res.group.torsion.push_back(d.at(i, i));
    res.group.rank = cols - t;
    return res;
}

}  // namespace selfsim
