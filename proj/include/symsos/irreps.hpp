#pragma once

#include <Eigen/Dense>
#include <vector>

#include "symsos/group.hpp"
#include "symsos/rational.hpp"

namespace symsos {

// Small dense matrix over exact rationals, used for representation
// matrices of the families that admit them.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[r * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[r * cols_ + c]; }

    QMatrix operator*(const QMatrix& o) const {
        QMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (sgn(at(i, k)) == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    QMatrix kron(const QMatrix& o) const {
        QMatrix r(rows_ * o.rows_, cols_ * o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                for (int k = 0; k < o.rows_; ++k)
                    for (int l = 0; l < o.cols_; ++l)
                        r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
        return r;
    }

    Rational trace() const {
        Rational t(0);
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    bool operator==(const QMatrix& o) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

using CMatrix = Eigen::MatrixXcd;

// An irreducible matrix representation, given elementwise on the whole
// group. Entries are exact rationals when the family admits them
// (symmetric groups in Young's seminormal form, one-dimensional real
// representations); otherwise double-precision complex with the numeric
// flag set.
class Irrep {
public:
    Irrep(int dim, std::vector<QMatrix> mats)
        : dim_(dim), exact_(true), q_(std::move(mats)) {}
    Irrep(int dim, std::vector<CMatrix> mats)
        : dim_(dim), exact_(false), c_(std::move(mats)) {}

    int dim() const { return dim_; }
    bool exact() const { return exact_; }

    const QMatrix& qmat(int elem) const { return q_[elem]; }
    const CMatrix& cmat(int elem) const { return c_[elem]; }

    Cplx entry(int elem, int r, int c) const {
        return exact_ ? Cplx(to_double(q_[elem].at(r, c)), 0.0) : c_[elem](r, c);
    }

    Cplx character(int elem) const {
        if (exact_) return Cplx(to_double(q_[elem].trace()), 0.0);
        return c_[elem].trace();
    }

private:
    int dim_;
    bool exact_;
    std::vector<QMatrix> q_;
    std::vector<CMatrix> c_;
};

struct CharacterTable {
    // values[i][c] = character of irrep i on class representative c.
    std::vector<std::vector<Cplx>> values;
};

// Complete irrep family for a built-in GroupSpec, trivial representation
// first. Throws UnsupportedGroupError for custom specs.
std::vector<Irrep> builtin_irreps(const GroupSpec& spec, const Group& g);

CharacterTable character_table(const Group& g, const std::vector<Irrep>& irreps);

// Index i' with character equal to the complex conjugate of irrep i's
// character (i itself for real-type irreps).
int conjugate_partner(const Group& g, const std::vector<Irrep>& irreps, int i);

// Number of monomials of degree <= r fixed by the permutation.
long fixed_monomial_count(const Perm& p, int r);

// Multiplicities m^{(i)}_r of each irrep in the induced action on
// polynomials of degree <= r, via the character system.
std::vector<long> multiplicities(const Group& g, const std::vector<Irrep>& irreps, int r);

// Partitions of n, descending-lex (trivial partition (n) first); exposed
// for the symmetric-group tests.
std::vector<std::vector<int>> partitions_of(int n);

}  // namespace symsos
