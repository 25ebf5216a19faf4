// Compressed sparse row matrix with the few algebraic utilities the per-step
// assemblies need (transpose, product, scaled sum).
#pragma once

#include <vector>

namespace acns {

struct CsrMatrix {
    int rows = 0, cols = 0;
    std::vector<int> row_ptr;  // rows+1
    std::vector<int> col;      // sorted within each row
    std::vector<double> val;

    int nnz() const { return static_cast<int>(col.size()); }

    // y = A x
    void apply(const std::vector<double>& x, std::vector<double>& y) const;
    std::vector<double> apply(const std::vector<double>& x) const;

    std::vector<double> diagonal() const;
    std::vector<std::vector<double>> to_dense() const;
};

// Triplet accumulator; duplicate entries are summed on compress.
struct CsrBuilder {
    int rows = 0, cols = 0;
    std::vector<int> ri, ci;
    std::vector<double> vv;

    CsrBuilder(int r, int c) : rows(r), cols(c) {}
    void add(int r, int c, double v) {
        ri.push_back(r);
        ci.push_back(c);
        vv.push_back(v);
    }
    CsrMatrix compress() const;
};

CsrMatrix csr_identity(int n);
CsrMatrix csr_transpose(const CsrMatrix& a);
CsrMatrix csr_multiply(const CsrMatrix& a, const CsrMatrix& b);
// a*A + b*B (same shape)
CsrMatrix csr_add(double a, const CsrMatrix& A, double b, const CsrMatrix& B);

}  // namespace acns
