#include "acns/csr.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace acns {

void CsrMatrix::apply(const std::vector<double>& x, std::vector<double>& y) const {
    assert((int)x.size() == cols);
    y.assign(rows, 0.0);
    for (int r = 0; r < rows; ++r) {
        double s = 0.0;
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k) s += val[k] * x[col[k]];
        y[r] = s;
    }
}

std::vector<double> CsrMatrix::apply(const std::vector<double>& x) const {
    std::vector<double> y;
    apply(x, y);
    return y;
}

std::vector<double> CsrMatrix::diagonal() const {
    std::vector<double> d(rows, 0.0);
    for (int r = 0; r < rows; ++r)
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            if (col[k] == r) d[r] += val[k];
    return d;
}

std::vector<std::vector<double>> CsrMatrix::to_dense() const {
    std::vector<std::vector<double>> d(rows, std::vector<double>(cols, 0.0));
    for (int r = 0; r < rows; ++r)
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k) d[r][col[k]] += val[k];
    return d;
}

CsrMatrix CsrBuilder::compress() const {
    const size_t m = ri.size();
    std::vector<size_t> order(m);
    std::iota(order.begin(), order.end(), size_t(0));
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (ri[a] != ri[b]) return ri[a] < ri[b];
        return ci[a] < ci[b];
    });
    CsrMatrix out;
    out.rows = rows;
    out.cols = cols;
    out.row_ptr.assign(rows + 1, 0);
    out.col.reserve(m);
    out.val.reserve(m);
    for (size_t t = 0; t < m;) {
        int r = ri[order[t]], c = ci[order[t]];
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw std::out_of_range("CsrBuilder: entry out of range");
        double s = 0.0;
        while (t < m && ri[order[t]] == r && ci[order[t]] == c) s += vv[order[t++]];
        out.col.push_back(c);
        out.val.push_back(s);
        out.row_ptr[r + 1]++;
    }
    for (int r = 0; r < rows; ++r) out.row_ptr[r + 1] += out.row_ptr[r];
    return out;
}

CsrMatrix csr_identity(int n) {
    CsrMatrix out;
    out.rows = out.cols = n;
    out.row_ptr.resize(n + 1);
    out.col.resize(n);
    out.val.assign(n, 1.0);
    for (int i = 0; i <= n; ++i) out.row_ptr[i] = i;
    for (int i = 0; i < n; ++i) out.col[i] = i;
    return out;
}

CsrMatrix csr_transpose(const CsrMatrix& a) {
    CsrMatrix out;
    out.rows = a.cols;
    out.cols = a.rows;
    out.row_ptr.assign(out.rows + 1, 0);
    for (int k = 0; k < a.nnz(); ++k) out.row_ptr[a.col[k] + 1]++;
    for (int r = 0; r < out.rows; ++r) out.row_ptr[r + 1] += out.row_ptr[r];
    out.col.resize(a.nnz());
    out.val.resize(a.nnz());
    std::vector<int> next(out.row_ptr.begin(), out.row_ptr.end() - 1);
    for (int r = 0; r < a.rows; ++r)
        for (int k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k) {
            int pos = next[a.col[k]]++;
            out.col[pos] = r;  // rows of a are scanned in order => sorted cols
            out.val[pos] = a.val[k];
        }
    return out;
}

CsrMatrix csr_multiply(const CsrMatrix& a, const CsrMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("csr_multiply: shape");
    CsrBuilder bld(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (int ka = a.row_ptr[r]; ka < a.row_ptr[r + 1]; ++ka) {
            int m = a.col[ka];
            double av = a.val[ka];
            for (int kb = b.row_ptr[m]; kb < b.row_ptr[m + 1]; ++kb)
                bld.add(r, b.col[kb], av * b.val[kb]);
        }
    return bld.compress();
}

CsrMatrix csr_add(double sa, const CsrMatrix& A, double sb, const CsrMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols)
        throw std::invalid_argument("csr_add: shape");
    CsrBuilder bld(A.rows, A.cols);
    for (int r = 0; r < A.rows; ++r)
        for (int k = A.row_ptr[r]; k < A.row_ptr[r + 1]; ++k)
            bld.add(r, A.col[k], sa * A.val[k]);
    for (int r = 0; r < B.rows; ++r)
        for (int k = B.row_ptr[r]; k < B.row_ptr[r + 1]; ++k)
            bld.add(r, B.col[k], sb * B.val[k]);
    return bld.compress();
}

}  // namespace acns
