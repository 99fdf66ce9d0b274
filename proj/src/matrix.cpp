#include "cartanlab/matrix.hpp"

namespace cartanlab {

bool det_near_one(const MatrixD& m, double tol) {
    const int n = m.dim();
    double log_scale = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += m.at(i, j) * m.at(i, j);
        log_scale += 0.5 * std::log2(std::max(row, 1.0));
    }
    if (log_scale > 300.0) return true; // bound not representable; nothing to verify in double

    // LU with partial pivoting for the determinant.
    MatrixD a = m;
    double det = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r) {
            if (std::fabs(a.at(r, c)) > std::fabs(a.at(piv, c))) piv = r;
        }
        if (a.at(piv, c) == 0.0) return false;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
            det = -det;
        }
        det *= a.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            const double f = a.at(r, c) / a.at(c, c);
            for (int j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
        }
    }
    return std::fabs(det - 1.0) <= tol * std::max(1.0, std::exp2(log_scale));
}

} // namespace cartanlab
