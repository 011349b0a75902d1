#include "haal/numeric.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>

namespace haal {

MatD to_eigen(const RatMatrix& m)
{
    MatD out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).get_d();
    return out;
}

VecD to_eigen(const RatVector& v)
{
    VecD out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out(i) = v[i].get_d();
    return out;
}

MatD expm(const MatD& a) { return a.exp(); }

std::size_t numeric_rank(const MatD& m, double rel_tol)
{
    if (m.size() == 0)
        return 0;
    Eigen::JacobiSVD<MatD> svd(m);
    const auto& s = svd.singularValues();
    double cut = rel_tol * std::max(1.0, s.size() ? s(0) : 0.0);
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > cut)
            ++r;
    return r;
}

std::vector<double> numeric_char_poly(const MatD& m)
{
    const Eigen::Index n = m.rows();
    if (n == 0)
        return {1.0};
    MatD h = Eigen::HessenbergDecomposition<MatD>(m).matrixH();
    // p_k = char poly of the leading k×k block of the upper Hessenberg H
    std::vector<std::vector<double>> p(n + 1);
    p[0] = {1.0};
    for (Eigen::Index k = 1; k <= n; ++k) {
        std::vector<double> cur(k + 1, 0.0);
        // (x − h_kk) p_{k−1}
        for (Eigen::Index i = 0; i < k; ++i) {
            cur[i + 1] += p[k - 1][i];
            cur[i] -= h(k - 1, k - 1) * p[k - 1][i];
        }
        double prod = 1.0;
        for (Eigen::Index i = 1; i < k; ++i) {
            prod *= h(k - i, k - i - 1);
            double coef = prod * h(k - i - 1, k - 1);
            for (std::size_t j = 0; j < p[k - i - 1].size(); ++j)
                cur[j] -= coef * p[k - i - 1][j];
        }
        p[k] = std::move(cur);
    }
    return p[n];
}

std::vector<std::complex<double>> poly_roots(const std::vector<double>& c)
{
    const Eigen::Index n = static_cast<Eigen::Index>(c.size()) - 1;
    std::vector<std::complex<double>> out;
    if (n < 1)
        return out;
    MatD comp = MatD::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i)
        comp(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i)
        comp(i, n - 1) = -c[i] / c[n];
    Eigen::EigenSolver<MatD> es(comp, false);
    for (Eigen::Index i = 0; i < n; ++i)
        out.push_back(es.eigenvalues()(i));
    return out;
}

MatD eval_poly(const RatPoly& p, const MatD& m)
{
    MatD r = MatD::Zero(m.rows(), m.cols());
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        r = r * m;
        r.diagonal().array() += it->get_d();
    }
    return r;
}

}  // namespace haal
