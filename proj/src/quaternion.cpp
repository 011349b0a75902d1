#include "haal/quaternion.hpp"

#include "haal/errors.hpp"
#include "haal/linalg.hpp"

#include <sstream>

namespace haal {

Quaternion Quaternion::inverse() const
{
    Rational n = norm2();
    if (sgn(n) == 0)
        throw Error(Errc::InvalidParams, "inverse of the zero quaternion");
    Quaternion c = conj();
    return {c.x / n, c.y / n, c.z / n, c.w / n};
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) { return {a.x + b.x, a.y + b.y, a.z + b.z, a.w + b.w}; }
Quaternion operator-(const Quaternion& a, const Quaternion& b) { return {a.x - b.x, a.y - b.y, a.z - b.z, a.w - b.w}; }

Quaternion operator*(const Quaternion& a, const Quaternion& b)
{
    return {a.x * b.x - a.y * b.y - a.z * b.z - a.w * b.w,
            a.x * b.y + a.y * b.x + a.z * b.w - a.w * b.z,
            a.x * b.z - a.y * b.w + a.z * b.x + a.w * b.y,
            a.x * b.w + a.y * b.z - a.z * b.y + a.w * b.x};
}

QuatMatrix QuatMatrix::identity(std::size_t q)
{
    QuatMatrix m(q);
    for (std::size_t i = 0; i < q; ++i)
        m(i, i) = Quaternion(1);
    return m;
}

QuatMatrix QuatMatrix::jordan_block(std::size_t m, const Quaternion& lambda)
{
    QuatMatrix b(m);
    for (std::size_t i = 0; i < m; ++i) {
        b(i, i) = lambda;
        if (i + 1 < m)
            b(i + 1, i) = Quaternion(1);
    }
    return b;
}

bool QuatMatrix::is_zero() const
{
    for (auto& h : a_)
        if (!h.is_zero())
            return false;
    return true;
}

QuatMatrix operator+(const QuatMatrix& a, const QuatMatrix& b)
{
    if (a.size() != b.size())
        throw Error(Errc::DimensionMismatch, "quaternionic sum shape");
    QuatMatrix r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            r(i, j) = a(i, j) + b(i, j);
    return r;
}

QuatMatrix operator*(const QuatMatrix& a, const QuatMatrix& b)
{
    if (a.size() != b.size())
        throw Error(Errc::DimensionMismatch, "quaternionic product shape");
    std::size_t q = a.size();
    QuatMatrix r(q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t k = 0; k < q; ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < q; ++j)
                r(i, j) = r(i, j) + a(i, k) * b(k, j);
        }
    return r;
}

QuatMatrix quat_pow(const QuatMatrix& a, unsigned k)
{
    QuatMatrix r = QuatMatrix::identity(a.size());
    for (unsigned i = 0; i < k; ++i)
        r = r * a;
    return r;
}

QuatMatrix direct_sum(const std::vector<QuatMatrix>& blocks)
{
    std::size_t q = 0;
    for (auto& b : blocks)
        q += b.size();
    QuatMatrix m(q);
    std::size_t o = 0;
    for (auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                m(o + i, o + j) = b(i, j);
        o += b.size();
    }
    return m;
}

// h = X + iY - jZ + kW, so the display entries are X=h.x, Y=h.y, Z=-h.z, W=h.w.
RatMatrix quaternion_block(const Quaternion& h)
{
    Rational X = h.x, Y = h.y, Z = -h.z, W = h.w;
    RatMatrix b(4, 4);
    const Rational v[4][4] = {{X, -Y, -Z, -W}, {Y, X, W, -Z}, {Z, -W, X, Y}, {W, Z, -Y, X}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            b(i, j) = v[i][j];
    return b;
}

namespace {

RatMatrix j_model(int alpha)
{
    switch (alpha) {
    case 1: return RatMatrix::from_ints({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
    case 2: return RatMatrix::from_ints({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}});
    default: return RatMatrix::from_ints({{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
    }
}

}  // namespace

StandardJTriple::StandardJTriple(std::size_t q_)
    : q(q_), J1(repeat_sum(j_model(1), q_)), J2(repeat_sum(j_model(2), q_)), J3(repeat_sum(j_model(3), q_))
{
}

const RatMatrix& StandardJTriple::operator[](int alpha) const
{
    switch (alpha) {
    case 1: return J1;
    case 2: return J2;
    case 3: return J3;
    default: throw Error(Errc::IndexOutOfRange, "J index must be 1, 2 or 3");
    }
}

bool commutes_with_j(const RatMatrix& b)
{
    if (!b.square() || b.rows() % 4 != 0)
        return false;
    StandardJTriple j(b.rows() / 4);
    for (int a = 1; a <= 3; ++a)
        if (!commutator(b, j[a]).is_zero())
            return false;
    return true;
}

QuatMatrix sigma(const RatMatrix& b)
{
    if (!b.square() || b.rows() % 4 != 0)
        throw Error(Errc::BlockPatternMismatch, "size must be a multiple of 4");
    if (!commutes_with_j(b))
        throw Error(Errc::BlockPatternMismatch, "matrix does not commute with J1, J2, J3");
    std::size_t q = b.rows() / 4;
    QuatMatrix out(q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            // first column of the 4×4 block is (X, Y, Z, W)
            out(i, j) = Quaternion(b(4 * i, 4 * j), b(4 * i + 1, 4 * j), -b(4 * i + 2, 4 * j), b(4 * i + 3, 4 * j));
        }
    return out;
}

RatMatrix sigma_inv(const QuatMatrix& q)
{
    RatMatrix out(4 * q.size(), 4 * q.size());
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            if (!q(i, j).is_zero())
                out.set_block(4 * i, 4 * j, quaternion_block(q(i, j)));
    return out;
}

RatMatrix type_major_to_index_major(const RatMatrix& b)
{
    if (!b.square() || b.rows() % 4 != 0)
        throw Error(Errc::BlockPatternMismatch, "size must be a multiple of 4");
    std::size_t q = b.rows() / 4;
    auto perm = [q](std::size_t k) { return 4 * (k % q) + k / q; };
    RatMatrix out(b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(perm(i), perm(j)) = b(i, j);
    return out;
}

std::size_t SigmaTuple::dimension() const
{
    std::size_t d = s;
    for (std::size_t i = 0; i < m.size() && i < p.size(); ++i)
        d += m[i] * p[i];
    return d;
}

void SigmaTuple::validate() const
{
    if (m.size() != r || p.size() != r)
        throw Error(Errc::InvalidParams, "Σ tuple: r must equal the number of block sizes and multiplicities");
    for (std::size_t i = 0; i < r; ++i) {
        if (m[i] < 2)
            throw Error(Errc::InvalidParams, "Σ tuple: block sizes must be at least 2");
        if (i > 0 && m[i] >= m[i - 1])
            throw Error(Errc::InvalidParams, "Σ tuple: block sizes must be strictly decreasing");
        if (p[i] < 1)
            throw Error(Errc::InvalidParams, "Σ tuple: multiplicities must be positive");
    }
}

std::string to_string(const SigmaTuple& s)
{
    std::ostringstream os;
    os << "(" << s.r << ", [";
    for (std::size_t i = 0; i < s.m.size(); ++i)
        os << (i ? "," : "") << s.m[i];
    os << "], [";
    for (std::size_t i = 0; i < s.p.size(); ++i)
        os << (i ? "," : "") << s.p[i];
    os << "], " << s.s << ")";
    return os.str();
}

SigmaTuple sigma_from_kernel_sequence(const std::vector<std::size_t>& seq, std::size_t beta, std::size_t quat_dim)
{
    std::vector<std::size_t> k{0};
    for (auto d : seq) {
        if (d % beta != 0)
            throw Error(Errc::NotQuaternionLinear, "kernel dimension not divisible by the block size");
        k.push_back(d / beta);
    }
    if (k.back() != quat_dim)
        throw Error(Errc::NotNilpotent, "kernel sequence does not reach the full space");
    k.push_back(k.back());
    SigmaTuple out;
    // blocks of size exactly j: (k_j - k_{j-1}) - (k_{j+1} - k_j)
    for (std::size_t j = k.size() - 2; j >= 1; --j) {
        std::size_t ge_j = k[j] - k[j - 1];
        std::size_t ge_next = k[j + 1] - k[j];
        std::size_t exact = ge_j - ge_next;
        if (exact == 0)
            continue;
        if (j == 1) {
            out.s = exact;
        } else {
            out.m.push_back(j);
            out.p.push_back(exact);
        }
    }
    out.r = out.m.size();
    return out;
}

QuatMatrix nilpotent_jordan_form(const SigmaTuple& s)
{
    std::vector<QuatMatrix> blocks;
    for (std::size_t i = 0; i < s.r; ++i)
        for (std::size_t c = 0; c < s.p[i]; ++c)
            blocks.push_back(QuatMatrix::jordan_block(s.m[i], Quaternion()));
    if (s.s > 0)
        blocks.emplace_back(s.s);
    return direct_sum(blocks);
}

SigmaTuple quat_jordan_nilpotent(const QuatMatrix& q)
{
    if (!quat_pow(q, static_cast<unsigned>(q.size())).is_zero())
        throw Error(Errc::NotNilpotent, "Q^q is not zero");
    RatMatrix real = sigma_inv(q);
    SigmaTuple s = sigma_from_kernel_sequence(kernel_dim_sequence(real), 4, q.size());
    if (!conjugate_test(sigma_inv(nilpotent_jordan_form(s)), real))
        throw Error(Errc::NotNilpotent, "Jordan reconstruction failed");
    return s;
}

SigmaTuple sigma_tuple_from_real(const RatMatrix& b)
{
    if (!commutes_with_j(b))
        throw Error(Errc::NotQuaternionLinear, "B does not commute with J1, J2, J3");
    if (!is_nilpotent(b))
        throw Error(Errc::NotNilpotent, "B is not nilpotent");
    return sigma_from_kernel_sequence(kernel_dim_sequence(b), 4, b.rows() / 4);
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> blocks_from_kernels(const RatMatrix& fb, std::size_t total_real)
{
    std::vector<std::size_t> seq;
    RatMatrix p = fb;
    std::size_t n = fb.rows();
    for (;;) {
        std::size_t k = n - rank(p);
        if (!seq.empty() && seq.back() == k)
            break;
        seq.push_back(k);
        p = p * fb;
    }
    if (seq.back() != total_real)
        throw Error(Errc::UnsupportedSpectrum, "generalized eigenspace dimension mismatch");
    SigmaTuple t = sigma_from_kernel_sequence(seq, 4, total_real / 4);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < t.r; ++i)
        out.emplace_back(t.m[i], t.p[i]);
    if (t.s > 0)
        out.emplace_back(1, t.s);
    return out;
}

}  // namespace

std::vector<QuatJordanPart> quat_jordan_form(const RatMatrix& b, const std::optional<std::vector<RatPoly>>& factors)
{
    if (!commutes_with_j(b))
        throw Error(Errc::NotQuaternionLinear, "B does not commute with J1, J2, J3");
    RatPoly p = char_poly(b);
    std::vector<RatPoly> irr;
    if (factors) {
        irr = *factors;
    } else {
        RatPoly rest = p;
        for (auto& r : rational_roots(p)) {
            RatPoly lin = RatPoly(std::vector<Rational>{-r, 1});
            irr.push_back(lin);
            while (divmod(rest, lin).second.is_zero())
                rest = divmod(rest, lin).first;
        }
        for (auto& s : squarefree_decomposition(rest))
            if (s.degree() >= 1)
                irr.push_back(s);
    }
    std::vector<QuatJordanPart> out;
    std::size_t covered = 0;
    for (auto& f0 : irr) {
        RatPoly f = f0.monic();
        QuatJordanPart part;
        if (f.degree() == 1) {
            part.re = -f.coeff(0);
        } else if (f.degree() == 2) {
            Rational re = -f.coeff(1) / 2;
            Rational im2 = f.coeff(0) - re * re;
            if (sgn(im2) <= 0)
                throw Error(Errc::UnsupportedSpectrum, "quadratic factor " + f.str() + " has real roots");
            part.re = re;
            part.im2 = im2;
        } else {
            throw Error(Errc::UnsupportedSpectrum, "factor " + f.str() + " is not linear or quadratic");
        }
        std::size_t mult = 0;
        RatPoly t = p;
        while (divmod(t, f).second.is_zero()) {
            t = divmod(t, f).first;
            ++mult;
        }
        if (mult == 0)
            throw Error(Errc::UnsupportedSpectrum, "factor " + f.str() + " does not divide the characteristic polynomial");
        std::size_t real_dim = mult * static_cast<std::size_t>(f.degree());
        part.blocks = blocks_from_kernels(f.eval(b), real_dim);
        covered += real_dim;
        out.push_back(std::move(part));
    }
    if (covered != b.rows())
        throw Error(Errc::UnsupportedSpectrum, "characteristic polynomial not covered by linear and quadratic factors");
    return out;
}

}  // namespace haal
