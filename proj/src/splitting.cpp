#include "qhardy/splitting.hpp"

#include <cmath>

#include "qhardy/error.hpp"

namespace qhardy {

namespace {

double dot3(const Quaternion& a, const Quaternion& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

}  // namespace

SplitPair split(const QSeries& f, const UnitImaginary& I, const UnitImaginary& J) {
    if (std::abs(I.dot(J)) > 1e-10) {
        throw Error(ErrorCode::FrameNotOrthogonal, "split needs J orthogonal to I");
    }
    // {1, I, J, IJ} is an orthonormal basis of ℍ for orthogonal I, J
    const Quaternion qi = I.quat();
    const Quaternion qj = J.quat();
    const Quaternion qij = qi * qj;
    SplitPair out{I, J, {}, {}};
    out.F.reserve(f.degree() + 1);
    out.G.reserve(f.degree() + 1);
    for (const Quaternion& a : f.coeffs()) {
        out.F.emplace_back(a.w, dot3(a, qi));
        out.G.emplace_back(dot3(a, qj), dot3(a, qij));
    }
    return out;
}

QSeries recombine(const SplitPair& pair) {
    if (pair.F.size() != pair.G.size() || pair.F.empty()) {
        throw Error(ErrorCode::InvalidArgument, "split components must have equal nonzero length");
    }
    std::vector<Quaternion> a;
    a.reserve(pair.F.size());
    for (std::size_t n = 0; n < pair.F.size(); ++n) {
        a.push_back(in_slice(pair.F[n], pair.I) + in_slice(pair.G[n], pair.I) * pair.J.quat());
    }
    return QSeries(std::move(a));
}

std::complex<double> eval_complex(const std::vector<std::complex<double>>& c, std::complex<double> z) {
    std::complex<double> acc = c.back();
    for (std::size_t n = c.size() - 1; n-- > 0;) acc = c[n] + z * acc;
    return acc;
}

}  // namespace qhardy
