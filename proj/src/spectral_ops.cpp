#include "nscb/spectral_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace nscb {

Field apply_multiplier(const Field& f, const Multiplier& m) {
    Field out(f.grid(), f.ncomp());
    const double ku = f.grid().k_unit();
    bool bad = false;
    f.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
        const cplx sym = m.symbol(ku * sx, ku * sy, ku * sz);
        if (!std::isfinite(sym.real()) || !std::isfinite(sym.imag())) {
            bad = true;
            return;
        }
        for (std::size_t c = 0; c < f.ncomp(); ++c)
            out.comp(c)[idx] = sym * f.comp(c)[idx];
    });
    if (bad) throw std::domain_error("apply_multiplier: symbol non-finite on band");
    return out;
}

Field leray_project(const Field& f) {
    if (f.ncomp() != 3) throw std::invalid_argument("leray_project: vector field required");
    Field out(f.grid(), 3);
    f.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
        const double k[3] = {static_cast<double>(sx), static_cast<double>(sy),
                             static_cast<double>(sz)};
        const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
        if (k2 == 0.0) {
            for (std::size_t c = 0; c < 3; ++c) out.comp(c)[idx] = f.comp(c)[idx];
            return;
        }
        const cplx kdotu = k[0] * f.comp(0)[idx] + k[1] * f.comp(1)[idx] + k[2] * f.comp(2)[idx];
        for (std::size_t c = 0; c < 3; ++c)
            out.comp(c)[idx] = f.comp(c)[idx] - k[c] * kdotu / k2;
    });
    return out;
}

Field heat_semigroup(const Field& f, double t) {
    if (t < 0.0) throw std::invalid_argument("heat_semigroup: negative time");
    Field out(f.grid(), f.ncomp());
    const double ku2 = f.grid().k_unit() * f.grid().k_unit();
    f.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
        const double k2 = ku2 * static_cast<double>(sx * sx + sy * sy + sz * sz);
        const double damp = std::exp(-k2 * t);
        for (std::size_t c = 0; c < f.ncomp(); ++c)
            out.comp(c)[idx] = damp * f.comp(c)[idx];
    });
    return out;
}

Field riesz_potential(const Field& f, double sigma) {
    if (!(sigma > 0.0) || !(sigma < 3.0))
        throw std::invalid_argument("riesz_potential: sigma must lie in (0, 3)");
    Field out(f.grid(), f.ncomp());
    const double ku = f.grid().k_unit();
    f.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
        const double kmag = ku * std::sqrt(static_cast<double>(sx * sx + sy * sy + sz * sz));
        const double w = kmag > 0.0 ? std::pow(kmag, -sigma) : 0.0;
        for (std::size_t c = 0; c < f.ncomp(); ++c)
            out.comp(c)[idx] = w * f.comp(c)[idx];
    });
    return out;
}

Field derivative(const Field& f, std::size_t axis) {
    if (axis > 2) throw std::invalid_argument("derivative: axis must be 0, 1 or 2");
    Field out(f.grid(), f.ncomp());
    const double ku = f.grid().k_unit();
    f.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
        const long s[3] = {sx, sy, sz};
        const cplx ik(0.0, ku * static_cast<double>(s[axis]));
        for (std::size_t c = 0; c < f.ncomp(); ++c) out.comp(c)[idx] = ik * f.comp(c)[idx];
    });
    return out;
}

Field curl(const Field& f) {
    if (f.ncomp() != 3) throw std::invalid_argument("curl: vector field required");
    Field out(f.grid(), 3);
    const double ku = f.grid().k_unit();
    f.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
        const cplx ikx(0.0, ku * sx), iky(0.0, ku * sy), ikz(0.0, ku * sz);
        out.comp(0)[idx] = iky * f.comp(2)[idx] - ikz * f.comp(1)[idx];
        out.comp(1)[idx] = ikz * f.comp(0)[idx] - ikx * f.comp(2)[idx];
        out.comp(2)[idx] = ikx * f.comp(1)[idx] - iky * f.comp(0)[idx];
    });
    return out;
}

Field divergence(const Field& f) {
    if (f.ncomp() != 3) throw std::invalid_argument("divergence: vector field required");
    Field out(f.grid(), 1);
    const double ku = f.grid().k_unit();
    f.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
        out.comp(0)[idx] = cplx(0.0, ku * sx) * f.comp(0)[idx] +
                           cplx(0.0, ku * sy) * f.comp(1)[idx] +
                           cplx(0.0, ku * sz) * f.comp(2)[idx];
    });
    return out;
}

Field gradient_tensor(const Field& f) {
    if (f.ncomp() != 3) throw std::invalid_argument("gradient_tensor: vector field required");
    Field out(f.grid(), 9);
    const double ku = f.grid().k_unit();
    f.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
        const cplx ik[3] = {cplx(0.0, ku * sx), cplx(0.0, ku * sy), cplx(0.0, ku * sz)};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                out.comp(3 * i + j)[idx] = ik[i] * f.comp(j)[idx];
    });
    return out;
}

Field tensor_divergence(const Field& t) {
    if (t.ncomp() != 9) throw std::invalid_argument("tensor_divergence: tensor field required");
    Field out(t.grid(), 3);
    const double ku = t.grid().k_unit();
    t.for_each_mode([&](long sx, long sy, long sz, std::size_t idx) {
        const cplx ik[3] = {cplx(0.0, ku * sx), cplx(0.0, ku * sy), cplx(0.0, ku * sz)};
        for (std::size_t i = 0; i < 3; ++i)
            out.comp(i)[idx] = ik[0] * t.comp(3 * i + 0)[idx] + ik[1] * t.comp(3 * i + 1)[idx] +
                               ik[2] * t.comp(3 * i + 2)[idx];
    });
    return out;
}

double spectral_divergence_sup(const Field& f) {
    const Field div = divergence(f);
    double worst = 0.0;
    div.for_each_mode([&](long, long, long, std::size_t idx) {
        worst = std::max(worst, std::abs(div.comp(0)[idx]));
    });
    return worst;
}

Field dilate_half_box(const Field& f) {
    Grid half = f.grid();
    half.box_length *= 0.5;
    Field out(half, f.ncomp());
    for (std::size_t c = 0; c < f.ncomp(); ++c)
        for (std::size_t i = 0; i < f.size(); ++i) out.comp(c)[i] = 2.0 * f.comp(c)[i];
    return out;
}

}  // namespace nscb
