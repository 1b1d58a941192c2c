#pragma once

#include <cmath>
#include <stdexcept>

#include "qpath/scales.hpp"

namespace qpath {

enum class DispersionKind { Bogoliubov, FreeParticle, LinearSound };

/// Which energy/frequency law is in force.
struct DispersionSpec {
    DispersionKind kind = DispersionKind::Bogoliubov;
    double soundSpeed = 0.0; ///< v_s >= 0, unused for FreeParticle
    double mass = 1.0;       ///< M > 0, unused for LinearSound
    double hbar = 1.0;

    void validate() const {
        if (!(hbar > 0.0)) throw std::domain_error("DispersionSpec: hbar must be > 0");
        if (kind != DispersionKind::LinearSound && !(mass > 0.0))
            throw std::domain_error("DispersionSpec: mass must be > 0");
        if (kind != DispersionKind::FreeParticle && !(soundSpeed >= 0.0))
            throw std::domain_error("DispersionSpec: soundSpeed must be >= 0");
    }
};

/// How the probed wavenumber follows from the resolution.
/// Reciprocal (k = 1/dx) reproduces the printed group-velocity formula;
/// TwoPi (k = 2*pi/dx) matches the wavelength convention.
enum class ProbeConvention { Reciprocal, TwoPi };

inline double probe_wavenumber(double resolution, ProbeConvention conv) {
    if (!(resolution > 0.0)) throw std::domain_error("probe_wavenumber: resolution must be > 0");
    constexpr double two_pi = 6.283185307179586476925286766559;
    return conv == ProbeConvention::Reciprocal ? 1.0 / resolution : two_pi / resolution;
}

/// Excitation energy E(p). Bogoliubov: sqrt((p*v_s)^2 + p^4/(4 M^2)).
inline double energy(double p, const DispersionSpec& spec) {
    spec.validate();
    if (!(p >= 0.0)) throw std::domain_error("energy: momentum must be >= 0");
    switch (spec.kind) {
        case DispersionKind::FreeParticle:
            return p * p / (2.0 * spec.mass);
        case DispersionKind::LinearSound:
            return p * spec.soundSpeed;
        case DispersionKind::Bogoliubov: {
            const double a = p * spec.soundSpeed;
            const double b = p * p / (2.0 * spec.mass);
            return std::hypot(a, b);
        }
    }
    throw std::logic_error("energy: unreachable");
}

/// Angular frequency omega(k) = k*v_s*sqrt(1 + (hbar*k/(2*M*v_s))^2),
/// continuously extended to hbar*k^2/(2M) at v_s = 0.
inline double omega(double k, const DispersionSpec& spec) {
    spec.validate();
    if (!(k >= 0.0)) throw std::domain_error("omega: wavenumber must be >= 0");
    switch (spec.kind) {
        case DispersionKind::FreeParticle:
            return spec.hbar * k * k / (2.0 * spec.mass);
        case DispersionKind::LinearSound:
            return k * spec.soundSpeed;
        case DispersionKind::Bogoliubov: {
            // hypot form equals energy(hbar*k)/hbar and is regular at v_s = 0.
            const double a = k * spec.soundSpeed;
            const double b = spec.hbar * k * k / (2.0 * spec.mass);
            return std::hypot(a, b);
        }
    }
    throw std::logic_error("omega: unreachable");
}

/// Group velocity of the Bogoliubov branch at the probed wavenumber,
/// v_g = v_s*(2 + 1/u^2) / (2*sqrt(1 + 1/(4u^2))) with u = M*v_s*dx_eff/hbar.
/// Diverges as v_s -> 0 at fixed probe, hence the domain error there.
inline double group_velocity(double resolution, const DispersionSpec& spec,
                             ProbeConvention conv = ProbeConvention::Reciprocal) {
    spec.validate();
    if (!(resolution > 0.0)) throw std::domain_error("group_velocity: resolution must be > 0");
    if (!(spec.soundSpeed > 0.0))
        throw std::domain_error("group_velocity: requires v_s > 0; differentiate omega directly instead");
    constexpr double two_pi = 6.283185307179586476925286766559;
    const double dxEff = conv == ProbeConvention::Reciprocal ? resolution : resolution / two_pi;
    const double u = spec.mass * spec.soundSpeed * dxEff / spec.hbar;
    const double inv_u2 = 1.0 / (u * u);
    return spec.soundSpeed * (2.0 + inv_u2) / (2.0 * std::sqrt(1.0 + 0.25 * inv_u2));
}

/// Evolution phase in dimensionless packet variables,
/// phi(k) = sqrt(s^2 k^2 + theta^2 k^4 / 4).
/// Equals alpha*sqrt((k/xbar)^2 + (k/xbar)^4/4) whenever xbar > 0, but stays
/// regular at v_s = 0.
inline double phase(double k, const DimensionlessGroup& group) {
    if (!(k >= 0.0)) throw std::domain_error("phase: wavenumber must be >= 0");
    const double a = group.s * k;
    const double b = 0.5 * group.theta * k * k;
    return std::hypot(a, b);
}

/// d(phi)/dk, used to pace oscillation-aware quadrature panels.
inline double phase_derivative(double k, const DimensionlessGroup& group) {
    if (!(k >= 0.0)) throw std::domain_error("phase_derivative: wavenumber must be >= 0");
    const double s2 = group.s * group.s;
    const double t2 = group.theta * group.theta;
    const double p = phase(k, group);
    if (p == 0.0) return group.s; // k -> 0 limit (or identically zero phase)
    return (s2 * k + 0.5 * t2 * k * k * k) / p;
}

}  // namespace qpath
