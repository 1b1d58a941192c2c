#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace qpath {

/// Physical inputs in one consistent unit system (no unit conversions here).
struct PhysicalScales {
    double hbar = 1.0;       ///< reduced Planck constant, > 0
    double mass = 1.0;       ///< quasiparticle mass M, > 0
    double soundSpeed = 0.0; ///< condensate sound speed v_s, >= 0
    double resolution = 1.0; ///< probing resolution dx, > 0
    double timeStep = 1.0;   ///< elementary time step dt, >= 0
    std::optional<double> totalTime{}; ///< optional total time T >= dt

    void validate() const {
        if (!(hbar > 0.0)) throw std::domain_error("PhysicalScales: hbar must be > 0");
        if (!(mass > 0.0)) throw std::domain_error("PhysicalScales: mass must be > 0");
        if (!(soundSpeed >= 0.0)) throw std::domain_error("PhysicalScales: soundSpeed must be >= 0");
        if (!(resolution > 0.0)) throw std::domain_error("PhysicalScales: resolution must be > 0");
        if (!(timeStep >= 0.0)) throw std::domain_error("PhysicalScales: timeStep must be >= 0");
        if (totalTime && !(*totalTime >= timeStep))
            throw std::domain_error("PhysicalScales: totalTime must be >= timeStep");
    }
};

/// The dimensionless groups controlling the quantum-classical crossover.
///
/// s and theta are stored as primitives (not alpha/xbar ratios) so the
/// v_s = 0 regime stays representable without 0/0.
struct DimensionlessGroup {
    double xbar = 0.0;  ///< M*v_s*dx/hbar, classical over quantum momentum
    double alpha = 0.0; ///< M*v_s^2*dt/hbar, classical over quantum energy
    double s = 0.0;     ///< v_s*dt/dx, drift per step in resolution units
    double theta = 0.0; ///< hbar*dt/(M*dx^2), spreading per step in resolution units
};

/// Reduce physical scales to the (xbar, alpha, s, theta) group.
/// The identities alpha = s*xbar, s = theta*xbar, alpha = theta*xbar^2 hold
/// exactly for every valid input, including v_s = 0 where they read 0 = 0.
inline DimensionlessGroup make_dimensionless(const PhysicalScales& scales) {
    scales.validate();
    DimensionlessGroup g;
    g.xbar = scales.mass * scales.soundSpeed * scales.resolution / scales.hbar;
    g.alpha = scales.mass * scales.soundSpeed * scales.soundSpeed * scales.timeStep / scales.hbar;
    g.s = scales.soundSpeed * scales.timeStep / scales.resolution;
    g.theta = scales.hbar * scales.timeStep / (scales.mass * scales.resolution * scales.resolution);
    return g;
}

/// Free-particle probing scales: resolution against the de Broglie wavelength.
struct FreeScale {
    double hbar = 1.0;      ///< > 0
    double pAverage = 1.0;  ///< average momentum p_av, > 0
    double resolution = 1.0; ///< dx, > 0

    void validate() const {
        if (!(hbar > 0.0)) throw std::domain_error("FreeScale: hbar must be > 0");
        if (!(pAverage > 0.0)) throw std::domain_error("FreeScale: pAverage must be > 0");
        if (!(resolution > 0.0)) throw std::domain_error("FreeScale: resolution must be > 0");
    }

    double deBroglie() const {
        validate();
        return hbar / pAverage;
    }
};

/// Dimensionless resolution dx/lambda with lambda = hbar/p_av.
inline double free_particle_resolution(const FreeScale& free) {
    free.validate();
    return free.resolution * free.pAverage / free.hbar;
}

/// Number of whole time steps in T, floor(T/dt).
inline std::int64_t steps_count(double totalTime, double timeStep) {
    if (!(timeStep > 0.0)) throw std::domain_error("steps_count: timeStep must be > 0");
    if (!(totalTime >= timeStep)) throw std::domain_error("steps_count: totalTime must be >= timeStep");
    return static_cast<std::int64_t>(std::floor(totalTime / timeStep));
}

}  // namespace qpath
