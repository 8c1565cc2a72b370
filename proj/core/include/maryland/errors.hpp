#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace maryland {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The potential cot(pi z) is evaluated too close to its pole lattice (the integers).
class PotentialPoleError : public Error {
public:
    PotentialPoleError(const std::string& what, std::complex<double> point, long index = 0)
        : Error(what), lattice_point(point), orbit_index(index) {}
    std::complex<double> lattice_point;  ///< nearest integer lattice point
    long orbit_index;                    ///< orbit index k at which the pole was hit
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// The Gauss map hit an exactly rational frequency (some omega_k == 0).
class RationalFrequencyError : public Error {
public:
    using Error::Error;
};

/// A small denominator sin(pi n omega) or sin(pi n / omega) fell below the floor.
class SmallDenominatorError : public Error {
public:
    SmallDenominatorError(const std::string& what, int index, double value)
        : Error(what), n(index), sin_value(value) {}
    int n;
    double sin_value;
};

/// A sigma evaluation landed too close to the pole/zero lattice to be trusted.
class NearSingularError : public Error {
public:
    NearSingularError(const std::string& what, std::complex<double> arg, double dist)
        : Error(what), argument(arg), lattice_distance(dist) {}
    std::complex<double> argument;
    double lattice_distance;
};

/// No admissible ray direction with sufficient decay margin exists (Im z too small).
class ContourSelectionError : public Error {
public:
    using Error::Error;
};

class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double achieved)
        : Error(what), achieved_error(achieved) {}
    double achieved_error;
};

class ResidueError : public Error {
public:
    using Error::Error;
};

/// Evaluation of the minimal solution at (or too close to) its pole set.
class MinSolPoleError : public Error {
public:
    MinSolPoleError(const std::string& what, std::complex<double> arg)
        : Error(what), argument(arg) {}
    std::complex<double> argument;
};

class SingularFundamentalError : public Error {
public:
    using Error::Error;
};

/// Double precision cannot carry the cascade further; the extended backend is required.
class PrecisionError : public Error {
public:
    using Error::Error;
};

}  // namespace maryland
