#pragma once

#include <stdexcept>
#include <string>

namespace quasikoorn {

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Wrong vector length for the rank at hand.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Generator or coordinate index outside its admissible range.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A quasi-exponent does not lie in the W-orbit the operator is restricted to.
class OrbitMismatch : public Error {
public:
    using Error::Error;
};

/// The torus point violates one of the facet constraints defining T_O.
class InvalidTorusPoint : public Error {
public:
    using Error::Error;
};

class InvalidParameters : public Error {
public:
    using Error::Error;
};

/// Exponents of a quasi-polynomial lie in different W-orbits.
class MixedOrbits : public Error {
public:
    using Error::Error;
};

/// The support of a quasi-polynomial has no unique maximal exponent.
class NoUniqueMaximum : public Error {
public:
    using Error::Error;
};

/// Eigenvalue collision among the exponents below the requested degree.
class NonGenericParameters : public Error {
public:
    using Error::Error;
};

/// A Y-operator produced a term outside its lower set or a wrong diagonal.
/// Never expected on correct code.
class TriangularityViolation : public Error {
public:
    using Error::Error;
};

} // namespace quasikoorn
