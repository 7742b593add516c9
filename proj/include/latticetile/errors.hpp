#ifndef LATTICETILE_ERRORS_HPP
#define LATTICETILE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latticetile {

// Input that failed to parse or violated a file-format contract.
class MalformedInputError : public std::runtime_error {
public:
    explicit MalformedInputError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical precondition of an operation does not hold.
class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

class NonSquareError : public MathError {
public:
    explicit NonSquareError(const std::string& what) : MathError(what) {}
};

class SingularMatrixError : public MathError {
public:
    explicit SingularMatrixError(const std::string& what) : MathError(what) {}
};

class DimensionMismatchError : public MathError {
public:
    explicit DimensionMismatchError(const std::string& what) : MathError(what) {}
};

class NotSublatticeError : public MathError {
public:
    explicit NotSublatticeError(const std::string& what) : MathError(what) {}
};

class VolumeMismatchError : public MathError {
public:
    explicit VolumeMismatchError(const std::string& what) : MathError(what) {}
};

class FlavorMismatchError : public MathError {
public:
    explicit FlavorMismatchError(const std::string& what) : MathError(what) {}
};

class WindowTooLargeError : public MathError {
public:
    explicit WindowTooLargeError(const std::string& what) : MathError(what) {}
};

class CapExceededError : public MathError {
public:
    explicit CapExceededError(const std::string& what) : MathError(what) {}
};

class DetNotOneError : public MathError {
public:
    explicit DetNotOneError(const std::string& what) : MathError(what) {}
};

class NotBoundedError : public MathError {
public:
    explicit NotBoundedError(const std::string& what) : MathError(what) {}
};

class DimensionUnsupportedError : public MathError {
public:
    explicit DimensionUnsupportedError(const std::string& what) : MathError(what) {}
};

// Violation of an invariant the library itself is supposed to maintain.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// A constructed object failed a consistency check (e.g. translated pieces overlap).
class OverlapError : public InternalError {
public:
    explicit OverlapError(const std::string& what) : InternalError(what) {}
};

} // namespace latticetile

#endif
