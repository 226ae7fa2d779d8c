#pragma once

#include <stdexcept>
#include <string>

namespace sc {

/// Base class for all errors raised by the kernel.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// scalars / q-series
struct NonUnitConstantTerm : Error {
    explicit NonUnitConstantTerm(const std::string& w = "q^0 coefficient is not an invertible scalar monomial")
        : Error(w) {}
};
struct UnsupportedWeight : Error {
    explicit UnsupportedWeight(int k) : Error("unsupported Eisenstein weight " + std::to_string(k)) {}
};
struct UnknownName : Error {
    explicit UnknownName(const std::string& n) : Error("unknown name: " + n) {}
};

// superfields
struct NonUnitLeading : Error {
    explicit NonUnitLeading(const std::string& w = "leading z-coefficient body is not invertible") : Error(w) {}
};

// curve / cohomology
struct DepthExceeded : Error {
    explicit DepthExceeded(const std::string& w) : Error(w) {}
};
struct ResidueObstruction : Error {
    explicit ResidueObstruction(const std::string& w) : Error(w) {}
};
struct InsufficientAccuracy : Error {
    explicit InsufficientAccuracy(const std::string& w) : Error(w) {}
};

// forms
struct DegreeCapExceeded : Error {
    explicit DegreeCapExceeded(const std::string& w = "form degree above cap 2") : Error(w) {}
};
struct NoSolutionAtOrder : Error {
    explicit NoSolutionAtOrder(const std::string& w) : Error(w) {}
};
struct ResidualRelativeTwoForm : Error {
    explicit ResidualRelativeTwoForm(const std::string& w) : Error(w) {}
};

// numeric
struct PoleAt : Error {
    explicit PoleAt(const std::string& w) : Error("evaluation at lattice point: " + w) {}
};
struct ConvergenceFailure : Error {
    explicit ConvergenceFailure(const std::string& w) : Error(w) {}
};
struct SegmentThroughPole : Error {
    explicit SegmentThroughPole(const std::string& w) : Error(w) {}
};

// parser
struct SyntaxError : Error {
    int line, column;
    SyntaxError(int l, int c, const std::string& w)
        : Error("syntax error at " + std::to_string(l) + ":" + std::to_string(c) + ": " + w),
          line(l), column(c) {}
};
struct UnknownIdentifier : Error {
    explicit UnknownIdentifier(const std::string& n) : Error("unknown identifier: " + n) {}
};

}  // namespace sc
