#ifndef GRAPHHOM_ERRORS_HPP
#define GRAPHHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace graphhom {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidGraph : Error {
    explicit InvalidGraph(const std::string& what) : Error("InvalidGraph: " + what) {}
};

struct LoopContraction : Error {
    explicit LoopContraction(const std::string& what) : Error("LoopContraction: " + what) {}
};

struct InvalidRibbon : Error {
    explicit InvalidRibbon(const std::string& what) : Error("InvalidRibbon: " + what) {}
};

struct OutOfScope : Error {
    explicit OutOfScope(const std::string& what) : Error("OutOfScope: " + what) {}
};

struct NotAComplex : Error {
    explicit NotAComplex(const std::string& what) : Error("NotAComplex: " + what) {}
};

struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& what) : Error("ArityMismatch: " + what) {}
};

struct UnsupportedArity : Error {
    explicit UnsupportedArity(const std::string& what) : Error("UnsupportedArity: " + what) {}
};

struct NotMultilinear : Error {
    explicit NotMultilinear(const std::string& what) : Error("NotMultilinear: " + what) {}
};

struct FaceNotFound : Error {
    explicit FaceNotFound(const std::string& what) : Error("FaceNotFound: " + what) {}
};

struct NonFunctorialSystem : Error {
    explicit NonFunctorialSystem(const std::string& what) : Error("NonFunctorialSystem: " + what) {}
};

struct ShiftMismatch : Error {
    explicit ShiftMismatch(const std::string& what) : Error("ShiftMismatch: " + what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("ParseError: " + what) {}
};

} // namespace graphhom

#endif
