#ifndef SUPALG_ERRORS_HPP
#define SUPALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace supalg {

// Error taxonomy for the whole toolkit.  Every failure that a caller can
// provoke with bad input has its own type; internal consistency failures
// (exactness violations, lifting failures) also get types so tests can
// distinguish them from input errors.

struct FieldMismatch : std::runtime_error {
    explicit FieldMismatch(const std::string& w) : std::runtime_error("FieldMismatch: " + w) {}
};

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("DivisionByZero") {}
};

struct UnknownGenerator : std::runtime_error {
    explicit UnknownGenerator(const std::string& w) : std::runtime_error("UnknownGenerator: " + w) {}
};

struct NotFaithful : std::runtime_error {
    explicit NotFaithful(const std::string& w) : std::runtime_error("NotFaithful: " + w) {}
};

struct HeightTooLarge : std::runtime_error {
    explicit HeightTooLarge(const std::string& w) : std::runtime_error("HeightTooLarge: " + w) {}
};

struct NoCoproduct : std::runtime_error {
    NoCoproduct() : std::runtime_error("NoCoproduct: algebra was built without a coproduct table") {}
};

struct NotEquivariant : std::runtime_error {
    explicit NotEquivariant(const std::string& w) : std::runtime_error("NotEquivariant: " + w) {}
};

struct NotLocal : std::runtime_error {
    explicit NotLocal(const std::string& w) : std::runtime_error("NotLocal: " + w) {}
};

struct NotAlgebraMap : std::runtime_error {
    explicit NotAlgebraMap(const std::string& w) : std::runtime_error("NotAlgebraMap: " + w) {}
};

struct LiftingFailed : std::runtime_error {
    explicit LiftingFailed(const std::string& w) : std::runtime_error("LiftingFailed: " + w) {}
};

struct RelationFailed : std::runtime_error {
    explicit RelationFailed(const std::string& w) : std::runtime_error("RelationFailed: " + w) {}
};

struct DecompositionFailed : std::runtime_error {
    explicit DecompositionFailed(const std::string& w) : std::runtime_error("DecompositionFailed: " + w) {}
};

struct NotInvariant : std::runtime_error {
    explicit NotInvariant(const std::string& w) : std::runtime_error("NotInvariant: " + w) {}
};

struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& w) : std::runtime_error("InvalidInput: " + w) {}
};

}  // namespace supalg

#endif
