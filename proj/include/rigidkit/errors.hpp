#ifndef RIGIDKIT_ERRORS_HPP
#define RIGIDKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rigidkit {

// Base for all typed errors. `code()` is the stable machine-readable
// identifier that ends up in report failure lists; the what() text is
// free-form diagnostic detail.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define RIGIDKIT_DEFINE_ERROR(Name, CodeString)                        \
    class Name : public Error {                                        \
    public:                                                             \
        explicit Name(const std::string& msg = CodeString)             \
            : Error(CodeString, msg) {}                                 \
    }

RIGIDKIT_DEFINE_ERROR(RationalSpectrumRequired, "RationalSpectrumRequired");
RIGIDKIT_DEFINE_ERROR(NotCommuting, "NotCommuting");
RIGIDKIT_DEFINE_ERROR(NotAbelian, "NotAbelian");
RIGIDKIT_DEFINE_ERROR(ClosureExplosion, "ClosureExplosion");
RIGIDKIT_DEFINE_ERROR(NotARepresentation, "NotARepresentation");
RIGIDKIT_DEFINE_ERROR(NotARoot, "NotARoot");
RIGIDKIT_DEFINE_ERROR(NoWitness, "NoWitness");
RIGIDKIT_DEFINE_ERROR(NegativelyProportional, "NegativelyProportional");
RIGIDKIT_DEFINE_ERROR(NotInSpan, "NotInSpan");
RIGIDKIT_DEFINE_ERROR(OrderIncompatible, "OrderIncompatible");
RIGIDKIT_DEFINE_ERROR(NoRationalTriple, "NoRationalTriple");
RIGIDKIT_DEFINE_ERROR(NotSupported, "NotSupported");
RIGIDKIT_DEFINE_ERROR(NotOnCommonLeaf, "NotOnCommonLeaf");
RIGIDKIT_DEFINE_ERROR(ConvergenceBudgetExceeded, "ConvergenceBudgetExceeded");
RIGIDKIT_DEFINE_ERROR(NotSlowFamily, "NotSlowFamily");
RIGIDKIT_DEFINE_ERROR(CycleObstruction, "CycleObstruction");
RIGIDKIT_DEFINE_ERROR(ParseError, "ParseError");
RIGIDKIT_DEFINE_ERROR(DimensionMismatch, "DimensionMismatch");

#undef RIGIDKIT_DEFINE_ERROR

} // namespace rigidkit

#endif
