#pragma once

#include <stdexcept>
#include <string>

namespace nova {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define NOVA_DEFINE_ERROR(Name)                  \
  class Name : public Error {                    \
   public:                                       \
    explicit Name(const std::string& what)       \
        : Error(std::string(#Name ": ") + what) {} \
  };

NOVA_DEFINE_ERROR(FieldMismatch)
NOVA_DEFINE_ERROR(DimMismatch)
NOVA_DEFINE_ERROR(DivisionByZero)
NOVA_DEFINE_ERROR(BadContraction)
NOVA_DEFINE_ERROR(NoHalf)
NOVA_DEFINE_ERROR(NotNovikov)
NOVA_DEFINE_ERROR(NotABimodule)
NOVA_DEFINE_ERROR(ModuleNotNovikov)
NOVA_DEFINE_ERROR(NotOOperator)
NOVA_DEFINE_ERROR(NotRotaBaxter)
NOVA_DEFINE_ERROR(SingularT)
NOVA_DEFINE_ERROR(NotTrialgebra)
NOVA_DEFINE_ERROR(NotDerivation)
NOVA_DEFINE_ERROR(NotPostNovikov)
NOVA_DEFINE_ERROR(KernelNotIdeal)
NOVA_DEFINE_ERROR(NotNYBESolution)
NOVA_DEFINE_ERROR(SymPartNotInvariant)
NOVA_DEFINE_ERROR(DegenerateForm)
NOVA_DEFINE_ERROR(BetaNotSelfAdjoint)
NOVA_DEFINE_ERROR(SpaceTooLarge)
NOVA_DEFINE_ERROR(ParseError)

#undef NOVA_DEFINE_ERROR

}  // namespace nova
