#pragma once

#include <stdexcept>
#include <string>

namespace hessgkm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HESSGKM_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

HESSGKM_DEFINE_ERROR(UnsupportedType);
HESSGKM_DEFINE_ERROR(InvalidRoot);
HESSGKM_DEFINE_ERROR(TooLarge);
HESSGKM_DEFINE_ERROR(InvalidIdeal);
HESSGKM_DEFINE_ERROR(NegativeBetti);
HESSGKM_DEFINE_ERROR(ModeError);
HESSGKM_DEFINE_ERROR(NotThetaIdeal);
HESSGKM_DEFINE_ERROR(NotAutomorphism);
HESSGKM_DEFINE_ERROR(InvalidSpec);

#undef HESSGKM_DEFINE_ERROR

}  // namespace hessgkm
