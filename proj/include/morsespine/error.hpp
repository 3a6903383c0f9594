#pragma once

#include <stdexcept>
#include <string>

namespace morsespine {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MORSESPINE_DEFINE_ERROR(Name)      \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

MORSESPINE_DEFINE_ERROR(InvalidGraph);
MORSESPINE_DEFINE_ERROR(NotAForest);
MORSESPINE_DEFINE_ERROR(EmptyForest);
MORSESPINE_DEFINE_ERROR(InvalidPartition);
MORSESPINE_DEFINE_ERROR(SamePartition);
MORSESPINE_DEFINE_ERROR(IncompatiblePartitions);
MORSESPINE_DEFINE_ERROR(WrongArity);
MORSESPINE_DEFINE_ERROR(InvalidBlowUp);
MORSESPINE_DEFINE_ERROR(BadRange);
MORSESPINE_DEFINE_ERROR(NotASizeMVertex);
MORSESPINE_DEFINE_ERROR(SimplexAbsent);
MORSESPINE_DEFINE_ERROR(InvalidComplex);
MORSESPINE_DEFINE_ERROR(InvalidPoset);
MORSESPINE_DEFINE_ERROR(BoundExceeded);
MORSESPINE_DEFINE_ERROR(UnknownLemma);
MORSESPINE_DEFINE_ERROR(ParseError);

#undef MORSESPINE_DEFINE_ERROR

}  // namespace morsespine
