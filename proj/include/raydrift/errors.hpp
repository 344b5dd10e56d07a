#ifndef RAYDRIFT_ERRORS_HPP
#define RAYDRIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace raydrift {

// Base for all library errors. `category()` is a stable machine-readable
// identifier; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& detail)
        : std::runtime_error(detail), category_(std::move(category)) {}

    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

#define RAYDRIFT_DEFINE_ERROR(Name)                          \
    class Name : public Error {                              \
    public:                                                  \
        explicit Name(const std::string& detail)             \
            : Error(#Name, detail) {}                        \
    }

RAYDRIFT_DEFINE_ERROR(ZeroVector);
RAYDRIFT_DEFINE_ERROR(DimensionMismatch);
RAYDRIFT_DEFINE_ERROR(WindowTooSmall);
RAYDRIFT_DEFINE_ERROR(ZeroVarianceWindow);
RAYDRIFT_DEFINE_ERROR(NoConvergence);
RAYDRIFT_DEFINE_ERROR(NegativeIncrement);
RAYDRIFT_DEFINE_ERROR(InvalidSpec);
RAYDRIFT_DEFINE_ERROR(TrajectoryTooShort);
RAYDRIFT_DEFINE_ERROR(AllZero);
RAYDRIFT_DEFINE_ERROR(InvalidAngle);
RAYDRIFT_DEFINE_ERROR(IndexOutOfRange);
RAYDRIFT_DEFINE_ERROR(FileNotFound);
RAYDRIFT_DEFINE_ERROR(EmptyFile);
RAYDRIFT_DEFINE_ERROR(RaggedRows);
RAYDRIFT_DEFINE_ERROR(ParseError);
RAYDRIFT_DEFINE_ERROR(NonFiniteData);
RAYDRIFT_DEFINE_ERROR(IoError);

#undef RAYDRIFT_DEFINE_ERROR

}  // namespace raydrift

#endif
