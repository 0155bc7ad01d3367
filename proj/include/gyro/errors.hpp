/**
 * @file errors.hpp
 * @brief Error kinds raised by the gyroscope library.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace gyro {

enum class ErrorKind {
    NonPositiveRate,
    NegativeSqueeze,
    SqueezeOutOfRange,
    ThermalOccupancyUnsupported,
    SignalOutOfRange,
    EmptyRange,
    SingularSystem,
    UnstableSystem,
    StepTooLarge,
    InvalidArgument,
    Parse,
};

const char* to_string(ErrorKind kind) noexcept;

class GyroError : public std::runtime_error {
public:
    GyroError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace gyro
