#ifndef POUI_ERRORS_HPP
#define POUI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace poui {

enum class Errc {
    RangeViolation,
    EvenValidatorCount,
    ConfigError,
    ScreeningRejected,
    JobNotAvailable,
    InsufficientPosterFunds,
    SubsidyPoolExhausted,
    NotYetDue,
    WrongStatus,
    RoleViolation,
    SelfValidation,
    InsufficientValidators,
    InsufficientFunds,
    UnknownNode,
    ZeroWorkers,
    NegativeAmount,
    IoError,
};

const char* errc_name(Errc c);

/// All recoverable domain failures carry a code plus a human-readable
/// message naming the offending field/node/job.
class SimError : public std::runtime_error {
public:
    SimError(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::RangeViolation: return "RangeViolation";
    case Errc::EvenValidatorCount: return "EvenValidatorCount";
    case Errc::ConfigError: return "ConfigError";
    case Errc::ScreeningRejected: return "ScreeningRejected";
    case Errc::JobNotAvailable: return "JobNotAvailable";
    case Errc::InsufficientPosterFunds: return "InsufficientPosterFunds";
    case Errc::SubsidyPoolExhausted: return "SubsidyPoolExhausted";
    case Errc::NotYetDue: return "NotYetDue";
    case Errc::WrongStatus: return "WrongStatus";
    case Errc::RoleViolation: return "RoleViolation";
    case Errc::SelfValidation: return "SelfValidation";
    case Errc::InsufficientValidators: return "InsufficientValidators";
    case Errc::InsufficientFunds: return "InsufficientFunds";
    case Errc::UnknownNode: return "UnknownNode";
    case Errc::ZeroWorkers: return "ZeroWorkers";
    case Errc::NegativeAmount: return "NegativeAmount";
    case Errc::IoError: return "IoError";
    }
    return "UnknownError";
}

}  // namespace poui

#endif
