#pragma once

#include <stdexcept>
#include <string>

namespace hubsim {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// network
struct DuplicateHub : Error { using Error::Error; };
struct DuplicateSegment : Error { using Error::Error; };
struct UnknownEndpoint : Error { using Error::Error; };
struct NonPositiveTravelTime : Error { using Error::Error; };
struct Unreachable : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct InvalidRoute : Error { using Error::Error; };

// fleet / utility / solver
struct UnknownTruck : Error { using Error::Error; };
struct InfeasiblePlan : Error { using Error::Error; };
struct DeadlineInfeasible : Error { using Error::Error; };
struct TooLargeForOracle : Error { using Error::Error; };

// simulator / cli
struct TruckNotFinished : Error { using Error::Error; };
struct ZeroTravelTime : Error { using Error::Error; };
struct ScenarioInvalid : Error { using Error::Error; };
struct IncompleteLog : Error { using Error::Error; };

}  // namespace hubsim
