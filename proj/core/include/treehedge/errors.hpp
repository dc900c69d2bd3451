#pragma once

#include <stdexcept>
#include <string>

namespace treehedge {

// Error taxonomy. The CLI maps these onto process exit codes:
// validation/parse -> 2, arbitrage where no-arbitrage is required -> 3,
// enumeration cap -> 4.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct UnsupportedConstraint : Error { using Error::Error; };
struct ArbitrageAtNode : Error { using Error::Error; };
struct ArbitrageDetected : Error { using Error::Error; };
struct ArbitrageWithOptions : Error { using Error::Error; };
struct UnboundedPrice : Error { using Error::Error; };
struct InfinitePenalty : Error { using Error::Error; };
struct NotASupermartingale : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };

}  // namespace treehedge
