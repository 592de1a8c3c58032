#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "output.hpp"
#include "wigner/grid.hpp"

namespace wigner::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadArguments = 2;

/// Parses ZMIN:ZMAX:NZ[,TMIN:TMAX:NT]; the t range defaults to the z range.
GridSpec parse_grid(const std::string& text);

struct AlgebraCheckOptions {
    bool corrupt{false};
};

struct ContractOptions {
    double eta_max{10.0};
    int steps{10};
    std::string source{"J2"};
};

struct SqueezePlotOptions {
    int n{0};
    double eta{1.0};
    std::optional<std::string> grid;
};

struct FourierCheckOptions {
    double eta{0.0};
    std::optional<std::string> grid;
};

struct CoherenceOptions {
    double energy{900.0};
    double mass{0.938};
};

// Each command writes its report and returns the process exit code.
int algebra_check(const AlgebraCheckOptions& opts, Format format, std::ostream& os);
int contract(const ContractOptions& opts, Format format, std::ostream& os);
int squeeze_plot(const SqueezePlotOptions& opts, Format format, std::ostream& os);
int fourier_check(const FourierCheckOptions& opts, Format format, std::ostream& os);
int coherence(const CoherenceOptions& opts, Format format, std::ostream& os);

}  // namespace wigner::cli
