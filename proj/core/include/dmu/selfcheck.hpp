#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dmu/carleson.hpp"
#include "dmu/measures.hpp"
#include "dmu/tolerances.hpp"

namespace dmu {

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = tol::default_seed;
    /// Run the full 36-pair embedding-agreement sweep instead of the
    /// representative sample.
    bool full = false;
};

/// Executes every module's property checks at default tolerances with
/// seed-reproducible sampling; failures are returned as data, never thrown.
std::vector<PropertyResult> verify_suite(const VerifyOptions& opts = {});

/// The configured embedding-agreement family: 12 test measures (4 atom
/// clouds, 4 radial powers on rays through and away from atoms, 4 area
/// scalings) against 3 boundary measures with 1-3 atoms.
struct AgreementCase {
    std::string label;
    PlanarMeasure nu;
    AtomicBoundaryMeasure mu;
    Verdict expected;
};

std::vector<AgreementCase> agreement_cases();

struct AgreementOutcome {
    std::string label;
    Verdict expected;
    Verdict box;
    Verdict rkt;
};

/// Box-scan verdict and kernel-ratio verdict for each case, sharing one
/// kernel factorization per distinct boundary measure.
std::vector<AgreementOutcome> run_agreement(const std::vector<AgreementCase>& cases);

} // namespace dmu
