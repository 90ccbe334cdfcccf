#ifndef LIEFAM_VERIFY_HPP
#define LIEFAM_VERIFY_HPP

#include "liefam/family.hpp"
#include "liefam/json_io.hpp"

#include <string>
#include <vector>

namespace liefam {

/// One fiber check of the trichotomy.
struct VerifyRecord {
    Rational alpha;
    std::string expected;        // side of the trichotomy the fiber must match
    Fingerprint fiber_fingerprint;
    bool fingerprint_equal = false;
    enum class Certificate { Verified, Absent } certificate = Certificate::Absent;
    bool pass = false;
};

struct VerifyReport {
    SOParams params;
    std::vector<VerifyRecord> records;
    bool family_valid = false;
    bool fiber0_structural = false;  // fiber(0) equals the contraction table
    bool pass = false;

    std::string str() const;
    nlohmann::json to_json() const;
};

/// Full pipeline for (so(p+d,q), theta_{p,d,q}): pair, dual, contraction,
/// family, then each alpha checked against the trichotomy with an explicit
/// certificate at alpha = 0 or +-(rational square), fingerprints elsewhere.
VerifyReport verify_trichotomy(const SOParams& params, const std::vector<Rational>& alphas);

}  // namespace liefam

#endif
