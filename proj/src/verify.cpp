#include "liefam/verify.hpp"

#include <sstream>

namespace liefam {

VerifyReport verify_trichotomy(const SOParams& params, const std::vector<Rational>& alphas) {
    params.check();
    VerifyReport report;
    report.params = params;

    SymmetricPair sp = build_theta_pair(params);
    ContractionFamily cf = contraction_family(sp);
    report.family_valid = check_family(cf.family).ok;
    report.fiber0_structural = fiber(cf.family, GQ(0)).structurally_equal(cf.contraction);

    std::ostringstream g_name, dual_name, contraction_name;
    g_name << "so(" << params.p + params.d << "," << params.q << ")";
    dual_name << "so(" << params.p << "," << params.d + params.q << ")";
    contraction_name << "(so(" << params.p << "," << params.q << ")+so(" << params.d << ")) |x (M_"
                     << params.p << "x" << params.d << " + M_" << params.d << "x" << params.q << ")";

    Fingerprint fp_g = cf.g_adapted.fingerprint();
    Fingerprint fp_dual = cf.dual_adapted.fingerprint();
    Fingerprint fp_contraction = cf.contraction.fingerprint();

    bool all_pass = report.family_valid && report.fiber0_structural;
    for (const auto& alpha : alphas) {
        VerifyRecord rec;
        rec.alpha = alpha;
        const Fingerprint* expected_fp;
        if (alpha > 0) {
            rec.expected = g_name.str();
            expected_fp = &fp_g;
        } else if (alpha < 0) {
            rec.expected = dual_name.str();
            expected_fp = &fp_dual;
        } else {
            rec.expected = contraction_name.str();
            expected_fp = &fp_contraction;
        }
        rec.fiber_fingerprint = fiber(cf.family, GQ(alpha)).fingerprint();
        rec.fingerprint_equal = (rec.fiber_fingerprint == *expected_fp);
        auto cert = fiber_isomorphism_certificate(cf, alpha);
        rec.certificate = cert ? VerifyRecord::Certificate::Verified : VerifyRecord::Certificate::Absent;
        // Promised strength: certificate where alpha is 0 or a signed rational
        // square, fingerprint equality otherwise.
        rec.pass = rec.fingerprint_equal && (!cert || rec.certificate == VerifyRecord::Certificate::Verified);
        all_pass = all_pass && rec.pass;
        report.records.push_back(std::move(rec));
    }
    report.pass = all_pass;
    return report;
}

std::string VerifyReport::str() const {
    std::ostringstream os;
    os << "verify (p,d,q) = (" << params.p << "," << params.d << "," << params.q << ")\n";
    os << "  family Jacobi over R[z]: " << (family_valid ? "ok" : "FAIL") << "\n";
    os << "  fiber(0) = contraction table: " << (fiber0_structural ? "ok" : "FAIL") << "\n";
    for (const auto& rec : records) {
        os << "  alpha = " << rational_to_string(rec.alpha) << ": expected " << rec.expected
           << ", fingerprint " << (rec.fingerprint_equal ? "equal" : "UNEQUAL") << ", certificate "
           << (rec.certificate == VerifyRecord::Certificate::Verified ? "verified" : "absent (non-square)")
           << " -> " << (rec.pass ? "pass" : "FAIL") << "\n";
    }
    os << "summary: " << (pass ? "pass" : "FAIL") << "\n";
    return os.str();
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& rec : records) {
        recs.push_back({{"alpha", rational_to_string(rec.alpha)},
                        {"expected", rec.expected},
                        {"fiber_fingerprint", fingerprint_to_json(rec.fiber_fingerprint)},
                        {"fingerprint_equal", rec.fingerprint_equal},
                        {"certificate",
                         rec.certificate == VerifyRecord::Certificate::Verified ? "verified" : "absent"},
                        {"pass", rec.pass}});
    }
    return {{"params", {{"p", params.p}, {"d", params.d}, {"q", params.q}}},
            {"family_valid", family_valid},
            {"fiber0_structural", fiber0_structural},
            {"records", std::move(recs)},
            {"summary", pass ? "pass" : "fail"}};
}

}  // namespace liefam
