#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "certify.hpp"
#include "crfields.hpp"
#include "family.hpp"

namespace crgeo {

using json = nlohmann::json;

// Rendering conventions shared by every report: rationals are strings "p/q",
// complex values "p/q+r/s*i", points arrays of complex strings. nlohmann's
// default object (std::map) keeps keys sorted, so dumps are deterministic.
json json_rational(const Rational& q);
json json_complex(const GaussianRational& g);
json json_point(const Point& p);
json json_signature(const Signature& s);
json json_codim(const CodimReport& r);
json json_certificate(const Certificate& c);
json json_oracle(const OracleReport& r);
json json_nondeg(const NondegeneracyReport& r);

// Versioned envelope around a command payload.
json make_report(const std::string& command, json inputs, json results, bool exact);

// Result payloads, one per command. These throw Error on violated
// preconditions; "soft" outcomes (unstabilized caps, failed verification)
// are encoded in the payload for the caller to map to a status.
json report_analyze(const Hypersurface& m, const Point& p, int k_max);
json report_construct(const FamilyParams& par, int count, unsigned long seed);
json report_certify(const FamilyParams& par, int resolution);
json report_esstype(const Hypersurface& m, int degree_cap);
json report_mult(const MapGerm& h, int degree_cap);
json report_mapcheck(const Poly& rho_source, const Poly& rho_target,
                     const std::vector<Poly>& h, int degree_cap);
json report_qsolve(const Hypersurface& m, int degree_cap);
json report_transform(const Poly& rho);

// End-to-end pipeline over the quartic family: reality, gradient at the
// origin, the third-order brackets, nondegeneracy order, compactness,
// smoothness, positivity/convexity certificates with grid oracles, the
// transform to infinity on sampled points, and the solved graph's reality.
// Payload carries one pass/fail entry per step plus the first failure name.
json report_verify(const FamilyParams& par, int resolution, unsigned long seed);

}  // namespace crgeo
