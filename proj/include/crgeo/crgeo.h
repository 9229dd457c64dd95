/* C interface to the CR-invariant toolkit.
 *
 * Every command mirrors one CLI subcommand and writes a malloc'd JSON report
 * into *json_out (release it with crgeo_string_free). Reports are versioned,
 * deterministic (sorted keys, rationals rendered "p/q", complex values
 * "p/q+r/s*i") and carry an `exact` flag that is true unless a grid oracle
 * contributed to the result.
 *
 * Return value semantics:
 *   CRGEO_OK            report written, everything the command asserts holds
 *   CRGEO_INCONCLUSIVE  report written, but a degree cap was reached before
 *                       stabilization (raise the cap and rerun)
 *   CRGEO_VERIFY_FAILED report written, an asserted identity/bound failed
 *   other codes         hard failure, *json_out is NULL and
 *                       crgeo_last_error() describes the problem
 */
#ifndef CRGEO_H
#define CRGEO_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum crgeo_status {
  CRGEO_OK = 0,
  CRGEO_PARSE_ERROR = 2,
  CRGEO_PRECONDITION = 3,
  CRGEO_INCONCLUSIVE = 4,
  CRGEO_VERIFY_FAILED = 5,
  CRGEO_BAD_ARGUMENT = 6,
  CRGEO_INTERNAL = 7
} crgeo_status;

/* A parsed hypersurface { rho = 0 } in C^{n+1}, held behind an opaque handle.
 * Handles are immutable after creation and freely shareable across calls. */
typedef struct crgeo_surface crgeo_surface;

/* Message for the most recent failing call on this thread. The pointer stays
 * valid until the next failing call. */
const char* crgeo_last_error(void);

/* rho_text follows the expression grammar of the README (variables z1..zn, w,
 * conj(), Re(), Im(), |expr|^2, rational and i literals). */
crgeo_status crgeo_surface_parse(const char* rho_text, int n, crgeo_surface** out);

/* The built-in quartic family -Im(w) + R(sum|z_k|^2 + |w|^2)^2
 * + 2 sum Re(z_k conj(z_k)^3); R_text is a rational "p/q". */
crgeo_status crgeo_surface_family(int n, const char* R_text, crgeo_surface** out);

void crgeo_surface_free(crgeo_surface* s);
void crgeo_string_free(char* s);

/* Smoothness, tangential Levi signature, strict pseudoconvexity and
 * nondegeneracy order at a point ("p/q+r/s*i, ...", n+1 entries; NULL means
 * the origin). k_max <= 0 selects the default n + 3. */
crgeo_status crgeo_analyze(const crgeo_surface* s, const char* point_text, int k_max,
                           char** json_out);

/* Build the quartic family surface: defining polynomial, derived threshold,
 * compactness/smoothness reports, certificates and `count` exact sample
 * points (deterministic per seed). */
crgeo_status crgeo_construct(int n, const char* R_text, int count, unsigned long seed,
                             char** json_out);

/* Positivity/convexity certificates plus grid oracles at the given circle
 * resolution (a positive multiple of four). */
crgeo_status crgeo_certify(int n, const char* R_text, int grid_resolution, char** json_out);

/* Essential type of the surface germ at the origin, capped at degree_cap
 * (<= 0 selects the default 8). */
crgeo_status crgeo_esstype(const crgeo_surface* s, int degree_cap, char** json_out);

/* Multiplicity of the holomorphic map germ with the given components
 * (polynomials in z1..zn, w over C^{n+1}, vanishing at 0). */
crgeo_status crgeo_mult(int n, const char* const* components, int component_count,
                        int degree_cap, char** json_out);

/* Does rho_target pulled back along the map equal a multiple of rho_source
 * (as a germ through the origin, or as an exact polynomial identity when the
 * source does not pass through 0)? map_components are target coordinates as
 * polynomials in the source variables, n_target + 1 of them. */
crgeo_status crgeo_mapcheck(const crgeo_surface* source, const crgeo_surface* target,
                            const char* const* map_components, int component_count,
                            int degree_cap, char** json_out);

/* Solve w = Q(z, zbar, wbar) to degree_cap and report Q, its reality and
 * whether the coordinates are normal. */
crgeo_status crgeo_qsolve(const crgeo_surface* s, int degree_cap, char** json_out);

/* Image of the surface under (z, w) -> (z/w, 1/w), cleared of denominators. */
crgeo_status crgeo_transform(const crgeo_surface* s, char** json_out);

/* The end-to-end pipeline for the quartic family at (n, R): reality, exact
 * gradient and bracket values at the origin, nondegeneracy order three,
 * compactness, smoothness, certificates with oracles, the transform on
 * sampled points, and the reality condition of the solved graph. Returns
 * CRGEO_VERIFY_FAILED (report included) when any step fails. */
crgeo_status crgeo_verify(int n, const char* R_text, int grid_resolution, unsigned long seed,
                          char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* CRGEO_H */
