#ifndef RFORGE_CERTIFICATE_HPP
#define RFORGE_CERTIFICATE_HPP

#include <optional>
#include <string>

#include "rforge/coloring.hpp"
#include "rforge/srg.hpp"

namespace rforge::certificate {

// How the coloring was produced; everything a verifier needs to reproduce it
// plus content hashes binding the certificate to the exact inputs.
struct Provenance {
  std::string generator;  // "psi-coloring", "exhaustive-search", ...
  std::optional<srg::SrgParams> srg_params;
  std::string srg_hash;       // fnv1a64 over the graph text, empty if none
  std::string matrix_source;  // e.g. "sylvester order 4"
  std::string matrix_hash;    // fnv1a64 over the matrix text, empty if none
  // optional transparency values for psi colorings: the two counting bounds
  // theta*(zeta+alpha) and theta*zeta that the construction promises
  std::optional<long long> delta_bound;
  std::optional<long long> delta_bound_unpadded;
};

// Certificate file: JSON with a fixed key order. The body is the edge color
// list in canonical edge order; the header carries a hash over (c, s, k,
// target, colors), so any edit to the body or target is detectable without
// regenerating the coloring.
std::string write(const coloring::MultipartiteColoring& col,
                  const coloring::AvoidanceCertificate& cert, const Provenance& prov);

struct Loaded {
  coloring::MultipartiteColoring coloring;
  Provenance provenance;
  int target_m;
  long long stated_max_delta;
  std::string stated_verdict;
  coloring::DeltaWitness stated_witness;
  std::string stored_body_hash;
  std::string computed_body_hash;
  bool hash_ok() const { return stored_body_hash == computed_body_hash; }
};

Loaded read(const std::string& text);

struct VerifyOutcome {
  bool tampered;      // body hash mismatch
  bool consistent;    // recomputed scan matches the stated footer
  bool avoided;       // verdict at the effective target
  int effective_m;
  coloring::AvoidanceCertificate recheck;
};

// Re-checks a loaded certificate with no access to the generators: recomputes
// the body hash and the full delta scan, then compares against the footer.
// override_m re-evaluates the verdict at a different width; footer
// consistency is only judged at the certificate's own target.
VerifyOutcome verify(const Loaded& loaded, std::optional<int> override_m);

std::string fnv1a64_hex(const std::string& bytes);

}  // namespace rforge::certificate

#endif
