#ifndef RFORGE_BOUNDS_HPP
#define RFORGE_BOUNDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rforge/rational.hpp"
#include "rforge/srg.hpp"

namespace rforge::bounds {

// A (strongly regular graph, sign matrix) pairing: everything downstream of
// the pair coloring is a function of these numbers only.
struct Scenario {
  srg::SrgParams params;
  long long zeta;      // matrix order, >= 2
  long long alpha;     // off-diagonal Gram bound of the matrix, in [0, zeta]
  long long theta;     // derived from params
  long long target_m;  // theta * (zeta + alpha) + 1
};
Scenario make_scenario(const srg::SrgParams& p, long long zeta, long long alpha);

enum class Quantity { set_number, size_number };  // M_s counts parts, m_c sizes them

struct BoundSide {
  long long value = 0;
  std::string provenance;
  bool applicable = true;  // divisibility/parity gate satisfied
  std::string condition;   // what the gate checked
};

// One bound statement about M_subscript or m_subscript for target K_{2,m}.
// Inapplicable uppers keep their would-be value but are clearly marked, so
// exploration shows the number without overclaiming it.
struct BoundReport {
  Quantity quantity;
  long long subscript;
  long long target_m;
  BoundSide lower;
  std::optional<BoundSide> upper;
  std::optional<long long> exact;
  std::vector<std::string> flags;

  nlohmann::ordered_json to_json() const;
  std::string human() const;
};

// Lower bounds n+1 (parts) and zeta+1 (size) from the pair coloring, plus
// the two parity-gated ceiling uppers. Returns {set report, size report}.
std::pair<BoundReport, BoundReport> scenario_bounds(const Scenario& sc);

struct CeilingBound {
  long long value;
  bool condition_met;
  std::string condition;
};

// M_m(K_{2,n}; k) <= ceil(((n-1)k^2 + k + 2m - 1) / m), valid when
// m*(value-1) is divisible by k.
CeilingBound set_number_upper(long long m, long long n, long long k);

// m_c(K_{2,n_1},...,K_{2,n_k}) <= ceil((c k (S-k) + (c-1) k) / (c-1)^2) with
// S the width sum, valid when (c-1)*value is divisible by k.
CeilingBound size_number_upper(long long c, const std::vector<long long>& widths);

struct GateResult {
  bool holds;
  Rat lhs, rhs;
};

// Counting inequality k c s B((c-1)s/k) > sum (n_i - 1) B(cs) with
// B(x) = x(x-1)/2 taken over exact rationals (the argument need not be an
// integer); holding implies the set number is at most c.
GateResult counting_gate(long long s, const std::vector<long long>& widths, long long c);

// Exact set number 4n-2 for the (4n-3, 2n-2, n-2, n-1) family with an
// even-order matrix above the sqrt(2)+1 threshold. The irrational comparison
// zeta > (sqrt(2)+1) X is decided as zeta > X and (zeta-X)^2 > 2 X^2 in
// integers; equality in the squared form counts as failure since the
// hypothesis is strict.
struct ExactValue {
  bool ok = false;
  std::string failed_clause;   // names the violated hypothesis
  long long value = 0;         // 4n-2 when ok
  long long target_m = 0;      // (zeta+alpha)(n-1)+1
  long long threshold_x = 0;   // (2n-1)(4 alpha n - 4 alpha + 1)
  long long lhs_sq = 0;        // (zeta - X)^2, 0 when zeta <= X
  long long rhs_sq = 0;        // 2 X^2
  GateResult gate{};           // confirming counting inequality, on success
  std::string srg_status;      // "constructed" (verified instance) or "assumed"
};
ExactValue exact_set_number(long long n, long long zeta, long long alpha, bool assume_srg);

// The worked families: conference graphs (4n-3, 2n-2, n-2, n-1), rook graphs
// (n^2, 2n-2, n-2, 2), triangular graphs (n(n-1)/2, 2(n-2), n-2, 4), plus the
// quartic-order family built on matrices of order 4 r^4.
enum class Family { conference, rook, triangular, quartic };

struct FamilyParams {
  long long n = 0;            // family size parameter (conference/rook/triangular)
  long long zeta = 0;         // matrix order
  long long alpha = 0;
  long long r = 0;            // quartic only
  long long prime_power = 0;  // quartic only
};

struct FamilyReport {
  bool ok = false;
  std::string failed_clause;
  std::vector<BoundReport> reports;
};
FamilyReport family_report(Family fam, const FamilyParams& p);

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

}  // namespace rforge::bounds

#endif
