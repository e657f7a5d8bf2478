#pragma once

// Decision core: the three-condition criterion on orbit data (no rational
// 2-torsion, no rational theta characteristic, a rational degree-1 class), the
// irreducible-resolvent shortcut, certificates and their verifier.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankcert/theta.hpp"
#include "rankcert/weierstrass.hpp"

namespace rankcert {

inline constexpr unsigned long kDefaultHeightBound = 1000;
inline constexpr int kSchemaVersion = 1;

std::string tool_version();

class ReportError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class EvidenceKind { RationalPoint, InfinitePlace, UserAssertion };

struct Deg1Evidence {
  EvidenceKind kind = EvidenceKind::UserAssertion;
  BigRat x, y;       ///< RationalPoint only
  std::string note;  ///< UserAssertion only

  friend bool operator==(const Deg1Evidence&, const Deg1Evidence&) = default;
};

Deg1Evidence user_assertion(std::string note = "degree-1 class asserted by the user");

/// Infinity on odd models or when lc(f) is a square, else the first x = p/q
/// (ordered by q, then |p|, p >= 0 first) with |p|, q <= height_bound and f(x) a square.
std::optional<Deg1Evidence> find_deg1_class(const HyperellipticCurve& curve,
                                            unsigned long height_bound = kDefaultHeightBound);

/// Exact check of the evidence against the model: y^2 = f(x), or a rational place at infinity.
bool evidence_holds(const Deg1Evidence& e, const RatPoly& f);

struct OrbitReport {
  int genus = 0;
  std::vector<int> j2;
  std::optional<std::vector<int>> theta_odd;
  std::optional<std::vector<int>> theta_even;

  friend bool operator==(const OrbitReport&, const OrbitReport&) = default;
};

std::uint64_t j2_count(int genus);
std::uint64_t theta_odd_count(int genus);
std::uint64_t theta_even_count(int genus);

/// Throws ReportError unless the orbit sizes are positive and sum to the class counts.
void validate(const OrbitReport& report);

enum class Verdict { RankAtLeastOne, Inconclusive };
enum class Path { Prop1, Cor3 };
enum class ReasonKind { RationalTwoTorsion, RationalTheta, NoDeg1Class, GenusTooSmall, NeedsThetaData };

std::string to_string(Verdict v);
std::string to_string(Path p);
std::string to_string(ReasonKind k);
std::string to_string(EvidenceKind k);

struct Reason {
  ReasonKind kind;
  std::string witness;

  friend bool operator==(const Reason&, const Reason&) = default;
};

struct ResolventRecord {
  std::string role;  ///< "j2", "theta_odd", "theta_even"
  IntPoly chi;
  unsigned labeling = 0;
  std::string sha256;
  unsigned labeling_shift = 0;

  friend bool operator==(const ResolventRecord&, const ResolventRecord&) = default;
};

ResolventRecord make_record(std::string role, const IntPoly& chi, Labeling labeling = {});

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  Path path = Path::Prop1;
  std::vector<Reason> reasons;
  std::string input_kind;  ///< "hyperelliptic", "chi", "orbits"
  std::string input;
  std::string input_sha256;
  std::optional<RatPoly> curve;
  std::optional<Deg1Evidence> evidence;
  OrbitReport report;
  std::vector<ResolventRecord> resolvents;
  std::vector<std::string> notes;
  std::string tool_version;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Needs theta orbits; RankAtLeastOne iff no size-1 orbit anywhere and evidence is present.
Certificate decide_prop1(const OrbitReport& report, const std::optional<Deg1Evidence>& evidence);
/// RankAtLeastOne iff chi is irreducible, genus > 1 and evidence is present.
Certificate decide_cor3(bool chi_irreducible, int genus, const std::optional<Deg1Evidence>& evidence);

enum class ThetaPolicy {
  Never,       ///< irreducible-resolvent path only
  WhenNeeded,  ///< theta resolvents only when the 2-torsion resolvent is reducible
  Always,
};

struct CertifyOptions {
  bool assert_deg1 = false;
  unsigned long height_bound = kDefaultHeightBound;
  ThetaPolicy theta = ThetaPolicy::WhenNeeded;
};

/// Orbit data computed from resolvents; theta orbits only when asked for.
struct CurveOrbits {
  OrbitReport report;
  TwoTorsionResolvent j2;
  std::optional<ThetaResolvents> theta;
};

CurveOrbits compute_orbits(const HyperellipticCurve& curve, bool with_theta);

Certificate certify_hyperelliptic(const RatPoly& f, const CertifyOptions& options = {},
                                  const std::string& input_text = {});
/// External resolvent mode: chi must be squarefree of degree 2^(2g) - 1.
Certificate certify_chi(const RatPoly& chi, int genus, bool assert_deg1,
                        const std::optional<RatPoly>& theta_odd = std::nullopt,
                        const std::optional<RatPoly>& theta_even = std::nullopt,
                        const std::string& input_text = {});
Certificate certify_orbits(const OrbitReport& report, bool assert_deg1, const std::string& input_text = {});

struct Timings {
  double total_ms = 0;
};

/// Canonical document: sorted keys, two-space indent, big integers as strings.
std::string certificate_json(const Certificate& c, const Timings* timings = nullptr);
/// Inverse of certificate_json (timings are ignored). Throws ReportError on malformed input.
Certificate certificate_from_json(const std::string& text);
/// Human-readable report of the conditions checked.
std::string render_text(const Certificate& c);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::string> checks;
};

/// Re-checks the embedded arithmetic: orbit sums, hashes, squarefreeness,
/// factor degrees against the reported orbits, irreducibility for the
/// resolvent path, evidence, Frobenius agreement with the curve at a few
/// primes, and the verdict recomputed from the report. Resolvents are not rebuilt.
VerifyResult verify_certificate(const Certificate& c);

}  // namespace rankcert
