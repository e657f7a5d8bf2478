#pragma once

// Hyperelliptic curves y^2 = f(x), their nonzero 2-torsion as even subsets
// of the Weierstrass roots modulo complement, and the exact resolvent whose
// roots label those classes.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankcert/certroots.hpp"
#include "rankcert/exactpoly.hpp"
#include "rankcert/factorq.hpp"

namespace rankcert {

inline constexpr int kMaxGenus = 4;
inline constexpr unsigned kMaxLabeling = 64;

class CurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ModelParity { Odd, Even };

struct HyperellipticCurve {
  RatPoly f;            ///< model as given
  IntPoly model;        ///< monic integral model, roots scaled by `scale`
  BigRat scale;
  int genus = 0;
  ModelParity parity = ModelParity::Even;
  bool lc_is_square = false;
  std::vector<std::string> warnings;

  int root_count() const { return model.degree(); }
  /// Branch points: the roots, plus infinity on odd-degree models.
  int branch_count() const { return 2 * genus + 2; }
};

/// Throws CurveError for deg f < 3, a singular model, or genus above kMaxGenus.
HyperellipticCurve build_curve(const RatPoly& f);

/// Even-cardinality subset of root indices, stored by its canonical
/// representative: the even-size member on odd models, the smaller bitmask
/// of {S, S^c} on even models.
struct SubsetClass {
  std::uint32_t mask = 0;
  friend bool operator==(const SubsetClass&, const SubsetClass&) = default;
};

SubsetClass canonical_j2(std::uint32_t mask, const HyperellipticCurve& curve);
/// "{0,3}" style listing of the bits of a mask; `infinity_bit` (if >= 0) prints as "inf".
std::string describe_mask(std::uint32_t mask, int infinity_bit = -1);

/// The 2^(2g) - 1 nonzero classes, ascending by mask.
std::vector<SubsetClass> enumerate_j2_classes(const HyperellipticCurve& curve);

/// Labeling u(x) = x + c x^2 + shift applied to the roots.
struct Labeling {
  unsigned c = 0;
  unsigned shift = 0;
};

/// Retry order: c = 0..kMaxLabeling unshifted, then the same with shift 1.
/// The shifted pass only matters for root configurations where two classes
/// collide for every c, e.g. roots 0 and 1 beside a block with p1 = p2 = 0.
std::vector<Labeling> labeling_schedule();

/// Exact polynomial together with the certified labels that are its roots.
struct ExactResolvent {
  IntPoly chi;
  std::vector<ComplexBall> labels;
};

/// Maps the certified values u_c(root_i) to one label list per requested resolvent.
using LabelFn = std::function<std::vector<std::vector<ComplexBall>>(const std::vector<ComplexBall>& u, mpfr_prec_t prec)>;

/**
 * Builds prod (x - label) for every label list, snapping each coefficient to
 * an integer. Precision doubles (root isolation refined) until every
 * coefficient snaps, leaving the refined isolation in `roots`; throws
 * PrecisionExhausted past kMaxPrecision.
 */
std::vector<ExactResolvent> snap_resolvents(RootIsolation& roots, Labeling labeling, const LabelFn& labels);

struct TwoTorsionResolvent {
  IntPoly chi;
  Labeling labeling;
  std::string curve_digest;
  std::vector<SubsetClass> classes;   ///< classes[k] has label labels[k]
  std::vector<ComplexBall> labels;
};

/// Squarefree chi of degree 2^(2g) - 1; retries labelings on collisions or zero labels.
TwoTorsionResolvent resolvent_j2(const HyperellipticCurve& curve);

/// Ascending degrees of the irreducible factors of chi.
std::vector<int> orbit_decomposition(const IntPoly& chi);
std::vector<int> orbit_decomposition(const TwoTorsionResolvent& r);

/// Index of the label certified to equal the integer r, if any.
std::optional<std::size_t> label_index_of(const std::vector<ComplexBall>& labels, const BigInt& r);

/// Permutation of {0..n-1} with the given cycle type, cycles on consecutive indices.
std::vector<int> permutation_with_cycle_type(const std::vector<int>& cycle_lengths);
std::uint32_t permute_mask(std::uint32_t mask, const std::vector<int>& perm);
/// Cycle type of the induced action on a set of canonical masks.
std::vector<int> induced_cycle_type(const std::vector<std::uint32_t>& masks, const std::vector<int>& perm,
                                    const std::function<std::uint32_t(std::uint32_t)>& canonical);

/// Cycle type of Frobenius at p acting on the nonzero 2-torsion classes,
/// computed from the factorization of f mod p alone. Throws BadPrime when the
/// model reduces to a non-squarefree polynomial.
std::vector<int> frobenius_orbit_oracle(const HyperellipticCurve& curve, std::uint64_t p);

}  // namespace rankcert
