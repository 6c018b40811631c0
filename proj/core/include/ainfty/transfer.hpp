#pragma once

#include "ainfty/cohomology.hpp"
#include "ainfty/hodge.hpp"
#include "ainfty/report.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace ainfty {

/// How the lambda recursion is written out.
///  printed: the two boundary terms explicitly, plus the sum over k + l = n
///           with k, l >= 2.
///  uniform: a single sum over k + l = n with k, l >= 1, reading Q lambda_1
///           as minus the identity; this regenerates the boundary terms.
enum class SignVariant { printed, uniform };

std::string to_string(SignVariant v);

/// Evaluates lambda_n on tuples drawn from a fixed list of homogeneous
/// inputs, memoizing lambda and Q lambda per index tuple. Safe to call from
/// several threads: entries are pure functions of their key, so a race only
/// duplicates work.
class LambdaCache {
 public:
  LambdaCache(std::shared_ptr<const HodgeData> hodge, std::vector<Element> inputs,
              SignVariant variant = SignVariant::printed, bool memoize = true);

  /// Throws ArityError for fewer than two arguments.
  Element lambda(std::span<const std::size_t> tuple) const;
  /// Q lambda(tuple); for a single argument v this is Q lambda_1 = -v
  /// only under the uniform variant, and is never called otherwise.
  Element q_lambda(std::span<const std::size_t> tuple) const;

  std::size_t cached_entries() const;
  const std::vector<Element>& inputs() const { return inputs_; }
  int input_degree(std::size_t i) const { return degrees_[i]; }

 private:
  struct Entry {
    Element lambda;
    Element q_lambda;
  };

  std::uint64_t key(std::span<const std::size_t> tuple) const;
  const Entry& lookup(std::span<const std::size_t> tuple) const;
  Entry compute(std::span<const std::size_t> tuple) const;
  Element evaluate(std::span<const std::size_t> tuple) const;
  Element q_of(std::span<const std::size_t> tuple) const;

  std::shared_ptr<const HodgeData> hodge_;
  std::vector<Element> inputs_;
  std::vector<int> degrees_;
  SignVariant variant_;
  bool memoize_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::unordered_map<std::uint64_t, Entry>> cache_;  // by arity
};

/// lambda_n(v_1, ..., v_n) for arbitrary elements, expanded multilinearly
/// over homogeneous components. Throws ArityError for n < 2.
Element lambda_eval(const HodgeData& h, const std::vector<Element>& args,
                    SignVariant variant = SignVariant::printed);

/// Coordinates of harmonic elements in the harmonic basis.
class HarmonicCoordinates {
 public:
  explicit HarmonicCoordinates(const HodgeData& h);
  /// Throws NotHarmonic if the element is not in the harmonic space.
  Vector operator()(const Element& harmonic) const;
  Element ambient(const Vector& coords) const;
  std::size_t size() const { return basis_.size(); }

 private:
  const GradedVectorSpace* space_;
  std::vector<Element> basis_;
  std::vector<Matrix> solvers_;  // per degree: (H^T g H)^{-1} H^T g
  std::vector<std::size_t> offsets_;
};

struct TransferOptions {
  std::size_t max_arity = 4;
  std::size_t threads = 1;
  SignVariant variant = SignVariant::printed;
};

/// Transferred A-infinity structure on the harmonic space. m_1 = 0; for
/// 2 <= k <= max_arity the table maps a tuple of harmonic basis indices to
/// the harmonic coordinates of pi_H lambda_k(tuple). Zero entries and
/// tuples whose output degree leaves [0, top] are omitted.
struct AInfinityStructure {
  std::size_t max_arity = 0;
  SignVariant variant = SignVariant::printed;
  std::shared_ptr<const HodgeData> hodge;
  GradedVectorSpace space;          // harmonic basis, labelled
  std::vector<Element> harmonic;    // ambient vector of each harmonic basis element
  std::vector<int> degrees;         // degree of each harmonic basis element
  std::vector<std::map<std::vector<std::size_t>, Vector>> tables;  // index k, k = 0, 1 unused

  std::size_t dim() const { return harmonic.size(); }
  /// m_k on basis indices, as harmonic coordinates. m_1 is identically zero.
  Vector m(std::span<const std::size_t> tuple) const;
  /// m_k on arbitrary harmonic coordinate vectors (multilinear extension).
  Vector m(std::span<const Vector> args) const;
  Element to_ambient(const Vector& coords) const;
  std::size_t entry_count(std::size_t k) const { return k < tables.size() ? tables[k].size() : 0; }
};

/// Throws std::invalid_argument for max_arity < 2.
AInfinityStructure transfer_structure(std::shared_ptr<const HodgeData> hodge, const TransferOptions& options);
AInfinityStructure transfer_structure(const HodgeData& hodge, const TransferOptions& options);

/// (alpha ^ beta)^H. Throws NotHarmonic.
Element harmonic_product(const HodgeData& h, const Element& alpha, const Element& beta);

/// The harmonic product on the labelled harmonic space, in harmonic
/// coordinates.
ProductTable harmonic_product_table(const AInfinityStructure& s);

/// Rank of the pairing (degree p) x (degree q) -> (degree p + q) as a
/// dim_p x (dim_q * dim_{p+q}) matrix.
std::size_t pairing_rank(const GradedVectorSpace& space, const ProductTable& product, int p, int q);

Report check_lemma_associativity(const HodgeData& h);

/// phi(alpha) = [alpha] is a degree-preserving isomorphism and
/// phi(alpha o beta) = phi(alpha) phi(beta) on all basis pairs.
Report check_ring_isomorphism(const HodgeData& h, const CohomologyRing& ring);

/// For every n-tuple of harmonic basis elements,
///   sum_{r+s+t=n} (-1)^{r + st + s(|a_1|+...+|a_r|)} m_{r+1+t}(1^r, m_s, 1^t) = 0.
/// Throws ArityError if n is 0 or exceeds max_arity.
Report stasheff_check(const AInfinityStructure& s, std::size_t n);

struct MasseyProduct {
  Element representative;
  std::vector<Element> indeterminacy;  // spanning set, harmonic elements
  std::size_t indeterminacy_dim = 0;
};

/// u = -Q(ab), w = Q(bc), representative pi_H((-1)^|a| a w + u c), modulo
/// pi_H(a H^{|b|+|c|-1}) + pi_H(H^{|a|+|b|-1} c). Throws NotHarmonic, or
/// NotDefined if a o b or b o c is nonzero.
MasseyProduct massey_triple(const HodgeData& h, const Element& a, const Element& b, const Element& c);

/// True if v lies in the span of the given vectors.
bool in_span(const Element& v, const std::vector<Element>& spanning);

/// m_3(a, b, c) = sign * <a, b, c> modulo indeterminacy on every harmonic
/// basis triple where the Massey product is defined, for one global sign.
Report compare_m3_massey(const AInfinityStructure& s);

/// m_k vanishes whenever one argument is the unit, 3 <= k <= max_arity.
Report check_unit_degeneracy(const AInfinityStructure& s);

/// Every stored entry has output degree = input degree + 2 - k and lies in
/// the harmonic space.
Report check_degrees(const AInfinityStructure& s);

}  // namespace ainfty
