#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "matoric/errors.hpp"

namespace matoric {

/// Ground-set elements are 1-based, ground set is {1..d}.
using Element = int;
/// A basis is a strictly increasing list of elements.
using Basis = std::vector<Element>;
/// Bit i-1 set iff element i is in the set. Ground sets stay small (<= 31).
using ElementMask = std::uint32_t;

ElementMask mask_of(const Basis& b);
Basis basis_of(ElementMask m);

/// A matroid given by its ground-set size and the collection of bases,
/// kept in canonical form: each basis sorted ascending, bases sorted
/// lexicographically. Construction via from_bases() verifies the exchange
/// axiom by brute force; every operation below returns matroids that pass
/// it again.
class Matroid {
 public:
  /// Validates and canonicalizes. Throws EmptyBasesError,
  /// UnequalCardinalityError, ExchangeError (with witness), BadParamsError.
  static Matroid from_bases(int ground_size, std::vector<Basis> bases);

  int ground_size() const { return d_; }
  int rank() const { return bases_.empty() ? 0 : static_cast<int>(bases_[0].size()); }
  int basis_count() const { return static_cast<int>(bases_.size()); }
  const std::vector<Basis>& bases() const { return bases_; }
  const Basis& basis(int j) const { return bases_[static_cast<std::size_t>(j - 1)]; }  // 1-based
  const std::vector<ElementMask>& masks() const { return masks_; }
  bool has_basis(ElementMask m) const { return lookup_.count(m) != 0; }
  /// 1-based index of the basis with this mask, or 0.
  int basis_index(ElementMask m) const;

  bool operator==(const Matroid& other) const {
    return d_ == other.d_ && bases_ == other.bases_;
  }

 private:
  Matroid() = default;
  int d_ = 0;
  std::vector<Basis> bases_;
  std::vector<ElementMask> masks_;
  std::unordered_set<ElementMask> lookup_;
};

struct ElementClass {
  std::vector<Element> loops;
  std::vector<Element> coloops;
};

/// A matroid with a distinguished element c and the basis renumbering that
/// lists the gamma bases avoiding c first (stable within each block).
class AnchoredMatroid {
 public:
  AnchoredMatroid(Matroid m, Element c);

  const Matroid& matroid() const { return matroid_; }
  Element anchor() const { return anchor_; }
  int gamma() const { return gamma_; }
  int basis_count() const { return matroid_.basis_count(); }
  /// order()[i] is the 0-based canonical index of anchored basis i+1.
  const std::vector<int>& order() const { return order_; }
  /// 1-based anchored numbering: bases 1..gamma avoid the anchor.
  const Basis& basis(int j) const { return matroid_.bases()[static_cast<std::size_t>(order_[static_cast<std::size_t>(j - 1)])]; }
  bool anchor_is_coloop() const { return gamma_ == 0; }
  bool anchor_is_loop() const { return gamma_ == matroid_.basis_count(); }

 private:
  Matroid matroid_;
  Element anchor_;
  std::vector<int> order_;
  int gamma_;
};

/// Element relabeling produced by delete/contract: old labels map onto the
/// compacted ground set {1..d-1}, preserving relative order.
struct Relabeling {
  std::vector<Element> old_to_new;  // index e-1; 0 means removed
  std::vector<Element> new_to_old;  // index e-1
};

struct MinorResult {
  Matroid matroid;
  Relabeling relabel;
};

/// rk(X) = max over bases B of |B n X|.
int rank_of_subset(const Matroid& m, const std::vector<Element>& subset);
int rank_of_subset(const Matroid& m, ElementMask subset);

ElementClass classify_elements(const Matroid& m);

Matroid dual(const Matroid& m);

MinorResult delete_element(const Matroid& m, Element c);
MinorResult contract_element(const Matroid& m, Element c);

/// Elements of m2 are shifted by m1's ground size.
Matroid direct_sum(const Matroid& m1, const Matroid& m2);

AnchoredMatroid anchor(const Matroid& m, Element c);

/// Ground-set bijection p with p(bases(m1)) = bases(m2), as a vector with
/// p[e-1] = image of e, or nullopt.
std::optional<std::vector<Element>> is_isomorphic(const Matroid& m1, const Matroid& m2);

bool has_minor(const Matroid& m, const Matroid& target);

int connectivity_lambda(const Matroid& m, const std::vector<Element>& subset);
int connectivity_lambda(const Matroid& m, ElementMask subset);

/// No k-separation for any k < n (n >= 2), by brute force over subsets.
bool is_n_connected(const Matroid& m, int n);

}  // namespace matoric
