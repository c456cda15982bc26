#ifndef LATCONE_COHOMOLOGY_HPP
#define LATCONE_COHOMOLOGY_HPP

#include "latcone/group.hpp"
#include "latcone/linalg.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace latcone {

// Cocycle convention, used throughout: c(gd) = c(g) . sigma_g(c(d)), and two
// cocycles are equivalent when c'(g) = b^-1 . c(g) . sigma_g(b) for some b.

// ---------------------------------------------------------------------------
// Finite coefficients

// Action of Gamma on a finite group G by automorphisms: sigma[g][x] is the
// image of x under the automorphism attached to g.
class FiniteAction {
  public:
    FiniteAction(FiniteGroup gamma, FiniteGroup g,
                 std::vector<std::vector<std::size_t>> sigma);

    static FiniteAction trivial(FiniteGroup gamma, FiniteGroup g);

    const FiniteGroup& gamma() const { return gamma_; }
    const FiniteGroup& coeff() const { return g_; }
    std::size_t act(std::size_t gamma_elt, std::size_t x) const { return sigma_[gamma_elt][x]; }
    const std::vector<std::vector<std::size_t>>& tables() const { return sigma_; }

  private:
    FiniteGroup gamma_;
    FiniteGroup g_;
    std::vector<std::vector<std::size_t>> sigma_;
};

// A cocycle on finite coefficients: value index per Gamma element.
using FiniteCocycle = std::vector<std::size_t>;

bool is_cocycle(const FiniteAction& action, const FiniteCocycle& c);

// All cocycles Gamma -> G (exact, via values on a generating set).
std::vector<FiniteCocycle> all_cocycles(const FiniteAction& action);

// One representative per cohomology class, trivial class first, then
// lexicographic.
std::vector<FiniteCocycle> h1_finite(const FiniteAction& action);

// sigma_c(g)(x) = c(g) . sigma_g(x) . c(g)^-1; twisting by a cocycle.
FiniteAction twist_action(const FiniteAction& action, const FiniteCocycle& c);

// ---------------------------------------------------------------------------
// Free abelian coefficients

class FreeAbelianAction {
  public:
    FreeAbelianAction(FiniteGroup gamma, std::size_t rank, std::vector<IntMat> sigma);

    const FiniteGroup& gamma() const { return gamma_; }
    std::size_t rank() const { return rank_; }
    const IntMat& matrix(std::size_t gamma_elt) const { return sigma_[gamma_elt]; }

  private:
    FiniteGroup gamma_;
    std::size_t rank_;
    std::vector<IntMat> sigma_;
};

// A Z^r-valued cocycle: one vector per Gamma element.
using VectorCocycle = std::vector<IntVec>;

struct H1FreeAbelian {
    // Invariant factors > 1 of the quotient Z^1 / B^1 (empty means trivial).
    std::vector<Int> elementary_divisors;
    // One representative cocycle per listed divisor.
    std::vector<VectorCocycle> representatives;
};

H1FreeAbelian h1_free_abelian(const FreeAbelianAction& action);

bool is_vector_cocycle(const FreeAbelianAction& action, const VectorCocycle& c);
bool is_vector_coboundary(const FreeAbelianAction& action, const VectorCocycle& c);

// ---------------------------------------------------------------------------
// Almost abelian coefficients

// Element (q, k, v) of the extension G with normal form n * s(q),
// n = (k, v) in G0 = K x| Z^r.
struct AAElem {
    std::size_t q = 0;
    std::size_t k = 0;
    IntVec v;

    bool operator==(const AAElem& o) const = default;
};

// Explicit extension datum: 1 -> K -> G0 -> Z^r -> 1 (split) and
// 1 -> G0 -> G -> Q -> 1 with section twist tau. Products:
//   (k1,v1) (k2,v2)      = (k1 . phi_{v1}(k2), v1 + v2)            in G0
//   (n1, q1) (n2, q2)    = (n1 . C_{q1}(n2) . tau(q1,q2), q1 q2)   in G
// where C_q(k, v) = (A_q(k), M_q v).
class AlmostAbelianGroup {
  public:
    struct G0Elem {
        std::size_t k = 0;
        IntVec v;
        bool operator==(const G0Elem& o) const = default;
    };

    AlmostAbelianGroup(FiniteGroup k, std::size_t rank, FiniteGroup q,
                       std::vector<std::vector<std::size_t>> v_on_k, // per basis vector
                       std::vector<std::vector<std::size_t>> q_on_k, // per Q element
                       std::vector<IntMat> q_on_v,                   // per Q element
                       std::vector<std::vector<G0Elem>> tau);        // tau[q1][q2]

    static AlmostAbelianGroup direct_product_with_free(FiniteGroup k, std::size_t rank);

    const FiniteGroup& k_group() const { return k_; }
    const FiniteGroup& q_group() const { return q_; }
    std::size_t rank() const { return rank_; }

    AAElem identity() const;
    AAElem mul(const AAElem& a, const AAElem& b) const;
    AAElem inv(const AAElem& a) const;

    G0Elem g0_mul(const G0Elem& a, const G0Elem& b) const;
    G0Elem g0_inv(const G0Elem& a) const;
    std::size_t v_act_on_k(const IntVec& v, std::size_t k) const;

  private:
    FiniteGroup k_;
    std::size_t rank_;
    FiniteGroup q_;
    std::vector<std::vector<std::size_t>> v_on_k_;
    std::vector<std::vector<std::size_t>> v_on_k_inv_;
    std::vector<std::vector<std::size_t>> q_on_k_;
    std::vector<IntMat> q_on_v_;
    std::vector<std::vector<G0Elem>> tau_;

    void validate() const;
};

// Normal-form-preserving action of Gamma on an almost abelian G:
// sigma_g(k, v, q) = (t_g(k), N_g v) * (corr_g(q), pi_g(q)).
// G0 is sigma-stable by construction, so the reduction through the quotient
// layers can twist it directly.
class AlmostAbelianAction {
  public:
    AlmostAbelianAction(FiniteGroup gamma, AlmostAbelianGroup g,
                        std::vector<std::vector<std::size_t>> k_maps, // t_g
                        std::vector<IntMat> v_maps,                   // N_g
                        std::vector<std::vector<std::size_t>> q_maps, // pi_g
                        std::vector<std::vector<AlmostAbelianGroup::G0Elem>> corr);

    static AlmostAbelianAction plain(FiniteGroup gamma, AlmostAbelianGroup g,
                                     std::vector<std::vector<std::size_t>> k_maps,
                                     std::vector<IntMat> v_maps);

    const FiniteGroup& gamma() const { return gamma_; }
    const AlmostAbelianGroup& coeff() const { return g_; }
    AAElem act(std::size_t gamma_elt, const AAElem& x) const;
    std::size_t q_act(std::size_t gamma_elt, std::size_t q) const { return q_maps_[gamma_elt][q]; }
    std::size_t k_act(std::size_t gamma_elt, std::size_t k) const { return k_maps_[gamma_elt][k]; }
    const IntMat& v_matrix(std::size_t gamma_elt) const { return v_maps_[gamma_elt]; }

  private:
    FiniteGroup gamma_;
    AlmostAbelianGroup g_;
    std::vector<std::vector<std::size_t>> k_maps_;
    std::vector<IntMat> v_maps_;
    std::vector<std::vector<std::size_t>> q_maps_;
    std::vector<std::vector<AlmostAbelianGroup::G0Elem>> corr_;
};

using AACocycle = std::vector<AAElem>;

bool is_aa_cocycle(const AlmostAbelianAction& action, const AACocycle& c);

struct H1AlmostAbelian {
    std::vector<AACocycle> representatives;
    // Per-representative provenance: index of the quotient class it lies over.
    std::vector<std::size_t> quotient_class;
    std::size_t quotient_class_count = 0;
    // True when every quotient class lifted and no equivalence search was
    // inconclusive.
    bool certified = true;
    std::vector<std::string> caveats;
    Int upper_bound;
};

struct AASearchBounds {
    Int lift_component_bound = 2;   // |v| entries searched for lifts
    Int conjugator_margin = 2;      // added to observed components for b-search
};

H1AlmostAbelian h1_almost_abelian(const AlmostAbelianAction& action,
                                  const AASearchBounds& bounds = {});

// Sound upper bound for #H1(Gamma, G) assembled from the reduction diagram:
// index^(|Gamma|-1) * |K|^(|Gamma|-1) * |Gamma|^(r |Gamma|).
Int h1_cardinality_bound(const Int& gamma_order, const Int& g0_index, const Int& k_order,
                         const Int& rank);

} // namespace latcone

#endif
