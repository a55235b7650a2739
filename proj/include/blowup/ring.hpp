#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "blowup/modp.hpp"

namespace blowup {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Exponent vector with cached weighted degree and variable-support mask,
// stored inline (no heap traffic in the reduction loops). Always built
// through PolyRing helpers so the caches stay consistent; unused trailing
// slots are zero.
struct Monomial {
  static constexpr int kMaxVars = 16;
  std::array<uint16_t, kMaxVars> e{};
  int32_t deg = 0;     // weighted degree
  uint32_t mask = 0;   // bit i set iff e[i] > 0

  bool is_one() const { return mask == 0; }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

enum class OrderKind { grevlex, lex, block };

struct OrderBlock {
  std::vector<int> vars;  // variable indices, in ring order
  OrderKind kind = OrderKind::grevlex;  // grevlex or lex within the block
};

// Total, multiplicative well-order on monomials. grevlex compares the
// weighted degree first, so homogeneous normal forms stay homogeneous for
// arbitrary positive weights. Block orders serve elimination: earlier
// blocks dominate.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::vector<OrderBlock> blocks;  // only for kind == block

  static MonomialOrder grevlex() { return {OrderKind::grevlex, {}}; }
  static MonomialOrder lex() { return {OrderKind::lex, {}}; }
  static MonomialOrder block(std::vector<OrderBlock> b) {
    return {OrderKind::block, std::move(b)};
  }
  bool operator==(const MonomialOrder& o) const;
};

// Immutable polynomial ring descriptor: coefficient field, named variables,
// strictly positive weights (the grading every "homogeneous" refers to), an
// optional second grading (used for the blow-up variables), and a monomial
// order.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
 public:
  static constexpr int kMaxVars = Monomial::kMaxVars;

  static RingPtr make(PrimeField field, std::vector<std::string> vars,
                      MonomialOrder order = MonomialOrder::grevlex(),
                      std::vector<int> weights = {},
                      std::vector<int> grading2 = {});

  const PrimeField& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::vector<int>& grading2() const { return grading2_; }
  bool has_grading2() const { return has_g2_; }
  const MonomialOrder& order() const { return order_; }

  // -1, 0, +1 with a > b meaning a comes first in polynomials.
  int cmp(const Monomial& a, const Monomial& b) const;

  Monomial one() const;
  Monomial mono(std::vector<uint16_t> exps) const;
  Monomial var(int i, uint16_t e = 1) const;
  Monomial mul(const Monomial& a, const Monomial& b) const;
  // quotient a/b; caller guarantees divisibility
  Monomial div(const Monomial& a, const Monomial& b) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  static bool divides(const Monomial& a, const Monomial& b);  // a | b
  static bool coprime(const Monomial& a, const Monomial& b) {
    return (a.mask & b.mask) == 0;
  }

  int deg2(const Monomial& m) const;  // second-grading degree
  std::string to_string(const Monomial& m) const;

  bool same_structure(const PolyRing& o) const;

  // All monomials of weighted degree w (and second-grading degree y when
  // given), in no particular order.
  std::vector<Monomial> monomials_of_degree(int w,
                                            std::optional<int> y = {}) const;

 private:
  PolyRing() = default;
  int cmp_grevlex_all(const Monomial& a, const Monomial& b) const;
  int cmp_in_block(const Monomial& a, const Monomial& b,
                   const OrderBlock& blk) const;

  PrimeField field_{PrimeField::kDefaultPrime};
  std::vector<std::string> vars_;
  std::vector<int> weights_;
  std::vector<int> grading2_;
  bool has_g2_ = false;
  MonomialOrder order_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->same_structure(*b));
}

}  // namespace blowup
