#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotchar/knotgroups/word.hpp"

namespace knotchar {

struct Presentation {
  int generator_count = 0;
  std::string generator_names;  // one letter per generator
  std::vector<Word> relators;
  Word meridian;
  std::optional<Word> longitude;
  std::string label;

  std::string relator_string(std::size_t i) const { return relators.at(i).to_string(generator_names); }
};

/// Two-bridge knot b(p,q): p odd >= 3, 0 < q < p, gcd(p,q) = 1.
class TwoBridgeSpec {
 public:
  TwoBridgeSpec(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  /// Odd representative of q mod 2p used by the sign pattern: q itself, or
  /// q - p when q is even (same knot).
  int q_odd() const { return q_ % 2 != 0 ? q_ : q_ - p_; }
  /// eps_i = (-1)^floor(i q'/p), i = 1..p-1.
  std::vector<int> epsilon() const;
  TwoBridgeSpec mirror() const { return TwoBridgeSpec(p_, p_ - q_); }

  friend bool operator==(const TwoBridgeSpec&, const TwoBridgeSpec&) = default;

 private:
  int p_;
  int q_;
};

/// Torus knot T(p,q) with the meridian exponents (a,b), a q + b p = 1,
/// smallest |a| first, then smallest |b|.
class TorusSpec {
 public:
  TorusSpec(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int a() const { return a_; }
  int b() const { return b_; }

  friend bool operator==(const TorusSpec&, const TorusSpec&) = default;

 private:
  int p_;
  int q_;
  int a_ = 0;
  int b_ = 0;
};

/// Generators a, b; relator w a w^-1 b^-1; meridian a.
Presentation two_bridge_presentation(const TwoBridgeSpec& spec);

/// Generators u, v; relator u^p v^-q; meridian u^a v^b; longitude u^p mu^-pq.
Presentation torus_presentation(const TorusSpec& spec);

/// The word w of a two-bridge presentation (relator = w a w^-1 b^-1).
Word two_bridge_w(const TwoBridgeSpec& spec);

/// Images of the generators in H1 = Z (meridian -> 1).
struct Abelianization {
  std::vector<long> generator_exponent;
  long of(const Word& w) const;
};

/// Raises H1_NOT_Z unless the relator exponent matrix has cokernel Z with
/// the meridian as generator.
Abelianization abelianization_map(const Presentation& pres);

long abelianization(const Presentation& pres, const Word& w);

}  // namespace knotchar
