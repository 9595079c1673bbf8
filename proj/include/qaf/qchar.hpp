#pragma once
// Monomial-calculus q-characters: the iterative completion algorithm seeded
// at a dominant monomial, Kirillov-Reshetikhin characters with a cache, and
// restriction maps.

#include "qaf/monomial.hpp"

#include <cstddef>
#include <map>

namespace qaf {

struct FMResult {
  enum class Status {
    Ok,
    NotSpecial,   // a dominant monomial other than the seed appeared
    CapExceeded,  // more nodes than the cap
    Stuck         // a deficit sits on a non-i-dominant monomial
  };
  Status status = Status::Ok;
  YPolynomial chi;
  Monomial offender;  // the monomial that triggered a non-Ok status
};

// expansion of the q-character from a dominant seed monomial: multiplicities
// are propagated node by node, each deficit resolved through the sl2
// character of the i-restriction (maximal string decomposition, ladder
// completion); processing is by ascending depth in the A^{-1} cone
FMResult fm_expand(const CartanData& cd, const Monomial& top, std::size_t cap = 100000);

// highest monomial of the standard one-node string module: product of
// Y_{i, a q_i^{2t}}, t = 0..r-1
Monomial kr_top(const CartanData& cd, int i, int r, const Spectral& a);

// its full q-character via fm_expand (cached; throws on a non-Ok expansion)
const YPolynomial& kr_qchar(const CartanData& cd, int i, int r, const Spectral& a,
                            std::size_t cap = 100000);

YPolynomial dominant_part(const YPolynomial& chi);

// pushforward of the character to ordinary weights
std::map<WeightVector, long> beta_restrict(const CartanData& cd, const YPolynomial& chi);

}  // namespace qaf
