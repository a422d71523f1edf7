#ifndef NAMBU_TRIVIALIZE_HPP
#define NAMBU_TRIVIALIZE_HPP

#include <map>

#include "nambu/tensor.hpp"

namespace nambu {

struct TrivializationWitness {
    MultiVec X;                             // L_X (e_1^...^e_q) = Pi exactly
    std::map<std::pair<int, int>, Poly> fk; // (i, k) -> f_k^(i), 0-based
    std::map<int, Poly> Fk;                 // k -> potential F_k
    MultiVec residual;                      // L_X Lambda - Pi, identically 0
};

// Constructive triviality of a deformation Pi of the regular tensor
// Lambda = d/dx_1 ^ ... ^ d/dx_q:
//   1. the Lambda-parallel part f Lambda is absorbed by an antiderivative
//      along x_1;
//   2. the mixed components are read off as f_k^(i) through contractions
//      with dx_1 ^ ... (dx_i omitted) ... ^ dx_q;
//   3. the cross-derivative symmetry of the f_k^(i) is checked (it must
//      hold for an infinitesimal deformation);
//   4. potentials F_k with dF_k/dx_i = f_k^(i) are integrated monomial-wise
//      by the radial homotopy in x_1..x_q;
//   5. X is assembled and L_X Lambda = Pi is verified exactly.
// Antiderivatives take zero constants of integration.
TrivializationWitness trivialize_regular(int q, const MultiVec& pi);

} // namespace nambu

#endif
