// Poincare polynomial of a lower interval three ways, and a q-rook number.
#include <iostream>

#include "bruhat_rook/bruhat_rook.hpp"

int main() {
  using namespace bruhat_rook;

  const auto w = max_coset_rep_A(4, 2).w();  // 3412
  const auto id = Permutation::identity(4);
  std::cout << "w = " << w.to_string() << '\n';
  std::cout << "closed form: " << theoremA_poincare(4, 2).to_string() << '\n';
  std::cout << "hull rooks:  " << poincare_via_rook(id, w).to_string() << '\n';
  std::cout << "brute force: " << poincare_brute(id, w).to_string() << '\n';

  std::cout << "\nright hull of " << w.to_string() << ":\n" << right_hull(w).to_string();

  const Board t = triangular(3);
  for (int k = 0; k <= 3; ++k) std::cout << "R_" << k << "(T_3) = " << q_rook_number(t, k).to_string() << '\n';
}
