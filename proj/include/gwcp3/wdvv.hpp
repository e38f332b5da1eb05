#pragma once

#include "gwcp3/linalg.hpp"
#include "gwcp3/table.hpp"

namespace gwcp3 {

/// Cohomology basis of CP^3: omega^i in H^{2i}, i = 0..3. The Poincare
/// pairing couples i with 3-i; the genus-0 potential itself is stored per
/// q-degree as the cell maps of GWTable (coefficient of t2^a t3^b/(a!b!)).
int pairing(int i, int j);      // 1 when i + j = 3
int dual_index(int i);          // 3 - i

/// Triple intersection number of omega^i, omega^j, omega^k on CP^3:
/// 1 when i+j+k = 3, else 0. Indices must lie in 0..3.
int classical_triple(int i, int j, int k);

/// Coefficient of q^n t2^a t3^b/(a!b!) in d_i d_j d_k of the quantum genus-0
/// potential, described as factor * N0(degree n; cell (a+da, b+db)). zero is
/// set when a t0-derivative kills the term or the dimension gate fails.
struct QuantumThirdDerivative {
    bool zero = true;
    Rational factor;   // n^(#divisor derivatives)
    int a = 0;         // shifted cell
    int b = 0;
};

QuantumThirdDerivative quantum_third_derivative(int i, int j, int k, int n, int a, int b);

/// WDVV coefficient equations at q-degree n, linear in that degree's unknown
/// cells (ordered as cells_for_degree). Requires genus-0 degrees < n solved.
std::vector<LinearRow> wdvv_equations_for_degree(const GWTable& table, int n, int workers = 1);

/// Reconstructs genus-0 invariants through max_degree: degree 1 is pinned by
/// the seed N0_{02} = 1, higher degrees by the (overdetermined, consistent)
/// WDVV systems. Full consistency is enforced; failures throw SolverError.
void solve_genus0(GWTable& table, int max_degree, int workers = 1);

/// Max |residual| over all WDVV coefficient equations at degree n after
/// substituting solved values. Exactly 0 for a correctly solved table.
Rational wdvv_residual(const GWTable& table, int n, int workers = 1);

}  // namespace gwcp3
