#pragma once

// Umbrella header: exact angular-momentum kernels, binary dihedral
// representation theory, covariant spin codes, the reduced Knill-Laflamme
// machinery, closed-form code families, the numerical searcher, and the
// Dicke-image multiqubit verifiers.

#include "spincode/binary_dihedral.hpp"
#include "spincode/clebsch_gordan.hpp"
#include "spincode/dicke.hpp"
#include "spincode/errors.hpp"
#include "spincode/families.hpp"
#include "spincode/half_int.hpp"
#include "spincode/json_io.hpp"
#include "spincode/kl_engine.hpp"
#include "spincode/multiqubit_kl.hpp"
#include "spincode/parallel.hpp"
#include "spincode/pauli_sym.hpp"
#include "spincode/quadratic_system.hpp"
#include "spincode/search.hpp"
#include "spincode/spherical_tensor.hpp"
#include "spincode/spin_code.hpp"
#include "spincode/sqrt_rational.hpp"
#include "spincode/wigner_gates.hpp"
