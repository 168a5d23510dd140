#ifndef RECOMB_RECOMB_HPP
#define RECOMB_RECOMB_HPP

#include "recomb/core/enumerate.hpp"
#include "recomb/core/identity.hpp"
#include "recomb/core/monomial.hpp"
#include "recomb/core/permutation.hpp"
#include "recomb/core/slot_tuple.hpp"
#include "recomb/expansion/expansion.hpp"
#include "recomb/linalg/dense_matrix.hpp"
#include "recomb/linalg/hnf.hpp"
#include "recomb/linalg/lll.hpp"
#include "recomb/linalg/modular.hpp"
#include "recomb/linalg/norms.hpp"
#include "recomb/linalg/rcf.hpp"
#include "recomb/analysis/bases.hpp"
#include "recomb/analysis/closure.hpp"
#include "recomb/analysis/lifting.hpp"
#include "recomb/analysis/module.hpp"
#include "recomb/io/golden.hpp"
#include "recomb/io/identity_file.hpp"
#include "recomb/io/matrix_file.hpp"
#include "recomb/report/reproduce.hpp"

#endif  // RECOMB_RECOMB_HPP
