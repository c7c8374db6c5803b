#ifndef HHRES_HHRES_HPP
#define HHRES_HHRES_HPP

#include "hhres/cli/commands.hpp"
#include "hhres/cli/eval.hpp"
#include "hhres/cli/expr.hpp"
#include "hhres/exactlin/chain_complex.hpp"
#include "hhres/exactlin/rational.hpp"
#include "hhres/exactlin/rational_matrix.hpp"
#include "hhres/hochschild/algebra_file.hpp"
#include "hhres/hochschild/hh.hpp"
#include "hhres/hochschild/hkr.hpp"
#include "hhres/hochschild/hoch_chain.hpp"
#include "hhres/hochschild/structure_algebra.hpp"
#include "hhres/kforms/differential_form.hpp"
#include "hhres/kforms/kahler.hpp"
#include "hhres/kforms/ring_spec.hpp"
#include "hhres/laurent/exponents.hpp"
#include "hhres/laurent/laurent_poly.hpp"
#include "hhres/laurent/residue_oracle.hpp"
#include "hhres/laurent/var_order.hpp"
#include "hhres/localcoh/cech.hpp"
#include "hhres/localcoh/cousin.hpp"
#include "hhres/localcoh/flag_ring.hpp"
#include "hhres/localcoh/gen_fraction.hpp"
#include "hhres/localcoh/p1_residue.hpp"
#include "hhres/localcoh/upoly.hpp"
#include "hhres/ressym/ce_check.hpp"
#include "hhres/ressym/symbol.hpp"
#include "hhres/ressym/tate.hpp"
#include "hhres/ressym/trace_json.hpp"
#include "hhres/tateop/banded_operator.hpp"
#include "hhres/tateop/cubical.hpp"
#include "hhres/error.hpp"

#endif  // HHRES_HHRES_HPP
