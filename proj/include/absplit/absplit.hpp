#pragma once

#include "absplit/errors.hpp"
#include "absplit/report.hpp"

#include "absplit/exact/combinatorics.hpp"
#include "absplit/exact/int_matrix.hpp"
#include "absplit/exact/number.hpp"
#include "absplit/exact/smith.hpp"
#include "absplit/exact/truncated_poly.hpp"

#include "absplit/dm/correspondence.hpp"
#include "absplit/dm/projectors.hpp"

#include "absplit/motive/kunnemann.hpp"

#include "absplit/real_locus/components.hpp"

#include "absplit/topology/chain_complex.hpp"
#include "absplit/topology/splitting.hpp"

#include "absplit/assembly/assemble.hpp"
#include "absplit/assembly/coefficients.hpp"
#include "absplit/assembly/expression.hpp"
#include "absplit/assembly/input.hpp"
#include "absplit/assembly/render.hpp"
#include "absplit/assembly/verify.hpp"
