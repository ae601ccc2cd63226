#pragma once

#include "vknot/arrow_diagram.hpp"
#include "vknot/catalog.hpp"
#include "vknot/coloring.hpp"
#include "vknot/combinatorics.hpp"
#include "vknot/conway.hpp"
#include "vknot/enumerate.hpp"
#include "vknot/errors.hpp"
#include "vknot/gauss_diagram.hpp"
#include "vknot/int_matrix.hpp"
#include "vknot/int_polynomial.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"
#include "vknot/verify.hpp"
