#pragma once

#include "abelian.hpp"
#include "alexander.hpp"
#include "foxcalc.hpp"
#include "intmat.hpp"
#include "laurent.hpp"
#include "linkio.hpp"
#include "matrix.hpp"
#include "obstructions.hpp"
#include "onevar.hpp"
#include "ratfunc.hpp"
#include "report.hpp"
#include "skew/diagonalize.hpp"
#include "skew/division_ring.hpp"
#include "skew/skew_laurent.hpp"
#include "skew/skew_matrix.hpp"
#include "skew_oracle.hpp"
#include "words.hpp"
