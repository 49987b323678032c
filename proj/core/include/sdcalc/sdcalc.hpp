#pragma once

#include "sdcalc/integer.hpp"
#include "sdcalc/error.hpp"
#include "sdcalc/lattice.hpp"
#include "sdcalc/homology.hpp"
#include "sdcalc/circuit.hpp"
#include "sdcalc/handles.hpp"
#include "sdcalc/sum_form.hpp"
#include "sdcalc/subst.hpp"
#include "sdcalc/generate.hpp"
#include "sdcalc/genus1.hpp"
#include "sdcalc/monodromy.hpp"
