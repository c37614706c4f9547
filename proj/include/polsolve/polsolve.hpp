// Umbrella header.
#pragma once

#include "polsolve/bk.hpp"
#include "polsolve/experiment.hpp"
#include "polsolve/field.hpp"
#include "polsolve/glz.hpp"
#include "polsolve/irs.hpp"
#include "polsolve/keymatrix.hpp"
#include "polsolve/matrix.hpp"
#include "polsolve/oracle.hpp"
#include "polsolve/polsys.hpp"
#include "polsolve/poly.hpp"
#include "polsolve/rng.hpp"
