#pragma once

#include "fillcalc/assembly.hpp"
#include "fillcalc/continued_fraction.hpp"
#include "fillcalc/errors.hpp"
#include "fillcalc/io.hpp"
#include "fillcalc/knot.hpp"
#include "fillcalc/lens.hpp"
#include "fillcalc/matrix.hpp"
#include "fillcalc/rational.hpp"
#include "fillcalc/seifert.hpp"
#include "fillcalc/seifert_types.hpp"
#include "fillcalc/slope_calculus.hpp"
#include "fillcalc/surgery_aux.hpp"
#include "fillcalc/tree.hpp"
#include "fillcalc/unimodular.hpp"
