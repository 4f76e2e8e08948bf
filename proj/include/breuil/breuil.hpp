#pragma once

#include "breuil/binary_forms.hpp"
#include "breuil/breuil_module.hpp"
#include "breuil/error.hpp"
#include "breuil/finite_length.hpp"
#include "breuil/ground_field.hpp"
#include "breuil/healthiness.hpp"
#include "breuil/ideal_membership.hpp"
#include "breuil/linear_solve.hpp"
#include "breuil/matrix.hpp"
#include "breuil/module_io.hpp"
#include "breuil/monomial.hpp"
#include "breuil/mu_p.hpp"
#include "breuil/semilinear.hpp"
#include "breuil/series.hpp"
#include "breuil/series_io.hpp"
#include "breuil/t4.hpp"
#include "breuil/weierstrass.hpp"
