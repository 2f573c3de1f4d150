#ifndef PHOTOEFFECT_PHOTOEFFECT_HPP
#define PHOTOEFFECT_PHOTOEFFECT_HPP

#include "einstein.hpp"
#include "error.hpp"
#include "farfield.hpp"
#include "helmholtz.hpp"
#include "hydrogen.hpp"
#include "lap_timedomain.hpp"
#include "photocurrent.hpp"
#include "quadrature.hpp"
#include "units.hpp"
#include "vec3.hpp"

#endif
