#ifndef GINMAP_GINMAP_HPP
#define GINMAP_GINMAP_HPP

// Umbrella header for the whole toolkit.

#include "ginmap/errors.hpp"
#include "ginmap/gin.hpp"
#include "ginmap/groebner.hpp"
#include "ginmap/hermitian.hpp"
#include "ginmap/maps.hpp"
#include "ginmap/matrix.hpp"
#include "ginmap/monomial.hpp"
#include "ginmap/parse.hpp"
#include "ginmap/poly.hpp"
#include "ginmap/rational.hpp"
#include "ginmap/tower.hpp"

#endif
