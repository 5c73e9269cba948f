#pragma once

// Umbrella header.

#include "algebrae/algebra.hpp"
#include "algebrae/bidisc.hpp"
#include "algebrae/connection.hpp"
#include "algebrae/errors.hpp"
#include "algebrae/geodesic_spaces.hpp"
#include "algebrae/hermitian.hpp"
#include "algebrae/projective.hpp"
