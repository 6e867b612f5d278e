#pragma once

#include "rot4/compose.hpp"
#include "rot4/error.hpp"
#include "rot4/linalg.hpp"
#include "rot4/matrix4.hpp"
#include "rot4/oracle.hpp"
#include "rot4/plane.hpp"
#include "rot4/quaternion.hpp"
#include "rot4/random.hpp"
#include "rot4/rotation4.hpp"
#include "rot4/tolerances.hpp"
