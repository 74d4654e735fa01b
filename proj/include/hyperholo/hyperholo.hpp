#pragma once

#include "hyperholo/coords.hpp"
#include "hyperholo/error.hpp"
#include "hyperholo/fields.hpp"
#include "hyperholo/functions.hpp"
#include "hyperholo/generator_text.hpp"
#include "hyperholo/integrate.hpp"
#include "hyperholo/operators.hpp"
#include "hyperholo/quadrature.hpp"
#include "hyperholo/quaternion.hpp"
#include "hyperholo/regions.hpp"
#include "hyperholo/sampling.hpp"
#include "hyperholo/stem.hpp"
#include "hyperholo/verify.hpp"
