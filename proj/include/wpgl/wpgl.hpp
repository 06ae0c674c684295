#ifndef WPGL_WPGL_HPP
#define WPGL_WPGL_HPP

#include "wpgl/butterfly.hpp"
#include "wpgl/cli.hpp"
#include "wpgl/counting.hpp"
#include "wpgl/crossed_module.hpp"
#include "wpgl/equivariant.hpp"
#include "wpgl/extension.hpp"
#include "wpgl/field.hpp"
#include "wpgl/finite_group.hpp"
#include "wpgl/group_maps.hpp"
#include "wpgl/json_io.hpp"
#include "wpgl/matrix.hpp"
#include "wpgl/monomial.hpp"
#include "wpgl/polynomial.hpp"
#include "wpgl/structure.hpp"
#include "wpgl/weight_signature.hpp"

#endif
