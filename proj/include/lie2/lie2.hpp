#pragma once

#include "catalog.hpp"
#include "cocycle_equations.hpp"
#include "deformation.hpp"
#include "extension.hpp"
#include "nijenhuis.hpp"
