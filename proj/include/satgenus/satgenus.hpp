#pragma once

#include "satgenus/bounds.hpp"
#include "satgenus/braid.hpp"
#include "satgenus/covering.hpp"
#include "satgenus/error.hpp"
#include "satgenus/oracle.hpp"
#include "satgenus/permutation.hpp"
