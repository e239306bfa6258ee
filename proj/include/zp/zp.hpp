#pragma once

#include "zp/davenport.hpp"
#include "zp/error.hpp"
#include "zp/modulus.hpp"
#include "zp/progression.hpp"
#include "zp/residue_set.hpp"
#include "zp/setops.hpp"
#include "zp/theorems.hpp"
#include "zp/verdict.hpp"
