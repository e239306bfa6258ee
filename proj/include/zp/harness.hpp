#pragma once

#include "zp/harness/config.hpp"
#include "zp/harness/enumerate.hpp"
#include "zp/harness/report.hpp"
#include "zp/harness/search.hpp"
#include "zp/harness/splitmix.hpp"
