#pragma once

#include "loopkit/audit.hpp"
#include "loopkit/catalog.hpp"
#include "loopkit/check.hpp"
#include "loopkit/enumerate.hpp"
#include "loopkit/error.hpp"
#include "loopkit/hunt.hpp"
#include "loopkit/isotope.hpp"
#include "loopkit/loop_file.hpp"
#include "loopkit/loop_table.hpp"
#include "loopkit/models.hpp"
#include "loopkit/nuclei.hpp"
#include "loopkit/properties.hpp"
#include "loopkit/report.hpp"
#include "loopkit/selfmap.hpp"
#include "loopkit/term.hpp"
