#pragma once

#include "editkit/chrf.hpp"
#include "editkit/config.hpp"
#include "editkit/corpus.hpp"
#include "editkit/datasetpipe.hpp"
#include "editkit/editalign.hpp"
#include "editkit/errors.hpp"
#include "editkit/evalharness.hpp"
#include "editkit/slotmetric.hpp"
#include "editkit/template.hpp"
#include "editkit/textnorm.hpp"
#include "editkit/wilcoxon.hpp"
