#pragma once

#include "sigroi/color.hpp"
#include "sigroi/corpus.hpp"
#include "sigroi/edges.hpp"
#include "sigroi/errors.hpp"
#include "sigroi/image.hpp"
#include "sigroi/morph.hpp"
#include "sigroi/netpbm.hpp"
#include "sigroi/pipeline.hpp"
#include "sigroi/radon.hpp"
#include "sigroi/resize.hpp"
#include "sigroi/roi.hpp"
#include "sigroi/synth.hpp"
#include "sigroi/threshold.hpp"
