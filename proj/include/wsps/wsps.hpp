#pragma once

// Weighted single-shared-processor scheduling: synchronized schedules, the
// exact processing-time-order solver for antithetical instances, the
// key-sequence 1/2-approximation with its envelope certificate, and a
// brute-force oracle for small instances.

#include "wsps/antithetical.hpp"
#include "wsps/envelope.hpp"
#include "wsps/errors.hpp"
#include "wsps/experiment.hpp"
#include "wsps/generator.hpp"
#include "wsps/io.hpp"
#include "wsps/job.hpp"
#include "wsps/keyseq.hpp"
#include "wsps/numeric.hpp"
#include "wsps/oracle.hpp"
#include "wsps/schedule.hpp"
