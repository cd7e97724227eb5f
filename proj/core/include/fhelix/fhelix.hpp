#pragma once

#include "fhelix/catalog.hpp"
#include "fhelix/classify.hpp"
#include "fhelix/curve_spec.hpp"
#include "fhelix/errors.hpp"
#include "fhelix/expr.hpp"
#include "fhelix/field_jet.hpp"
#include "fhelix/frenet.hpp"
#include "fhelix/harmonic.hpp"
#include "fhelix/jet.hpp"
#include "fhelix/jet_eval.hpp"
#include "fhelix/report.hpp"
#include "fhelix/verify.hpp"
