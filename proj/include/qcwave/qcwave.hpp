#ifndef QCWAVE_QCWAVE_HPP
#define QCWAVE_QCWAVE_HPP

#include "qcwave/error.hpp"
#include "qcwave/material.hpp"
#include "qcwave/specfun.hpp"
#include "qcwave/kernels.hpp"
#include "qcwave/halfplane.hpp"
#include "qcwave/freefield.hpp"
#include "qcwave/verify.hpp"

#endif  // QCWAVE_QCWAVE_HPP
