#pragma once

#include "splitfem/assembly.hpp"
#include "splitfem/elements.hpp"
#include "splitfem/errors.hpp"
#include "splitfem/harness/benchmarks.hpp"
#include "splitfem/harness/manufactured.hpp"
#include "splitfem/harness/output.hpp"
#include "splitfem/linsolve.hpp"
#include "splitfem/mesh.hpp"
#include "splitfem/modal.hpp"
#include "splitfem/splitstep.hpp"
