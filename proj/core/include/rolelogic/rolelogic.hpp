#pragma once

#include "rolelogic/error.hpp"
#include "rolelogic/limits.hpp"
#include "rolelogic/model.hpp"
#include "rolelogic/normal_forms.hpp"
#include "rolelogic/oracle.hpp"
#include "rolelogic/records.hpp"
#include "rolelogic/rl2_to_fo.hpp"
#include "rolelogic/semantics.hpp"
#include "rolelogic/signature.hpp"
#include "rolelogic/sol_translate.hpp"
#include "rolelogic/spatial_elim.hpp"
#include "rolelogic/syntax.hpp"
