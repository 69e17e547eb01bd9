// Copyright 2026 The Suffixient Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "suffixient/builder.hpp"
#include "suffixient/error.hpp"
#include "suffixient/index_build.hpp"
#include "suffixient/ingest.hpp"
#include "suffixient/kernel.hpp"
#include "suffixient/stream.hpp"
