// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#define QREV_VERSION_MAJOR 0
#define QREV_VERSION_MINOR 1
#define QREV_VERSION_PATCH 0
#define QREV_VERSION_STRING "0.1.0"
