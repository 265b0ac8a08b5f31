// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
