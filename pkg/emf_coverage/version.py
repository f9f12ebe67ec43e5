# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors

from __future__ import absolute_import, division, print_function
version = "0.1.0"
