"""Diagram rewriters and skein families, plus the verification harness."""
from .rewrite import (
    RewriteError,
    RewriteSite,
    apply_r1,
    apply_r2,
    apply_r3,
    canonical_form,
    insert_meridian,
    remove_r2,
    replace_crossing,
    smooth_crossing,
    switch_crossing,
)
